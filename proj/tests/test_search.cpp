#include <algorithm>

#include <doctest.h>

#include "culab/corpus.hpp"
#include "culab/search.hpp"
#include "support/oracles.hpp"

using namespace culab;

namespace {

FiniteTable relabel(const FiniteTable& t, const std::vector<std::size_t>& p) {
  FiniteTable out = t;
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) {
      out.leq[p[i] * t.n + p[j]] = t.leq[i * t.n + j];
      out.add[p[i] * t.n + p[j]] = static_cast<Index>(p[t.add[i * t.n + j]]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration counts match the naive oracle") {
  CHECK(enumerate_models(1).size() == 1);
  CHECK(enumerate_models(2).size() == 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto fast = enumerate_models(n);
    const auto slow = oracle::naive_models(n);
    CHECK(fast.size() == slow.size());
    for (const auto& t : slow) {
      CHECK(std::count_if(fast.begin(), fast.end(), [&](const CuModel& m) { return oracle::isomorphic(m.table(), t); }) == 1);
    }
  }
}

TEST_CASE("the two-element model is {0,inf}") {
  const auto two = enumerate_models(2);
  REQUIRE(two.size() == 1);
  CHECK(oracle::isomorphic(two.front().table(), zero_inf().table()));
}

TEST_CASE("canonical forms") {
  const auto e2 = e_k(2);
  const auto relabeled = finite_model(relabel(e2.table(), {0, 3, 1, 2}));
  CHECK(canonical_form(e2) == canonical_form(relabeled));
  CHECK(canonical_form(trivial()).n == 1);
  const auto three = enumerate_models(3);
  for (std::size_t i = 0; i < three.size(); ++i) {
    for (std::size_t j = i + 1; j < three.size(); ++j) {
      CHECK_FALSE(canonical_form(three[i]) == canonical_form(three[j]));
    }
  }
}

TEST_CASE("required axioms filter the enumeration") {
  EnumerationOptions o;
  o.required_axioms = {Axiom::o5, Axiom::o6, Axiom::o7};
  for (const auto& m : enumerate_models(4, o)) {
    CHECK(oracle::o5(m.table()));
    CHECK(oracle::o6(m.table()));
    CHECK(oracle::o7(m.table()));
  }
}

TEST_CASE("target expressions") {
  const auto t = Target::parse("ideal_filtered ∧ ¬two_omega_divisible");
  auto names = t.names();
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"ideal_filtered", "two_omega_divisible"});
  CHECK(t.evaluate([](const std::string& n) { return n == "ideal_filtered" ? Status::proven : Status::refuted; }));
  CHECK_FALSE(Target::parse("false").evaluate([](const std::string&) { return Status::proven; }));
  CHECK(Target::parse("some(functionally_soft) and not O5")
            .evaluate([](const std::string& n) { return n == "some:functionally_soft" ? Status::proven : Status::refuted; }));
  CHECK_THROWS_AS(Target::parse("O5 &"), ParseError);
  CHECK_THROWS_AS(Target::parse("no_such_predicate"), ParseError);
}

TEST_CASE("searches") {
  SearchSpec spec;
  spec.max_size = 2;
  CHECK(hunt(spec).size() == 1);

  spec.max_size = 4;
  spec.target = "ideal_filtered ∧ ¬two_omega_divisible";
  const auto hits = hunt(spec);
  const auto e2 = canonical_form(e_k(2));
  CHECK(std::any_of(hits.begin(), hits.end(), [&](const SearchResult& r) { return r.canonical == e2; }));

  spec.target = "false";
  CHECK(hunt(spec).empty());
}

TEST_CASE("no finite model separates divisibility from its characterization") {
  SearchSpec spec;
  spec.max_size = 4;
  spec.required_axioms = {Axiom::o5, Axiom::o6, Axiom::o7};
  spec.target = "weakly_divisible ∧ ideal_filtered ∧ property_V ∧ ¬two_omega_divisible";
  CHECK(hunt(spec).empty());
}
