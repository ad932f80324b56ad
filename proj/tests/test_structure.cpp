#include <algorithm>

#include <doctest.h>

#include "culab/corpus.hpp"
#include "culab/search.hpp"
#include "culab/structure.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace culab;
using testutil::inf;
using testutil::nat;
using testutil::pair;

TEST_CASE("generated ideals") {
  const auto e2 = e_k(2);
  const auto I = ideal_generated(e2, e2.element(1));
  for (const auto& x : e2.elements()) CHECK(I.contains(e2, x));
  const auto Z = ideal_generated(e2, e2.zero());
  CHECK(Z.contains(e2, e2.zero()));
  CHECK_FALSE(Z.contains(e2, e2.element(1)));

  const auto s = sierpinski();
  const auto J = ideal_generated(s, pair(s, 1, 0));
  CHECK(J.generator() == pair(s, inf, 0));
  for (const auto& f : s.sample(3)) CHECK(J.contains(s, f) == (f.payload()[1] == ExtNat(0)));
}

TEST_CASE("ideal generators must be idempotent") {
  const auto e2 = e_k(2);
  CHECK_THROWS_AS(Ideal(e2, e2.element(1)), NotAnIdeal);
  CHECK_THROWS_AS(ideal_from_mask(e2, {true, true, false, false}), NotAnIdeal);
  const auto s = sierpinski();
  CHECK_THROWS_AS(ideal_from_open_set(s, {false, true}), NotAnIdeal);
}

TEST_CASE("ideal enumeration") {
  const auto e2 = e_k(2);
  const auto ideals = enumerate_ideals(e2);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].generator() == e2.zero());
  CHECK(ideals[1].generator() == e2.top());
  CHECK(enumerate_ideals(trivial()).size() == 1);

  const auto s = sierpinski();
  const auto si = enumerate_ideals(s);
  REQUIRE(si.size() == 3);
  std::vector<Element> gens;
  for (const auto& I : si) gens.push_back(I.generator());
  CHECK(std::count(gens.begin(), gens.end(), pair(s, 0, 0)) == 1);
  CHECK(std::count(gens.begin(), gens.end(), pair(s, inf, 0)) == 1);
  CHECK(std::count(gens.begin(), gens.end(), pair(s, inf, inf)) == 1);
}

TEST_CASE("ideal enumeration matches a subset scan") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_models(n)) {
      auto expected = oracle::ideal_masks(m.table());
      std::vector<std::vector<bool>> got;
      for (const auto& I : enumerate_ideals(m)) got.push_back(I.mask(m));
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("quotient of the Sierpinski model by the open-point ideal") {
  const auto s = sierpinski();
  const auto q = quotient(s, ideal_from_open_set(s, {true, false}));
  const auto& t = q.target();
  CHECK_FALSE(t.is_finite());
  for (const auto& f : s.sample(3)) {
    const auto image = q.project(f);
    REQUIRE(image.payload().size() == 1);
    CHECK(image.payload()[0] == f.payload()[1]);
  }
}

TEST_CASE("trivial quotients") {
  for (const auto& nm : corpus()) {
    const auto& m = nm.model;
    const auto ideals = enumerate_ideals(m);
    const auto bottom = quotient(m, ideals.front());
    const auto top = quotient(m, ideals.back());
    const auto els = m.is_finite() ? m.elements() : m.sample(2);
    for (const auto& x : els) {
      CHECK(top.target().leq(top.project(x), top.target().zero()));
      for (const auto& y : els) {
        CHECK(bottom.target().leq(bottom.project(x), bottom.project(y)) == m.leq(x, y));
      }
    }
  }
}

TEST_CASE("finiteness") {
  const auto n = classify_finiteness(nbar());
  CHECK(n.stably_finite.proven());
  CHECK(n.weak_cancellation.proven());
  CHECK(n.residually_stably_finite.proven());
  CHECK(classify_finiteness(zero_inf()).stably_finite.refuted());
  const auto e = classify_finiteness(e_k(2));
  CHECK(e.stably_finite.refuted());
  CHECK(e.residually_stably_finite.refuted());
  CHECK(e.weak_cancellation.refuted());
}

TEST_CASE("axioms") {
  for (unsigned k = 1; k <= 4; ++k) CHECK(check_axiom(e_k(k), Axiom::o5).proven());
  CHECK(check_axiom(zero_inf(), Axiom::o7).proven());
  for (auto a : {Axiom::o5, Axiom::o6, Axiom::o7}) CHECK(check_axiom(trivial(), a).proven());
}

TEST_CASE("axioms match the literal definitions on small models") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_models(n)) {
      CHECK(check_axiom(m, Axiom::o5).proven() == oracle::o5(m.table()));
      CHECK(check_axiom(m, Axiom::o6).proven() == oracle::o6(m.table()));
      CHECK(check_axiom(m, Axiom::o7).proven() == oracle::o7(m.table()));
    }
  }
}

TEST_CASE("O5 fails on the Sierpinski model") {
  const auto s = sierpinski();
  const auto v = check_axiom(s, Axiom::o5);
  REQUIRE(v.refuted());
  const auto& c = v.certificate;
  const auto x = testutil::given(c, "x");
  const auto xp = testutil::given(c, "x'");
  const auto y = testutil::given(c, "y");
  const auto z = testutil::given(c, "z");
  CHECK(s.way_below(xp, x));
  CHECK(s.leq(s.add(x, y), z));
  // No c with x' + c ≤ z ≤ x + c, checked on a grid that contains every
  // candidate below z.
  for (const auto& cand : s.sample(4)) {
    CHECK_FALSE((s.leq(s.add(xp, cand), z) && s.leq(z, s.add(x, cand))));
  }
}

TEST_CASE("model validation") {
  CHECK(validate_model(e_k(2)).empty());
  for (const auto& m : corpus()) CHECK(validate_model(m.model).empty());
}

TEST_CASE("scales") {
  const auto e2 = e_k(2);
  CHECK(is_scale(e2, Scale::whole(e2)));
  CHECK_FALSE(is_scale(e2, Scale::from_mask(e2, {true, false, false, false})));
  const auto s = sierpinski();
  CHECK(is_scale(s, Scale::from_generators(s, {pair(s, 5, 5)})));
}
