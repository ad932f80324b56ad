#include <doctest.h>

#include "culab/certify.hpp"
#include "culab/corpus.hpp"
#include "culab/glimm.hpp"
#include "support/util.hpp"

using namespace culab;
using testutil::chosen;
using testutil::given;
using testutil::inf;
using testutil::nat;

TEST_CASE("divisibility of E_2") {
  const auto e2 = e_k(2);
  const auto r = classify_divisibility(e2, Scale::whole(e2));
  REQUIRE(r.two_omega_divisible.refuted());
  CHECK(given(r.two_omega_divisible.certificate, "x'") == e2.element(1));
  CHECK(given(r.two_omega_divisible.certificate, "x") == e2.element(1));
  REQUIRE(r.weakly_two_omega_divisible.refuted());
  CHECK(given(r.weakly_two_omega_divisible.certificate, "x") == e2.element(1));
}

TEST_CASE("divisibility of {0,inf}") {
  const auto z = zero_inf();
  const auto r = classify_divisibility(z, Scale::whole(z));
  REQUIRE(r.two_omega_divisible.proven());
  bool seen = false;
  for (const auto& inst : r.two_omega_divisible.witness) {
    if (given(inst, "x'") == z.top() && given(inst, "x") == z.top()) {
      seen = true;
      CHECK(binding(inst.chosen, "y").element() == z.top());
      CHECK(binding(inst.chosen, "n").count() == 1);
    }
  }
  CHECK(seen);
  CHECK(r.weakly_two_omega_divisible.proven());
  CHECK(r.k_omega_divisible.at(3).proven());
}

TEST_CASE("Glimm-type predicates") {
  const auto e2 = e_k(2);
  const auto se = Scale::whole(e2);
  CHECK(is_ideal_filtered(e2, se).proven());
  CHECK(has_property_V(e2, se).proven());
  const auto ab = has_abundance_soft(e2, se);
  REQUIRE(ab.refuted());
  CHECK(given(ab.certificate, "x'") == e2.element(1));
  CHECK(given(ab.certificate, "x") == e2.element(1));
  CHECK(has_2_splitting(e2, se).refuted());
  CHECK(has_soft_dominators(e2, se).refuted());

  for (const auto& m : {zero_inf(), trivial()}) {
    const auto s = Scale::whole(m);
    CHECK(is_ideal_filtered(m, s).proven());
    CHECK(has_property_V(m, s).proven());
    CHECK(has_abundance_soft(m, s).proven());
    CHECK(has_2_splitting(m, s).proven());
  }
}

TEST_CASE("lhd interpolation") {
  const auto n = nbar();
  const auto v = lhd_interpolate(n, nat(n, 2), nat(n, 3), nat(n, 1));
  REQUIRE(v.proven());
  CHECK(chosen(v, "z") == nat(n, 1));
  CHECK(certify::lhd_interpolate(n, v).empty());

  const auto zero = lhd_interpolate(n, nat(n, 0), nat(n, 3), nat(n, 1));
  REQUIRE(zero.proven());
  CHECK(chosen(zero, "z") == nat(n, 0));

  const auto e2 = e_k(2);
  const auto w = lhd_interpolate(e2, e2.element(1), e2.element(2), e2.top());
  REQUIRE(w.proven());
  CHECK(certify::lhd_interpolate(e2, w).empty());
}

TEST_CASE("splitting with a full ideal") {
  const auto z = zero_inf();
  const auto v = pre_cu_equiv(z, Scale::whole(z), z.top(), z.top());
  REQUIRE(v.proven());
  CHECK(chosen(v, "y") == z.top());
  CHECK(chosen(v, "z") == z.top());
  CHECK(certify::pre_cu_equiv(z, v).empty());

  const auto zero = pre_cu_equiv(z, Scale::whole(z), z.zero(), z.top());
  REQUIRE(zero.proven());
  CHECK(chosen(zero, "y") == z.zero());
  CHECK(chosen(zero, "z") == z.top());

  const auto e2 = e_k(2);
  CHECK_THROWS_AS(pre_cu_equiv(e2, Scale::whole(e2), e2.element(1), e2.element(2)), PreconditionNotEstablished);
}

TEST_CASE("soft dominators") {
  const auto z = zero_inf();
  const auto v = soft_dominator(z, Scale::whole(z), z.top());
  REQUIRE(v.proven());
  CHECK(chosen(v, "y") == z.top());
  CHECK(certify::soft_dominator(z, v).empty());
  for (const auto& m : corpus()) {
    if (!m.model.is_finite()) continue;
    const auto d = soft_dominator(m.model, Scale::whole(m.model), m.model.zero());
    if (d.proven()) CHECK(chosen(d, "y") == m.model.zero());
  }
  const auto e2 = e_k(2);
  CHECK(soft_dominator(e2, Scale::whole(e2), e2.element(1)).refuted());
}

TEST_CASE("divisor sequences") {
  const auto z = zero_inf();
  const auto r = k_div_seq(z, 2, ChainDescriptor::stabilizing({z.top()}));
  REQUIRE(r.verdict.proven());
  for (std::size_t n = 0; n < 5; ++n) CHECK(r.y.term(n) == z.top());

  const auto j = join_powerset2();
  const auto top = j.top();
  const auto s = k_div_seq(j, 3, ChainDescriptor::stabilizing({top}));
  REQUIRE(s.verdict.proven());
  for (std::size_t n = 0; n < 5; ++n) CHECK(s.y.term(n) == top);
  CHECK(certify::k_div_seq(j, 3, ChainDescriptor::stabilizing({top}), s).empty());

  const auto zero = k_div_seq(z, 2, ChainDescriptor::stabilizing({z.zero()}));
  REQUIRE(zero.verdict.proven());
  for (std::size_t n = 0; n < 5; ++n) CHECK(zero.y.term(n) == z.zero());
}

TEST_CASE("soft divisors") {
  const auto z = zero_inf();
  const auto v = div_soft_divisor(z, z.top(), 5);
  REQUIRE(v.proven());
  CHECK(chosen(v, "y") == z.top());
  CHECK(certify::soft_divisor(z, v).empty());
  const auto zero = div_soft_divisor(z, z.zero(), 5);
  REQUIRE(zero.proven());
  CHECK(chosen(zero, "y") == z.zero());
  const auto e2 = e_k(2);
  CHECK_THROWS_AS(div_soft_divisor(e2, e2.element(2), 2), PreconditionNotEstablished);
}

TEST_CASE("equivalence reports") {
  const auto z = zero_inf();
  const auto cz = char_div_equiv(z, Scale::whole(z));
  CHECK(cz.agree);
  REQUIRE(cz.conditions.size() == 5);
  for (const auto& [name, v] : cz.conditions) CHECK_MESSAGE(v.proven(), name);

  const auto e2 = e_k(2);
  const auto ce = char_div_equiv(e2, Scale::whole(e2));
  CHECK(ce.agree);
  for (const auto& [name, v] : ce.conditions) CHECK_MESSAGE(v.refuted(), name);

  const auto t = trivial();
  for (const auto& [name, v] : char_div_equiv(t, Scale::whole(t)).conditions) CHECK_MESSAGE(v.proven(), name);

  const auto cu = cu_equiv(e2, Scale::whole(e2));
  CHECK(cu.agree);
  REQUIRE(cu.conditions.size() == 3);
}
