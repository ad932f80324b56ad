#include <algorithm>

#include <doctest.h>

#include "culab/corpus.hpp"
#include "culab/softness.hpp"
#include "support/util.hpp"

using namespace culab;
using testutil::chosen;
using testutil::inf;
using testutil::nat;
using testutil::pair;

TEST_CASE("softness of 1 in E_2") {
  const auto e2 = e_k(2);
  const auto r = classify_softness(e2, e2.element(1));
  CHECK(r.functionally_soft.proven());
  CHECK(r.weakly_purely_noncompact.proven());
  CHECK(r.strongly_soft.refuted());
  CHECK(r.weakly_soft.refuted());
  CHECK(r.purely_noncompact.refuted());
}

TEST_CASE("infinity in nbar is soft in every sense") {
  const auto n = nbar();
  const auto r = classify_softness(n, nat(n, inf));
  for (const auto& [name, v] : flags(r)) CHECK_MESSAGE(v->proven(), name);
}

TEST_CASE("zero is soft in every sense") {
  for (const auto& m : corpus()) {
    const auto r = classify_softness(m.model, m.model.zero());
    for (const auto& [name, v] : flags(r)) CHECK_MESSAGE(v->proven(), m.name << " " << name);
  }
}

TEST_CASE("finite values in nbar are not soft") {
  const auto n = nbar();
  const auto r = classify_softness(n, nat(n, 3));
  CHECK(r.strongly_soft.refuted());
  CHECK(r.functionally_soft.refuted());
  CHECK(r.weakly_purely_noncompact.refuted());
}

TEST_CASE("strongly soft witnesses") {
  const auto n = nbar();
  const auto v = strongly_soft_witness(n, nat(n, 3), nat(n, inf));
  REQUIRE(v.proven());
  CHECK(chosen(v, "t") == nat(n, 1));

  const auto e2 = e_k(2);
  CHECK(strongly_soft_witness(e2, e2.element(1), e2.element(1)).refuted());
  for (const auto& m : corpus()) {
    for (const auto& x : m.model.is_finite() ? m.model.elements() : m.model.sample(2)) {
      const auto w = strongly_soft_witness(m.model, m.model.zero(), x);
      REQUIRE(w.proven());
      CHECK(chosen(w, "t") == m.model.zero());
    }
  }
  CHECK_THROWS_AS(strongly_soft_witness(n, nat(n, inf), nat(n, inf)), NotWayBelow);
}

TEST_CASE("soft submonoid") {
  const auto e2 = e_k(2);
  CHECK(soft_submonoid(e2) == std::vector<Element>{e2.zero(), e2.top()});
  const auto z = zero_inf();
  CHECK(soft_submonoid(z) == z.elements());
  const auto t = trivial();
  CHECK(soft_submonoid(t) == t.elements());
  CHECK_THROWS_AS(soft_submonoid(nbar()), UnsupportedModel);
}

TEST_CASE("soft sums") {
  const auto n = nbar();
  CHECK(sum_soft(n, ChainDescriptor::stabilizing({nat(n, 1)})) == nat(n, inf));
  const auto z = zero_inf();
  CHECK(sum_soft(z, ChainDescriptor::stabilizing({z.top()})) == z.top());
  CHECK(sum_soft(n, ChainDescriptor::stabilizing({nat(n, 0)})) == nat(n, 0));
  CHECK_THROWS_AS(sum_soft(n, ChainDescriptor::stabilizing({nat(n, 1), nat(n, 0)})), HypothesisViolated);
}

TEST_CASE("soft interpolation") {
  const auto z = zero_inf();
  const auto v = soft_interpolate(z, Scale::whole(z), z.top(), z.top());
  REQUIRE(v.proven());
  CHECK(chosen(v, "y") == z.top());

  const auto e2 = e_k(2);
  CHECK_THROWS_AS(soft_interpolate(e2, Scale::whole(e2), e2.element(1), e2.element(1)),
                  PreconditionNotEstablished);
  // nbar lacks an abundance of strongly soft elements, so the construction
  // does not apply there.
  const auto n = nbar();
  CHECK_THROWS_AS(soft_interpolate(n, Scale::whole(n), nat(n, 0), nat(n, inf)), PreconditionNotEstablished);
}

TEST_CASE("quotient maps and softness") {
  const auto s = sierpinski();
  const auto q = quotient(s, ideal_from_open_set(s, {true, false}));
  const auto m = map_element(q, pair(s, inf, inf));
  CHECK(m.source.strongly_soft.proven());
  CHECK(m.target.strongly_soft.proven());
  CHECK(m.lost.empty());
  const auto zero = map_element(q, pair(s, 3, 0));
  CHECK(zero.image == q.target().zero());
  for (const auto& [name, v] : flags(zero.target)) CHECK_MESSAGE(v->proven(), name);
}

TEST_CASE("sweeps agree with the closed forms on compact elements") {
  for (const auto& m : corpus()) {
    if (!m.model.is_finite()) continue;
    for (const auto& x : m.model.elements()) {
      const auto a = classify_softness(m.model, x);
      const auto b = sweep_softness(m.model, x);
      CHECK(a.strongly_soft.status == b.strongly_soft.status);
      CHECK(a.weakly_soft.status == b.weakly_soft.status);
      CHECK(a.functionally_soft.status == b.functionally_soft.status);
      CHECK(a.purely_noncompact.status == b.purely_noncompact.status);
    }
  }
}
