#include <doctest.h>

#include "culab/corpus.hpp"
#include "culab/model.hpp"
#include "support/util.hpp"

using namespace culab;
using testutil::inf;
using testutil::nat;
using testutil::pair;

TEST_CASE("ExtNat saturates") {
  CHECK(ExtNat(3) + ExtNat(4) == ExtNat(7));
  CHECK((ExtNat(3) + inf).is_infinite());
  CHECK(0 * inf == ExtNat(0));
  CHECK(omega(ExtNat(2)) == inf);
  CHECK(omega(ExtNat(0)) == ExtNat(0));
}

TEST_CASE("order") {
  const auto n = nbar();
  CHECK(n.leq(nat(n, 3), nat(n, inf)));
  const auto e2 = e_k(2);
  CHECK(e2.leq(e2.element(1), e2.element(2)));
  for (const auto& m : corpus()) {
    for (const auto& x : m.model.is_finite() ? m.model.elements() : m.model.sample(2)) {
      CHECK(m.model.leq(m.model.zero(), x));
    }
  }
}

TEST_CASE("addition") {
  const auto e2 = e_k(2);
  CHECK(e2.add(e2.element(1), e2.element(2)) == e2.top());
  CHECK(e2.add(e2.element(1), e2.element(1)) == e2.element(2));
  const auto n = nbar();
  CHECK(n.add(nat(n, 2), nat(n, 3)) == nat(n, 5));
  for (const auto& m : corpus()) {
    for (const auto& x : m.model.is_finite() ? m.model.elements() : m.model.sample(2)) {
      CHECK(m.model.add(x, m.model.zero()) == x);
    }
  }
}

TEST_CASE("way-below in nbar") {
  const auto n = nbar();
  CHECK(n.way_below(nat(n, 3), nat(n, inf)));
  CHECK_FALSE(n.way_below(nat(n, inf), nat(n, inf)));
  CHECK(n.is_compact(nat(n, 5)));
  CHECK_FALSE(n.is_compact(nat(n, inf)));
  const auto e2 = e_k(2);
  for (const auto& x : e2.elements()) CHECK(e2.is_compact(x));
}

TEST_CASE("way-below in nbar matches the sequence definition") {
  // x ≪ y iff every increasing sequence with sup ≥ y eventually dominates x.
  // In nbar it suffices to test the sequence min(n, y).
  const auto n = nbar();
  const std::vector<ExtNat> vals = {0, 1, 2, 3, inf};
  for (auto a : vals) {
    for (auto b : vals) {
      bool eventually = false;
      for (std::uint64_t k = 0; k < 10 && !eventually; ++k) eventually = a <= min(ExtNat(k), b);
      CHECK(n.way_below(nat(n, a), nat(n, b)) == eventually);
    }
  }
}

TEST_CASE("omega multiples") {
  const auto e2 = e_k(2);
  const auto one = e2.element(1);
  CHECK(e2.omega_multiple(one) == e2.top());
  CHECK(e2.multiple(4, one) == e2.top());
  CHECK(e2.multiple(3, one) == e2.top());
  CHECK_FALSE(e2.multiple(2, one) == one);
  const auto n = nbar();
  CHECK(n.omega_multiple(nat(n, 0)) == nat(n, 0));
  CHECK(n.omega_multiple(nat(n, 2)) == nat(n, inf));
}

TEST_CASE("suprema of chains") {
  const auto n = nbar();
  CHECK(n.sup(ChainDescriptor::truncation(nat(n, inf))) == nat(n, inf));
  CHECK(n.sup(ChainDescriptor::stabilizing({nat(n, 1), nat(n, 3)})) == nat(n, 3));
  const auto s = sierpinski();
  for (const auto& f : s.sample(3)) CHECK(s.sup(ChainDescriptor::truncation(f)) == f);
  CHECK_THROWS_AS(ChainDescriptor::stabilizing({}), NotIncreasing);
}

TEST_CASE("basis chains") {
  const auto n = nbar();
  const auto c = n.basis_chain(nat(n, inf));
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(c.term(n, k) == nat(n, k));
    CHECK(n.way_below(c.term(n, k), nat(n, inf)));
  }
  const auto five = n.basis_chain(nat(n, 5));
  CHECK(five.term(n, 0) == nat(n, 5));
  CHECK(five.term(n, 9) == nat(n, 5));

  const auto s = sierpinski();
  const auto x = pair(s, inf, 1);
  const auto cx = s.basis_chain(x);
  CHECK(cx.term(s, 0) == pair(s, 0, 0));
  CHECK(cx.term(s, 1) == pair(s, 1, 1));
  CHECK(cx.term(s, 4) == pair(s, 4, 1));
  CHECK(s.sup(cx) == x);
}

TEST_CASE("lsc models") {
  const auto point = lsc_model(Space{{"p"}, {1}});
  CHECK(point.way_below(nat(point, 3), nat(point, inf)));
  CHECK_FALSE(point.is_compact(nat(point, inf)));

  const auto s = sierpinski();
  for (const auto& f : s.sample(3)) CHECK(f.payload()[1] <= f.payload()[0]);
  CHECK(s.sample(2).size() == 10);

  const auto d = discrete(2);
  CHECK(d.sample(2).size() == 16);
  CHECK_THROWS_AS(lsc_model(Space{{"a", "b"}, {1, 1, 1, 1}}), NotT0);
}

TEST_CASE("elements belong to one model") {
  const auto a = e_k(2);
  const auto b = e_k(2);
  CHECK_THROWS_AS(a.add(a.element(1), b.element(1)), ElementModelMismatch);
  CHECK_THROWS(e_k(0));
}

TEST_CASE("table validation") {
  const auto t = e_k(2).table();
  CHECK(validate_table(t).empty());
  auto bad = t;
  bad.add[1 * 4 + 2] = 0;
  const auto v = validate_table(bad);
  CHECK(std::find(v.begin(), v.end(), "commutativity at (1,2)") != v.end());
  auto nz = t;
  nz.leq[0 * 4 + 1] = 0;
  nz.leq[1 * 4 + 0] = 1;
  bool zero_least = false;
  for (const auto& s : validate_table(nz)) zero_least = zero_least || s.rfind("zero-least", 0) == 0;
  CHECK(zero_least);
  CHECK_THROWS_AS(finite_model(nz), ValidationError);
}

TEST_CASE("products") {
  const auto p = product(e_k(1), zero_inf());
  CHECK(p.is_finite());
  CHECK(p.size() == 6);
  CHECK(p.kind() == ModelKind::product);
  const auto q = product(nbar(), e_k(1));
  CHECK_FALSE(q.is_finite());
  const auto x = q.sample(1).back();
  CHECK(q.factors().size() == 2);
  CHECK(q.factors()[0].owns(q.component(x, 0)));
  const std::vector<Element> parts = {q.component(x, 0), q.component(x, 1)};
  CHECK(q.compose(parts) == x);
}
