// One PASS or FAIL line per acceptance criterion. Exit status is the number
// of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "culab/certify.hpp"
#include "culab/corpus.hpp"
#include "culab/glimm.hpp"
#include "culab/harness.hpp"
#include "culab/search.hpp"
#include "culab/softness.hpp"
#include "support/oracles.hpp"

using namespace culab;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<CuModel> small_models(std::size_t max_n) {
  std::vector<CuModel> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& m : enumerate_models(n)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Element> carrier(const CuModel& m, const Budget& b = {}) {
  return m.is_finite() ? m.elements() : m.sample(b.grid);
}

bool all_proven_axioms(const CuModel& m) {
  return check_axiom(m, Axiom::o5).proven() && check_axiom(m, Axiom::o6).proven() &&
         check_axiom(m, Axiom::o7).proven();
}

std::string name_of(const CuModel& m) {
  std::ostringstream os;
  os << to_string(m.kind());
  if (m.is_finite()) os << "[" << m.size() << "]";
  return os.str();
}

// Element 1 of E_2 and the multiples that witness its shape.
Outcome e_k_fidelity() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto m = e_k(2);
  const auto x = m.element(1);
  const auto r = classify_softness(m, x);
  o.expect(r.functionally_soft.proven(), "functionally soft");
  o.expect(r.weakly_purely_noncompact.proven(), "weakly purely noncompact");
  o.expect(r.strongly_soft.refuted(), "not strongly soft");
  o.expect(r.weakly_soft.refuted(), "not weakly soft");
  o.expect(r.purely_noncompact.refuted(), "not purely noncompact");
  o.expect(m.omega_multiple(x) == m.top(), "omega multiple is inf");
  o.expect(m.multiple(4, x) == m.top() && m.multiple(3, x) == m.top(), "(k+2)x = (k+1)x = inf");
  o.expect(!(m.multiple(2, x) == x), "2x differs from x");
  const auto dt = seconds_since(t0);
  o.expect(dt < 1.0, "runtime under 1 s");
  o.detail = std::to_string(dt) + " s";
  return o;
}

const std::vector<std::pair<std::string, std::string>> kDiagram = {
    {"strongly_soft", "weakly_soft"},
    {"strongly_soft", "functionally_soft"},
    {"strongly_soft", "purely_noncompact"},
    {"weakly_soft", "functionally_soft"},
    {"weakly_soft", "purely_noncompact"},
    {"functionally_soft", "weakly_purely_noncompact"},
    {"purely_noncompact", "weakly_purely_noncompact"},
};

Outcome implication_diagram() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, CuModel>> models;
  for (const auto& nm : corpus()) models.emplace_back(nm.name, nm.model);
  for (const auto& m : small_models(4)) models.emplace_back(name_of(m), m);
  std::size_t instances = 0;
  for (const auto& [name, m] : models) {
    for (const auto& x : carrier(m)) {
      const auto r = classify_softness(m, x);
      std::map<std::string, Status> s;
      for (const auto& [f, v] : flags(r)) s[f] = v->status;
      for (const auto& [a, c] : kDiagram) {
        ++instances;
        o.expect(!(s[a] == Status::proven && s[c] == Status::refuted),
                 name + " " + m.format(x) + ": " + a + " without " + c);
      }
    }
  }
  const auto dt = seconds_since(t0);
  o.expect(dt < 120.0, "runtime under 2 min");
  o.detail = std::to_string(models.size()) + " models, " + std::to_string(instances) + " implications, " +
             std::to_string(dt) + " s";
  return o;
}

Outcome compact_closed_forms() {
  Outcome o;
  std::size_t n_elems = 0;
  for (const auto& m : small_models(4)) {
    for (const auto& x : m.elements()) {
      ++n_elems;
      const auto r = sweep_softness(m, x);
      const bool idem = m.add(x, x) == x;
      bool periodic = false;
      for (std::uint64_t n = 1; n <= m.size(); ++n) periodic = periodic || m.multiple(n + 1, x) == m.multiple(n, x);
      const auto where = name_of(m) + " " + m.format(x);
      o.expect(r.strongly_soft.proven() == idem && !r.strongly_soft.unknown(), where + ": strongly soft");
      o.expect(r.weakly_soft.proven() == idem && !r.weakly_soft.unknown(), where + ": weakly soft");
      o.expect(r.purely_noncompact.proven() == idem && !r.purely_noncompact.unknown(), where + ": purely noncompact");
      o.expect(r.functionally_soft.proven() == periodic && !r.functionally_soft.unknown(),
               where + ": functionally soft");
    }
  }
  o.detail = std::to_string(n_elems) + " elements";
  return o;
}

Outcome soft_submonoid_laws() {
  Outcome o;
  std::vector<CuModel> models = small_models(4);
  for (const auto& nm : corpus()) {
    if (nm.model.is_finite()) models.push_back(nm.model);
  }
  for (const auto& m : models) {
    const auto soft = soft_submonoid(m);
    auto in = [&](const Element& x) { return std::find(soft.begin(), soft.end(), x) != soft.end(); };
    const auto where = name_of(m);
    o.expect(in(m.zero()), where + ": contains 0");
    for (const auto& y : soft) {
      for (const auto& z : soft) o.expect(in(m.add(y, z)), where + ": closed under addition");
      for (const auto& x : m.elements()) {
        if (m.leq(x, m.omega_multiple(y))) o.expect(in(m.add(x, y)), where + ": absorption");
      }
    }
  }
  o.detail = std::to_string(models.size()) + " models";
  return o;
}

std::vector<CuModel> axiom_subcorpus() {
  std::vector<CuModel> out;
  for (const auto& m : small_models(4)) {
    const bool lib = all_proven_axioms(m);
    const bool ref = oracle::o5(m.table()) && oracle::o6(m.table()) && oracle::o7(m.table());
    if (lib != ref) throw std::runtime_error("axiom verdicts disagree with the literal check on " + name_of(m));
    if (lib) out.push_back(m);
  }
  return out;
}

Outcome cu_equivalence() {
  Outcome o;
  const auto models = axiom_subcorpus();
  for (const auto& m : models) {
    const auto r = cu_equiv(m, Scale::whole(m));
    std::vector<Status> s;
    for (const auto& [n, v] : r.conditions) s.push_back(v.status);
    o.expect(s.size() == 3, "three conditions");
    o.expect(std::all_of(s.begin(), s.end(), [&](Status x) { return x == s.front() && x != Status::unknown; }),
             name_of(m) + ": conditions disagree");
  }
  o.detail = std::to_string(models.size()) + " models satisfy O5-O7";
  return o;
}

Outcome divisibility_characterization() {
  Outcome o;
  const auto models = axiom_subcorpus();
  auto uniform = [](const EquivalenceReport& r, Status want) {
    return r.conditions.size() == 5 &&
           std::all_of(r.conditions.begin(), r.conditions.end(), [&](const auto& c) { return c.second.status == want; });
  };
  for (const auto& m : models) {
    const auto r = char_div_equiv(m, Scale::whole(m));
    const auto first = r.conditions.front().second.status;
    o.expect(first != Status::unknown && uniform(r, first), name_of(m) + ": conditions disagree");
  }
  const auto e2 = e_k(2);
  o.expect(uniform(char_div_equiv(e2, Scale::whole(e2)), Status::refuted), "E_2 all false");
  const auto z = zero_inf();
  o.expect(uniform(char_div_equiv(z, Scale::whole(z)), Status::proven), "{0,inf} all true");
  o.detail = std::to_string(models.size()) + " models satisfy O5-O7";
  return o;
}

Outcome constructions() {
  Outcome o;
  std::size_t checked = 0;
  auto record = [&](const std::string& where, const std::vector<std::string>& problems) {
    ++checked;
    for (const auto& p : problems) o.failures.push_back(where + ": " + p);
  };
  auto attempt = [&](const std::function<void()>& f) {
    try {
      f();
    } catch (const PreconditionNotEstablished&) {
    } catch (const NotWayBelow&) {
    }
  };
  std::vector<std::pair<std::string, CuModel>> models;
  for (const auto& nm : corpus()) models.emplace_back(nm.name, nm.model);
  for (const auto& m : small_models(4)) models.emplace_back(name_of(m), m);
  for (const auto& [name, m] : models) {
    const auto sigma = Scale::whole(m);
    const auto els = carrier(m);
    for (const auto& x : els) {
      const auto where = name + " " + m.format(x);
      for (const auto& xp : m.basis_terms(x, 2)) {
        if (!m.way_below(xp, x)) continue;
        const auto v = strongly_soft_witness(m, xp, x);
        if (v.proven()) record(where + " strongly_soft_witness", certify::strongly_soft_witness(m, v));
        attempt([&] {
          const auto p = pre_cu_equiv(m, sigma, xp, x);
          if (p.proven()) record(where + " pre_cu_equiv", certify::pre_cu_equiv(m, p));
        });
        for (const auto& y : els) {
          if (!in_ideal_of(m, x, y)) continue;
          attempt([&] {
            const auto l = lhd_interpolate(m, xp, x, y);
            if (l.proven()) record(where + " lhd_interpolate", certify::lhd_interpolate(m, l));
          });
        }
      }
      attempt([&] {
        const auto d = soft_dominator(m, sigma, x);
        if (d.proven()) record(where + " soft_dominator", certify::soft_dominator(m, d));
      });
      for (std::uint64_t k = 1; k <= 3; ++k) {
        attempt([&] {
          const auto d = div_soft_divisor(m, x, k);
          if (d.proven()) record(where + " div_soft_divisor", certify::soft_divisor(m, d));
        });
        attempt([&] {
          const auto chain = m.basis_chain(x);
          const auto s = k_div_seq(m, k, chain);
          if (s.verdict.proven()) record(where + " k_div_seq", certify::k_div_seq(m, k, chain, s));
        });
      }
    }
  }
  // Raw check of the divisor of {0,inf} for every element.
  const auto z = zero_inf();
  for (const auto& x : z.elements()) {
    const auto v = div_soft_divisor(z, x, 5);
    o.expect(v.proven(), "{0,inf} divisor exists");
    if (!v.proven()) continue;
    const auto& y = binding(v.witness.front().chosen, "y").element();
    o.expect(z.leq(z.multiple(5, y), x) && z.leq(x, z.omega_multiple(y)), "{0,inf}: 5y <= x <= inf*y");
    o.expect(z.add(y, y) == y, "{0,inf}: y strongly soft");
  }
  o.detail = std::to_string(checked) + " constructions re-verified";
  return o;
}

// π is an isomorphism onto nbar if b ↦ π(a, b) respects order, sums and ≪
// and every value is hit exactly once.
Outcome quotient_oracle() {
  Outcome o;
  const auto s = sierpinski();
  const auto q = quotient(s, ideal_from_open_set(s, {true, false}));
  const auto& t = q.target();
  const auto nb = nbar();
  auto phi = [&](const Element& y) -> Element { return nb.make(Payload(y.payload().begin(), y.payload().end())); };
  std::vector<Element> grid = s.sample(7);
  if (grid.size() > 40) grid.resize(40);
  o.expect(grid.size() == 40, "40-element sample");
  o.expect(t.arity() == 1, "target has one coordinate");
  for (const auto& a : grid) {
    const auto pa = q.project(a);
    o.expect(phi(pa) == nb.make({a.payload()[1]}), "projection reads the closed coordinate");
    o.expect(q.project(q.lift(pa)) == pa, "lift is a section");
    for (const auto& b : grid) {
      const auto pb = q.project(b);
      o.expect(t.leq(pa, pb) == nb.leq(phi(pa), phi(pb)), "order");
      o.expect(t.way_below(pa, pb) == nb.way_below(phi(pa), phi(pb)), "way-below");
      o.expect(phi(t.add(pa, pb)) == nb.add(phi(pa), phi(pb)), "addition");
      o.expect((pa == pb) == (phi(pa) == phi(pb)), "injective");
    }
  }
  for (const auto& v : nb.sample(7)) {
    const auto y = t.make(Payload(v.payload().begin(), v.payload().end()));
    o.expect(phi(q.project(q.lift(y))) == v, "surjective");
  }

  std::size_t pairs = 0;
  for (const auto& nm : corpus()) {
    const auto& m = nm.model;
    const auto ideals = enumerate_ideals(m);
    const auto bottom = quotient(m, ideals.front());
    const auto top = quotient(m, ideals.back());
    const auto& tb = bottom.target();
    const auto& tt = top.target();
    o.expect(ideals.front().generator() == m.zero(), nm.name + ": first ideal is {0}");
    o.expect(ideals.back().generator() == m.omega_multiple(m.top()), nm.name + ": last ideal is S");
    if (m.is_finite()) {
      o.expect(tb.is_finite() && tb.size() == m.size(), nm.name + ": S/{0} has the same size");
      o.expect(tt.is_finite() && tt.size() == 1, nm.name + ": S/S is {0}");
      if (tb.is_finite() && tb.size() == m.size()) {
        // π itself is the isomorphism.
        std::vector<std::size_t> perm(m.size());
        for (const auto& x : m.elements()) perm[x.index()] = bottom.project(x).index();
        for (const auto& x : m.elements())
          for (const auto& y : m.elements()) {
            ++pairs;
            const auto px = bottom.project(x), py = bottom.project(y);
            o.expect(m.leq(x, y) == tb.leq(px, py), nm.name + ": S/{0} order");
            o.expect(bottom.project(m.add(x, y)) == tb.add(px, py), nm.name + ": S/{0} addition");
          }
        std::sort(perm.begin(), perm.end());
        o.expect(std::adjacent_find(perm.begin(), perm.end()) == perm.end(), nm.name + ": S/{0} bijective");
      }
    } else {
      for (const auto& x : m.sample(3)) {
        o.expect(bottom.lift(bottom.project(x)) == x, nm.name + ": S/{0} injective");
        o.expect(top.project(x) == tt.zero(), nm.name + ": S/S collapses");
        for (const auto& y : m.sample(3)) {
          ++pairs;
          const auto px = bottom.project(x), py = bottom.project(y);
          o.expect(m.leq(x, y) == tb.leq(px, py), nm.name + ": S/{0} order");
          o.expect(m.way_below(x, y) == tb.way_below(px, py), nm.name + ": S/{0} way-below");
          o.expect(bottom.project(m.add(x, y)) == tb.add(px, py), nm.name + ": S/{0} addition");
        }
      }
      for (const auto& y : tt.is_finite() ? tt.elements() : tt.sample(3)) {
        o.expect(y == tt.zero(), nm.name + ": S/S has one element");
      }
    }
  }
  o.detail = std::to_string(grid.size()) + " grid points, " + std::to_string(pairs) + " pairs over the corpus";
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  std::ostringstream counts;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto fast = enumerate_models(n);
    const auto slow = oracle::naive_models(n);
    counts << (n > 1 ? ", " : "") << "n=" << n << ": " << fast.size() << "/" << slow.size();
    o.expect(fast.size() == slow.size(), "count at n=" + std::to_string(n));
    for (const auto& t : slow) {
      const auto hits = std::count_if(fast.begin(), fast.end(), [&](const CuModel& m) { return oracle::isomorphic(m.table(), t); });
      o.expect(hits == 1, "each class once at n=" + std::to_string(n));
    }
  }
  o.expect(enumerate_models(2).size() == 1, "n=2 count is 1");
  o.detail = counts.str();
  return o;
}

// Enumeration, full classification and the harness for every model.
double sweep(std::size_t n, std::size_t jobs, std::size_t& models, std::size_t& violations) {
  const auto t0 = Clock::now();
  EnumerationOptions opts;
  opts.jobs = jobs;
  for (const auto& m : enumerate_models(n, opts)) {
    ++models;
    Classifier c(m);
    c.bundle();
    violations += run_harness(m, Scale::whole(m)).violations();
  }
  return seconds_since(t0);
}

Outcome performance() {
  Outcome o;
  std::size_t models = 0, violations = 0;
  double small = 0;
  for (std::size_t n = 1; n <= 4; ++n) small += sweep(n, 4, models, violations);
  o.expect(small < 60.0, "size <= 4 under 60 s");
  const auto small_models_count = models;
  const double five = sweep(5, 4, models, violations);
  o.expect(five < 900.0, "size 5 under 15 min");
  o.expect(violations == 0, "harness violations: " + std::to_string(violations));
  o.detail = "size <= 4: " + std::to_string(small_models_count) + " models in " + std::to_string(small) +
             " s; size 5: " + std::to_string(models - small_models_count) + " models in " + std::to_string(five) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"E_k fidelity", e_k_fidelity},
      {"implication diagram", implication_diagram},
      {"compact closed forms", compact_closed_forms},
      {"soft submonoid", soft_submonoid_laws},
      {"soft dominators, abundance and 2-splitting agree under O5-O7", cu_equivalence},
      {"divisibility characterization agrees under O5-O7", divisibility_characterization},
      {"constructions re-verify", constructions},
      {"quotient oracle", quotient_oracle},
      {"enumeration oracle", enumeration_oracle},
      {"performance", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = o.failures.empty();
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << name;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << "\n";
    const std::size_t shown = std::min<std::size_t>(o.failures.size(), 10);
    for (std::size_t k = 0; k < shown; ++k) std::cout << "      " << o.failures[k] << "\n";
    if (o.failures.size() > shown) std::cout << "      ... " << (o.failures.size() - shown) << " more\n";
  }
  return failed;
}
