#include "culab/harness.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "culab/certify.hpp"

namespace culab {

namespace {

class Checker {
 public:
  InvariantCheck& open(const std::string& name) {
    checks_.push_back(InvariantCheck{name, 0, {}});
    return checks_.back();
  }
  std::vector<InvariantCheck> take() { return {checks_.begin(), checks_.end()}; }

 private:
  std::deque<InvariantCheck> checks_;
};

void fail(InvariantCheck& c, std::string what) { c.violations.push_back(std::move(what)); }

void absorb(InvariantCheck& c, const std::string& prefix, const std::vector<std::string>& problems) {
  for (const auto& p : problems) fail(c, prefix + p);
}

// A ⟹ B on three-valued verdicts: violated when A is proven and B refuted.
bool breaks(Status a, Status b) { return a == Status::proven && b == Status::refuted; }

bool decided(Status s) { return s != Status::unknown; }

Status flag(const ElementReport& e, const std::string& name) {
  for (const auto& [n, c] : e.flags) {
    if (n == name) return c.verdict.status;
  }
  throw Error("missing flag " + name);
}

std::vector<Element> elements(const CuModel& m, const Budget& b) {
  return m.is_finite() ? m.elements() : m.sample(b.grid);
}

// Pairs x' ≪ x visited by the invariant checks.
std::vector<std::pair<Element, Element>> pairs(const CuModel& m, const Budget& b) {
  std::vector<std::pair<Element, Element>> out;
  for (const auto& x : elements(m, b)) {
    for (const auto& xp : m.is_finite() ? m.elements() : m.basis_terms(x, b.grid + 1)) {
      if (m.way_below(xp, x)) out.emplace_back(xp, x);
    }
  }
  return out;
}

template <class F>
void guarded(InvariantCheck& c, const std::string& where, F&& f) {
  try {
    f();
  } catch (const PreconditionNotEstablished&) {
  } catch (const UnsupportedModel&) {
  } catch (const std::exception& e) {
    fail(c, where + ": " + e.what());
  }
}

void structure_checks(Checker& ck, const Report& r) {
  const auto& m = r.model;
  const auto& b = r.budget;
  const auto els = elements(m, b);

  auto& pres = ck.open("presentation laws");
  pres.checked = 1;
  for (auto& v : validate_model(m, b)) fail(pres, v);

  std::vector<Ideal> ideals;
  auto& ideal = ck.open("ideal invariants");
  guarded(ideal, "enumerate_ideals", [&] { ideals = enumerate_ideals(m); });
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& I = ideals[i];
    const auto tag = "ideal " + m.format(I.generator());
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (ideals[j] == I) fail(ideal, tag + " listed twice");
    }
    if (!I.contains(m, m.zero())) fail(ideal, tag + " misses 0");
    for (const auto& x : els) {
      ++ideal.checked;
      const bool in = I.contains(m, x);
      const bool gen = m.leq(ideal_generated(m, x).generator(), I.generator());
      if (in != gen) fail(ideal, tag + ": membership of " + m.format(x) + " disagrees with its generated ideal");
      if (!in) continue;
      for (const auto& y : els) {
        if (m.leq(y, x) && !I.contains(m, y)) fail(ideal, tag + " not downward closed at " + m.format(y));
        if (I.contains(m, y) && !I.contains(m, m.add(x, y))) {
          fail(ideal, tag + " not closed under " + m.format(x) + " + " + m.format(y));
        }
      }
    }
  }

  auto& quo = ck.open("quotient morphism contract");
  auto& pres_soft = ck.open("quotients preserve softness");
  for (const auto& I : ideals) {
    const auto tag = "S/" + m.format(I.generator()) + ": ";
    guarded(quo, tag, [&] {
      const auto q = quotient(m, I);
      const auto& t = q.target();
      if (!(q.project(m.zero()) == t.zero())) fail(quo, tag + "zero not preserved");
      for (const auto& x : els) {
        const auto px = q.project(x);
        for (const auto& y : els) {
          ++quo.checked;
          const auto py = q.project(y);
          if (!(q.project(m.add(x, y)) == t.add(px, py))) fail(quo, tag + "additivity at " + m.format(x) + ", " + m.format(y));
          if (m.leq(x, y) && !t.leq(px, py)) fail(quo, tag + "order at " + m.format(x) + ", " + m.format(y));
          if (m.way_below(x, y) && !t.way_below(px, py)) fail(quo, tag + "way-below at " + m.format(x) + ", " + m.format(y));
        }
        const auto terms = m.basis_terms(x, b.grid + 1);
        for (const auto& xn : terms) {
          if (!t.leq(q.project(xn), px)) fail(quo, tag + "basis term of " + m.format(x) + " above the image");
        }
        if (m.is_compact(x) && !(q.project(terms.back()) == px)) fail(quo, tag + "stabilized chain of " + m.format(x));
      }
      for (const auto& y : t.is_finite() ? t.elements() : t.sample(b.grid)) {
        ++quo.checked;
        if (!(q.project(q.lift(y)) == y)) fail(quo, tag + "no preimage for " + t.format(y));
      }
      for (const auto& x : els) {
        ++pres_soft.checked;
        const auto mapped = map_element(q, x, b);
        for (const auto& f : mapped.lost) fail(pres_soft, tag + m.format(x) + " loses " + f);
      }
    });
  }

  auto& fin = ck.open("finiteness implication chain");
  fin.checked = 2;
  const auto wc = r.predicate("weak_cancellation").verdict.status;
  const auto rsf = r.predicate("residually_stably_finite").verdict.status;
  const auto sf = r.predicate("stably_finite").verdict.status;
  if (breaks(wc, rsf)) fail(fin, "weak cancellation without residual stable finiteness");
  if (breaks(rsf, sf)) fail(fin, "residual stable finiteness without stable finiteness");
}

void softness_checks(Checker& ck, const Report& r) {
  const auto& m = r.model;
  const auto& b = r.budget;
  static const std::vector<std::pair<std::string, std::string>> diagram = {
      {"strongly_soft", "weakly_soft"},
      {"weakly_soft", "functionally_soft"},
      {"weakly_soft", "purely_noncompact"},
      {"purely_noncompact", "weakly_purely_noncompact"},
      {"functionally_soft", "weakly_purely_noncompact"},
      {"strongly_soft", "functionally_soft"},
      {"strongly_soft", "purely_noncompact"},
  };
  auto& dia = ck.open("softness implication diagram");
  for (const auto& e : r.elements) {
    for (const auto& [a, c] : diagram) {
      ++dia.checked;
      if (breaks(flag(e, a), flag(e, c))) fail(dia, m.format(e.x) + ": " + a + " without " + c);
    }
  }

  const bool o5 = r.predicate("O5").verdict.proven();
  const bool rsf = r.predicate("residually_stably_finite").verdict.proven();
  auto& eq = ck.open("softness equivalences under O5");
  if (o5) {
    for (const auto& e : r.elements) {
      ++eq.checked;
      const auto f = flag(e, "functionally_soft");
      const auto w = flag(e, "weakly_purely_noncompact");
      if (decided(f) && decided(w) && f != w) fail(eq, m.format(e.x) + ": functionally soft differs from weakly purely noncompact");
      if (!rsf) continue;
      std::optional<Status> seen;
      for (const auto& [n, c] : e.flags) {
        const auto s = c.verdict.status;
        if (!decided(s)) continue;
        if (seen && *seen != s) {
          fail(eq, m.format(e.x) + ": softness notions differ in a residually stably finite model");
          break;
        }
        seen = s;
      }
    }
  }

  auto& compact = ck.open("compact closed forms");
  for (const auto& e : r.elements) {
    if (!e.compact) continue;
    ++compact.checked;
    const auto& x = e.x;
    const auto swept = sweep_softness(m, x, b);
    const bool idem = m.add(x, x) == x;
    auto same = [&](const Verdict& v, bool expected, const char* what) {
      if (decided(v.status) && v.proven() != expected) fail(compact, m.format(x) + ": " + what + " sweep differs from the closed form");
    };
    same(swept.strongly_soft, idem, "strongly soft");
    same(swept.weakly_soft, idem, "weakly soft");
    same(swept.purely_noncompact, idem, "purely noncompact");
    bool periodic = false;
    const std::uint64_t bound = m.is_finite() ? m.size() : std::max<std::uint64_t>(b.n, 1);
    for (std::uint64_t n = 1; n <= bound && !periodic; ++n) periodic = m.multiple(n + 1, x) == m.multiple(n, x);
    if (swept.functionally_soft.proven() && !periodic) fail(compact, m.format(x) + ": functionally soft without periodic multiples");
    if (m.is_finite() && swept.functionally_soft.refuted() && periodic) {
      fail(compact, m.format(x) + ": periodic multiples but not functionally soft");
    }
  }

  if (!m.is_finite()) return;

  auto& sub = ck.open("soft submonoid");
  guarded(sub, "soft_submonoid", [&] {
    const auto soft = soft_submonoid(m);
    auto in = [&](const Element& x) { return std::find(soft.begin(), soft.end(), x) != soft.end(); };
    for (const auto& x : m.elements()) {
      for (const auto& y : soft) {
        ++sub.checked;
        if (m.leq(x, m.omega_multiple(y)) && !in(m.add(x, y))) {
          fail(sub, "absorption fails for " + m.format(x) + " + " + m.format(y));
        }
      }
      const bool listed = in(x);
      for (const auto& e : r.elements) {
        if (e.x == x && e.flags.front().second.verdict.proven() != listed) {
          fail(sub, m.format(x) + ": submonoid membership disagrees with strong softness");
        }
      }
    }
  });

  auto& chr = ck.open("strong softness characterization");
  for (const auto& e : r.elements) {
    ++chr.checked;
    const auto& x = e.x;
    bool any = true, soft_t = true;
    for (const auto& xp : m.elements()) {
      if (!m.way_below(xp, x)) continue;
      bool found = false, found_soft = false;
      for (const auto& t : m.elements()) {
        if (m.leq(m.add(xp, t), x) && m.leq(x, m.omega_multiple(t))) {
          found = true;
          if (m.add(t, t) == t) found_soft = true;
        }
      }
      any = any && found;
      soft_t = soft_t && found_soft;
    }
    const bool strong = flag(e, "strongly_soft") == Status::proven;
    if (strong != any || any != soft_t) fail(chr, m.format(x) + ": the three characterizations disagree");
  }
}

void glimm_checks(Checker& ck, const Report& r) {
  const auto& m = r.model;
  const auto& b = r.budget;
  const auto& s = r.scale;
  auto st = [&](const char* name) { return r.predicate(name).verdict.status; };
  const bool o5 = st("O5") == Status::proven, o6 = st("O6") == Status::proven, o7 = st("O7") == Status::proven;

  auto& imp = ck.open("Glimm-type implications");
  imp.checked = 3;
  if (breaks(st("abundance"), st("property_V"))) fail(imp, "abundance without property (V)");
  if (o6 && breaks(st("abundance"), st("weakly_divisible"))) fail(imp, "abundance and O6 without weak divisibility");
  if (breaks(st("two_omega_divisible"), st("weakly_divisible"))) fail(imp, "(2,omega)-divisible but not weakly");

  auto& wdiv = ck.open("weakly soft elements are weakly divisible");
  bool all_scale_divisible = true;
  for (const auto& e : r.elements) {
    if (!s.contains(m, e.x)) continue;
    const auto v = element_weakly_divisible(m, e.x, b);
    if (!v.proven()) all_scale_divisible = false;
    if (!o6) continue;
    ++wdiv.checked;
    if (breaks(flag(e, "weakly_soft"), v.status)) fail(wdiv, m.format(e.x) + ": weakly soft but not weakly divisible");
  }
  if (o6 && m.is_finite()) {
    ++wdiv.checked;
    if (all_scale_divisible && st("weakly_divisible") == Status::refuted) {
      fail(wdiv, "every scale element weakly divisible but the model is not");
    }
  }

  auto& eqv = ck.open("equivalence agreement under O5-O7");
  if (o5 && o6 && o7) {
    for (const auto& e : r.equivalences) {
      ++eqv.checked;
      if (!e.agree) fail(eqv, e.name + " conditions disagree");
    }
  }

  auto& cons = ck.open("constructions re-verify");
  const auto prs = pairs(m, b);
  for (const auto& [xp, x] : prs) {
    const auto where = "(" + m.format(xp) + ", " + m.format(x) + ")";
    guarded(cons, "strongly_soft_witness " + where, [&] {
      ++cons.checked;
      absorb(cons, "strongly_soft_witness " + where + ": ", certify::strongly_soft_witness(m, strongly_soft_witness(m, xp, x)));
    });
    if (!s.contains(m, x) || !s.contains(m, xp)) continue;
    guarded(cons, "soft_interpolate " + where, [&] {
      const auto v = soft_interpolate(m, s, xp, x, b);
      ++cons.checked;
      absorb(cons, "soft_interpolate " + where + ": ", certify::soft_interpolate(m, v));
    });
    guarded(cons, "pre_cu_equiv " + where, [&] {
      const auto v = pre_cu_equiv(m, s, xp, x, b);
      ++cons.checked;
      absorb(cons, "pre_cu_equiv " + where + ": ", certify::pre_cu_equiv(m, v));
    });
  }
  if (o6 && o7) {
    const auto els = elements(m, b);
    for (const auto& [xp, x] : prs) {
      for (const auto& y : els) {
        if (!m.leq(x, m.omega_multiple(y))) continue;
        const auto where = "lhd_interpolate (" + m.format(xp) + ", " + m.format(x) + ", " + m.format(y) + ")";
        guarded(cons, where, [&] {
          const auto v = lhd_interpolate(m, xp, x, y, b);
          ++cons.checked;
          if (m.is_finite() && !v.proven()) fail(cons, where + ": " + v.note);
          absorb(cons, where + ": ", certify::lhd_interpolate(m, v));
        });
      }
    }
  }
  for (const auto& e : r.elements) {
    if (!s.contains(m, e.x)) continue;
    const auto where = "soft_dominator " + m.format(e.x);
    guarded(cons, where, [&] {
      const auto v = soft_dominator(m, s, e.x, b);
      ++cons.checked;
      if (m.is_finite() && v.unknown()) fail(cons, where + ": " + v.note);
      absorb(cons, where + ": ", certify::soft_dominator(m, v));
    });
  }

  auto& div = ck.open("soft divisors from (2,omega)-divisibility");
  if (o5 && st("two_omega_divisible") == Status::proven) {
    for (const auto& e : r.elements) {
      for (std::uint64_t k = 1; k <= b.n; ++k) {
        const auto where = "div_soft_divisor " + m.format(e.x) + " k=" + std::to_string(k);
        guarded(div, where, [&] {
          ++div.checked;
          const auto v = div_soft_divisor(m, e.x, k, b);
          if (v.refuted() || (m.is_finite() && !v.proven())) fail(div, where + ": " + std::string(to_string(v.status)) + " " + v.note);
          absorb(div, where + ": ", certify::soft_divisor(m, v));
          const auto chain = m.basis_chain(e.x);
          if (chain.form() == ChainDescriptor::Form::stabilizing_list) {
            absorb(div, "k_div_seq " + m.format(e.x) + ": ", certify::k_div_seq(m, k, chain, k_div_seq(m, k, chain, b)));
          }
        });
      }
    }
  }
}

}  // namespace

std::size_t HarnessReport::violations() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.violations.size();
  return n;
}

HarnessReport run_harness(const CuModel& model, const Scale& scale, const Budget& budget) {
  HarnessReport h{build_report(model, scale, budget), {}};
  Checker ck;
  auto& rc = ck.open("witnesses and certificates re-verify");
  for (const auto& e : h.report.elements) rc.checked += e.flags.size();
  rc.checked += h.report.predicates.size();
  rc.violations = h.report.problems();
  structure_checks(ck, h.report);
  softness_checks(ck, h.report);
  glimm_checks(ck, h.report);
  h.checks = ck.take();
  return h;
}

std::string harness_text(const HarnessReport& h) {
  std::ostringstream os;
  for (const auto& c : h.checks) {
    os << (c.violations.empty() ? "ok    " : "FAIL  ") << c.name << " (" << c.checked << " checked";
    if (!c.violations.empty()) os << ", " << c.violations.size() << " violations";
    os << ")\n";
    for (const auto& v : c.violations) os << "      " << v << "\n";
  }
  os << (h.ok() ? "all invariants hold\n" : std::to_string(h.violations()) + " invariant violations\n");
  return os.str();
}

Json harness_json(const HarnessReport& h) {
  Json checks = Json::array();
  for (const auto& c : h.checks) {
    checks.push_back({{"name", c.name}, {"checked", c.checked}, {"violations", c.violations}});
  }
  return {{"model", serialize_model(h.report.model)}, {"checks", std::move(checks)}, {"violations", h.violations()}};
}

}  // namespace culab
