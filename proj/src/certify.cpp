#include "culab/certify.hpp"

#include <algorithm>
#include <functional>

#include "culab/softness.hpp"

namespace culab::certify {

namespace {

using Problems = std::vector<std::string>;

const Element& el(const std::vector<Binding>& bs, std::string_view name) { return binding(bs, name).element(); }

bool has(const std::vector<Binding>& bs, std::string_view name) {
  return std::any_of(bs.begin(), bs.end(), [&](const Binding& b) { return b.name == name; });
}

std::vector<Element> numbered(const std::vector<Binding>& bs, const std::string& base) {
  std::vector<Element> out;
  for (std::size_t j = 1; has(bs, base + std::to_string(j)); ++j) out.push_back(el(bs, base + std::to_string(j)));
  return out;
}

std::vector<Element> domain(const CuModel& m, std::initializer_list<Element> params) {
  if (m.is_finite()) return m.elements();
  return m.witness_domain(std::span<const Element>(params.begin(), params.size()));
}

// Largest multiplicity worth trying: chains of multiples stabilize within the
// carrier size on finite models, and within the parameter level elsewhere.
std::uint64_t reach(const CuModel& m, std::initializer_list<Element> params) {
  const std::span<const Element> p(params.begin(), params.size());
  if (m.is_finite()) return std::max<std::uint64_t>(m.size(), 1);
  const auto lvl = m.level(p);
  const std::uint64_t l = lvl.is_finite() ? lvl.value() : 0;
  return std::max<std::uint64_t>({m.multiplicity_bound(p), l + 1, 1});
}

Element total(const CuModel& m, const std::vector<Element>& xs) {
  Element s = m.zero();
  for (const auto& x : xs) s = m.add(s, x);
  return s;
}

Element omega_total(const CuModel& m, const std::vector<Element>& xs) {
  Element s = m.zero();
  for (const auto& x : xs) s = m.add(s, m.omega_multiple(x));
  return s;
}

// Strong softness straight from the definition on the basis terms of x.
Status soft_by_definition(const CuModel& m, const Element& x, std::size_t depth) {
  for (const auto& xp : m.is_finite() ? m.elements() : m.basis_terms(x, depth)) {
    if (!m.way_below(xp, x)) continue;
    bool found = false;
    for (const auto& t : domain(m, {xp, x})) {
      if (m.way_below(m.add(xp, t), x) && m.way_below(xp, m.omega_multiple(t))) {
        found = true;
        break;
      }
    }
    if (!found) return Status::refuted;
  }
  return Status::proven;
}

void expect(Problems& out, bool ok, const std::string& what) {
  if (!ok) out.push_back(what);
}

std::string at(const CuModel& m, const Instance& inst) {
  std::string s = "[";
  bool first = true;
  for (const auto& b : inst.given) {
    if (!first) s += ", ";
    first = false;
    s += b.name + "=" + (b.is_count() ? std::to_string(b.count()) : m.format(b.element()));
  }
  return s + "]";
}

// Is some finite sum of `gens` above x' (strictly: way above)? Finite sums of
// a finite family are directed with supremum the sum of the ∞-multiples.
bool some_sum_reaches(const CuModel& m, const std::vector<Element>& gens, const Element& xp, bool strict,
                      std::uint64_t n) {
  if (strict) return m.way_below(xp, omega_total(m, gens));
  return m.leq(xp, m.multiple(n, total(m, gens)));
}

bool image_compact(const CuModel& m, const Element& x, const Element& e) {
  const auto q = quotient(m, Ideal(m, e));
  return q.target().is_compact(q.project(x));
}

}  // namespace

Problems element_flag(const CuModel& m, const std::string& flag, const Element& x, const Verdict& v) {
  Problems out;
  if (v.unknown()) return out;
  auto check_given = [&](const Instance& inst, bool proven) {
    const auto where = flag + " " + at(m, inst) + ": ";
    if (flag == "strongly_soft" || flag == "weakly_soft" || flag == "functionally_soft") {
      const auto& xp = el(inst.given, "x'");
      expect(out, m.way_below(xp, x), where + "x' is not way below x");
      if (flag == "strongly_soft") {
        if (proven) {
          const auto& t = el(inst.chosen, "t");
          expect(out, m.way_below(m.add(xp, t), x), where + "x'+t << x fails");
          expect(out, m.way_below(xp, m.omega_multiple(t)), where + "x' << inf*t fails");
        } else {
          for (const auto& t : domain(m, {xp, x})) {
            if (m.way_below(m.add(xp, t), x) && m.way_below(xp, m.omega_multiple(t))) {
              out.push_back(where + "certificate has a witness t=" + m.format(t));
              break;
            }
          }
        }
      } else if (flag == "weakly_soft") {
        if (proven) {
          const auto ts = numbered(inst.chosen, "t");
          expect(out, !ts.empty(), where + "no summands");
          for (const auto& t : ts) expect(out, m.way_below(m.add(xp, t), x), where + "x'+t_j << x fails");
          expect(out, m.way_below(xp, total(m, ts)), where + "x' << sum t_j fails");
        } else {
          std::vector<Element> gens;
          for (const auto& t : domain(m, {xp, x})) {
            if (m.way_below(m.add(xp, t), x)) gens.push_back(t);
          }
          expect(out, !some_sum_reaches(m, gens, xp, true, 0), where + "certificate has a witness sum");
        }
      } else {
        if (proven) {
          const auto n = binding(inst.chosen, "n").count();
          expect(out, m.way_below(m.multiple(n + 1, xp), m.multiple(n, x)), where + "(n+1)x' << nx fails");
        } else {
          for (std::uint64_t n = 1; n <= reach(m, {xp, x}); ++n) {
            if (m.way_below(m.multiple(n + 1, xp), m.multiple(n, x))) {
              out.push_back(where + "certificate has a witness n=" + std::to_string(n));
              break;
            }
          }
        }
      }
      return;
    }
    const auto& e = el(inst.given, "ideal");
    expect(out, m.add(e, e) == e, where + "ideal generator is not idempotent");
    expect(out, image_compact(m, x, e), where + "image of x is not compact");
    if (flag == "purely_noncompact") {
      const bool ok = m.leq(m.add(x, x), m.add(x, e));
      expect(out, ok == proven, where + (proven ? "2x <= x + e fails" : "2x <= x + e holds"));
    } else if (proven) {
      const auto n = binding(inst.chosen, "n").count();
      expect(out, m.leq(m.multiple(n + 1, x), m.add(m.multiple(n, x), e)), where + "(n+1)x <= nx + e fails");
    } else {
      for (std::uint64_t n = 1; n <= reach(m, {x, e}); ++n) {
        if (m.leq(m.multiple(n + 1, x), m.add(m.multiple(n, x), e))) {
          out.push_back(where + "certificate has a witness n=" + std::to_string(n));
          break;
        }
      }
    }
  };
  if (v.proven()) {
    for (const auto& inst : v.witness) check_given(inst, true);
  } else {
    check_given(v.certificate, false);
  }
  return out;
}

Problems model_predicate(const CuModel& m, const Scale& sigma, const std::string& name, const Verdict& v) {
  Problems out;
  if (v.unknown()) return out;
  auto in_scale = [&](const Element& x) { return sigma.contains(m, x); };
  auto soft = [&](const Element& y) { return soft_by_definition(m, y, Budget{}.basis) == Status::proven; };

  auto check = [&](const Instance& inst, bool proven) {
    const auto where = name + " " + at(m, inst) + ": ";
    const auto& g = inst.given;
    const auto& c = inst.chosen;
    if (name == "two_omega_divisible" || name.rfind("k_omega_divisible:", 0) == 0 || name == "weakly_divisible" ||
        name == "abundance" || name == "2_splitting") {
      const auto& xp = el(g, "x'");
      const auto& x = el(g, "x");
      expect(out, m.way_below(xp, x), where + "x' << x fails");
      expect(out, in_scale(x), where + "x is not in the scale");
      if (name != "weakly_divisible" && name != "abundance" && name != "2_splitting") {
        const std::uint64_t k = name == "two_omega_divisible" ? 2 : std::stoull(name.substr(name.find(':') + 1));
        if (proven) {
          const auto& y = el(c, "y");
          expect(out, m.leq(m.multiple(k, y), x), where + "ky <= x fails");
          expect(out, m.leq(xp, m.multiple(binding(c, "n").count(), y)), where + "x' <= ny fails");
        } else {
          const auto n = reach(m, {xp, x});
          for (const auto& y : domain(m, {xp, x})) {
            if (m.leq(m.multiple(k, y), x) && m.leq(xp, m.multiple(n, y))) {
              out.push_back(where + "certificate has a witness y=" + m.format(y));
              break;
            }
          }
        }
      } else if (name == "weakly_divisible") {
        if (proven) {
          const auto ys = numbered(c, "y");
          expect(out, !ys.empty(), where + "no summands");
          for (const auto& y : ys) expect(out, m.leq(m.multiple(2, y), x), where + "2y_j <= x fails");
          expect(out, m.leq(xp, total(m, ys)), where + "x' <= sum y_j fails");
        } else {
          std::vector<Element> gens;
          for (const auto& y : domain(m, {xp, x})) {
            if (m.leq(m.multiple(2, y), x)) gens.push_back(y);
          }
          expect(out, !some_sum_reaches(m, gens, xp, false, reach(m, {xp, x})),
                 where + "certificate has a witness sum");
        }
      } else if (name == "abundance") {
        if (proven) {
          const auto& y = el(c, "y");
          expect(out, m.leq(y, x) && m.leq(xp, m.omega_multiple(y)), where + "x' <| y <= x fails");
          expect(out, soft(y), where + "y is not strongly soft");
        } else {
          for (const auto& y : domain(m, {xp, x})) {
            if (m.leq(y, x) && m.leq(xp, m.omega_multiple(y)) && soft(y)) {
              out.push_back(where + "certificate has a witness y=" + m.format(y));
              break;
            }
          }
        }
      } else {
        auto ok = [&](const Element& y, const Element& z) {
          return m.leq(m.add(y, z), x) && m.leq(xp, m.omega_multiple(y)) && m.leq(xp, m.omega_multiple(z));
        };
        if (proven) {
          expect(out, ok(el(c, "y"), el(c, "z")), where + "y + z <= x, x' <| y, z fails");
        } else {
          const auto d = domain(m, {xp, x});
          for (const auto& y : d) {
            for (const auto& z : d) {
              if (ok(y, z)) {
                out.push_back(where + "certificate has a witness pair");
                return;
              }
            }
          }
        }
      }
    } else if (name == "ideal_filtered") {
      const auto &vp = el(g, "v'"), &vv = el(g, "v"), &x = el(g, "x"), &y = el(g, "y");
      expect(out, m.way_below(vp, vv), where + "v' << v fails");
      expect(out, in_scale(x) && in_scale(y), where + "x, y not in the scale");
      expect(out, m.way_below(vv, m.omega_multiple(x)) && m.way_below(vv, m.omega_multiple(y)),
             where + "v << inf*x, inf*y fails");
      auto ok = [&](const Element& z) {
        return m.way_below(vp, m.omega_multiple(z)) && m.way_below(z, x) && m.way_below(z, y);
      };
      if (proven) {
        expect(out, ok(el(c, "z")), where + "z does not satisfy v' << inf*z, z << x, y");
      } else {
        for (const auto& z : domain(m, {vp, x, y})) {
          if (ok(z)) {
            out.push_back(where + "certificate has a witness z=" + m.format(z));
            break;
          }
        }
      }
    } else if (name == "property_V") {
      const auto &d1p = el(g, "d1'"), &d1 = el(g, "d1"), &d2p = el(g, "d2'"), &d2 = el(g, "d2");
      const auto &cc = el(g, "c"), &x = el(g, "x");
      expect(out, in_scale(d1) && in_scale(d2) && in_scale(cc) && in_scale(x), where + "not in the scale");
      expect(out, m.way_below(d1p, d1) && m.way_below(d2p, d2), where + "d_j' << d_j fails");
      expect(out, m.way_below(d1, cc) && m.way_below(d2, cc), where + "d_j << c fails");
      expect(out, m.way_below(m.add(cc, d1), x) && m.way_below(m.add(cc, d2), x), where + "c + d_j << x fails");
      const auto w = m.add(d1p, d2p);
      auto ok = [&](const Element& y, const Element& z) {
        return m.leq(m.add(y, z), x) && m.leq(w, m.omega_multiple(y)) && m.leq(w, m.omega_multiple(z));
      };
      if (proven) {
        expect(out, ok(el(c, "y"), el(c, "z")), where + "y + z <= x, d1'+d2' <| y, z fails");
      } else {
        const auto d = domain(m, {w, x});
        for (const auto& y : d) {
          for (const auto& z : d) {
            if (ok(y, z)) {
              out.push_back(where + "certificate has a witness pair");
              return;
            }
          }
        }
      }
    } else if (name == "soft_dominators" || name == "soft_divisors") {
      const std::uint64_t k = name == "soft_dominators" ? 1 : 2;
      const auto& x = el(g, "x");
      if (k == 1) expect(out, in_scale(x), where + "x is not in the scale");
      auto ok = [&](const Element& y) {
        return m.leq(m.multiple(k, y), x) && m.leq(x, m.omega_multiple(y)) && soft(y);
      };
      if (proven) {
        expect(out, ok(el(c, "y")), where + "y is not a strongly soft divisor");
      } else {
        for (const auto& y : domain(m, {x})) {
          if (ok(y)) {
            out.push_back(where + "certificate has a witness y=" + m.format(y));
            break;
          }
        }
      }
    } else if (name == "stably_finite") {
      if (proven) return;
      const auto &x = el(g, "x"), &y = el(g, "y");
      expect(out, m.way_below(m.add(x, y), x) && !(y == m.zero()), where + "x + y << x with y != 0 fails");
    } else if (name == "residually_stably_finite") {
      if (proven) return;
      const auto q = quotient(m, Ideal(m, el(g, "ideal")));
      const auto x = q.project(el(g, "x"));
      const auto y = q.project(el(g, "y"));
      const auto& t = q.target();
      expect(out, t.way_below(t.add(x, y), x) && !(y == t.zero()), where + "x + y << x fails in the quotient");
    } else if (name == "weak_cancellation") {
      if (proven) return;
      const auto &x = el(g, "x"), &y = el(g, "y"), &z = el(g, "z");
      expect(out, m.way_below(m.add(x, z), m.add(y, z)) && !m.way_below(x, y),
             where + "x + z << y + z without x << y fails");
    } else if (name == "O5" || name == "O7") {
      const auto &xp = el(g, "x'"), &x = el(g, "x"), &yp = el(g, "y'"), &y = el(g, "y"), &z = el(g, "z");
      expect(out, m.way_below(xp, x) && m.way_below(yp, y), where + "x' << x, y' << y fails");
      std::function<bool(const Element&)> ok;
      if (name == "O5") {
        expect(out, m.leq(m.add(x, y), z), where + "x + y <= z fails");
        ok = [&](const Element& w) {
          return m.leq(m.add(xp, w), z) && m.leq(z, m.add(x, w)) && m.way_below(yp, w);
        };
      } else {
        expect(out, m.leq(x, z) && m.leq(y, z), where + "x, y <= z fails");
        ok = [&](const Element& w) {
          return m.way_below(xp, w) && m.way_below(yp, w) && m.leq(w, z) && m.leq(w, m.add(x, y));
        };
      }
      if (proven) {
        expect(out, ok(el(c, name == "O5" ? "c" : "w")), where + "witness fails");
      } else {
        for (const auto& w : domain(m, {xp, x, yp, y, z})) {
          if (ok(w)) {
            out.push_back(where + "certificate has a witness " + m.format(w));
            break;
          }
        }
      }
    } else if (name == "O6") {
      const auto &xp = el(g, "x'"), &x = el(g, "x"), &y = el(g, "y"), &z = el(g, "z");
      expect(out, m.way_below(xp, x) && m.leq(x, m.add(y, z)), where + "x' << x <= y + z fails");
      auto ok = [&](const Element& e, const Element& f) {
        return m.leq(e, x) && m.leq(e, y) && m.leq(f, x) && m.leq(f, z) && m.leq(xp, m.add(e, f));
      };
      if (proven) {
        expect(out, ok(el(c, "e"), el(c, "f")), where + "witness fails");
      } else {
        const auto d = domain(m, {xp, x, y, z});
        for (const auto& e : d) {
          for (const auto& f : d) {
            if (ok(e, f)) {
              out.push_back(where + "certificate has a witness pair");
              return;
            }
          }
        }
      }
    } else {
      out.push_back("unknown predicate " + name);
    }
  };

  if (v.proven()) {
    for (const auto& inst : v.witness) check(inst, true);
  } else if (!v.certificate.given.empty()) {
    check(v.certificate, false);
  }
  return out;
}

Problems strongly_soft_witness(const CuModel& m, const Verdict& v) {
  Problems out;
  if (!v.proven()) return out;
  const auto& inst = v.witness.at(0);
  const auto &xp = el(inst.given, "x'"), &x = el(inst.given, "x"), &t = el(inst.chosen, "t");
  expect(out, m.way_below(m.add(xp, t), x), "strongly_soft_witness: x'+t << x fails");
  expect(out, m.way_below(xp, m.omega_multiple(t)), "strongly_soft_witness: x' << inf*t fails");
  return out;
}

Problems lhd_interpolate(const CuModel& m, const Verdict& v) {
  Problems out;
  if (!v.proven()) return out;
  const auto& inst = v.witness.at(0);
  const auto &xp = el(inst.given, "x'"), &x = el(inst.given, "x"), &y = el(inst.given, "y");
  const auto &yp = el(inst.chosen, "y'"), &z = el(inst.chosen, "z");
  expect(out, m.leq(xp, m.omega_multiple(yp)) && m.way_below(yp, y), "lhd_interpolate: x' <| y' << y fails");
  expect(out, m.leq(z, y), "lhd_interpolate: z <= y fails");
  expect(out, m.leq(xp, m.omega_multiple(z)) && m.leq(z, m.omega_multiple(x)), "lhd_interpolate: x' <| z <| x fails");
  return out;
}

Problems pre_cu_equiv(const CuModel& m, const Verdict& v) {
  Problems out;
  if (!v.proven()) return out;
  const auto& inst = v.witness.at(0);
  const auto &xp = el(inst.given, "x'"), &x = el(inst.given, "x");
  const auto &y = el(inst.chosen, "y"), &z = el(inst.chosen, "z");
  expect(out, m.leq(m.add(y, z), x), "pre_cu_equiv: y + z <= x fails");
  expect(out, m.leq(xp, m.omega_multiple(y)), "pre_cu_equiv: x' <| y fails");
  expect(out, m.leq(x, m.omega_multiple(z)), "pre_cu_equiv: x <| z fails");
  return out;
}

Problems soft_dominator(const CuModel& m, const Verdict& v) {
  Problems out;
  if (!v.proven()) return out;
  const auto& inst = v.witness.at(0);
  const auto &x = el(inst.given, "x"), &y = el(inst.chosen, "y");
  expect(out, m.leq(y, x) && m.leq(x, m.omega_multiple(y)), "soft_dominator: y <= x <| y fails");
  expect(out, soft_by_definition(m, y, Budget{}.basis) == Status::proven, "soft_dominator: y is not strongly soft");
  return out;
}

Problems k_div_seq(const CuModel& m, std::uint64_t k, const ChainDescriptor& chain, const SequenceResult& r) {
  Problems out;
  if (!r.verdict.proven()) return out;
  const auto x = m.sup(chain);
  expect(out, !r.y.cycle.empty(), "k_div_seq: empty period");
  if (!out.empty()) return out;
  expect(out, m.leq(m.multiple(k, r.y.sum(m)), x), "k_div_seq: sum of k*y_n exceeds sup x_n");
  const std::size_t span =
      r.y.prefix.size() + 2 * r.y.cycle.size() + (chain.form() == ChainDescriptor::Form::stabilizing_list ? chain.terms().size() : 0);
  for (std::size_t n = 0; n < span; ++n) {
    const auto inf = m.omega_multiple(r.y.term(n + 1));
    if (!m.way_below(r.y.term(n), inf)) out.push_back("k_div_seq: y_n << inf*y_(n+1) fails at n = " + std::to_string(n));
    if (!m.way_below(chain.term(m, n + 1), inf)) {
      out.push_back("k_div_seq: x_(n+1) << inf*y_(n+1) fails at n = " + std::to_string(n));
    }
  }
  return out;
}

Problems soft_divisor(const CuModel& m, const Verdict& v) {
  Problems out;
  if (!v.proven()) return out;
  const auto& inst = v.witness.at(0);
  const auto& x = el(inst.given, "x");
  const auto k = binding(inst.given, "k").count();
  const auto& y = el(inst.chosen, "y");
  expect(out, m.leq(m.multiple(k, y), x) && m.leq(x, m.omega_multiple(y)), "div_soft_divisor: ky <= x <= inf*y fails");
  expect(out, soft_by_definition(m, y, Budget{}.basis) == Status::proven, "div_soft_divisor: y is not strongly soft");
  return out;
}

Problems soft_interpolate(const CuModel& m, const Verdict& v) {
  Problems out;
  if (!v.proven()) return out;
  const auto& inst = v.witness.at(0);
  const auto &xp = el(inst.given, "x'"), &x = el(inst.given, "x"), &y = el(inst.chosen, "y");
  expect(out, m.way_below(xp, y) && m.way_below(y, x), "soft_interpolate: x' << y << x fails");
  expect(out, soft_by_definition(m, y, Budget{}.basis) == Status::proven, "soft_interpolate: y is not strongly soft");
  return out;
}

}  // namespace culab::certify
