#include "culab/glimm.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "culab/softness.hpp"
#include "dispatch.hpp"

namespace culab {

namespace {

using detail::HandleView;

Binding named(std::string name, Element e) { return Binding{std::move(name), std::move(e)}; }
Binding counted(std::string name, std::uint64_t n) { return Binding{std::move(name), n}; }

// Axiom verdicts are reused by every construction on the same model.
Status axiom_status(const CuModel& model, Axiom a, const Budget& b) {
  using Key = std::tuple<ModelId, int, std::size_t, std::size_t, std::size_t>;
  static std::mutex mu;
  static std::map<Key, Status> cache;
  const Key key{model.id(), static_cast<int>(a), b.n, b.basis, b.grid};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const auto s = check_axiom(model, a, b).status;
  std::lock_guard lock(mu);
  cache.emplace(key, s);
  return s;
}

void require_axioms(const CuModel& model, std::initializer_list<Axiom> axioms, const Budget& b) {
  for (auto a : axioms) {
    const auto s = axiom_status(model, a, b);
    if (s != Status::proven) {
      throw PreconditionNotEstablished(std::string(to_string(a)) + " is " + std::string(to_string(s)));
    }
  }
}

void require_proven(const Verdict& v, const std::string& what) {
  if (!v.proven()) throw PreconditionNotEstablished(what + " is " + std::string(to_string(v.status)));
}

Verdict combine(const std::vector<std::pair<std::string, Verdict>>& parts) {
  bool unsure = false;
  std::string note;
  for (const auto& [name, v] : parts) {
    if (v.refuted()) {
      auto out = v;
      out.note = name + " fails" + (v.note.empty() ? "" : ": " + v.note);
      return out;
    }
    if (v.unknown() && !unsure) {
      unsure = true;
      note = name + ": " + v.note;
    }
  }
  if (unsure) return Verdict::make_unknown(note);
  return Verdict::make_proven();
}

// --- construction steps, on the sampled handle view ----------------------

// Part (1): least y' with x' ⊲ y' ≪ y.
std::optional<Element> lhd_first(const HandleView& v, const Element& xp, const Element& y) {
  const auto& m = v.model();
  return detail::least(v, {xp, y}, [&](const Element& c) {
    return m.leq(xp, m.omega_multiple(c)) && m.way_below(c, y);
  });
}

struct LhdSecond {
  Element xpp;
  std::uint64_t n = 0;
  std::vector<Element> e, ep;
  Element z;
};

// Part (2): z ≤ y with x' ⊲ z ⊲ x, via x'' and the n-ary forms of O6
// and O7.
std::optional<LhdSecond> lhd_second(const HandleView& v, const Element& xp, const Element& x, const Element& y) {
  const auto& m = v.model();
  LhdSecond r;
  auto xpp = detail::least(v, {xp, x}, [&](const Element& c) { return m.way_below(xp, c) && m.way_below(c, x); });
  if (!xpp) return std::nullopt;
  r.xpp = *xpp;
  const auto bound = v.n_bound({r.xpp, y});
  for (std::uint64_t n = 1; n <= bound.limit && r.n == 0; ++n) {
    if (m.leq(r.xpp, m.multiple(n, y))) r.n = n;
  }
  if (r.n == 0) return std::nullopt;

  // n-tuples e_j ≤ x'', y with x' ≪ Σ e_j, layered by tuple length
  std::vector<Element> es;
  for (const auto& c : v.domain({xp, r.xpp, y})) {
    if (m.leq(c, r.xpp) && m.leq(c, y)) es.push_back(c);
  }
  using Layer = std::map<Element, std::pair<Element, Element>>;
  std::vector<Layer> layers(r.n + 1);
  layers[0].emplace(m.zero(), std::pair{m.zero(), m.zero()});
  for (std::uint64_t k = 0; k < r.n; ++k) {
    for (const auto& [s, _] : layers[k]) {
      for (const auto& c : es) layers[k + 1].emplace(v.capped_add(s, c, {xp, r.xpp, y}), std::pair{s, c});
    }
  }
  const Element* hit = nullptr;
  for (const auto& [s, _] : layers[r.n]) {
    if (m.way_below(xp, s)) {
      hit = &s;
      break;
    }
  }
  if (!hit) return std::nullopt;
  Element at = *hit;
  for (std::uint64_t k = r.n; k > 0; --k) {
    const auto& [prev, c] = layers[k].at(at);
    r.e.push_back(c);
    at = prev;
  }
  std::reverse(r.e.begin(), r.e.end());

  std::vector<std::vector<Element>> terms;
  std::size_t longest = 0;
  for (const auto& c : r.e) {
    terms.push_back(m.basis_terms(c, v.depth()));
    longest = std::max(longest, terms.back().size());
  }
  for (std::size_t lvl = 0; lvl < longest && r.ep.empty(); ++lvl) {
    std::vector<Element> pick;
    Element sum = m.zero();
    for (const auto& ts : terms) {
      pick.push_back(ts[std::min(lvl, ts.size() - 1)]);
      sum = m.add(sum, pick.back());
    }
    if (m.way_below(xp, sum)) r.ep = std::move(pick);
  }
  if (r.ep.empty()) return std::nullopt;

  Element esum = m.zero();
  for (const auto& c : r.e) esum = m.add(esum, c);
  auto z = detail::least(v, {xp, y, esum}, [&](const Element& c) {
    for (std::size_t j = 0; j < r.ep.size(); ++j) {
      if (!m.way_below(r.ep[j], c)) return false;
    }
    return m.leq(c, y) && m.leq(c, esum);
  });
  if (!z) return std::nullopt;
  r.z = *z;
  if (!m.leq(xp, m.omega_multiple(r.z)) || !m.leq(r.z, m.omega_multiple(x)) || !m.leq(r.z, y)) {
    throw Error("interpolation step produced an invalid z: " + m.format(r.z));
  }
  return r;
}

struct PreCu {
  Element x1, x2, x3, s, t, sp, spp, tp, c;
};

std::optional<PreCu> pre_cu_core(const HandleView& v, const Element& xp, const Element& x) {
  const auto& m = v.model();
  PreCu r;
  auto step = [&](const Element& from) {
    return detail::least(v, {from, x}, [&](const Element& c) { return m.way_below(from, c) && m.way_below(c, x); });
  };
  auto x1 = step(xp);
  if (!x1) return std::nullopt;
  auto x2 = step(*x1);
  if (!x2) return std::nullopt;
  auto x3 = step(*x2);
  if (!x3) return std::nullopt;
  r.x1 = *x1;
  r.x2 = *x2;
  r.x3 = *x3;
  auto split = detail::find_pair(
      v, {r.x3, x}, [&](const Element& c) { return m.leq(c, x) && m.leq(r.x3, m.omega_multiple(c)); },
      [&](const Element& a, const Element& b) { return m.leq(m.add(a, b), x); });
  if (!split) return std::nullopt;
  r.s = split->first;
  r.t = split->second;
  auto sp = lhd_second(v, r.x1, r.x2, r.s);
  if (!sp) return std::nullopt;
  r.sp = sp->z;
  auto spp = lhd_first(v, xp, r.sp);
  auto tp = lhd_first(v, r.x2, r.t);
  if (!spp || !tp) return std::nullopt;
  r.spp = *spp;
  r.tp = *tp;
  auto c = detail::least(v, {r.spp, r.sp, r.tp, r.t, x}, [&](const Element& c) {
    return m.leq(m.add(r.spp, c), x) && m.leq(x, m.add(r.sp, c)) && m.way_below(r.tp, c);
  });
  if (!c) return std::nullopt;
  r.c = *c;
  if (!m.leq(m.add(r.spp, r.c), x) || !m.leq(xp, m.omega_multiple(r.spp)) || !m.leq(x, m.omega_multiple(r.c))) {
    throw Error("splitting construction produced an invalid pair");
  }
  return r;
}

std::string indexed(const std::string& base, std::size_t n, const char* suffix = "") {
  return base + std::to_string(n) + suffix;
}

}  // namespace

// --- sweeps ---------------------------------------------------------------

DivisibilityReport classify_divisibility(const CuModel& model, const Scale& sigma, const Budget& budget,
                                         const std::vector<std::uint64_t>& ks) {
  using namespace detail;
  const auto depth = sweep_depth(budget);
  DivisibilityReport r;
  auto by_k = [&](std::uint64_t k) {
    return dispatch(model, budget, depth, [&](const auto& v) {
      return detail::k_omega_divisible(v, scale_member(v, model, sigma), k);
    });
  };
  r.two_omega_divisible = by_k(2);
  r.weakly_two_omega_divisible = dispatch(model, budget, depth, [&](const auto& v) {
    return weakly_divisible(v, scale_member(v, model, sigma));
  });
  for (auto k : ks) r.k_omega_divisible.emplace(k, k == 2 ? r.two_omega_divisible : by_k(k));
  return r;
}

Verdict k_omega_divisible(const CuModel& model, std::uint64_t k, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget),
                  [&](const auto& v) { return detail::k_omega_divisible(v, everything(v), k); });
}

Verdict element_divisible(const CuModel& model, const Element& x, std::uint64_t k, const Budget& budget) {
  using namespace detail;
  return dispatch_at(model, budget, budget.basis, x, [k](const auto& v, const auto& e) {
    using V = std::decay_t<decltype(e)>;
    Sweep<V> sw;
    for (const auto& xp : v.below(e)) {
      bool inexact = false;
      auto w = divisor_witness(v, xp, e, k, inexact);
      if (w) {
        sw.witness({{bind<V>("x'", xp)}, {bind<V>("y", w->first), bind_count<V>("n", w->second)}});
      } else if (inexact) {
        sw.inconclusive("multiplicity bound exhausted");
      } else {
        sw.refute({{bind<V>("x'", xp)}, {}});
        break;
      }
    }
    return sw.finish();
  });
}

Verdict element_weakly_divisible(const CuModel& model, const Element& x, const Budget& budget) {
  using namespace detail;
  return dispatch_at(model, budget, budget.basis, x, [](const auto& v, const auto& e) {
    using V = std::decay_t<decltype(e)>;
    Sweep<V> sw;
    for (const auto& xp : v.below(e)) {
      auto ys = weak_divisor_witness(v, xp, e);
      if (!ys) {
        sw.refute({{bind<V>("x'", xp)}, {}});
        break;
      }
      BasicInstance<V> inst{{bind<V>("x'", xp)}, {}};
      for (std::size_t j = 0; j < ys->size(); ++j) inst.chosen.push_back(bind<V>(indexed("y", j + 1), (*ys)[j]));
      sw.witness(std::move(inst));
    }
    return sw.finish();
  });
}

Verdict is_ideal_filtered(const CuModel& model, const Scale& sigma, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget),
                  [&](const auto& v) { return ideal_filtered(v, scale_member(v, model, sigma)); });
}

Verdict has_property_V(const CuModel& model, const Scale& sigma, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget),
                  [&](const auto& v) { return property_v(v, scale_member(v, model, sigma)); });
}

Verdict has_abundance_soft(const CuModel& model, const Scale& sigma, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget), [&](const auto& v) {
    return abundance(v, scale_member(v, model, sigma), soft_fn(v, model, budget));
  });
}

Verdict has_2_splitting(const CuModel& model, const Scale& sigma, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget),
                  [&](const auto& v) { return two_splitting(v, scale_member(v, model, sigma)); });
}

Verdict has_soft_dominators(const CuModel& model, const Scale& sigma, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget), [&](const auto& v) {
    return soft_divisors(v, scale_member(v, model, sigma), soft_fn(v, model, budget), 1);
  });
}

Verdict has_soft_divisors(const CuModel& model, std::uint64_t k, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget),
                  [&](const auto& v) { return soft_divisors(v, everything(v), soft_fn(v, model, budget), k); });
}

GlimmReport classify_glimm(const CuModel& model, const Scale& sigma, const Budget& budget) {
  return {is_ideal_filtered(model, sigma, budget),   has_property_V(model, sigma, budget),
          has_abundance_soft(model, sigma, budget),  has_2_splitting(model, sigma, budget),
          has_soft_dominators(model, sigma, budget), sigma};
}

// --- constructions --------------------------------------------------------

Verdict lhd_interpolate(const CuModel& model, const Element& x_prime, const Element& x, const Element& y,
                        const Budget& budget) {
  model.require(x_prime);
  model.require(x);
  model.require(y);
  if (!model.way_below(x_prime, x)) throw PreconditionNotEstablished("x' << x fails");
  if (!model.leq(x, model.omega_multiple(y))) throw PreconditionNotEstablished("x <| y fails");
  require_axioms(model, {Axiom::o6, Axiom::o7}, budget);
  const HandleView v(model, budget, budget.basis);
  auto yp = lhd_first(v, x_prime, y);
  if (!yp) return Verdict::make_unknown("no y' with x' <| y' << y in the witness domain");
  auto second = lhd_second(v, x_prime, x, y);
  if (!second) return Verdict::make_unknown("interpolation search exhausted its budget");
  Instance inst{{named("x'", x_prime), named("x", x), named("y", y)},
                {named("y'", *yp), named("x''", second->xpp), counted("n", second->n)}};
  for (std::size_t j = 0; j < second->e.size(); ++j) inst.chosen.push_back(named(indexed("e", j + 1), second->e[j]));
  for (std::size_t j = 0; j < second->ep.size(); ++j) {
    inst.chosen.push_back(named(indexed("e", j + 1, "'"), second->ep[j]));
  }
  inst.chosen.push_back(named("z", second->z));
  return Verdict::make_proven({std::move(inst)});
}

Verdict pre_cu_equiv(const CuModel& model, const Scale& sigma, const Element& x_prime, const Element& x,
                     const Budget& budget) {
  model.require(x_prime);
  model.require(x);
  if (!model.way_below(x_prime, x)) throw PreconditionNotEstablished("x' << x fails");
  if (!sigma.contains(model, x) || !sigma.contains(model, x_prime)) {
    throw PreconditionNotEstablished("x' and x must lie in the scale");
  }
  require_axioms(model, {Axiom::o5, Axiom::o6, Axiom::o7}, budget);
  require_proven(has_2_splitting(model, sigma, budget), "hereditary 2-splitting");
  const HandleView v(model, budget, budget.basis);
  auto r = pre_cu_core(v, x_prime, x);
  if (!r) return Verdict::make_unknown("splitting construction exhausted its budget");
  return Verdict::make_proven({Instance{{named("x'", x_prime), named("x", x)},
                                        {named("x1", r->x1), named("x2", r->x2), named("x3", r->x3), named("s", r->s),
                                         named("t", r->t), named("s'", r->sp), named("s''", r->spp),
                                         named("t'", r->tp), named("c", r->c), named("y", r->spp),
                                         named("z", r->c)}}});
}

Verdict soft_dominator(const CuModel& model, const Scale& sigma, const Element& x, const Budget& budget) {
  model.require(x);
  if (!sigma.contains(model, x)) throw PreconditionNotEstablished("x is not in the scale");
  require_axioms(model, {Axiom::o5, Axiom::o6, Axiom::o7}, budget);
  auto split = has_2_splitting(model, sigma, budget);
  if (split.refuted()) {
    split.note = "hereditary 2-splitting fails";
    return split;
  }
  require_proven(split, "hereditary 2-splitting");
  if (!model.is_compact(x)) return Verdict::make_unknown("the basis chain of x does not stabilize");

  const HandleView v(model, budget, budget.basis);
  auto soft = detail::soft_fn(v, model, budget);
  // the basis chain is constant, so each step is a function of z_n alone
  std::vector<Element> zs{x}, zps, ys, yps;
  std::map<Element, std::size_t> seen{{x, 0}};
  std::size_t cycle_start = 0;
  const std::size_t cap = 4 * v.domain({x}).size() + 4;
  for (std::size_t n = 0;; ++n) {
    if (n > cap) return Verdict::make_unknown("dominator construction did not become periodic");
    auto zp = lhd_first(v, x, zs[n]);
    if (!zp) return Verdict::make_unknown("no z_n' in the witness domain");
    auto pc = pre_cu_core(v, *zp, zs[n]);
    if (!pc) return Verdict::make_unknown("splitting construction exhausted its budget");
    auto yp = lhd_second(v, x, x, pc->spp);
    if (!yp) return Verdict::make_unknown("interpolation search exhausted its budget");
    zps.push_back(*zp);
    ys.push_back(pc->spp);
    yps.push_back(yp->z);
    auto it = seen.find(pc->c);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen.emplace(pc->c, n + 1);
    zs.push_back(pc->c);
  }
  PeriodicSequence seq;
  seq.prefix.assign(yps.begin(), yps.begin() + static_cast<std::ptrdiff_t>(cycle_start));
  seq.cycle.assign(yps.begin() + static_cast<std::ptrdiff_t>(cycle_start), yps.end());
  const Element y = seq.sum(model);
  if (!model.leq(y, x) || !model.leq(x, model.omega_multiple(y)) || soft(y) == Status::refuted) {
    throw Error("dominator construction produced an invalid y: " + model.format(y));
  }
  Instance inst{{named("x", x)}, {}};
  for (std::size_t n = 0; n < zps.size(); ++n) {
    inst.chosen.push_back(named(indexed("z", n), zs[n]));
    inst.chosen.push_back(named(indexed("z", n, "'"), zps[n]));
    inst.chosen.push_back(named(indexed("y", n + 1), ys[n]));
    inst.chosen.push_back(named(indexed("y", n + 1, "'"), yps[n]));
  }
  inst.chosen.push_back(counted("prefix", seq.prefix.size()));
  inst.chosen.push_back(counted("period", seq.cycle.size()));
  inst.chosen.push_back(named("y", y));
  return Verdict::make_proven({std::move(inst)});
}

const Element& PeriodicSequence::term(std::size_t n) const {
  if (n < prefix.size()) return prefix[n];
  return cycle[(n - prefix.size()) % cycle.size()];
}

Element PeriodicSequence::sum(const CuModel& model) const {
  Element head = model.zero();
  for (const auto& e : prefix) head = model.add(head, e);
  Element loop = model.zero();
  for (const auto& e : cycle) loop = model.add(loop, e);
  return model.add(head, model.omega_multiple(loop));
}

SequenceResult k_div_seq(const CuModel& model, std::uint64_t k, const ChainDescriptor& chain, const Budget& budget) {
  if (k == 0) throw Error("k_div_seq needs k >= 1");
  require_axioms(model, {Axiom::o5}, budget);
  require_proven(k_omega_divisible(model, 2, budget), "(2,omega)-divisibility");
  SequenceResult out;
  if (chain.form() == ChainDescriptor::Form::truncation_family) {
    out.verdict = Verdict::make_unknown("the chain does not stabilize");
    return out;
  }
  const auto& xs = chain.terms();
  for (const auto& t : xs) model.require(t);
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const auto& next = xs[std::min(n + 1, xs.size() - 1)];
    if (!model.way_below(xs[n], next)) throw PreconditionNotEstablished("chain is not <<-increasing");
  }
  const HandleView v(model, budget, budget.basis);
  const auto& m = model;
  const Element x = model.sup(chain);
  auto term = [&](std::size_t n) { return xs[std::min(n, xs.size() - 1)]; };
  auto fail = [&](const std::string& why) {
    out.verdict = Verdict::make_unknown(why);
    return out;
  };

  auto z0 = detail::least(v, {xs[0], x}, [&](const Element& c) {
    return m.way_below(m.multiple(k + 1, c), x) && m.way_below(xs[0], m.omega_multiple(c));
  });
  if (!z0) return fail("no (k+1,omega)-divisor for x_0 << x");
  auto y0 = detail::least(v, {xs[0], *z0}, [&](const Element& c) {
    return m.way_below(c, *z0) && m.way_below(xs[0], m.omega_multiple(c));
  });
  if (!y0) return fail("no y_0");
  auto c0 = detail::least(v, {*y0, x}, [&](const Element& c) {
    return m.leq(m.add(m.multiple(k, *y0), c), x) && m.leq(x, m.multiple(k + 1, c)) && m.way_below(*y0, c);
  });
  if (!c0) return fail("no complement c_0");

  std::vector<Element> ys{*y0}, cs{*c0}, zs{*z0}, cps;
  std::map<std::pair<Element, Element>, std::size_t> seen;
  std::size_t cycle_start = 0;
  const std::size_t cap = 4 * v.domain({x}).size() + xs.size() + 4;
  for (std::size_t n = 0;; ++n) {
    if (n + 2 >= xs.size()) {
      auto key = std::pair{cs[n], ys[n]};
      auto it = seen.find(key);
      if (it != seen.end()) {
        cycle_start = it->second;
        ys.resize(n);
        break;
      }
      seen.emplace(std::move(key), n);
    }
    if (n > cap) return fail("sequence did not become periodic");
    const Element& cn = cs[n];
    const Element& yn = ys[n];
    const Element xn1 = term(n + 1);
    auto cp = detail::least(v, {cn, yn, xn1}, [&](const Element& c) {
      return m.way_below(c, cn) && m.way_below(yn, c) && m.way_below(xn1, m.omega_multiple(c));
    });
    if (!cp) return fail("no c_n'");
    auto zn = detail::least(v, {*cp, cn}, [&](const Element& c) {
      return m.way_below(m.multiple(k + 1, c), cn) && m.way_below(*cp, m.omega_multiple(c));
    });
    if (!zn) return fail("no (k+1,omega)-divisor for c_n' << c_n");
    auto yn1 = detail::least(v, {*cp, *zn}, [&](const Element& c) {
      return m.way_below(c, *zn) && m.way_below(*cp, m.omega_multiple(c));
    });
    if (!yn1) return fail("no y_(n+1)");
    auto cn1 = detail::least(v, {*yn1, cn}, [&](const Element& c) {
      return m.leq(m.add(m.multiple(k, *yn1), c), cn) && m.leq(cn, m.multiple(k + 1, c)) && m.way_below(*yn1, c);
    });
    if (!cn1) return fail("no complement c_(n+1)");
    cps.push_back(*cp);
    zs.push_back(*zn);
    ys.push_back(*yn1);
    cs.push_back(*cn1);
  }
  out.y.prefix.assign(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(cycle_start));
  out.y.cycle.assign(ys.begin() + static_cast<std::ptrdiff_t>(cycle_start), ys.end());

  if (!m.leq(m.multiple(k, out.y.sum(model)), x)) throw Error("k_div_seq: sum of k*y_n exceeds sup x_n");
  const auto horizon = out.y.prefix.size() + 2 * out.y.cycle.size() + xs.size();
  for (std::size_t n = 0; n < horizon; ++n) {
    const auto inf_next = m.omega_multiple(out.y.term(n + 1));
    if (!m.way_below(out.y.term(n), inf_next) || !m.way_below(term(n + 1), inf_next)) {
      throw Error("k_div_seq: y_n, x_(n+1) << inf*y_(n+1) fails at n = " + std::to_string(n));
    }
  }
  Instance inst{{counted("k", k)}, {}};
  for (std::size_t n = 0; n < ys.size(); ++n) {
    inst.chosen.push_back(named(indexed("y", n), ys[n]));
    inst.chosen.push_back(named(indexed("c", n), cs[n]));
  }
  inst.chosen.push_back(counted("prefix", out.y.prefix.size()));
  inst.chosen.push_back(counted("period", out.y.cycle.size()));
  out.verdict = Verdict::make_proven({std::move(inst)});
  return out;
}

Verdict div_soft_divisor(const CuModel& model, const Element& x, std::uint64_t k, const Budget& budget) {
  model.require(x);
  require_axioms(model, {Axiom::o5}, budget);
  require_proven(k_omega_divisible(model, 2, budget), "(2,omega)-divisibility");
  const auto chain = model.basis_chain(x);
  auto seq = k_div_seq(model, k, chain, budget);
  if (!seq.verdict.proven()) return seq.verdict;
  const Element y = seq.y.sum(model);
  if (!model.leq(model.multiple(k, y), x) || !model.leq(x, model.omega_multiple(y))) {
    throw Error("div_soft_divisor produced an invalid y: " + model.format(y));
  }
  const HandleView v(model, budget, budget.basis);
  if (detail::soft_fn(v, model, budget)(y) == Status::refuted) {
    throw Error("div_soft_divisor produced a y that is not strongly soft: " + model.format(y));
  }
  auto inst = seq.verdict.witness.front();
  inst.given = {named("x", x), counted("k", k)};
  inst.chosen.push_back(named("y", y));
  return Verdict::make_proven({std::move(inst)});
}

namespace {

EquivalenceReport agreement(std::vector<std::pair<std::string, Verdict>> conditions) {
  EquivalenceReport r;
  r.conditions = std::move(conditions);
  bool any_proven = false, any_refuted = false;
  for (const auto& [_, v] : r.conditions) {
    any_proven = any_proven || v.proven();
    any_refuted = any_refuted || v.refuted();
  }
  r.agree = !(any_proven && any_refuted);
  return r;
}

}  // namespace

EquivalenceReport cu_equiv(const CuModel& model, const Scale& sigma, const Budget& budget) {
  return agreement({{"(1) soft dominators", has_soft_dominators(model, sigma, budget)},
                    {"(2) abundance of strongly soft elements", has_abundance_soft(model, sigma, budget)},
                    {"(3) hereditary 2-splitting", has_2_splitting(model, sigma, budget)}});
}

EquivalenceReport char_div_equiv(const CuModel& model, const Scale& sigma, const Budget& budget) {
  const auto div = classify_divisibility(model, sigma, budget, {2});
  const auto filtered = is_ideal_filtered(model, sigma, budget);
  auto r = agreement({
      {"(1) (2,omega)-divisible", k_omega_divisible(model, 2, budget)},
      {"(2) scale elements (2,omega)-divisible", div.two_omega_divisible},
      {"(3) weakly divisible, ideal-filtered, property (V)",
       combine({{"weak divisibility", div.weakly_two_omega_divisible},
                {"ideal-filtered", filtered},
                {"property (V)", has_property_V(model, sigma, budget)}})},
      {"(4) ideal-filtered, soft y with 2y <= x <= inf*y",
       combine({{"ideal-filtered", filtered}, {"soft divisors", has_soft_divisors(model, 2, budget)}})},
      {"(5) ideal-filtered, abundance of strongly soft elements",
       combine({{"ideal-filtered", filtered}, {"abundance", has_abundance_soft(model, sigma, budget)}})},
  });
  r.note = "agreement check only: the characterization assumes an axiom beyond O5-O7";
  return r;
}

}  // namespace culab
