#include "culab/softness.hpp"

#include <algorithm>

#include "culab/glimm.hpp"
#include "dispatch.hpp"

namespace culab {

namespace {

using detail::HandleView;

Binding named(std::string name, Element e) { return Binding{std::move(name), std::move(e)}; }
Binding counted(std::string name, std::uint64_t n) { return Binding{std::move(name), n}; }

SoftnessReport closed_form(const CuModel& model, const Element& x, const Budget& budget) {
  const HandleView v(model, budget, budget.basis);
  const std::string note = "compact element: closed form";
  SoftnessReport r;
  if (detail::idempotent(v, x)) {
    r.strongly_soft = Verdict::make_proven({Instance{{named("x'", x)}, {named("t", x)}}}, note);
    r.weakly_soft = Verdict::make_proven({Instance{{named("x'", x)}, {named("t1", x)}}}, note);
    r.purely_noncompact = Verdict::make_proven({}, note);
  } else {
    r.strongly_soft = Verdict::make_refuted(Instance{{named("x'", x)}, {}}, note);
    r.weakly_soft = Verdict::make_refuted(Instance{{named("x'", x)}, {}}, note);
    r.purely_noncompact = Verdict::make_refuted(Instance{{named("ideal", model.zero())}, {}}, note);
  }
  const auto bound = v.n_bound({x});
  if (auto n = detail::periodic_multiple(v, x)) {
    r.functionally_soft = Verdict::make_proven({Instance{{named("x'", x)}, {counted("n", *n)}}}, note);
    r.weakly_purely_noncompact = Verdict::make_proven({Instance{{named("ideal", model.zero())}, {counted("n", *n)}}}, note);
  } else if (bound.exhaustive) {
    r.functionally_soft = Verdict::make_refuted(Instance{{named("x'", x)}, {}}, note);
    r.weakly_purely_noncompact = Verdict::make_refuted(Instance{{named("ideal", model.zero())}, {}}, note);
  } else {
    const auto why = "no n <= " + std::to_string(bound.limit) + " with (n+1)x = nx";
    r.functionally_soft = Verdict::make_unknown(why);
    r.weakly_purely_noncompact = Verdict::make_unknown(why);
  }
  return r;
}

}  // namespace

SoftnessReport sweep_softness(const CuModel& model, const Element& x, const Budget& budget) {
  using namespace detail;
  const auto depth = budget.basis;
  SoftnessReport r;
  r.strongly_soft = dispatch_at(model, budget, depth, x, [](const auto& v, const auto& e) { return strongly_soft(v, e); });
  r.weakly_soft = dispatch_at(model, budget, depth, x, [](const auto& v, const auto& e) { return weakly_soft(v, e); });
  r.functionally_soft =
      dispatch_at(model, budget, depth, x, [](const auto& v, const auto& e) { return functionally_soft(v, e); });
  r.purely_noncompact =
      dispatch_at(model, budget, depth, x, [](const auto& v, const auto& e) { return purely_noncompact(v, e); });
  r.weakly_purely_noncompact = dispatch_at(model, budget, depth, x,
                                           [](const auto& v, const auto& e) { return weakly_purely_noncompact(v, e); });
  return r;
}

SoftnessReport classify_softness(const CuModel& model, const Element& x, const Budget& budget) {
  model.require(x);
  if (model.is_compact(x)) return closed_form(model, x, budget);
  return sweep_softness(model, x, budget);
}

Verdict strongly_soft_witness(const CuModel& model, const Element& x_prime, const Element& x) {
  model.require(x_prime);
  model.require(x);
  if (!model.way_below(x_prime, x)) throw NotWayBelow("strongly_soft_witness needs x' << x");
  Instance given{{named("x'", x_prime), named("x", x)}, {}};
  std::optional<Element> t;
  if (model.is_finite()) {
    const detail::TableView v(model.table());
    if (auto i = detail::strong_witness(v, x_prime.index(), x.index())) t = model.element(*i);
  } else {
    const HandleView v(model, Budget{}, Budget{}.basis);
    t = detail::strong_witness(v, x_prime, x);
  }
  if (!t) return Verdict::make_refuted(std::move(given));
  given.chosen.push_back(named("t", *t));
  return Verdict::make_proven({std::move(given)});
}

std::vector<Element> soft_submonoid(const CuModel& model) {
  if (!model.is_finite()) throw UnsupportedModel("soft_submonoid needs a finite carrier");
  std::vector<Element> out;
  for (const auto& x : model.elements()) {
    if (model.add(x, x) == x) out.push_back(x);
  }
  if (out.empty() || !(out.front() == model.zero())) throw Error("soft submonoid lost the zero element");
  for (const auto& a : out) {
    for (const auto& b : out) {
      if (std::find(out.begin(), out.end(), model.add(a, b)) == out.end()) {
        throw Error("soft submonoid is not closed under addition");
      }
    }
  }
  return out;
}

Element sum_soft(const CuModel& model, const ChainDescriptor& summands) {
  Element result;
  if (summands.form() == ChainDescriptor::Form::truncation_family) {
    result = model.omega_multiple(summands.base());
  } else {
    const auto& t = summands.terms();
    if (t.empty()) throw Error("empty summand list");
    result = model.zero();
    for (std::size_t n = 0; n + 1 < t.size(); ++n) {
      if (!model.leq(t[n], model.omega_multiple(t[n + 1]))) {
        throw HypothesisViolated("y_n <= inf*y_(n+1) fails at n = " + std::to_string(n), n);
      }
      result = model.add(result, t[n]);
    }
    result = model.add(result, model.omega_multiple(t.back()));
  }
  if (classify_softness(model, result).strongly_soft.refuted()) {
    throw Error("sum of a soft sequence is not strongly soft: " + model.format(result));
  }
  return result;
}

Verdict soft_interpolate(const CuModel& model, const Scale& sigma, const Element& x_prime, const Element& x,
                         const Budget& budget) {
  model.require(x_prime);
  model.require(x);
  if (!model.way_below(x_prime, x)) throw NotWayBelow("soft_interpolate needs x' << x");
  if (!sigma.contains(model, x)) throw PreconditionNotEstablished("x is not in the scale");
  if (!classify_softness(model, x, budget).strongly_soft.proven()) {
    throw PreconditionNotEstablished("x is not proven strongly soft");
  }
  const auto abundance = has_abundance_soft(model, sigma, budget);
  if (!abundance.proven()) {
    throw PreconditionNotEstablished("abundance of strongly soft elements is " +
                                     std::string(to_string(abundance.status)));
  }
  const HandleView v(model, budget, budget.basis);
  auto soft = detail::soft_fn(v, model, budget);
  const Element& xp = x_prime;

  std::optional<Element> zp, z;
  for (const auto& a : v.domain({xp, x})) {
    if (!model.way_below(xp, a) || !model.way_below(a, x)) continue;
    z = detail::least(v, {a, x}, [&](const Element& b) { return model.way_below(a, b) && model.way_below(b, x); });
    if (z) {
      zp = a;
      break;
    }
  }
  if (!z) return Verdict::make_unknown("no interpolants x' << z' << z << x in the witness domain");
  auto t = detail::least(v, {*z, x}, [&](const Element& c) {
    return model.leq(model.add(*z, c), x) && model.leq(x, model.omega_multiple(c));
  });
  if (!t) return Verdict::make_unknown("no t with z + t <= x <= inf*t");
  auto tp = detail::least(v, {*z, *t}, [&](const Element& c) {
    return model.way_below(c, *t) && model.way_below(*z, model.omega_multiple(c));
  });
  if (!tp) return Verdict::make_unknown("no t' << t with z << inf*t'");
  std::optional<Element> u;
  for (const auto& c : v.domain({*tp, *t})) {
    if (model.leq(*tp, model.omega_multiple(c)) && model.way_below(c, *t) && soft(c) == Status::proven) {
      u = c;
      break;
    }
  }
  if (!u) return Verdict::make_unknown("no strongly soft u with t' <| u << t");
  const Element y = model.add(*zp, *u);
  if (!model.way_below(xp, y) || !model.way_below(y, x) || soft(y) != Status::proven) {
    throw Error("soft_interpolate produced an invalid y: " + model.format(y));
  }
  return Verdict::make_proven({Instance{{named("x'", xp), named("x", x)},
                                        {named("z'", *zp), named("z", *z), named("t", *t), named("t'", *tp),
                                         named("u", *u), named("y", y)}}});
}

MappedElement map_element(const QuotientMap& map, const Element& x, const Budget& budget) {
  MappedElement out;
  out.image = map.project(x);
  out.source = classify_softness(map.source(), x, budget);
  out.target = classify_softness(map.target(), out.image, budget);
  const auto s = flags(out.source);
  const auto t = flags(out.target);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].second->proven() && t[k].second->refuted()) out.lost.push_back(s[k].first);
  }
  return out;
}

std::vector<std::pair<std::string, const Verdict*>> flags(const SoftnessReport& r) {
  return {{"strongly_soft", &r.strongly_soft},
          {"weakly_soft", &r.weakly_soft},
          {"functionally_soft", &r.functionally_soft},
          {"purely_noncompact", &r.purely_noncompact},
          {"weakly_purely_noncompact", &r.weakly_purely_noncompact}};
}

}  // namespace culab
