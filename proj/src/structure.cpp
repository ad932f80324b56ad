#include "culab/structure.hpp"

#include <algorithm>

#include "dispatch.hpp"

namespace culab {

namespace {

bool is_lsc_family(const CuModel& m) {
  return m.kind() == ModelKind::lsc || m.kind() == ModelKind::nbar;
}

std::vector<Element> lsc_generators(const CuModel& m) {
  const auto& sp = m.space();
  const auto n = sp.size();
  std::vector<Element> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    bool up = true;
    for (std::size_t p = 0; p < n && up; ++p) {
      if (!(bits >> p & 1u)) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (sp.le(p, q) && !(bits >> q & 1u)) up = false;
      }
    }
    if (!up) continue;
    Payload pl(n, ExtNat(0));
    for (std::size_t p = 0; p < n; ++p) {
      if (bits >> p & 1u) pl[p] = ExtNat::infinity();
    }
    out.push_back(m.make(std::move(pl)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Target element with the given factor components.
Element embed(const CuModel& target, const std::vector<CuModel>& factor_targets,
              const std::vector<Element>& parts) {
  if (!target.is_finite()) return target.compose(parts);
  std::size_t idx = 0;
  for (std::size_t f = 0; f < parts.size(); ++f) {
    idx = idx * factor_targets[f].size() + parts[f].index();
  }
  return target.element(idx);
}

std::vector<Element> split(const CuModel& target, const std::vector<CuModel>& factor_targets,
                           const Element& y) {
  std::vector<Element> parts(factor_targets.size());
  if (!target.is_finite()) {
    for (std::size_t f = 0; f < parts.size(); ++f) parts[f] = target.component(y, f);
    return parts;
  }
  std::size_t idx = y.index();
  for (std::size_t f = parts.size(); f-- > 0;) {
    const auto n = factor_targets[f].size();
    parts[f] = factor_targets[f].element(idx % n);
    idx /= n;
  }
  return parts;
}

std::string fmt_tuple(const CuModel& m, std::initializer_list<Element> xs) {
  std::string out = "(";
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out += ",";
    out += m.format(x);
    first = false;
  }
  return out + ")";
}

}  // namespace

std::vector<Element> ideal_generators(const CuModel& model) {
  if (model.is_finite()) {
    std::vector<Element> out;
    for (const auto& x : model.elements()) {
      auto e = model.omega_multiple(x);
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (is_lsc_family(model)) return lsc_generators(model);
  if (model.kind() == ModelKind::product) {
    const auto& fs = model.factors();
    std::vector<std::vector<Element>> per;
    for (const auto& f : fs) per.push_back(ideal_generators(f));
    std::vector<Element> out;
    std::vector<std::size_t> at(fs.size(), 0);
    while (true) {
      std::vector<Element> parts;
      for (std::size_t f = 0; f < fs.size(); ++f) parts.push_back(per[f][at[f]]);
      out.push_back(model.compose(parts));
      std::size_t f = fs.size();
      while (f > 0) {
        --f;
        if (++at[f] < per[f].size()) break;
        at[f] = 0;
        if (f == 0) {
          std::sort(out.begin(), out.end());
          return out;
        }
      }
    }
  }
  throw UnsupportedModel("no ideal enumeration for this model family");
}

Ideal::Ideal(const CuModel& model, Element generator) : model_(model.id()), gen_(std::move(generator)) {
  if (gen_.model() != model.id()) throw NotAnIdeal("generator belongs to a different model");
  if (!(model.add(gen_, gen_) == gen_)) throw NotAnIdeal("ideal generator must satisfy 2e = e");
}

bool Ideal::contains(const CuModel& model, const Element& x) const {
  if (model.id() != model_) throw ElementModelMismatch("ideal belongs to a different model");
  return model.leq(x, gen_);
}

std::vector<bool> Ideal::mask(const CuModel& model) const {
  std::vector<bool> out(model.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = contains(model, model.element(i));
  return out;
}

std::vector<bool> Ideal::open_set(const CuModel& model) const {
  if (model.id() != model_) throw ElementModelMismatch("ideal belongs to a different model");
  const auto n = model.space().size();
  std::vector<bool> out(n);
  for (std::size_t p = 0; p < n; ++p) out[p] = gen_.payload()[p].is_infinite();
  return out;
}

Ideal ideal_from_mask(const CuModel& model, const std::vector<bool>& mask) {
  const auto& t = model.table();
  if (mask.size() != t.n) throw NotAnIdeal("mask size does not match the carrier");
  if (!mask[0]) throw NotAnIdeal("an ideal contains 0");
  Index sum = 0;
  for (std::size_t i = 0; i < t.n; ++i) {
    if (!mask[i]) continue;
    sum = t.sum(sum, i);
    for (std::size_t j = 0; j < t.n; ++j) {
      if (t.le(j, i) && !mask[j]) throw NotAnIdeal("not downward closed at " + t.names[i]);
      if (mask[j] && !mask[t.sum(i, j)]) {
        throw NotAnIdeal("not closed under addition at (" + t.names[i] + "," + t.names[j] + ")");
      }
    }
  }
  return Ideal(model, model.element(sum));
}

Ideal ideal_from_open_set(const CuModel& model, const std::vector<bool>& open) {
  const auto& sp = model.space();
  if (open.size() != sp.size()) throw NotAnIdeal("open set size does not match the space");
  Payload pl(sp.size(), ExtNat(0));
  for (std::size_t p = 0; p < sp.size(); ++p) {
    if (!open[p]) continue;
    for (std::size_t q = 0; q < sp.size(); ++q) {
      if (sp.le(p, q) && !open[q]) throw NotAnIdeal("set is not open at point " + sp.points[p]);
    }
    pl[p] = ExtNat::infinity();
  }
  return Ideal(model, model.make(std::move(pl)));
}

Ideal ideal_generated(const CuModel& model, const Element& x) {
  return Ideal(model, model.omega_multiple(x));
}

std::vector<Ideal> enumerate_ideals(const CuModel& model) {
  std::vector<Ideal> out;
  for (auto& e : ideal_generators(model)) out.emplace_back(model, std::move(e));
  return out;
}

Scale Scale::whole(const CuModel& model) {
  Scale s;
  s.model_ = model.id();
  s.form_ = Form::whole;
  return s;
}

Scale Scale::from_mask(const CuModel& model, std::vector<bool> mask) {
  if (mask.size() != model.size()) throw Error("scale mask size does not match the carrier");
  Scale s;
  s.model_ = model.id();
  s.form_ = Form::mask;
  s.mask_ = std::move(mask);
  return s;
}

Scale Scale::from_generators(const CuModel& model, std::vector<Element> generators) {
  for (const auto& g : generators) model.require(g);
  Scale s;
  s.model_ = model.id();
  s.form_ = Form::generators;
  s.gens_ = std::move(generators);
  return s;
}

bool Scale::contains(const CuModel& model, const Element& x) const {
  if (model.id() != model_) throw ElementModelMismatch("scale belongs to a different model");
  model.require(x);
  switch (form_) {
    case Form::whole:
      return true;
    case Form::mask:
      return mask_[x.index()];
    case Form::generators:
      return std::any_of(gens_.begin(), gens_.end(), [&](const Element& g) { return model.leq(x, g); });
  }
  return false;
}

bool is_scale(const CuModel& model, const Scale& sigma) {
  if (sigma.model() != model.id()) return false;
  Element sum = model.zero();
  switch (sigma.form()) {
    case Scale::Form::whole:
      return true;
    case Scale::Form::mask: {
      const auto& t = model.table();
      for (std::size_t i = 0; i < t.n; ++i) {
        if (!sigma.mask()[i]) continue;
        for (std::size_t j = 0; j < t.n; ++j) {
          if (t.le(j, i) && !sigma.mask()[j]) return false;
        }
        sum = model.add(sum, model.element(i));
      }
      break;
    }
    case Scale::Form::generators:
      // finite unions of principal downsets are hereditary and sup-closed
      for (const auto& g : sigma.generators()) sum = model.add(sum, g);
      break;
  }
  return model.leq(model.top(), model.omega_multiple(sum));
}

QuotientMap::QuotientMap(CuModel source, Ideal ideal, CuModel target)
    : source_(std::move(source)), ideal_(std::move(ideal)), target_(std::move(target)) {}

Element QuotientMap::project(const Element& x) const {
  source_.require(x);
  if (source_.is_finite()) return target_.element(classes_[x.index()]);
  if (is_lsc_family(source_)) {
    if (kept_.empty()) return target_.zero();
    Payload pl;
    for (auto p : kept_) pl.push_back(x.payload()[p]);
    return target_.make(std::move(pl));
  }
  std::vector<Element> parts;
  std::vector<CuModel> targets;
  for (std::size_t f = 0; f < parts_.size(); ++f) {
    parts.push_back(parts_[f].project(source_.component(x, f)));
    targets.push_back(parts_[f].target());
  }
  return embed(target_, targets, parts);
}

Element QuotientMap::lift(const Element& y) const {
  target_.require(y);
  if (source_.is_finite()) return source_.element(representatives_[y.index()]);
  if (is_lsc_family(source_)) {
    const auto& sp = source_.space();
    Payload pl(sp.size(), ExtNat(0));
    for (std::size_t q = 0; q < sp.size(); ++q) {
      for (std::size_t k = 0; k < kept_.size(); ++k) {
        if (sp.le(kept_[k], q)) pl[q] = culab::max(pl[q], y.payload()[k]);
      }
    }
    return source_.make(std::move(pl));
  }
  std::vector<CuModel> targets;
  for (const auto& p : parts_) targets.push_back(p.target());
  auto ys = split(target_, targets, y);
  std::vector<Element> parts;
  for (std::size_t f = 0; f < parts_.size(); ++f) parts.push_back(parts_[f].lift(ys[f]));
  return source_.compose(parts);
}

QuotientMap quotient(const CuModel& model, const Ideal& ideal) {
  if (ideal.model() != model.id()) throw NotAnIdeal("ideal belongs to a different model");
  const auto& e = ideal.generator();
  if (model.is_finite()) {
    const auto& t = model.table();
    const Index g = e.index();
    auto below = [&](std::size_t x, std::size_t y) { return t.le(x, t.sum(y, g)); };
    std::vector<Index> cls(t.n), reps;
    for (std::size_t x = 0; x < t.n; ++x) {
      bool found = false;
      for (std::size_t c = 0; c < reps.size() && !found; ++c) {
        if (below(x, reps[c]) && below(reps[c], x)) {
          cls[x] = static_cast<Index>(c);
          found = true;
        }
      }
      if (!found) {
        cls[x] = static_cast<Index>(reps.size());
        reps.push_back(static_cast<Index>(x));
      }
    }
    FiniteTable q;
    q.n = reps.size();
    q.leq.assign(q.n * q.n, 0);
    q.add.assign(q.n * q.n, 0);
    for (std::size_t i = 0; i < q.n; ++i) {
      q.names.push_back(t.names[reps[i]]);
      for (std::size_t j = 0; j < q.n; ++j) {
        q.leq[i * q.n + j] = static_cast<std::uint8_t>(below(reps[i], reps[j]));
        q.add[i * q.n + j] = cls[t.sum(reps[i], reps[j])];
      }
    }
    QuotientMap out(model, ideal, finite_model(std::move(q), ModelKind::quotient));
    out.classes_ = std::move(cls);
    out.representatives_ = std::move(reps);
    return out;
  }
  if (is_lsc_family(model)) {
    const auto& sp = model.space();
    const auto open = ideal.open_set(model);
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < sp.size(); ++p) {
      if (!open[p]) kept.push_back(p);
    }
    CuModel target;
    if (kept.empty()) {
      target = finite_model(make_table({"0"}, {{1}}, {{0}}), ModelKind::quotient);
    } else {
      Space sub;
      for (auto p : kept) sub.points.push_back(sp.points[p]);
      for (auto p : kept) {
        for (auto q : kept) sub.leq.push_back(static_cast<std::uint8_t>(sp.le(p, q)));
      }
      target = lsc_model(std::move(sub));
    }
    QuotientMap out(model, ideal, std::move(target));
    out.kept_ = std::move(kept);
    return out;
  }
  const auto& fs = model.factors();
  std::vector<QuotientMap> parts;
  std::vector<CuModel> targets;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    parts.push_back(quotient(fs[f], Ideal(fs[f], model.component(e, f))));
    targets.push_back(parts.back().target());
  }
  QuotientMap out(model, ideal, product(targets));
  out.parts_ = std::move(parts);
  return out;
}

FinitenessReport classify_finiteness(const CuModel& model, const Budget& budget) {
  using namespace detail;
  const auto depth = sweep_depth(budget);
  FinitenessReport r;
  r.stably_finite = dispatch(model, budget, depth, [](const auto& v) { return stably_finite(v); });
  r.weak_cancellation = dispatch(model, budget, depth, [](const auto& v) { return weak_cancellation(v); });

  bool unsure = false;
  std::string unsure_note;
  std::vector<Instance> witness;
  for (const auto& ideal : enumerate_ideals(model)) {
    const auto q = quotient(model, ideal);
    const auto& tgt = q.target();
    auto v = dispatch(tgt, budget, depth, [](const auto& w) { return stably_finite(w); });
    if (v.refuted()) {
      Instance cert{{Binding{"ideal", ideal.generator()}}, {}};
      for (const auto& b : v.certificate.given) cert.given.push_back(Binding{b.name, q.lift(b.element())});
      r.residually_stably_finite = Verdict::make_refuted(std::move(cert), "stable finiteness fails in S/I");
      return r;
    }
    if (v.unknown()) {
      unsure = true;
      unsure_note = v.note;
    }
    witness.push_back(Instance{{Binding{"ideal", ideal.generator()}}, {}});
  }
  if (unsure) {
    r.residually_stably_finite = Verdict::make_unknown(unsure_note);
  } else {
    r.residually_stably_finite = Verdict::make_proven(
        std::move(witness), model.is_finite() ? std::string{} : sample_note(budget, depth));
  }
  return r;
}

std::string_view to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::o5:
      return "O5";
    case Axiom::o6:
      return "O6";
    case Axiom::o7:
      return "O7";
  }
  return "?";
}

Verdict check_axiom(const CuModel& model, Axiom which, const Budget& budget) {
  using namespace detail;
  return dispatch(model, budget, sweep_depth(budget), [which](const auto& v) {
    switch (which) {
      case Axiom::o5:
        return axiom_o5(v);
      case Axiom::o6:
        return axiom_o6(v);
      case Axiom::o7:
        break;
    }
    return axiom_o7(v);
  });
}

std::vector<std::string> validate_model(const CuModel& model, const Budget& budget) {
  if (model.is_finite()) return validate_table(model.table());
  std::vector<std::string> out;
  const auto u = model.sample(budget.grid);
  const auto z = model.zero();
  for (const auto& x : u) {
    if (!model.leq(x, x)) out.push_back("reflexivity at " + model.format(x));
    if (!(model.add(z, x) == x)) out.push_back("zero-neutral at " + model.format(x));
    if (!model.leq(z, x)) out.push_back("zero-least at " + model.format(x));
    for (const auto& y : u) {
      if (!(model.add(x, y) == model.add(y, x))) out.push_back("commutativity at " + fmt_tuple(model, {x, y}));
      if (model.leq(x, y) && model.leq(y, x) && !(x == y)) {
        out.push_back("antisymmetry at " + fmt_tuple(model, {x, y}));
      }
      if (model.way_below(x, y) && !model.leq(x, y)) {
        out.push_back("way-below inside order at " + fmt_tuple(model, {x, y}));
      }
      for (const auto& w : u) {
        if (model.leq(x, y) && model.leq(y, w) && !model.leq(x, w)) {
          out.push_back("transitivity at " + fmt_tuple(model, {x, y, w}));
        }
        if (!(model.add(model.add(x, y), w) == model.add(x, model.add(y, w)))) {
          out.push_back("associativity at " + fmt_tuple(model, {x, y, w}));
        }
        if (model.leq(x, y) && !model.leq(model.add(x, w), model.add(y, w))) {
          out.push_back("order-compatibility at " + fmt_tuple(model, {x, y, w}));
        }
      }
    }
  }
  return out;
}

}  // namespace culab
