#pragma once

// Quantifier sweeps for the softness, divisibility, Glimm-type and axiom
// predicates, written once against the ModelView concept.
//
// Universal quantifiers over {x' : x' ≪ x} visit m.below(x); other universal
// variables visit m.universe(). Existential searches visit m.domain(params)
// in canonical order, so the first hit is the lexicographically least
// witness. A failed existential search is a refutation because witness
// domains are complete; a failed multiplicity search is a refutation only
// when the multiplicity bound is exhaustive.

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "culab/detail/views.hpp"
#include "culab/verdict.hpp"

namespace culab::detail {

template <class V>
BasicBinding<V> bind(std::string name, V v) {
  return {std::move(name), std::move(v)};
}
template <class V>
BasicBinding<V> bind_count(std::string name, std::uint64_t n) {
  return {std::move(name), n};
}

// Accumulates a universal sweep: first refutation wins, else Unknown if any
// instance was inconclusive, else Proven.
template <class V>
class Sweep {
 public:
  bool done() const { return refuted_.has_value(); }

  void witness(BasicInstance<V> i) { witness_.push_back(std::move(i)); }
  void refute(BasicInstance<V> i, std::string note = {}) {
    if (!refuted_) {
      refuted_ = std::move(i);
      note_ = std::move(note);
    }
  }
  void inconclusive(std::string note) {
    if (unknown_note_.empty()) unknown_note_ = std::move(note);
    unknown_ = true;
  }

  BasicVerdict<V> finish(bool keep_witness = true) {
    if (refuted_) return BasicVerdict<V>::make_refuted(std::move(*refuted_), std::move(note_));
    if (unknown_) return BasicVerdict<V>::make_unknown(std::move(unknown_note_));
    if (!keep_witness) witness_.clear();
    return BasicVerdict<V>::make_proven(std::move(witness_));
  }

 private:
  std::vector<BasicInstance<V>> witness_;
  std::optional<BasicInstance<V>> refuted_;
  std::string note_;
  bool unknown_ = false;
  std::string unknown_note_;
};

template <class V>
using SoftFn = std::function<Status(const V&)>;

template <class V>
using MemberFn = std::function<bool(const V&)>;

// ---------------------------------------------------------------------------
// Sum closures: is some finite sum of elements of `gens` above `target`?
// Returns the summands of the first such sum found (breadth first, so the
// shortest tuple).

template <ModelView M>
std::optional<std::vector<typename M::value_type>> sum_reaching(
    const M& m, const std::vector<typename M::value_type>& gens,
    const typename M::value_type& target, std::initializer_list<typename M::value_type> params,
    bool strict) {
  using V = typename M::value_type;
  struct Node {
    V sum;
    int parent;
    int term;
  };
  auto hits = [&](const V& s) { return strict ? m.wb(target, s) : m.leq(target, s); };
  std::vector<Node> nodes;
  std::map<V, int> seen;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (seen.count(gens[k])) continue;
    seen.emplace(gens[k], static_cast<int>(nodes.size()));
    nodes.push_back({gens[k], -1, static_cast<int>(k)});
  }
  auto unwind = [&](int at) {
    std::vector<V> out;
    for (int k = at; k >= 0; k = nodes[k].parent) out.push_back(gens[nodes[k].term]);
    std::reverse(out.begin(), out.end());
    return out;
  };
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (hits(nodes[head].sum)) return unwind(static_cast<int>(head));
    for (std::size_t k = 0; k < gens.size(); ++k) {
      V s = m.capped_add(nodes[head].sum, gens[k], params);
      if (seen.count(s)) continue;
      seen.emplace(s, static_cast<int>(nodes.size()));
      nodes.push_back({std::move(s), static_cast<int>(head), static_cast<int>(k)});
    }
  }
  return std::nullopt;
}

// Least (y, z) in the domain with single(y), single(z) and pair(y, z).
template <ModelView M, class Single, class Pair>
std::optional<std::pair<typename M::value_type, typename M::value_type>> find_pair(
    const M& m, std::initializer_list<typename M::value_type> params, Single single, Pair pair) {
  using V = typename M::value_type;
  std::vector<V> cands;
  for (const auto& y : m.domain(params)) {
    if (single(y)) cands.push_back(y);
  }
  for (const auto& y : cands) {
    for (const auto& z : cands) {
      if (pair(y, z)) return std::pair<V, V>{y, z};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Softness of a single element.

// Least t with x'+t ≪ x and x' ≪ ∞t.
template <ModelView M>
std::optional<typename M::value_type> strong_witness(const M& m, const typename M::value_type& xp,
                                                     const typename M::value_type& x) {
  for (const auto& t : m.domain({xp, x})) {
    if (m.wb(m.add(xp, t), x) && m.wb(xp, m.omega(t))) return t;
  }
  return std::nullopt;
}

template <ModelView M>
BasicVerdict<typename M::value_type> strongly_soft(const M& m, const typename M::value_type& x) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& xp : m.below(x)) {
    auto t = strong_witness(m, xp, x);
    if (!t) {
      sw.refute({{bind<V>("x'", xp)}, {}});
      break;
    }
    sw.witness({{bind<V>("x'", xp)}, {bind<V>("t", *t)}});
  }
  return sw.finish();
}

template <ModelView M>
std::optional<std::vector<typename M::value_type>> weak_witness(const M& m,
                                                                const typename M::value_type& xp,
                                                                const typename M::value_type& x) {
  using V = typename M::value_type;
  std::vector<V> ts;
  for (const auto& t : m.domain({xp, x})) {
    if (m.wb(m.add(xp, t), x)) ts.push_back(t);
  }
  return sum_reaching(m, ts, xp, {xp, x}, true);
}

template <ModelView M>
BasicVerdict<typename M::value_type> weakly_soft(const M& m, const typename M::value_type& x) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& xp : m.below(x)) {
    auto ts = weak_witness(m, xp, x);
    if (!ts) {
      sw.refute({{bind<V>("x'", xp)}, {}});
      break;
    }
    BasicInstance<V> inst{{bind<V>("x'", xp)}, {}};
    for (std::size_t j = 0; j < ts->size(); ++j) {
      inst.chosen.push_back(bind<V>("t" + std::to_string(j + 1), (*ts)[j]));
    }
    sw.witness(std::move(inst));
  }
  return sw.finish();
}

template <ModelView M>
BasicVerdict<typename M::value_type> functionally_soft(const M& m,
                                                       const typename M::value_type& x) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& xp : m.below(x)) {
    const auto bound = m.n_bound({xp, x});
    std::optional<std::uint64_t> hit;
    for (std::uint64_t n = 1; n <= bound.limit && !hit; ++n) {
      if (m.wb(m.mul(n + 1, xp), m.mul(n, x))) hit = n;
    }
    if (hit) {
      sw.witness({{bind<V>("x'", xp)}, {bind_count<V>("n", *hit)}});
    } else if (bound.exhaustive) {
      sw.refute({{bind<V>("x'", xp)}, {}});
      break;
    } else {
      sw.inconclusive("no n <= " + std::to_string(bound.limit) + " with (n+1)x' << nx");
    }
  }
  return sw.finish();
}

// Pure noncompactness, quantifying over ideals {y ≤ e}: the image of x is
// compact, and 2x_I = x_I iff 2x ≤ x + e.
template <ModelView M>
BasicVerdict<typename M::value_type> purely_noncompact(const M& m,
                                                       const typename M::value_type& x) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& e : m.ideals()) {
    if (!m.compact_mod(x, e)) continue;
    if (!m.leq(m.add(x, x), m.add(x, e))) {
      sw.refute({{bind<V>("ideal", e)}, {}});
      break;
    }
    sw.witness({{bind<V>("ideal", e)}, {}});
  }
  return sw.finish();
}

template <ModelView M>
BasicVerdict<typename M::value_type> weakly_purely_noncompact(const M& m,
                                                              const typename M::value_type& x) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& e : m.ideals()) {
    if (!m.compact_mod(x, e)) continue;
    const auto bound = m.n_bound({x, e});
    std::optional<std::uint64_t> hit;
    for (std::uint64_t n = 1; n <= bound.limit && !hit; ++n) {
      if (m.leq(m.mul(n + 1, x), m.add(m.mul(n, x), e))) hit = n;
    }
    if (hit) {
      sw.witness({{bind<V>("ideal", e)}, {bind_count<V>("n", *hit)}});
    } else if (bound.exhaustive) {
      sw.refute({{bind<V>("ideal", e)}, {}});
      break;
    } else {
      sw.inconclusive("no n <= " + std::to_string(bound.limit) + " with (n+1)x_I = nx_I");
    }
  }
  return sw.finish();
}

// Closed forms for compact x.
template <ModelView M>
bool idempotent(const M& m, const typename M::value_type& x) {
  return m.eq(m.add(x, x), x);
}

// Least n with (n+1)x = nx, within the exhaustive bound.
template <ModelView M>
std::optional<std::uint64_t> periodic_multiple(const M& m, const typename M::value_type& x) {
  const auto bound = m.n_bound({x});
  for (std::uint64_t n = 1; n <= bound.limit; ++n) {
    if (m.eq(m.mul(n + 1, x), m.mul(n, x))) return n;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Divisibility.

// Least (y, n) with ky ≤ x and x' ≤ ny. `inexact` is set when some y
// generates x' but no n within a non-exhaustive bound was found.
template <ModelView M>
std::optional<std::pair<typename M::value_type, std::uint64_t>> divisor_witness(
    const M& m, const typename M::value_type& xp, const typename M::value_type& x,
    std::uint64_t k, bool& inexact) {
  const auto bound = m.n_bound({xp, x});
  for (const auto& y : m.domain({xp, x})) {
    if (!m.leq(m.mul(k, y), x) || !m.leq(xp, m.omega(y))) continue;
    for (std::uint64_t n = 1; n <= bound.limit; ++n) {
      if (m.leq(xp, m.mul(n, y))) return std::pair{y, n};
    }
    if (!bound.exhaustive) inexact = true;
  }
  return std::nullopt;
}

template <ModelView M>
std::optional<std::vector<typename M::value_type>> weak_divisor_witness(
    const M& m, const typename M::value_type& xp, const typename M::value_type& x) {
  using V = typename M::value_type;
  std::vector<V> ys;
  for (const auto& y : m.domain({xp, x})) {
    if (m.leq(m.add(y, y), x)) ys.push_back(y);
  }
  return sum_reaching(m, ys, xp, {xp, x}, false);
}

// (k,ω)-divisibility of every pair x' ≪ x with x in the filter.
template <ModelView M>
BasicVerdict<typename M::value_type> k_omega_divisible(
    const M& m, const MemberFn<typename M::value_type>& member, std::uint64_t k) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& x : m.universe()) {
    if (!member(x)) continue;
    for (const auto& xp : m.below(x)) {
      bool inexact = false;
      auto w = divisor_witness(m, xp, x, k, inexact);
      if (w) {
        sw.witness({{bind<V>("x'", xp), bind<V>("x", x)}, {bind<V>("y", w->first), bind_count<V>("n", w->second)}});
      } else if (inexact) {
        sw.inconclusive("multiplicity bound exhausted");
      } else {
        sw.refute({{bind<V>("x'", xp), bind<V>("x", x)}, {}});
        return sw.finish();
      }
    }
  }
  return sw.finish();
}

template <ModelView M>
BasicVerdict<typename M::value_type> weakly_divisible(const M& m,
                                                      const MemberFn<typename M::value_type>& member) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& x : m.universe()) {
    if (!member(x)) continue;
    for (const auto& xp : m.below(x)) {
      auto ys = weak_divisor_witness(m, xp, x);
      if (!ys) {
        sw.refute({{bind<V>("x'", xp), bind<V>("x", x)}, {}});
        return sw.finish();
      }
      BasicInstance<V> inst{{bind<V>("x'", xp), bind<V>("x", x)}, {}};
      for (std::size_t j = 0; j < ys->size(); ++j) {
        inst.chosen.push_back(bind<V>("y" + std::to_string(j + 1), (*ys)[j]));
      }
      sw.witness(std::move(inst));
    }
  }
  return sw.finish();
}

// ---------------------------------------------------------------------------
// Scaled Glimm-type conditions. `sigma` is scale membership.

template <ModelView M>
BasicVerdict<typename M::value_type> ideal_filtered(const M& m,
                                                    const MemberFn<typename M::value_type>& sigma) {
  using V = typename M::value_type;
  Sweep<V> sw;
  std::vector<V> scale;
  for (const auto& x : m.universe()) {
    if (sigma(x)) scale.push_back(x);
  }
  for (const auto& v : m.universe()) {
    for (const auto& vp : m.below(v)) {
      for (const auto& x : scale) {
        if (!m.wb(v, m.omega(x))) continue;
        for (const auto& y : scale) {
          if (!m.wb(v, m.omega(y))) continue;
          std::optional<V> z;
          for (const auto& c : m.domain({vp, x, y})) {
            if (m.wb(vp, m.omega(c)) && m.wb(c, x) && m.wb(c, y)) {
              z = c;
              break;
            }
          }
          BasicInstance<V> inst{{bind<V>("v'", vp), bind<V>("v", v), bind<V>("x", x), bind<V>("y", y)}, {}};
          if (!z) {
            sw.refute(std::move(inst));
            return sw.finish();
          }
          inst.chosen.push_back(bind<V>("z", *z));
          sw.witness(std::move(inst));
        }
      }
    }
  }
  return sw.finish();
}

template <ModelView M>
BasicVerdict<typename M::value_type> property_v(const M& m,
                                                const MemberFn<typename M::value_type>& sigma) {
  using V = typename M::value_type;
  Sweep<V> sw;
  std::vector<V> scale;
  for (const auto& x : m.universe()) {
    if (sigma(x)) scale.push_back(x);
  }
  std::map<std::pair<V, V>, std::optional<std::pair<V, V>>> cache;
  for (const auto& x : scale) {
    for (const auto& c : scale) {
      for (const auto& d1 : scale) {
        if (!m.wb(d1, c) || !m.wb(m.add(c, d1), x)) continue;
        for (const auto& d2 : scale) {
          if (!m.wb(d2, c) || !m.wb(m.add(c, d2), x)) continue;
          for (const auto& d1p : m.below(d1)) {
            for (const auto& d2p : m.below(d2)) {
              const V w = m.add(d1p, d2p);
              auto key = std::pair{w, x};
              auto it = cache.find(key);
              if (it == cache.end()) {
                auto found = find_pair(
                    m, {w, x}, [&](const V& y) { return m.leq(y, x) && m.leq(w, m.omega(y)); },
                    [&](const V& y, const V& z) { return m.leq(m.add(y, z), x); });
                it = cache.emplace(key, std::move(found)).first;
              }
              BasicInstance<V> inst{{bind<V>("d1'", d1p), bind<V>("d1", d1), bind<V>("d2'", d2p),
                                     bind<V>("d2", d2), bind<V>("c", c), bind<V>("x", x)},
                                    {}};
              if (!it->second) {
                sw.refute(std::move(inst));
                return sw.finish();
              }
              inst.chosen = {bind<V>("y", it->second->first), bind<V>("z", it->second->second)};
              sw.witness(std::move(inst));
            }
          }
        }
      }
    }
  }
  return sw.finish(false);
}

// Strongly soft y with x' ⊲ y ≤ x for all x' ≪ x in the scale.
template <ModelView M>
BasicVerdict<typename M::value_type> abundance(const M& m,
                                               const MemberFn<typename M::value_type>& sigma,
                                               const SoftFn<typename M::value_type>& soft) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& x : m.universe()) {
    if (!sigma(x)) continue;
    for (const auto& xp : m.below(x)) {
      std::optional<V> hit;
      bool unsure = false;
      for (const auto& y : m.domain({xp, x})) {
        if (!m.leq(y, x) || !m.leq(xp, m.omega(y))) continue;
        const auto s = soft(y);
        if (s == Status::proven) {
          hit = y;
          break;
        }
        if (s == Status::unknown) unsure = true;
      }
      BasicInstance<V> inst{{bind<V>("x'", xp), bind<V>("x", x)}, {}};
      if (hit) {
        inst.chosen.push_back(bind<V>("y", *hit));
        sw.witness(std::move(inst));
      } else if (unsure) {
        sw.inconclusive("softness of a candidate is undecided");
      } else {
        sw.refute(std::move(inst));
        return sw.finish();
      }
    }
  }
  return sw.finish();
}

template <ModelView M>
BasicVerdict<typename M::value_type> two_splitting(const M& m,
                                                   const MemberFn<typename M::value_type>& sigma) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& x : m.universe()) {
    if (!sigma(x)) continue;
    for (const auto& xp : m.below(x)) {
      auto found = find_pair(
          m, {xp, x}, [&](const V& y) { return m.leq(y, x) && m.leq(xp, m.omega(y)); },
          [&](const V& y, const V& z) { return m.leq(m.add(y, z), x); });
      BasicInstance<V> inst{{bind<V>("x'", xp), bind<V>("x", x)}, {}};
      if (!found) {
        sw.refute(std::move(inst));
        return sw.finish();
      }
      inst.chosen = {bind<V>("y", found->first), bind<V>("z", found->second)};
      sw.witness(std::move(inst));
    }
  }
  return sw.finish();
}

// Strongly soft y with ky ≤ x ≤ ∞y (k = 1 reads y ≤ x ⊲ y) for every x in
// the filter.
template <ModelView M>
BasicVerdict<typename M::value_type> soft_divisors(const M& m,
                                                   const MemberFn<typename M::value_type>& member,
                                                   const SoftFn<typename M::value_type>& soft,
                                                   std::uint64_t k) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& x : m.universe()) {
    if (!member(x)) continue;
    std::optional<V> hit;
    bool unsure = false;
    for (const auto& y : m.domain({x})) {
      if (!m.leq(m.mul(k, y), x) || !m.leq(x, m.omega(y))) continue;
      const auto s = soft(y);
      if (s == Status::proven) {
        hit = y;
        break;
      }
      if (s == Status::unknown) unsure = true;
    }
    BasicInstance<V> inst{{bind<V>("x", x)}, {}};
    if (hit) {
      inst.chosen.push_back(bind<V>("y", *hit));
      sw.witness(std::move(inst));
    } else if (unsure) {
      sw.inconclusive("softness of a candidate is undecided");
    } else {
      sw.refute(std::move(inst));
      return sw.finish();
    }
  }
  return sw.finish();
}

// ---------------------------------------------------------------------------
// Axioms O5–O7.

template <ModelView M>
BasicVerdict<typename M::value_type> axiom_o5(const M& m) {
  using V = typename M::value_type;
  Sweep<V> sw;
  const auto& u = m.universe();
  for (const auto& x : u) {
    for (const auto& y : u) {
      const V xy = m.add(x, y);
      for (const auto& z : u) {
        if (!m.leq(xy, z)) continue;
        for (const auto& xp : m.below(x)) {
          for (const auto& yp : m.below(y)) {
            std::optional<V> hit;
            for (const auto& c : m.domain({xp, x, yp, y, z})) {
              if (m.leq(m.add(xp, c), z) && m.leq(z, m.add(x, c)) && m.wb(yp, c)) {
                hit = c;
                break;
              }
            }
            BasicInstance<V> inst{{bind<V>("x'", xp), bind<V>("x", x), bind<V>("y'", yp), bind<V>("y", y),
                                   bind<V>("z", z)},
                                  {}};
            if (!hit) {
              sw.refute(std::move(inst));
              return sw.finish();
            }
            inst.chosen.push_back(bind<V>("c", *hit));
            sw.witness(std::move(inst));
          }
        }
      }
    }
  }
  return sw.finish(false);
}

template <ModelView M>
BasicVerdict<typename M::value_type> axiom_o6(const M& m) {
  using V = typename M::value_type;
  Sweep<V> sw;
  const auto& u = m.universe();
  for (const auto& x : u) {
    for (const auto& y : u) {
      for (const auto& z : u) {
        if (!m.leq(x, m.add(y, z))) continue;
        for (const auto& xp : m.below(x)) {
          auto found = find_pair(
              m, {xp, x, y, z}, [&](const V&) { return true; },
              [&](const V& e, const V& f) {
                return m.leq(e, x) && m.leq(e, y) && m.leq(f, x) && m.leq(f, z) && m.leq(xp, m.add(e, f));
              });
          BasicInstance<V> inst{{bind<V>("x'", xp), bind<V>("x", x), bind<V>("y", y), bind<V>("z", z)}, {}};
          if (!found) {
            sw.refute(std::move(inst));
            return sw.finish();
          }
          inst.chosen = {bind<V>("e", found->first), bind<V>("f", found->second)};
          sw.witness(std::move(inst));
        }
      }
    }
  }
  return sw.finish(false);
}

template <ModelView M>
BasicVerdict<typename M::value_type> axiom_o7(const M& m) {
  using V = typename M::value_type;
  Sweep<V> sw;
  const auto& u = m.universe();
  for (const auto& z : u) {
    for (const auto& x : u) {
      if (!m.leq(x, z)) continue;
      for (const auto& y : u) {
        if (!m.leq(y, z)) continue;
        const V xy = m.add(x, y);
        for (const auto& xp : m.below(x)) {
          for (const auto& yp : m.below(y)) {
            std::optional<V> hit;
            for (const auto& w : m.domain({xp, x, yp, y, z})) {
              if (m.wb(xp, w) && m.wb(yp, w) && m.leq(w, z) && m.leq(w, xy)) {
                hit = w;
                break;
              }
            }
            BasicInstance<V> inst{{bind<V>("x'", xp), bind<V>("x", x), bind<V>("y'", yp), bind<V>("y", y),
                                   bind<V>("z", z)},
                                  {}};
            if (!hit) {
              sw.refute(std::move(inst));
              return sw.finish();
            }
            inst.chosen.push_back(bind<V>("w", *hit));
            sw.witness(std::move(inst));
          }
        }
      }
    }
  }
  return sw.finish(false);
}

// ---------------------------------------------------------------------------
// Finiteness.

template <ModelView M>
BasicVerdict<typename M::value_type> stably_finite(const M& m) {
  using V = typename M::value_type;
  Sweep<V> sw;
  for (const auto& x : m.universe()) {
    for (const auto& y : m.universe()) {
      if (m.wb(m.add(x, y), x) && !m.eq(y, m.zero())) {
        sw.refute({{bind<V>("x", x), bind<V>("y", y)}, {}});
        return sw.finish();
      }
    }
  }
  return sw.finish();
}

template <ModelView M>
BasicVerdict<typename M::value_type> weak_cancellation(const M& m) {
  using V = typename M::value_type;
  Sweep<V> sw;
  const auto& u = m.universe();
  for (const auto& x : u) {
    for (const auto& y : u) {
      if (m.wb(x, y)) continue;
      for (const auto& z : u) {
        if (m.wb(m.add(x, z), m.add(y, z))) {
          sw.refute({{bind<V>("x", x), bind<V>("y", y), bind<V>("z", z)}, {}});
          return sw.finish();
        }
      }
    }
  }
  return sw.finish();
}

}  // namespace culab::detail
