#pragma once

// Runs a sweep on the finite-table view when the carrier is finite and on the
// sampled handle view otherwise.

#include <map>
#include <memory>
#include <string>
#include <type_traits>

#include "culab/detail/sweeps.hpp"
#include "culab/detail/views.hpp"
#include "culab/structure.hpp"

namespace culab::detail {

// Model-level sweeps unroll basis chains one step past the grid.
inline std::size_t sweep_depth(const Budget& b) { return b.grid + 1; }

inline std::string sample_note(const Budget& b, std::size_t depth) {
  return "sampled: grid <= " + std::to_string(b.grid) + ", basis depth " + std::to_string(depth);
}

template <class F>
Verdict dispatch(const CuModel& m, const Budget& b, std::size_t depth, F&& f) {
  if (m.is_finite()) {
    TableView v(m.table());
    return lift_verdict(f(v), [&](Index i) { return m.element(i); });
  }
  HandleView v(m, b, depth);
  Verdict r = f(v);
  if (r.proven() && r.note.empty()) r.note = sample_note(b, depth);
  return r;
}

template <class View>
MemberFn<typename View::value_type> scale_member(const View&, const CuModel& m, const Scale& s) {
  if constexpr (std::is_same_v<typename View::value_type, Index>) {
    std::vector<bool> mask(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) mask[i] = s.contains(m, m.element(i));
    return [mask](const Index& i) { return static_cast<bool>(mask[i]); };
  } else {
    return [&m, s](const Element& x) { return s.contains(m, x); };
  }
}

template <class View>
MemberFn<typename View::value_type> everything(const View&) {
  return [](const typename View::value_type&) { return true; };
}

// Strong softness of candidate witnesses: the closed form 2y = y on finite
// carriers, a cached element sweep otherwise.
template <class View>
SoftFn<typename View::value_type> soft_fn(const View& v, const CuModel& m, const Budget& b) {
  if constexpr (std::is_same_v<typename View::value_type, Index>) {
    return [&v](const Index& y) { return idempotent(v, y) ? Status::proven : Status::refuted; };
  } else {
    auto cache = std::make_shared<std::map<Element, Status>>();
    auto deep = std::make_shared<HandleView>(m, b, b.basis);
    return [cache, deep](const Element& y) {
      auto it = cache->find(y);
      if (it != cache->end()) return it->second;
      Status s;
      if (deep->compact(y)) {
        s = idempotent(*deep, y) ? Status::proven : Status::refuted;
      } else {
        s = strongly_soft(*deep, y).status;
      }
      cache->emplace(y, s);
      return s;
    };
  }
}

// Element-level variant: `f(view, x)` receives x in the view's value type.
template <class F>
Verdict dispatch_at(const CuModel& m, const Budget& b, std::size_t depth, const Element& x, F&& f) {
  m.require(x);
  if (m.is_finite()) {
    TableView v(m.table());
    return lift_verdict(f(v, x.index()), [&](Index i) { return m.element(i); });
  }
  HandleView v(m, b, depth);
  Verdict r = f(v, x);
  if (r.proven() && r.note.empty()) r.note = sample_note(b, depth);
  return r;
}

// Least element of the witness domain satisfying `pred`.
template <class Pred>
std::optional<Element> least(const HandleView& v, std::initializer_list<Element> params, Pred pred) {
  for (const auto& c : v.domain(params)) {
    if (pred(c)) return c;
  }
  return std::nullopt;
}

}  // namespace culab::detail
