#pragma once

// Two presentations of a model for the quantifier sweeps: TableView works on
// raw indices of a finite table, HandleView on element handles of any model.
// The sweeps in sweeps.hpp are written once against the ModelView concept.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "culab/model.hpp"

namespace culab {

// Idempotent generators e of all ideals {y : y ≤ e}, in canonical order.
std::vector<Element> ideal_generators(const CuModel& model);

namespace detail {

struct NBound {
  std::uint64_t limit;
  bool exhaustive;  // false: a failed search up to `limit` proves nothing
};

template <class M>
concept ModelView = requires(const M& m, const typename M::value_type& a) {
  { m.leq(a, a) } -> std::same_as<bool>;
  { m.wb(a, a) } -> std::same_as<bool>;
  { m.add(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.omega(a) } -> std::convertible_to<typename M::value_type>;
  { m.mul(std::uint64_t{1}, a) } -> std::convertible_to<typename M::value_type>;
  { m.zero() } -> std::convertible_to<typename M::value_type>;
  { m.is_finite() } -> std::same_as<bool>;
  m.universe();
  m.below(a);
  m.domain({a});
  m.ideals();
  { m.n_bound({a}) } -> std::same_as<NBound>;
  { m.capped_add(a, a, {a}) } -> std::convertible_to<typename M::value_type>;
  { m.compact_mod(a, a) } -> std::same_as<bool>;
};

class TableView {
 public:
  using value_type = Index;

  explicit TableView(const FiniteTable& t) : t_(&t) {
    const auto n = t.n;
    all_.resize(n);
    for (std::size_t k = 0; k < n; ++k) all_[k] = static_cast<Index>(k);
    below_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (t.le(y, x)) below_[x].push_back(static_cast<Index>(y));
      }
    }
    omega_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      Index m = static_cast<Index>(x);
      for (std::size_t s = 0; s <= n; ++s) {
        const Index next = t.sum(m, x);
        if (next == m) break;
        m = next;
      }
      omega_[x] = m;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (std::find(ideals_.begin(), ideals_.end(), omega_[x]) == ideals_.end()) {
        ideals_.push_back(omega_[x]);
      }
    }
    std::sort(ideals_.begin(), ideals_.end());
  }

  const FiniteTable& table() const { return *t_; }
  std::size_t size() const { return t_->n; }

  bool leq(Index a, Index b) const { return t_->le(a, b); }
  bool wb(Index a, Index b) const { return t_->le(a, b); }
  bool eq(Index a, Index b) const { return a == b; }
  Index add(Index a, Index b) const { return t_->sum(a, b); }
  Index omega(Index a) const { return omega_[a]; }
  Index mul(std::uint64_t n, Index a) const {
    if (n == 0) return 0;
    if (n >= t_->n) return omega_[a];
    Index acc = a;
    for (std::uint64_t k = 1; k < n; ++k) acc = t_->sum(acc, a);
    return acc;
  }
  Index zero() const { return 0; }
  bool is_finite() const { return true; }
  bool compact(Index) const { return true; }

  const std::vector<Index>& universe() const { return all_; }
  const std::vector<Index>& below(Index x) const { return below_[x]; }
  const std::vector<Index>& domain(std::initializer_list<Index>) const { return all_; }
  const std::vector<Index>& ideals() const { return ideals_; }
  NBound n_bound(std::initializer_list<Index>) const { return {std::max<std::size_t>(t_->n, 1), true}; }
  Index capped_add(Index a, Index b, std::initializer_list<Index>) const { return add(a, b); }
  bool compact_mod(Index, Index) const { return true; }

 private:
  const FiniteTable* t_;
  std::vector<Index> all_;
  std::vector<std::vector<Index>> below_;
  std::vector<Index> omega_;
  std::vector<Index> ideals_;
};

// Sampled view of an arbitrary model. Universal quantifiers range over the
// sample grid and over basis-chain terms unrolled to `depth`; existential
// quantifiers range over the witness domain, which is complete for every
// supported family (truncating witness values above all parameters never
// breaks the conditions checked here).
class HandleView {
 public:
  using value_type = Element;

  HandleView(const CuModel& m, const Budget& b, std::size_t depth)
      : m_(&m), budget_(b), depth_(depth), universe_(m.sample(b.grid)) {}

  const CuModel& model() const { return *m_; }
  const Budget& budget() const { return budget_; }
  std::size_t depth() const { return depth_; }

  bool leq(const Element& a, const Element& b) const { return m_->leq(a, b); }
  bool wb(const Element& a, const Element& b) const { return m_->way_below(a, b); }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return m_->add(a, b); }
  Element omega(const Element& a) const { return m_->omega_multiple(a); }
  Element mul(std::uint64_t n, const Element& a) const { return m_->multiple(n, a); }
  Element zero() const { return m_->zero(); }
  bool is_finite() const { return m_->is_finite(); }
  bool compact(const Element& a) const { return m_->is_compact(a); }

  const std::vector<Element>& universe() const { return universe_; }
  std::vector<Element> below(const Element& x) const { return m_->basis_terms(x, depth_); }
  std::vector<Element> domain(std::initializer_list<Element> params) const {
    return m_->witness_domain(std::span<const Element>(params.begin(), params.size()));
  }
  std::vector<Element> ideals() const { return ideal_generators(*m_); }

  NBound n_bound(std::initializer_list<Element> params) const {
    if (m_->is_finite()) return {std::max<std::size_t>(m_->size(), 1), true};
    const auto exact =
        m_->multiplicity_bound(std::span<const Element>(params.begin(), params.size()));
    if (exact <= budget_.n) return {exact, true};
    return {budget_.n, false};
  }

  Element capped_add(const Element& a, const Element& b, std::initializer_list<Element> params) const {
    const auto lvl =
        culab::max(m_->level(std::span<const Element>(params.begin(), params.size())), ExtNat(1));
    return m_->truncate(m_->add(a, b), lvl);
  }

  // Whether the image of x in S/{y ≤ e} is compact.
  bool compact_mod(const Element& x, const Element& e) const {
    const auto terms = m_->basis_terms(x, depth_);
    return m_->leq(x, m_->add(terms.back(), e));
  }

 private:
  const CuModel* m_;
  Budget budget_;
  std::size_t depth_;
  std::vector<Element> universe_;
};

static_assert(ModelView<TableView>);
static_assert(ModelView<HandleView>);

}  // namespace detail
}  // namespace culab
