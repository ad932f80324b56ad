#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "culab/errors.hpp"
#include "culab/ext_nat.hpp"

namespace culab {

using ModelId = std::uint64_t;
using Index = std::uint16_t;
using Payload = std::vector<ExtNat>;
using PayloadView = std::span<const ExtNat>;

enum class ModelKind { finite_table, nbar, e_k, lsc, product, quotient };

std::string_view to_string(ModelKind kind) noexcept;

// A handle into the carrier of one model. For finite models the payload is a
// single coordinate holding the element index; for lsc models it holds one
// value per point of the space; product payloads concatenate the factors.
class Element {
 public:
  Element() = default;
  Element(ModelId model, Payload payload) : model_(model), payload_(std::move(payload)) {}

  ModelId model() const noexcept { return model_; }
  const Payload& payload() const noexcept { return payload_; }
  Index index() const noexcept { return static_cast<Index>(payload_.front().value()); }

  friend bool operator==(const Element&, const Element&) = default;
  // Canonical element order: lexicographic on the payload, ∞ last.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.model_ != b.model_) return a.model_ < b.model_;
    return a.payload_ < b.payload_;
  }

 private:
  ModelId model_ = 0;
  Payload payload_;
};

// Boolean order matrix and addition table of a finite model. Index 0 is the
// zero element.
struct FiniteTable {
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq;  // row-major, leq[i*n+j] = (i ≤ j)
  std::vector<Index> add;         // row-major

  bool le(std::size_t i, std::size_t j) const { return leq[i * n + j] != 0; }
  Index sum(std::size_t i, std::size_t j) const { return add[i * n + j]; }

  friend bool operator==(const FiniteTable&, const FiniteTable&) = default;
};

// Specialization order of a finite T0 space: leq[p*n+q] means p lies in the
// closure of q. Lower semicontinuous maps are the monotone ones.
struct Space {
  std::vector<std::string> points;
  std::vector<std::uint8_t> leq;

  std::size_t size() const { return points.size(); }
  bool le(std::size_t p, std::size_t q) const { return leq[p * points.size() + q] != 0; }
  friend bool operator==(const Space&, const Space&) = default;
};

// Search budgets. `n` caps existential multiplicities on infinite models,
// `basis` is the depth to which truncation chains are unrolled, and `grid`
// is the largest finite coordinate used when sampling infinite carriers.
struct Budget {
  std::size_t n = 8;
  std::size_t basis = 12;
  std::size_t grid = 2;
};

class CuModel;

class ChainDescriptor {
 public:
  enum class Form { stabilizing_list, truncation_family };

  static ChainDescriptor stabilizing(std::vector<Element> terms);
  static ChainDescriptor truncation(Element base);

  Form form() const noexcept { return form_; }
  const std::vector<Element>& terms() const noexcept { return terms_; }
  const Element& base() const noexcept { return base_; }

  // n-th term of the described sequence.
  Element term(const CuModel& model, std::size_t n) const;

 private:
  Form form_ = Form::stabilizing_list;
  std::vector<Element> terms_;
  Element base_;
};

namespace detail {

class ModelImpl {
 public:
  explicit ModelImpl(ModelKind kind);
  virtual ~ModelImpl() = default;

  ModelId id() const noexcept { return id_; }
  ModelKind kind() const noexcept { return kind_; }

  virtual bool is_finite() const = 0;
  virtual std::size_t arity() const = 0;
  virtual bool valid(PayloadView x) const = 0;
  virtual bool leq(PayloadView x, PayloadView y) const = 0;
  virtual Payload add(PayloadView x, PayloadView y) const = 0;
  virtual bool way_below(PayloadView x, PayloadView y) const = 0;
  virtual Payload omega(PayloadView x) const = 0;
  virtual Payload zero() const = 0;
  virtual Payload top() const = 0;
  // min(x, level) on value coordinates; index coordinates are untouched.
  virtual Payload truncate(PayloadView x, ExtNat level) const = 0;
  // Largest finite value coordinate (0 if none).
  virtual ExtNat level(PayloadView x) const = 0;
  // All elements whose value coordinates lie in {0..level, ∞}, in canonical
  // order. Finite models return the whole carrier.
  virtual std::vector<Payload> grid(ExtNat level) const = 0;
  // n such that if (n'+1)a ≪ n'b for some n' then it holds for some n' ≤ n,
  // for arguments of the given level.
  virtual std::uint64_t multiplicity_bound(ExtNat level) const = 0;
  virtual std::string format(PayloadView x) const = 0;

 private:
  ModelId id_;
  ModelKind kind_;
};

}  // namespace detail

// An immutable, effectively presented Cu-semigroup. Cheap to copy; copies
// share the underlying presentation and its identity.
class CuModel {
 public:
  CuModel() = default;
  explicit CuModel(std::shared_ptr<const detail::ModelImpl> impl) : impl_(std::move(impl)) {}

  ModelId id() const noexcept { return impl_->id(); }
  ModelKind kind() const noexcept { return impl_->kind(); }
  bool is_finite() const { return impl_->is_finite(); }
  std::size_t arity() const { return impl_->arity(); }

  // Finite carriers only.
  std::size_t size() const;
  Element element(std::size_t index) const;
  std::vector<Element> elements() const;
  const FiniteTable& table() const;

  // lsc and nbar models only.
  const Space& space() const;
  // product models with an infinite factor only.
  const std::vector<CuModel>& factors() const;
  Element component(const Element& x, std::size_t factor) const;
  Element compose(std::span<const Element> parts) const;

  Element make(Payload payload) const;
  bool owns(const Element& x) const noexcept { return x.model() == id(); }
  void require(const Element& x) const;

  Element zero() const;
  Element top() const;
  bool leq(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element multiple(std::uint64_t n, const Element& x) const;
  bool way_below(const Element& x, const Element& y) const;
  Element omega_multiple(const Element& x) const;
  bool is_compact(const Element& x) const;
  Element truncate(const Element& x, ExtNat level) const;

  Element sup(const ChainDescriptor& chain) const;
  ChainDescriptor basis_chain(const Element& x) const;
  // Terms of the basis chain of x that quantifiers over {x' : x' ≪ x} visit:
  // {x} when the chain is constant, else truncations at 0..max(depth, level).
  std::vector<Element> basis_terms(const Element& x, std::size_t depth) const;

  std::vector<Element> sample(std::size_t grid) const;
  std::vector<Element> witness_domain(std::span<const Element> params) const;
  std::uint64_t multiplicity_bound(std::span<const Element> params) const;
  ExtNat level(std::span<const Element> params) const;

  std::string format(const Element& x) const;

  const detail::ModelImpl& impl() const { return *impl_; }
  explicit operator bool() const noexcept { return impl_ != nullptr; }

 private:
  std::shared_ptr<const detail::ModelImpl> impl_;
};

// Constructors for the supported model families.

// Validates the table and throws ValidationError listing every violation.
CuModel finite_model(FiniteTable table, ModelKind kind = ModelKind::finite_table);
CuModel nbar();
// E_k = {0, 1, ..., k, ∞} with sums above k collapsing to ∞.
CuModel e_k(unsigned k);
// Monotone maps from the specialization order into {0, 1, ..., ∞}.
CuModel lsc_model(Space space);
CuModel product(const CuModel& a, const CuModel& b);
CuModel product(std::span<const CuModel> factors);

// Laws every finite table must satisfy; returns human-readable violations.
std::vector<std::string> validate_table(const FiniteTable& table);

FiniteTable make_table(std::vector<std::string> names,
                       const std::vector<std::vector<int>>& leq,
                       const std::vector<std::vector<int>>& add);

// Free-function spellings of the model operations.
inline bool leq(const CuModel& m, const Element& x, const Element& y) { return m.leq(x, y); }
inline Element add(const CuModel& m, const Element& x, const Element& y) { return m.add(x, y); }
inline bool way_below(const CuModel& m, const Element& x, const Element& y) {
  return m.way_below(x, y);
}
inline Element omega_multiple(const CuModel& m, const Element& x) { return m.omega_multiple(x); }
inline bool is_compact(const CuModel& m, const Element& x) { return m.is_compact(x); }
inline Element sup_chain(const CuModel& m, const ChainDescriptor& c) { return m.sup(c); }
inline ChainDescriptor basis_chain(const CuModel& m, const Element& x) { return m.basis_chain(x); }

// x ⊲ y: x lies in the ideal generated by y.
inline bool in_ideal_of(const CuModel& m, const Element& x, const Element& y) {
  return m.leq(x, m.omega_multiple(y));
}

}  // namespace culab
