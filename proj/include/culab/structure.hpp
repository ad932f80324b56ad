#pragma once

#include <string>
#include <vector>

#include "culab/model.hpp"
#include "culab/verdict.hpp"

namespace culab {

// The ideal {y : y ≤ e} for an idempotent generator e. In every supported
// family all ideals have this form: for finite models e is the sum of the
// ideal, for lsc models e = ∞ on an open set and 0 elsewhere, and ideals of
// products are products of ideals.
class Ideal {
 public:
  Ideal() = default;
  // Throws NotAnIdeal unless 2e = e.
  Ideal(const CuModel& model, Element generator);

  ModelId model() const noexcept { return model_; }
  const Element& generator() const noexcept { return gen_; }
  bool contains(const CuModel& model, const Element& x) const;

  // Membership bitmask over the carrier (finite models).
  std::vector<bool> mask(const CuModel& model) const;
  // Points where the generator is ∞ (lsc and nbar models).
  std::vector<bool> open_set(const CuModel& model) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  ModelId model_ = 0;
  Element gen_;
};

// Throws NotAnIdeal unless the subset contains 0 and is downward closed and
// closed under addition.
Ideal ideal_from_mask(const CuModel& model, const std::vector<bool>& mask);
// Throws NotAnIdeal unless `open` is upward closed in the specialization order.
Ideal ideal_from_open_set(const CuModel& model, const std::vector<bool>& open);

Ideal ideal_generated(const CuModel& model, const Element& x);
// All ideals, ordered by generator. Throws UnsupportedModel when a product
// has a factor without an ideal enumeration.
std::vector<Ideal> enumerate_ideals(const CuModel& model);

// A downward-hereditary, sup-closed subset. Generator form means the union of
// the downsets of the generators.
class Scale {
 public:
  enum class Form { whole, mask, generators };

  static Scale whole(const CuModel& model);
  static Scale from_mask(const CuModel& model, std::vector<bool> mask);
  static Scale from_generators(const CuModel& model, std::vector<Element> generators);

  ModelId model() const noexcept { return model_; }
  Form form() const noexcept { return form_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }

  bool contains(const CuModel& model, const Element& x) const;

 private:
  ModelId model_ = 0;
  Form form_ = Form::whole;
  std::vector<bool> mask_;
  std::vector<Element> gens_;
};

bool is_scale(const CuModel& model, const Scale& sigma);

class QuotientMap {
 public:
  QuotientMap(CuModel source, Ideal ideal, CuModel target);

  const CuModel& source() const noexcept { return source_; }
  const Ideal& ideal() const noexcept { return ideal_; }
  const CuModel& target() const noexcept { return target_; }

  Element project(const Element& x) const;
  // A preimage: the least-index class member on finite carriers, the least
  // preimage on lsc carriers.
  Element lift(const Element& y) const;

 private:
  friend QuotientMap quotient(const CuModel&, const Ideal&);

  CuModel source_;
  Ideal ideal_;
  CuModel target_;
  std::vector<Index> classes_;         // finite sources: class of each index
  std::vector<Index> representatives_; // finite sources: least index per class
  std::vector<std::size_t> kept_;      // lsc sources: points outside the open set
  std::vector<QuotientMap> parts_;     // product sources: one map per factor
};

// x ≤_I y iff x ≤ y + e.
QuotientMap quotient(const CuModel& model, const Ideal& ideal);

struct FinitenessReport {
  Verdict stably_finite;
  Verdict residually_stably_finite;
  Verdict weak_cancellation;
};

FinitenessReport classify_finiteness(const CuModel& model, const Budget& budget = {});

enum class Axiom { o5, o6, o7 };

std::string_view to_string(Axiom a) noexcept;

Verdict check_axiom(const CuModel& model, Axiom which, const Budget& budget = {});

// Law violations of the model presentation; empty when valid. Infinite
// families are checked on the sample grid.
std::vector<std::string> validate_model(const CuModel& model, const Budget& budget = {});

}  // namespace culab
