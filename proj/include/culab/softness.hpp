#pragma once

#include <string>
#include <vector>

#include "culab/model.hpp"
#include "culab/structure.hpp"
#include "culab/verdict.hpp"

namespace culab {

struct SoftnessReport {
  Verdict strongly_soft;
  Verdict weakly_soft;
  Verdict functionally_soft;
  Verdict purely_noncompact;
  Verdict weakly_purely_noncompact;
};

// Uses the closed forms for compact x (2x = x, and (n+1)x = nx for some n)
// and the quantifier sweeps otherwise.
SoftnessReport classify_softness(const CuModel& model, const Element& x, const Budget& budget = {});

// Always runs the quantifier sweeps, also for compact x.
SoftnessReport sweep_softness(const CuModel& model, const Element& x, const Budget& budget = {});

// Least t with x'+t ≪ x and x' ≪ ∞t. Throws NotWayBelow unless x' ≪ x.
Verdict strongly_soft_witness(const CuModel& model, const Element& x_prime, const Element& x);

// {x : 2x = x} for finite models; throws UnsupportedModel otherwise.
std::vector<Element> soft_submonoid(const CuModel& model);

// Sum of a summand sequence with y_n ≤ ∞y_{n+1}. A stabilizing list repeats
// its last entry forever, a truncation family of b has summands min(b, n).
// Throws HypothesisViolated at the first n where the condition fails.
Element sum_soft(const CuModel& model, const ChainDescriptor& summands);

// Strongly soft y with x' ≪ y ≪ x for strongly soft x in the scale, in a
// model with an abundance of strongly soft elements. Chosen values: z', z,
// t, t', u and y = z' + u.
Verdict soft_interpolate(const CuModel& model, const Scale& sigma, const Element& x_prime,
                         const Element& x, const Budget& budget = {});

struct MappedElement {
  Element image;
  SoftnessReport source;
  SoftnessReport target;
  // Flags proven for x but refuted for its image.
  std::vector<std::string> lost;
};

MappedElement map_element(const QuotientMap& map, const Element& x, const Budget& budget = {});

// Names and verdicts of a report in a fixed order.
std::vector<std::pair<std::string, const Verdict*>> flags(const SoftnessReport& r);

}  // namespace culab
