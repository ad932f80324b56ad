#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "culab/model.hpp"
#include "culab/structure.hpp"
#include "culab/verdict.hpp"

namespace culab {

struct DivisibilityReport {
  Verdict two_omega_divisible;
  Verdict weakly_two_omega_divisible;
  std::map<std::uint64_t, Verdict> k_omega_divisible;
};

// Sweeps pairs x' ≪ x with x in the scale.
DivisibilityReport classify_divisibility(const CuModel& model, const Scale& sigma, const Budget& budget = {},
                                         const std::vector<std::uint64_t>& ks = {2, 3});

// Model-level (k,ω)-divisibility over the whole carrier.
Verdict k_omega_divisible(const CuModel& model, std::uint64_t k, const Budget& budget = {});

// Element-level divisibility: every x' ≪ x has a witness.
Verdict element_divisible(const CuModel& model, const Element& x, std::uint64_t k, const Budget& budget = {});
Verdict element_weakly_divisible(const CuModel& model, const Element& x, const Budget& budget = {});

Verdict is_ideal_filtered(const CuModel& model, const Scale& sigma, const Budget& budget = {});
Verdict has_property_V(const CuModel& model, const Scale& sigma, const Budget& budget = {});
Verdict has_abundance_soft(const CuModel& model, const Scale& sigma, const Budget& budget = {});
Verdict has_2_splitting(const CuModel& model, const Scale& sigma, const Budget& budget = {});
// Every x in the scale has a strongly soft y with y ≤ x ⊲ y.
Verdict has_soft_dominators(const CuModel& model, const Scale& sigma, const Budget& budget = {});
// Every x in the carrier has a strongly soft y with ky ≤ x ≤ ∞y.
Verdict has_soft_divisors(const CuModel& model, std::uint64_t k, const Budget& budget = {});

struct GlimmReport {
  Verdict ideal_filtered;
  Verdict property_V;
  Verdict abundance_soft;
  Verdict hereditary_2_splitting;
  Verdict soft_divisor_all;
  Scale scale;
};

GlimmReport classify_glimm(const CuModel& model, const Scale& sigma, const Budget& budget = {});

// Part (1): y' with x' ⊲ y' ≪ y. Part (2), which needs O6 and O7: z ≤ y with
// x' ⊲ z ⊲ x. Chosen values: y', x'', n, e_j, e_j' and z. Throws
// PreconditionNotEstablished unless x' ≪ x ⊲ y and O6, O7 are proven.
Verdict lhd_interpolate(const CuModel& model, const Element& x_prime, const Element& x, const Element& y,
                        const Budget& budget = {});

// (y, z) with y + z ≤ x, x' ⊲ y and x ⊲ z, built from interpolants
// x' ≪ x1 ≪ x2 ≪ x3 ≪ x, a splitting (s, t) of x3 ≪ x, the refinements
// s', s'', t' and an O5 complement c. Needs O5–O7 and 2-splitting.
Verdict pre_cu_equiv(const CuModel& model, const Scale& sigma, const Element& x_prime, const Element& x,
                     const Budget& budget = {});

// Strongly soft y with y ≤ x ⊲ y as a sum of the refined splitting pieces
// y_n'. Returns Refuted with the failing pair when 2-splitting is refuted.
Verdict soft_dominator(const CuModel& model, const Scale& sigma, const Element& x, const Budget& budget = {});

// An eventually periodic sequence: prefix, then cycle repeated forever.
struct PeriodicSequence {
  std::vector<Element> prefix;
  std::vector<Element> cycle;

  const Element& term(std::size_t n) const;
  // prefix sum plus ∞ times the cycle sum
  Element sum(const CuModel& model) const;
};

struct SequenceResult {
  Verdict verdict;
  PeriodicSequence y;
};

// (y_n) with Σ k·y_n ≤ sup x_n and y_n, x_{n+1} ≪ ∞y_{n+1}, following the
// inductive construction with divisors z_n and complements c_n.
SequenceResult k_div_seq(const CuModel& model, std::uint64_t k, const ChainDescriptor& chain,
                         const Budget& budget = {});

// Strongly soft y with ky ≤ x ≤ ∞y, summing k_div_seq on the basis chain.
Verdict div_soft_divisor(const CuModel& model, const Element& x, std::uint64_t k, const Budget& budget = {});

struct EquivalenceReport {
  std::vector<std::pair<std::string, Verdict>> conditions;
  // No decided condition disagrees with another; Unknown is exempt.
  bool agree = true;
  std::string note;
};

// Conditions (1)-(3): soft dominators, abundance, 2-splitting.
EquivalenceReport cu_equiv(const CuModel& model, const Scale& sigma, const Budget& budget = {});
// Conditions (1)-(5) of the divisibility characterization. Their equivalence
// assumes an axiom beyond O5–O7 that is not checkable here, so this is an
// agreement check only.
EquivalenceReport char_div_equiv(const CuModel& model, const Scale& sigma, const Budget& budget = {});

}  // namespace culab
