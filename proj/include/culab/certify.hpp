#pragma once

// Independent re-checking of witnesses and certificates straight from the
// definitions, using only the public model operations. Each function returns
// the problems found; an empty list means the verdict checks out.

#include <string>
#include <vector>

#include "culab/glimm.hpp"
#include "culab/model.hpp"
#include "culab/structure.hpp"
#include "culab/verdict.hpp"

namespace culab::certify {

// Element flags: strongly_soft, weakly_soft, functionally_soft,
// purely_noncompact, weakly_purely_noncompact.
std::vector<std::string> element_flag(const CuModel& model, const std::string& flag, const Element& x,
                                      const Verdict& v);

// Model predicates as named in search targets (two_omega_divisible,
// weakly_divisible, ideal_filtered, property_V, abundance, 2_splitting,
// soft_dominators, soft_divisors, stably_finite, residually_stably_finite,
// weak_cancellation, O5, O6, O7) and k_omega_divisible:K for any k. Witness
// instances are all checked; a certificate is checked by an exhaustive search
// over the witness domain.
std::vector<std::string> model_predicate(const CuModel& model, const Scale& sigma, const std::string& name,
                                         const Verdict& v);

// Outputs of the constructions.
std::vector<std::string> strongly_soft_witness(const CuModel& model, const Verdict& v);
std::vector<std::string> lhd_interpolate(const CuModel& model, const Verdict& v);
std::vector<std::string> pre_cu_equiv(const CuModel& model, const Verdict& v);
std::vector<std::string> soft_dominator(const CuModel& model, const Verdict& v);
std::vector<std::string> k_div_seq(const CuModel& model, std::uint64_t k, const ChainDescriptor& chain,
                                   const SequenceResult& r);
std::vector<std::string> soft_divisor(const CuModel& model, const Verdict& v);
std::vector<std::string> soft_interpolate(const CuModel& model, const Verdict& v);

}  // namespace culab::certify
