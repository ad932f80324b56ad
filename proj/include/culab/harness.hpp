#pragma once

// Checks every module invariant on one model: the implication diagram, the
// compact closed forms, the quotient contract, the Glimm-type implications,
// re-verification of all witnesses and certificates, and so on.

#include <string>
#include <vector>

#include "culab/io.hpp"

namespace culab {

struct InvariantCheck {
  std::string name;
  std::size_t checked = 0;  // instances examined
  std::vector<std::string> violations;
};

struct HarnessReport {
  Report report;
  std::vector<InvariantCheck> checks;

  std::size_t violations() const;
  bool ok() const { return violations() == 0; }
};

HarnessReport run_harness(const CuModel& model, const Scale& scale, const Budget& budget = {});

std::string harness_text(const HarnessReport& h);
Json harness_json(const HarnessReport& h);

}  // namespace culab
