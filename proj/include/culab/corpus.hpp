#pragma once

#include <string>
#include <vector>

#include "culab/model.hpp"

namespace culab {

// {0, ∞} with ∞ + anything = ∞.
CuModel zero_inf();
// The one-element model {0}.
CuModel trivial();
// lsc functions on the Sierpiński space: points u (open) and v (closed), v ≤ u.
CuModel sierpinski();
// lsc functions on the discrete space with n points.
CuModel discrete(std::size_t n);
// Subsets of a two-point set under union, ordered by inclusion.
CuModel join_powerset2();

struct NamedModel {
  std::string name;
  CuModel model;
};

// E_1..E_4, {0,∞}, {0}, nbar, lsc over one point, the discrete two-point
// space and the Sierpiński space, nbar×E_1, Sierpiński×{0,∞}, and the
// two-point join-semilattice.
std::vector<NamedModel> corpus();

}  // namespace culab
