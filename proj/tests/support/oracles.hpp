#pragma once

// Brute-force reference implementations over raw finite tables. They share
// nothing with the library beyond the FiniteTable struct.

#include <cstddef>
#include <optional>
#include <vector>

#include "culab/model.hpp"

namespace oracle {

using culab::FiniteTable;

// Partial order with least element 0, commutative monoid with identity 0,
// addition monotone.
bool laws_hold(const FiniteTable& t);

// An isomorphism a → b fixing 0, if one exists.
std::optional<std::vector<std::size_t>> isomorphism(const FiniteTable& a, const FiniteTable& b);
inline bool isomorphic(const FiniteTable& a, const FiniteTable& b) { return isomorphism(a, b).has_value(); }

// Every lawful table of size n, one per isomorphism class.
std::vector<FiniteTable> naive_models(std::size_t n);

// The axioms read literally, with ≪ equal to ≤ on a finite carrier.
bool o5(const FiniteTable& t);
bool o6(const FiniteTable& t);
bool o7(const FiniteTable& t);

// Subsets containing 0 that are downward closed and closed under addition.
std::vector<std::vector<bool>> ideal_masks(const FiniteTable& t);

}  // namespace oracle
