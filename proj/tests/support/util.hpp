#pragma once

#include <string>

#include "culab/model.hpp"
#include "culab/verdict.hpp"

namespace testutil {

inline culab::Element nat(const culab::CuModel& m, culab::ExtNat v) { return m.make({v}); }
inline culab::Element pair(const culab::CuModel& m, culab::ExtNat a, culab::ExtNat b) { return m.make({a, b}); }
inline const culab::ExtNat inf = culab::ExtNat::infinity();

// The chosen value of a construction verdict.
inline const culab::Element& chosen(const culab::Verdict& v, const std::string& name) {
  return culab::binding(v.witness.front().chosen, name).element();
}
inline const culab::Element& given(const culab::Instance& i, const std::string& name) {
  return culab::binding(i.given, name).element();
}

}  // namespace testutil
