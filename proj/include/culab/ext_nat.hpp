#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace culab {

// An element of {0, 1, 2, ...} ∪ {∞} with saturating arithmetic.
class ExtNat {
 public:
  using rep = std::uint64_t;

  constexpr ExtNat() noexcept = default;
  constexpr ExtNat(rep v) noexcept : v_(v < kInf ? v : kInf) {}  // NOLINT

  static constexpr ExtNat infinity() noexcept {
    ExtNat r;
    r.v_ = kInf;
    return r;
  }

  constexpr bool is_finite() const noexcept { return v_ != kInf; }
  constexpr bool is_infinite() const noexcept { return v_ == kInf; }
  constexpr rep value() const noexcept { return v_; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) noexcept {
    if (a.is_infinite() || b.is_infinite() || a.v_ >= kInf - b.v_) {
      return infinity();
    }
    return ExtNat(a.v_ + b.v_);
  }
  ExtNat& operator+=(ExtNat b) noexcept { return *this = *this + b; }

  // n * a with 0 * ∞ = 0.
  friend constexpr ExtNat operator*(rep n, ExtNat a) noexcept {
    if (n == 0 || a.v_ == 0) return ExtNat(0);
    if (a.is_infinite() || a.v_ > (kInf - 1) / n) return infinity();
    return ExtNat(n * a.v_);
  }

  friend constexpr bool operator==(ExtNat, ExtNat) noexcept = default;
  friend constexpr auto operator<=>(ExtNat a, ExtNat b) noexcept { return a.v_ <=> b.v_; }

  std::string to_string() const { return is_finite() ? std::to_string(v_) : std::string("inf"); }

 private:
  static constexpr rep kInf = std::numeric_limits<rep>::max();
  rep v_ = 0;
};

inline constexpr ExtNat min(ExtNat a, ExtNat b) noexcept { return a <= b ? a : b; }
inline constexpr ExtNat max(ExtNat a, ExtNat b) noexcept { return a <= b ? b : a; }

// ∞·a: 0 stays 0, everything else becomes ∞.
inline constexpr ExtNat omega(ExtNat a) noexcept {
  return a == ExtNat(0) ? ExtNat(0) : ExtNat::infinity();
}

}  // namespace culab
