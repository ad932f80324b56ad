#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace culab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CULAB_DEFINE_ERROR(Name)        \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

CULAB_DEFINE_ERROR(ElementModelMismatch);
CULAB_DEFINE_ERROR(NotIncreasing);
CULAB_DEFINE_ERROR(NotT0);
CULAB_DEFINE_ERROR(NotAnIdeal);
CULAB_DEFINE_ERROR(UnsupportedModel);
CULAB_DEFINE_ERROR(NotWayBelow);
CULAB_DEFINE_ERROR(PreconditionNotEstablished);
CULAB_DEFINE_ERROR(ParseError);

#undef CULAB_DEFINE_ERROR

// Carries the first index at which a sequence hypothesis fails.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::string what, std::size_t index)
      : Error(std::move(what)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Carries every law violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "model validation failed:";
    for (const auto& s : v) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace culab
