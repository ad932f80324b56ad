#include "culab/verdict.hpp"

namespace culab {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::proven:
      return "proven";
    case Status::refuted:
      return "refuted";
    case Status::unknown:
      return "unknown";
  }
  return "unknown";
}

Status conjunction(std::initializer_list<Status> parts) noexcept {
  bool unsure = false;
  for (auto s : parts) {
    if (s == Status::refuted) return Status::refuted;
    if (s == Status::unknown) unsure = true;
  }
  return unsure ? Status::unknown : Status::proven;
}

const Binding& binding(const std::vector<Binding>& bs, std::string_view name) {
  for (const auto& b : bs) {
    if (b.name == name) return b;
  }
  throw Error("no binding named " + std::string(name));
}

}  // namespace culab
