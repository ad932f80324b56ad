#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "culab/model.hpp"

namespace culab {

enum class Status { proven, refuted, unknown };

std::string_view to_string(Status s) noexcept;

// A named value in a witness or certificate: an element or a multiplicity.
template <class V>
struct BasicBinding {
  std::string name;
  std::variant<V, std::uint64_t> value;

  bool is_count() const { return std::holds_alternative<std::uint64_t>(value); }
  const V& element() const { return std::get<V>(value); }
  std::uint64_t count() const { return std::get<std::uint64_t>(value); }
};

// One instantiation of a universally quantified statement together with
// the existential choices made for it.
template <class V>
struct BasicInstance {
  std::vector<BasicBinding<V>> given;
  std::vector<BasicBinding<V>> chosen;
};

// Proven carries one instance per checked instantiation (with its witness),
// Refuted carries the least failing instantiation, Unknown carries a note.
template <class V>
struct BasicVerdict {
  Status status = Status::unknown;
  std::vector<BasicInstance<V>> witness;
  BasicInstance<V> certificate;
  std::string note;

  bool proven() const { return status == Status::proven; }
  bool refuted() const { return status == Status::refuted; }
  bool unknown() const { return status == Status::unknown; }

  static BasicVerdict make_proven(std::vector<BasicInstance<V>> w = {}, std::string note = {}) {
    return {Status::proven, std::move(w), {}, std::move(note)};
  }
  static BasicVerdict make_refuted(BasicInstance<V> c, std::string note = {}) {
    return {Status::refuted, {}, std::move(c), std::move(note)};
  }
  static BasicVerdict make_unknown(std::string note) { return {Status::unknown, {}, {}, std::move(note)}; }
};

using Binding = BasicBinding<Element>;
using Instance = BasicInstance<Element>;
using Verdict = BasicVerdict<Element>;

// Converts a verdict over raw values (indices, payloads) into handles.
template <class V, class Lift>
Verdict lift_verdict(const BasicVerdict<V>& v, Lift lift) {
  auto conv_b = [&](const BasicBinding<V>& b) {
    Binding out{b.name, std::uint64_t{0}};
    if (b.is_count()) {
      out.value = b.count();
    } else {
      out.value = lift(b.element());
    }
    return out;
  };
  auto conv_i = [&](const BasicInstance<V>& i) {
    Instance out;
    for (const auto& b : i.given) out.given.push_back(conv_b(b));
    for (const auto& b : i.chosen) out.chosen.push_back(conv_b(b));
    return out;
  };
  Verdict out;
  out.status = v.status;
  out.note = v.note;
  for (const auto& i : v.witness) out.witness.push_back(conv_i(i));
  out.certificate = conv_i(v.certificate);
  return out;
}

// Conjunction of verdicts: first Refuted wins, else any Unknown, else Proven.
Status conjunction(std::initializer_list<Status> parts) noexcept;

// Looks up a named binding in an instance; throws if absent.
const Binding& binding(const std::vector<Binding>& bs, std::string_view name);

}  // namespace culab
