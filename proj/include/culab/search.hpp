#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "culab/model.hpp"
#include "culab/structure.hpp"
#include "culab/verdict.hpp"

namespace culab {

// Lexicographically least (leq, add) pair over all relabelings that fix 0.
// Names are reset to "0".."n-1".
FiniteTable canonical_form(const CuModel& model);
FiniteTable canonical_form(const FiniteTable& table);

struct EnumerationOptions {
  std::vector<Axiom> required_axioms;
  std::size_t jobs = 1;
};

// Every positively ordered commutative monoid table of size n, once per
// isomorphism class, in a deterministic order. Each table is canonical.
std::vector<CuModel> enumerate_models(std::size_t n, const EnumerationOptions& options = {});

// A boolean expression over model predicates. Grammar:
//   expr := term ('|' term)*      term := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | 'true' | 'false' | name
//           | 'some(' flag ')' | 'all(' flag ')'
// `and`, `or`, `not` and the symbols ∧ ∨ ¬ are accepted as well. Model
// predicates: two_omega_divisible, weakly_divisible, ideal_filtered,
// property_V, abundance, 2_splitting, soft_dominators, soft_divisors,
// stably_finite, residually_stably_finite, weak_cancellation, O5, O6, O7.
// Element flags: strongly_soft, weakly_soft, functionally_soft,
// purely_noncompact, weakly_purely_noncompact.
//
// On finite models weak and strong softness both reduce to 2x = x, so a
// target separating them has no finite hits; an empty result there says
// nothing about the infinite case.
class Target {
 public:
  struct Node;

  static Target parse(const std::string& text);  // throws ParseError
  const std::string& text() const noexcept { return text_; }
  // Names of the model predicates and element flags the expression uses.
  std::vector<std::string> names() const;

  // `lookup` returns the status of a predicate; `some(f)` and `all(f)` are
  // passed as "some:f" and "all:f". Only proven counts as true.
  bool evaluate(const std::function<Status(const std::string&)>& lookup) const;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

// Lazily evaluates and memoizes predicates of one model over the full scale.
class Classifier {
 public:
  Classifier(CuModel model, Budget budget = {});

  const CuModel& model() const noexcept { return model_; }
  const Verdict& predicate(const std::string& name);
  Status status(const std::string& name);
  // Every model predicate, evaluated.
  std::map<std::string, Status> bundle();

  static const std::vector<std::string>& model_predicates();
  static const std::vector<std::string>& element_flags();

 private:
  CuModel model_;
  Budget budget_;
  Scale scale_;
  std::map<std::string, Verdict> cache_;
};

struct SearchSpec {
  // The one-element model satisfies every predicate and is skipped unless
  // min_size is 1.
  std::size_t min_size = 2;
  std::size_t max_size = 4;
  std::vector<Axiom> required_axioms;
  std::string target = "true";
  std::size_t limit = 100;
  std::size_t jobs = 1;
  Budget budget;
};

struct SearchResult {
  FiniteTable canonical;
  CuModel model;
  std::map<std::string, Status> classification;
  // Verdicts of the predicates named in the target.
  std::vector<std::pair<std::string, Verdict>> extracts;
};

std::vector<SearchResult> hunt(const SearchSpec& spec);

}  // namespace culab
