#pragma once

// Model files, reports and search specs in one JSON notation. Finite tables
// use 0/1 rows for the order and index rows for addition; ∞ is written as
// the string "inf" in value positions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "culab/glimm.hpp"
#include "culab/model.hpp"
#include "culab/search.hpp"
#include "culab/softness.hpp"
#include "culab/structure.hpp"

namespace culab {

using Json = nlohmann::ordered_json;

struct ModelFile {
  CuModel model;
  std::optional<Scale> scale;
};

// Throws ParseError for malformed documents and ValidationError for law
// violations.
ModelFile parse_model(const Json& doc);
ModelFile parse_model_text(const std::string& text);
ModelFile parse_model_file(const std::string& path);

// Two-space indentation with arrays of scalars kept on one line, so matrix
// rows stay readable and diffable.
std::string dump_pretty(const Json& doc);

Json serialize_model(const CuModel& model, const std::optional<Scale>& scale = std::nullopt);
std::string serialize_model_text(const CuModel& model, const std::optional<Scale>& scale = std::nullopt);

// Same family and the same presentation data. Finite models compare by table.
bool same_presentation(const CuModel& a, const CuModel& b);

Json element_json(const CuModel& model, const Element& x);

struct CheckedVerdict {
  Verdict verdict;
  // Problems the independent checker found; empty means re-verified.
  std::vector<std::string> problems;
};

struct ElementReport {
  Element x;
  bool compact = false;
  std::vector<std::pair<std::string, CheckedVerdict>> flags;
};

struct EquivalenceSummary {
  std::string name;
  bool agree = true;
  std::string note;
  std::vector<std::pair<std::string, Status>> conditions;
};

struct Report {
  CuModel model;
  Scale scale;
  Budget budget;
  std::vector<ElementReport> elements;
  // Model-level predicates under their search-target names, plus
  // k_omega_divisible:3.
  std::vector<std::pair<std::string, CheckedVerdict>> predicates;
  std::vector<EquivalenceSummary> equivalences;

  const CheckedVerdict& predicate(const std::string& name) const;
  // Every re-check problem, prefixed by where it occurred.
  std::vector<std::string> problems() const;
};

// Elements are the whole carrier for finite models and the sample grid
// otherwise.
Report build_report(const CuModel& model, const Scale& scale, const Budget& budget = {});

Json verdict_json(const CuModel& model, const Verdict& v);
Json report_json(const Report& r);
std::string report_text(const Report& r);

// {"min_size", "max_size", "required_axioms", "target", "limit", "jobs"}; every key is
// optional.
SearchSpec parse_search_spec(const Json& doc);
Json search_json(const std::vector<SearchResult>& results);
std::string search_text(const std::vector<SearchResult>& results);

Axiom parse_axiom(const std::string& name);

}  // namespace culab
