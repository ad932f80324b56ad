#include <doctest.h>

#include "culab/corpus.hpp"
#include "culab/io.hpp"

using namespace culab;

namespace {

std::string e2_text = R"({
  "kind": "finite-table",
  "size": 4,
  "names": ["0", "1", "2", "inf"],
  "leq": [[1,1,1,1],[0,1,1,1],[0,0,1,1],[0,0,0,1]],
  "add": [[0,1,2,3],[1,2,3,3],[2,3,3,3],[3,3,3,3]]
})";

}  // namespace

TEST_CASE("a written-out E_2 table") {
  const auto f = parse_model_text(e2_text);
  CHECK(f.model.size() == 4);
  CHECK(f.model.table().leq == e_k(2).table().leq);
  CHECK(f.model.table().add == e_k(2).table().add);
  CHECK_FALSE(f.scale.has_value());
}

TEST_CASE("malformed tables") {
  const std::string ragged = R"({"kind": "finite-table", "size": 3,
    "leq": [[1,1,1],[0,1,1],[0,0,1]],
    "add": [[0,1,2],[1,2,2],[2,2]]})";
  try {
    parse_model_text(ragged);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }

  const std::string not_least = R"({"kind": "finite-table", "size": 2,
    "leq": [[1,0],[1,1]],
    "add": [[0,1],[1,1]]})";
  try {
    parse_model_text(not_least);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    bool named = false;
    for (const auto& v : e.violations()) named = named || v.find("zero-least") != std::string::npos;
    CHECK(named);
  }

  CHECK_THROWS_AS(parse_model_text("{"), ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "moebius"})"), ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "e-k", "k": 0})"), ParseError);
  CHECK_THROWS_AS(parse_model_text(R"({"kind": "lsc", "space": {"points": ["a","b"], "leq": [[1,1],[1,1]]}})"),
                  ValidationError);
}

TEST_CASE("round trips") {
  for (const auto& m : corpus()) {
    const auto text = serialize_model_text(m.model);
    const auto back = parse_model_text(text);
    CHECK_MESSAGE(same_presentation(m.model, back.model), m.name);
    CHECK(serialize_model_text(back.model) == text);
  }
  const auto e2 = e_k(2);
  const auto scale = Scale::from_mask(e2, {true, true, true, false});
  const auto text = serialize_model_text(e2, scale);
  const auto back = parse_model_text(text);
  REQUIRE(back.scale.has_value());
  CHECK(back.scale->mask() == scale.mask());
}

TEST_CASE("scale entries are checked") {
  const std::string bad = R"({"kind": "e-k", "k": 2, "scale": [7]})";
  CHECK_THROWS_AS(parse_model_text(bad), ParseError);
  const std::string not_scale = R"({"kind": "e-k", "k": 2, "scale": [0]})";
  CHECK_THROWS_AS(parse_model_text(not_scale), ValidationError);
}

TEST_CASE("reports") {
  const auto e2 = e_k(2);
  const auto r = build_report(e2, Scale::whole(e2));
  CHECK(r.problems().empty());
  REQUIRE(r.elements.size() == 4);
  const auto& one = r.elements[1];
  auto flag = [&](const std::string& name) {
    for (const auto& [n, c] : one.flags) {
      if (n == name) return c.verdict.status;
    }
    return Status::unknown;
  };
  CHECK(flag("functionally_soft") == Status::proven);
  CHECK(flag("strongly_soft") == Status::refuted);
  CHECK(r.predicate("ideal_filtered").verdict.proven());
  CHECK(r.predicate("two_omega_divisible").verdict.refuted());

  const auto j = report_json(r);
  CHECK(j.contains("elements"));
  CHECK(report_text(r).find("functional") != std::string::npos);
}

TEST_CASE("search specs") {
  const auto spec = parse_search_spec(Json::parse(R"({"max_size": 3, "required_axioms": ["O5", "O7"],
    "target": "O6", "limit": 2})"));
  CHECK(spec.max_size == 3);
  CHECK(spec.required_axioms == std::vector<Axiom>{Axiom::o5, Axiom::o7});
  CHECK(spec.limit == 2);
  CHECK_THROWS_AS(parse_search_spec(Json::parse(R"({"required_axioms": ["O9"]})")), ParseError);
}
