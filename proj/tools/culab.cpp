// Command-line driver: classify, check-axioms, quotients, verify, search.
//
// Exit codes: 0 success, 1 usage, 2 parse or validation error, 3 invariant
// violation reported by verify, 4 any other failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "culab/harness.hpp"
#include "culab/io.hpp"
#include "culab/search.hpp"

namespace {

using namespace culab;

enum Exit { ok = 0, usage = 1, bad_input = 2, violation = 3, failure = 4 };

struct Options {
  std::string model_path;
  std::string spec_path;
  bool json = false;
  Budget budget;
  std::size_t jobs = 1;
  // search overrides
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::size_t limit = 0;
  std::string target;
  std::vector<std::string> require;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << dump_pretty(j);
  } else {
    std::cout << text;
  }
}

Scale scale_of(const ModelFile& f) { return f.scale ? *f.scale : Scale::whole(f.model); }

int classify(const Options& o) {
  const auto f = parse_model_file(o.model_path);
  const auto r = build_report(f.model, scale_of(f), o.budget);
  emit(o, report_json(r), report_text(r));
  return ok;
}

int check_axioms(const Options& o) {
  const auto f = parse_model_file(o.model_path);
  Json j = Json::object();
  std::ostringstream os;
  for (auto a : {Axiom::o5, Axiom::o6, Axiom::o7}) {
    const auto v = check_axiom(f.model, a, o.budget);
    const std::string name(to_string(a));
    j[name] = verdict_json(f.model, v);
    os << name << "  " << to_string(v.status);
    if (v.refuted()) {
      for (const auto& b : v.certificate.given) os << " " << b.name << "=" << f.model.format(b.element());
    }
    if (!v.note.empty()) os << "  (" << v.note << ")";
    os << "\n";
  }
  emit(o, j, os.str());
  return ok;
}

int quotients(const Options& o) {
  const auto f = parse_model_file(o.model_path);
  const auto& m = f.model;
  Json list = Json::array();
  std::ostringstream os;
  const auto ideals = enumerate_ideals(m);
  os << ideals.size() << (ideals.size() == 1 ? " ideal\n" : " ideals\n");
  for (const auto& I : ideals) {
    const auto q = quotient(m, I);
    const auto& t = q.target();
    const auto fin = classify_finiteness(t, o.budget);
    Json lost = Json::array();
    std::vector<std::string> lost_text;
    for (const auto& x : m.is_finite() ? m.elements() : m.sample(o.budget.grid)) {
      const auto mapped = map_element(q, x, o.budget);
      for (const auto& fl : mapped.lost) {
        lost.push_back({{"element", element_json(m, x)}, {"flag", fl}});
        lost_text.push_back(m.format(x) + " " + fl);
      }
    }
    Json entry = Json::object();
    entry["generator"] = element_json(m, I.generator());
    entry["quotient"] = serialize_model(t);
    entry["stably_finite"] = std::string(to_string(fin.stably_finite.status));
    entry["lost_flags"] = std::move(lost);
    list.push_back(std::move(entry));

    os << "\nideal generated by " << m.format(I.generator()) << "\n";
    os << "  quotient      " << to_string(t.kind());
    if (t.is_finite()) {
      os << ", " << t.size() << " elements:";
      for (const auto& y : t.elements()) os << " " << t.format(y);
    }
    os << "\n  stably finite " << to_string(fin.stably_finite.status) << "\n";
    os << "  lost flags    " << (lost_text.empty() ? "none" : "") << "\n";
    for (const auto& s : lost_text) os << "    " << s << "\n";
  }
  emit(o, list, os.str());
  return ok;
}

int verify(const Options& o) {
  const auto f = parse_model_file(o.model_path);
  const auto h = run_harness(f.model, scale_of(f), o.budget);
  emit(o, harness_json(h), harness_text(h));
  return h.ok() ? ok : violation;
}

int search(const Options& o) {
  SearchSpec spec;
  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in) throw ParseError("cannot read " + o.spec_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("syntax: ") + e.what());
    }
    spec = parse_search_spec(doc);
  }
  if (o.min_size) spec.min_size = o.min_size;
  if (o.max_size) spec.max_size = o.max_size;
  if (o.limit) spec.limit = o.limit;
  if (!o.target.empty()) spec.target = o.target;
  for (const auto& a : o.require) spec.required_axioms.push_back(parse_axiom(a));
  if (o.jobs > 1) spec.jobs = o.jobs;
  spec.budget = o.budget;
  Target::parse(spec.target);
  const auto results = hunt(spec);
  emit(o, search_json(results), search_text(results));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures and constructions for abstract Cuntz semigroups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget-n", o.budget.n, "cap on existential multiplicities for infinite models")
      ->capture_default_str();
  app.add_option("--budget-basis", o.budget.basis, "basis-chain depth for infinite models")->capture_default_str();
  app.add_option("--budget-grid", o.budget.grid, "largest finite coordinate in sampled grids")->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker threads for search")->capture_default_str();
  app.add_flag("--json", o.json, "machine-readable output");

  auto model_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("model", o.model_path, "model file")->required();
    c->add_flag("--json", o.json, "machine-readable output");
    return c;
  };
  auto* c_classify = model_cmd("classify", "full report: softness per element and all model predicates");
  auto* c_axioms = model_cmd("check-axioms", "verdicts for O5, O6 and O7");
  auto* c_quot = model_cmd("quotients", "ideals and a summary of each quotient");
  auto* c_verify = model_cmd("verify", "check every module invariant on the model");
  auto* c_search = app.add_subcommand("search", "enumerate small finite models matching a target");
  c_search->add_option("spec", o.spec_path, "search spec file");
  c_search->add_option("--min-size", o.min_size, "smallest carrier size (default 2)");
  c_search->add_option("--max-size", o.max_size, "largest carrier size");
  c_search->add_option("--limit", o.limit, "stop after this many hits");
  c_search->add_option("--target", o.target, "boolean expression over predicate names");
  c_search->add_option("--require", o.require, "axioms every model must satisfy (O5, O6, O7)")->delimiter(',');
  c_search->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*c_classify) return classify(o);
    if (*c_axioms) return check_axioms(o);
    if (*c_quot) return quotients(o);
    if (*c_verify) return verify(o);
    if (*c_search) return search(o);
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return bad_input;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return bad_input;
  } catch (const NotT0& e) {
    std::cerr << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return usage;
}
