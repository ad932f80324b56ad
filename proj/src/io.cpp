#include "culab/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "culab/certify.hpp"

namespace culab {

namespace {

std::string where(const std::string& ctx, const std::string& msg) { return ctx.empty() ? msg : ctx + ": " + msg; }

std::uint64_t as_count(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ParseError(where(ctx, "expected a non-negative integer"));
  return j.get<std::uint64_t>();
}

const Json& field(const Json& doc, const char* key, const std::string& ctx) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(where(ctx, std::string("missing field \"") + key + "\""));
  return *it;
}

// Square matrix of non-negative integers; a 0/1 matrix also accepts booleans.
std::vector<std::uint64_t> matrix(const Json& j, std::size_t n, const std::string& name) {
  if (!j.is_array()) throw ParseError(name + ": expected an array of rows");
  if (j.size() != n) {
    throw ParseError(name + ": expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
  }
  std::vector<std::uint64_t> out;
  out.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(name + " row " + std::to_string(r) + ": expected " + std::to_string(n) + " entries, got " +
                       (row.is_array() ? std::to_string(row.size()) : std::string("a non-array")));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = row[c];
      if (v.is_boolean()) {
        out.push_back(v.get<bool>() ? 1 : 0);
      } else {
        out.push_back(as_count(v, name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> bool_matrix(const Json& j, std::size_t n, const std::string& name) {
  std::vector<std::uint8_t> out;
  const auto raw = matrix(j, n, name);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] > 1) {
      throw ParseError(name + "[" + std::to_string(k / n) + "][" + std::to_string(k % n) + "]: expected 0 or 1");
    }
    out.push_back(static_cast<std::uint8_t>(raw[k]));
  }
  return out;
}

std::vector<std::string> names(const Json& doc, std::size_t n, const char* key, const std::string& ctx) {
  std::vector<std::string> out;
  auto it = doc.find(key);
  if (it == doc.end()) {
    for (std::size_t k = 0; k < n; ++k) out.push_back(std::to_string(k));
    return out;
  }
  if (!it->is_array() || it->size() != n) {
    throw ParseError(where(ctx, std::string(key) + ": expected " + std::to_string(n) + " names"));
  }
  for (const auto& s : *it) {
    if (!s.is_string()) throw ParseError(where(ctx, std::string(key) + ": names must be strings"));
    out.push_back(s.get<std::string>());
  }
  return out;
}

CuModel parse_family(const Json& doc, const std::string& ctx, const Json** scale) {
  if (!doc.is_object()) throw ParseError(where(ctx, "expected an object"));
  const auto& kind_j = field(doc, "kind", ctx);
  if (!kind_j.is_string()) throw ParseError(where(ctx, "\"kind\" must be a string"));
  const auto kind = kind_j.get<std::string>();
  if (auto it = doc.find("scale"); it != doc.end()) {
    if ((kind != "finite-table" && kind != "e-k") || !scale) {
      throw ParseError(where(ctx, "a scale is only supported on a top-level finite-table or e-k"));
    }
    *scale = &*it;
  }
  try {
    if (kind == "finite-table") {
      const auto n = static_cast<std::size_t>(as_count(field(doc, "size", ctx), where(ctx, "size")));
      if (n == 0) throw ParseError(where(ctx, "size must be at least 1"));
      FiniteTable t;
      t.n = n;
      t.names = names(doc, n, "names", ctx);
      t.leq = bool_matrix(field(doc, "leq", ctx), n, "leq");
      for (auto v : matrix(field(doc, "add", ctx), n, "add")) {
        t.add.push_back(static_cast<Index>(std::min<std::uint64_t>(v, 0xffff)));
      }
      return finite_model(std::move(t));
    }
    if (kind == "nbar") return nbar();
    if (kind == "e-k") {
      const auto k = as_count(field(doc, "k", ctx), where(ctx, "k"));
      if (k < 1) throw ParseError(where(ctx, "k: expected at least 1"));
      return e_k(static_cast<unsigned>(k));
    }
    if (kind == "lsc") {
      const auto& sp = field(doc, "space", ctx);
      if (!sp.is_object()) throw ParseError(where(ctx, "space: expected an object"));
      const auto& pts = field(sp, "points", where(ctx, "space"));
      if (!pts.is_array()) throw ParseError(where(ctx, "space.points: expected an array"));
      Space s;
      s.points = names(sp, pts.size(), "points", ctx);
      s.leq = bool_matrix(field(sp, "leq", ctx), pts.size(), "space.leq");
      return lsc_model(std::move(s));
    }
    if (kind == "product") {
      const auto& fs = field(doc, "factors", ctx);
      if (!fs.is_array() || fs.empty()) throw ParseError(where(ctx, "factors: expected a non-empty array"));
      std::vector<CuModel> factors;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        factors.push_back(parse_family(fs[k], ctx + "factors[" + std::to_string(k) + "]", nullptr));
      }
      return product(std::span<const CuModel>(factors));
    }
  } catch (const NotT0& e) {
    throw ValidationError({std::string("space: ") + e.what()});
  }
  throw ParseError(where(ctx, "unknown kind \"" + kind + "\""));
}

Json value_json(const ExtNat& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json instance_json(const CuModel& m, const Instance& inst) {
  auto bindings = [&](const std::vector<Binding>& bs) {
    Json o = Json::object();
    for (const auto& b : bs) o[b.name] = b.is_count() ? Json(b.count()) : element_json(m, b.element());
    return o;
  };
  Json out = Json::object();
  out["given"] = bindings(inst.given);
  if (!inst.chosen.empty()) out["chosen"] = bindings(inst.chosen);
  return out;
}

Json checked_json(const CuModel& m, const CheckedVerdict& c) {
  Json out = verdict_json(m, c.verdict);
  if (!c.verdict.unknown()) out["verified"] = c.problems.empty();
  if (!c.problems.empty()) out["problems"] = c.problems;
  return out;
}

std::string bindings_text(const CuModel& m, const std::vector<Binding>& bs) {
  std::string s;
  for (const auto& b : bs) {
    if (!s.empty()) s += " ";
    s += b.name + "=" + (b.is_count() ? std::to_string(b.count()) : m.format(b.element()));
  }
  return s;
}

std::string verdict_line(const CuModel& m, const Verdict& v) {
  std::string s(to_string(v.status));
  std::string detail;
  if (v.refuted()) detail = bindings_text(m, v.certificate.given);
  if (!v.note.empty()) detail += (detail.empty() ? "" : "  ") + std::string("(") + v.note + ")";
  if (!detail.empty()) s += "  " + detail;
  return s;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string short_flag(const std::string& f) {
  if (f == "strongly_soft") return "strong";
  if (f == "weakly_soft") return "weak";
  if (f == "functionally_soft") return "functional";
  if (f == "purely_noncompact") return "pnc";
  return "wpnc";
}

void pretty(std::ostream& os, const Json& j, int depth) {
  const std::string in(2 * (depth + 1), ' '), out(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << in << Json(it.key()).dump() << ": ";
      pretty(os, it.value(), depth + 1);
    }
    os << "\n" << out << "}";
  } else if (j.is_array() && !j.empty()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      os << j.dump(-1, ' ', false, Json::error_handler_t::replace);
      return;
    }
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) os << ",\n";
      os << in;
      pretty(os, j[k], depth + 1);
    }
    os << "\n" << out << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string dump_pretty(const Json& doc) {
  std::ostringstream os;
  pretty(os, doc, 0);
  os << "\n";
  return os.str();
}

ModelFile parse_model(const Json& doc) {
  const Json* scale = nullptr;
  ModelFile out{parse_family(doc, "", &scale), std::nullopt};
  if (scale) {
    const auto n = out.model.size();
    if (!scale->is_array()) throw ParseError("scale: expected an index list");
    std::vector<bool> mask(n, false);
    for (const auto& i : *scale) {
      const auto k = as_count(i, "scale");
      if (k >= n) throw ParseError("scale: index " + std::to_string(k) + " out of range");
      mask[k] = true;
    }
    auto s = Scale::from_mask(out.model, std::move(mask));
    if (!is_scale(out.model, s)) throw ValidationError({"scale: not hereditary, or not closed under sups"});
    out.scale = std::move(s);
  }
  return out;
}

ModelFile parse_model_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("syntax: ") + e.what());
  }
  return parse_model(doc);
}

ModelFile parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_text(ss.str());
}

Json serialize_model(const CuModel& m, const std::optional<Scale>& scale) {
  Json out = Json::object();
  if (m.kind() == ModelKind::e_k) {
    out["kind"] = "e-k";
    out["k"] = m.size() - 2;
  } else if (m.kind() == ModelKind::nbar) {
    out["kind"] = "nbar";
  } else if (m.kind() == ModelKind::lsc) {
    const auto& s = m.space();
    Json rows = Json::array();
    for (std::size_t p = 0; p < s.size(); ++p) {
      Json row = Json::array();
      for (std::size_t q = 0; q < s.size(); ++q) row.push_back(s.le(p, q) ? 1 : 0);
      rows.push_back(std::move(row));
    }
    out["kind"] = "lsc";
    out["space"] = {{"points", s.points}, {"leq", std::move(rows)}};
  } else if (!m.is_finite()) {
    out["kind"] = "product";
    Json fs = Json::array();
    for (const auto& f : m.factors()) fs.push_back(serialize_model(f));
    out["factors"] = std::move(fs);
  } else {
    const auto& t = m.table();
    Json leq = Json::array(), add = Json::array();
    for (std::size_t i = 0; i < t.n; ++i) {
      Json lr = Json::array(), ar = Json::array();
      for (std::size_t j = 0; j < t.n; ++j) {
        lr.push_back(t.le(i, j) ? 1 : 0);
        ar.push_back(t.sum(i, j));
      }
      leq.push_back(std::move(lr));
      add.push_back(std::move(ar));
    }
    out["kind"] = "finite-table";
    out["size"] = t.n;
    out["names"] = t.names;
    out["leq"] = std::move(leq);
    out["add"] = std::move(add);
  }
  if (scale && scale->form() != Scale::Form::whole) {
    if (!m.is_finite() || (out["kind"] != "finite-table" && out["kind"] != "e-k")) {
      throw UnsupportedModel("scales serialize on finite tables and E_k only");
    }
    Json idx = Json::array();
    for (const auto& x : m.elements()) {
      if (scale->contains(m, x)) idx.push_back(x.index());
    }
    out["scale"] = std::move(idx);
  }
  return out;
}

std::string serialize_model_text(const CuModel& m, const std::optional<Scale>& scale) {
  return dump_pretty(serialize_model(m, scale));
}

bool same_presentation(const CuModel& a, const CuModel& b) {
  if (a.is_finite() != b.is_finite()) return false;
  if (a.is_finite()) return a.table() == b.table();
  const bool la = a.kind() == ModelKind::lsc || a.kind() == ModelKind::nbar;
  const bool lb = b.kind() == ModelKind::lsc || b.kind() == ModelKind::nbar;
  if (la || lb) return a.kind() == b.kind() && a.space() == b.space();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (fa.size() != fb.size()) return false;
  for (std::size_t k = 0; k < fa.size(); ++k) {
    if (!same_presentation(fa[k], fb[k])) return false;
  }
  return true;
}

Json element_json(const CuModel& m, const Element& x) {
  if (m.is_finite()) return m.table().names[x.index()];
  if (m.kind() != ModelKind::lsc && m.kind() != ModelKind::nbar) {
    Json parts = Json::array();
    for (std::size_t f = 0; f < m.factors().size(); ++f) parts.push_back(element_json(m.factors()[f], m.component(x, f)));
    return parts;
  }
  if (x.payload().size() == 1) return value_json(x.payload()[0]);
  Json vals = Json::array();
  for (const auto& v : x.payload()) vals.push_back(value_json(v));
  return vals;
}

Json verdict_json(const CuModel& m, const Verdict& v) {
  Json out = Json::object();
  out["status"] = std::string(to_string(v.status));
  if (!v.note.empty()) out["note"] = v.note;
  if (v.proven() && !v.witness.empty()) {
    Json w = Json::array();
    for (const auto& inst : v.witness) w.push_back(instance_json(m, inst));
    out["witness"] = std::move(w);
  }
  if (v.refuted()) out["certificate"] = instance_json(m, v.certificate);
  return out;
}

const CheckedVerdict& Report::predicate(const std::string& name) const {
  for (const auto& [n, v] : predicates) {
    if (n == name) return v;
  }
  throw Error("no predicate " + name + " in the report");
}

std::vector<std::string> Report::problems() const {
  std::vector<std::string> out;
  for (const auto& e : elements) {
    for (const auto& [name, c] : e.flags) {
      for (const auto& p : c.problems) out.push_back("element " + model.format(e.x) + ": " + p);
    }
  }
  for (const auto& [name, c] : predicates) {
    for (const auto& p : c.problems) out.push_back(p);
  }
  return out;
}

Report build_report(const CuModel& model, const Scale& scale, const Budget& budget) {
  Report r{model, scale, budget, {}, {}, {}};
  for (const auto& x : model.is_finite() ? model.elements() : model.sample(budget.grid)) {
    ElementReport er{x, model.is_compact(x), {}};
    const auto s = classify_softness(model, x, budget);
    for (const auto& [name, v] : flags(s)) {
      er.flags.emplace_back(name, CheckedVerdict{*v, certify::element_flag(model, name, x, *v)});
    }
    r.elements.push_back(std::move(er));
  }
  auto add = [&](const std::string& name, Verdict v) {
    auto problems = certify::model_predicate(model, scale, name, v);
    r.predicates.emplace_back(name, CheckedVerdict{std::move(v), std::move(problems)});
  };
  add("O5", check_axiom(model, Axiom::o5, budget));
  add("O6", check_axiom(model, Axiom::o6, budget));
  add("O7", check_axiom(model, Axiom::o7, budget));
  auto fin = classify_finiteness(model, budget);
  add("stably_finite", std::move(fin.stably_finite));
  add("residually_stably_finite", std::move(fin.residually_stably_finite));
  add("weak_cancellation", std::move(fin.weak_cancellation));
  auto div = classify_divisibility(model, scale, budget, {2, 3});
  add("two_omega_divisible", std::move(div.two_omega_divisible));
  add("k_omega_divisible:3", std::move(div.k_omega_divisible.at(3)));
  add("weakly_divisible", std::move(div.weakly_two_omega_divisible));
  add("ideal_filtered", is_ideal_filtered(model, scale, budget));
  add("property_V", has_property_V(model, scale, budget));
  add("abundance", has_abundance_soft(model, scale, budget));
  add("2_splitting", has_2_splitting(model, scale, budget));
  add("soft_dominators", has_soft_dominators(model, scale, budget));
  add("soft_divisors", has_soft_divisors(model, 2, budget));

  auto summarize = [&](std::string name, const EquivalenceReport& e) {
    EquivalenceSummary s{std::move(name), e.agree, e.note, {}};
    for (const auto& [c, v] : e.conditions) s.conditions.emplace_back(c, v.status);
    r.equivalences.push_back(std::move(s));
  };
  summarize("cu_equiv", cu_equiv(model, scale, budget));
  summarize("char_div", char_div_equiv(model, scale, budget));
  return r;
}

Json report_json(const Report& r) {
  Json out = Json::object();
  out["model"] = serialize_model(r.model, r.model.is_finite() && r.model.kind() != ModelKind::e_k
                                              ? std::optional<Scale>(r.scale)
                                              : std::nullopt);
  out["budget"] = {{"n", r.budget.n}, {"basis", r.budget.basis}, {"grid", r.budget.grid}};
  Json els = Json::array();
  for (const auto& e : r.elements) {
    Json o = Json::object();
    o["element"] = element_json(r.model, e.x);
    o["compact"] = e.compact;
    Json fl = Json::object();
    for (const auto& [name, c] : e.flags) fl[name] = checked_json(r.model, c);
    o["flags"] = std::move(fl);
    els.push_back(std::move(o));
  }
  out["elements"] = std::move(els);
  Json preds = Json::object();
  for (const auto& [name, c] : r.predicates) preds[name] = checked_json(r.model, c);
  out["predicates"] = std::move(preds);
  Json eqs = Json::object();
  for (const auto& e : r.equivalences) {
    Json conds = Json::object();
    for (const auto& [c, s] : e.conditions) conds[c] = std::string(to_string(s));
    Json o = {{"agree", e.agree}, {"conditions", std::move(conds)}};
    if (!e.note.empty()) o["note"] = e.note;
    eqs[e.name] = std::move(o);
  }
  out["equivalences"] = std::move(eqs);
  out["verified"] = r.problems().empty();
  return out;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  const auto& m = r.model;
  os << "model   " << to_string(m.kind());
  if (m.is_finite()) os << ", " << m.size() << " elements";
  os << "\nbudget  n=" << r.budget.n << " basis=" << r.budget.basis << " grid=" << r.budget.grid << "\n";
  if (!m.is_finite()) os << "elements are the sample grid at level " << r.budget.grid << "\n";

  std::size_t w = 8;
  for (const auto& e : r.elements) w = std::max(w, m.format(e.x).size() + 2);
  std::string head = pad("element", w) + pad("compact", 9);
  if (!r.elements.empty()) {
    for (const auto& [name, c] : r.elements.front().flags) head += pad(short_flag(name), 12);
  }
  while (!head.empty() && head.back() == ' ') head.pop_back();
  os << "\n" << head << "\n";
  for (const auto& e : r.elements) {
    os << pad(m.format(e.x), w) << pad(e.compact ? "yes" : "no", 9);
    std::string line;
    for (const auto& [name, c] : e.flags) line += pad(std::string(to_string(c.verdict.status)), 12);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }

  os << "\n";
  for (const auto& [name, c] : r.predicates) {
    os << pad(name, 26) << verdict_line(m, c.verdict) << "\n";
  }
  for (const auto& e : r.equivalences) {
    os << "\n" << e.name << ": " << (e.agree ? "conditions agree" : "conditions DISAGREE") << "\n";
    for (const auto& [c, s] : e.conditions) os << "  " << pad(c, 58) << to_string(s) << "\n";
    if (!e.note.empty()) os << "  " << e.note << "\n";
  }
  const auto problems = r.problems();
  os << "\n";
  if (problems.empty()) {
    os << "all witnesses and certificates re-verified\n";
  } else {
    os << problems.size() << " re-check problems\n";
    for (const auto& p : problems) os << "  " << p << "\n";
  }
  return os.str();
}

Axiom parse_axiom(const std::string& name) {
  if (name == "O5" || name == "o5") return Axiom::o5;
  if (name == "O6" || name == "o6") return Axiom::o6;
  if (name == "O7" || name == "o7") return Axiom::o7;
  throw ParseError("unknown axiom \"" + name + "\"");
}

SearchSpec parse_search_spec(const Json& doc) {
  if (!doc.is_object()) throw ParseError("search spec: expected an object");
  SearchSpec s;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const auto& k = it.key();
    const auto& v = it.value();
    if (k == "max_size") {
      s.max_size = as_count(v, k);
    } else if (k == "min_size") {
      s.min_size = as_count(v, k);
    } else if (k == "limit") {
      s.limit = as_count(v, k);
    } else if (k == "jobs") {
      s.jobs = std::max<std::uint64_t>(as_count(v, k), 1);
    } else if (k == "target") {
      if (!v.is_string()) throw ParseError("target: expected a string");
      s.target = v.get<std::string>();
    } else if (k == "required_axioms") {
      if (!v.is_array()) throw ParseError("required_axioms: expected a list");
      for (const auto& a : v) {
        if (!a.is_string()) throw ParseError("required_axioms: expected axiom names");
        s.required_axioms.push_back(parse_axiom(a.get<std::string>()));
      }
    } else {
      throw ParseError("search spec: unknown key \"" + k + "\"");
    }
  }
  Target::parse(s.target);
  return s;
}

Json search_json(const std::vector<SearchResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json o = Json::object();
    o["model"] = serialize_model(r.model);
    Json cls = Json::object();
    for (const auto& [name, s] : r.classification) cls[name] = std::string(to_string(s));
    o["classification"] = std::move(cls);
    Json ex = Json::object();
    for (const auto& [name, v] : r.extracts) ex[name] = verdict_json(r.model, v);
    o["target"] = std::move(ex);
    out.push_back(std::move(o));
  }
  return out;
}

std::string search_text(const std::vector<SearchResult>& results) {
  std::ostringstream os;
  os << results.size() << (results.size() == 1 ? " model\n" : " models\n");
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    const auto& t = r.canonical;
    os << "\n#" << k + 1 << "  size " << t.n << "\n  leq ";
    for (std::size_t i = 0; i < t.n; ++i) {
      if (i) os << " ";
      for (std::size_t j = 0; j < t.n; ++j) os << (t.le(i, j) ? '1' : '0');
    }
    os << "\n  add ";
    for (std::size_t i = 0; i < t.n; ++i) {
      if (i) os << " ";
      for (std::size_t j = 0; j < t.n; ++j) os << t.sum(i, j) << (j + 1 < t.n ? "," : "");
    }
    os << "\n";
    std::string line;
    for (const auto& [name, s] : r.classification) {
      if (s == Status::proven) line += (line.empty() ? "" : " ") + name;
    }
    os << "  proven: " << (line.empty() ? "-" : line) << "\n";
    for (const auto& [name, v] : r.extracts) os << "  " << pad(name, 24) << verdict_line(r.model, v) << "\n";
  }
  return os.str();
}

}  // namespace culab
