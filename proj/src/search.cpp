#include "culab/search.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <numeric>
#include <set>

#include "culab/glimm.hpp"
#include "culab/softness.hpp"
#include "parallel.hpp"

namespace culab {

namespace {

using Perm = std::vector<std::size_t>;

std::vector<std::uint8_t> permute_leq(const std::vector<std::uint8_t>& leq, std::size_t n, const Perm& p) {
  std::vector<std::uint8_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[p[i] * n + p[j]] = leq[i * n + j];
  }
  return out;
}

std::vector<Index> permute_add(const std::vector<Index>& add, std::size_t n, const Perm& p) {
  std::vector<Index> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[p[i] * n + p[j]] = static_cast<Index>(p[add[i * n + j]]);
  }
  return out;
}

// Permutations of {0..n-1} fixing 0, identity first.
std::vector<Perm> zero_fixing_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  if (n == 0) return {p};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

struct Poset {
  std::vector<std::uint8_t> leq;
  std::vector<Perm> automorphisms;
};

// Partial orders on {0..n-1} with 0 least, one per isomorphism class, each
// lexicographically least among its relabelings.
std::vector<Poset> canonical_posets(std::size_t n) {
  const auto perms = zero_fixing_perms(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
    leq[0 * n + i] = 1;
  }
  std::vector<Poset> out;
  auto transitive = [&] {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq[a * n + b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[b * n + c] && !leq[a * n + c]) return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      if (!transitive()) return;
      Poset p{leq, {}};
      for (const auto& perm : perms) {
        auto img = permute_leq(leq, n, perm);
        if (img < leq) return;
        if (img == leq) p.automorphisms.push_back(perm);
      }
      out.push_back(std::move(p));
      return;
    }
    const auto [i, j] = pairs[k];
    for (int rel = 0; rel < 3; ++rel) {
      leq[i * n + j] = rel == 1;
      leq[j * n + i] = rel == 2;
      self(self, k + 1);
    }
    leq[i * n + j] = leq[j * n + i] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Poset& a, const Poset& b) { return a.leq < b.leq; });
  return out;
}

// Canonical addition tables over one canonical poset.
std::vector<FiniteTable> tables_over(const Poset& poset, std::size_t n) {
  constexpr int unset = -1;
  const auto& leq = poset.leq;
  auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };
  std::vector<int> add(n * n, unset);
  for (std::size_t j = 0; j < n; ++j) add[j] = add[j * n] = static_cast<int>(j);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  auto consistent = [&] {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        const int ac = add[a * n + c];
        if (ac == unset) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (le(a, b)) {
            const int bc = add[b * n + c];
            if (bc != unset && !le(ac, bc)) return false;
          }
          const int cb = add[c * n + b];
          if (cb == unset) continue;
          const int l = add[ac * n + b];
          const int r = add[a * n + cb];
          if (l != unset && r != unset && l != r) return false;
        }
      }
    }
    return true;
  };
  std::vector<FiniteTable> out;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      std::vector<Index> tab(add.begin(), add.end());
      for (const auto& perm : poset.automorphisms) {
        if (permute_add(tab, n, perm) < tab) return;
      }
      FiniteTable t;
      t.n = n;
      for (std::size_t i = 0; i < n; ++i) t.names.push_back(std::to_string(i));
      t.leq = leq;
      t.add = std::move(tab);
      out.push_back(std::move(t));
      return;
    }
    const auto [i, j] = cells[k];
    for (std::size_t s = 0; s < n; ++s) {
      if (!le(i, s) || !le(j, s)) continue;
      add[i * n + j] = add[j * n + i] = static_cast<int>(s);
      if (consistent()) self(self, k + 1);
    }
    add[i * n + j] = add[j * n + i] = unset;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

FiniteTable canonical_form(const FiniteTable& table) {
  const auto n = table.n;
  FiniteTable best;
  bool first = true;
  for (const auto& perm : zero_fixing_perms(n)) {
    auto leq = permute_leq(table.leq, n, perm);
    if (!first && leq > best.leq) continue;
    auto add = permute_add(table.add, n, perm);
    if (first || leq < best.leq || add < best.add) {
      best.leq = std::move(leq);
      best.add = std::move(add);
      first = false;
    }
  }
  best.n = n;
  for (std::size_t i = 0; i < n; ++i) best.names.push_back(std::to_string(i));
  return best;
}

FiniteTable canonical_form(const CuModel& model) { return canonical_form(model.table()); }

std::vector<CuModel> enumerate_models(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw Error("enumerate_models needs n >= 1");
  const auto posets = canonical_posets(n);
  std::vector<std::vector<CuModel>> per(posets.size());
  detail::parallel_for(posets.size(), options.jobs, [&](std::size_t k) {
    for (auto& t : tables_over(posets[k], n)) {
      auto m = finite_model(std::move(t));
      bool keep = true;
      for (auto a : options.required_axioms) keep = keep && check_axiom(m, a).proven();
      if (keep) per[k].push_back(std::move(m));
    }
  });
  std::vector<CuModel> out;
  for (auto& v : per) {
    for (auto& m : v) out.push_back(std::move(m));
  }
  return out;
}

// --- target expressions ---------------------------------------------------

struct Target::Node {
  enum class Kind { literal, name, negation, conjunction, disjunction } kind = Kind::literal;
  bool value = false;
  std::string name;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a{
      {"two_omega_divisible", "two_omega_divisible"},
      {"weakly_divisible", "weakly_divisible"},
      {"weakly_two_omega_divisible", "weakly_divisible"},
      {"ideal_filtered", "ideal_filtered"},
      {"property_V", "property_V"},
      {"abundance", "abundance"},
      {"abundance_soft", "abundance"},
      {"2_splitting", "2_splitting"},
      {"hereditary_2_splitting", "2_splitting"},
      {"soft_dominators", "soft_dominators"},
      {"soft_divisor_all", "soft_dominators"},
      {"soft_divisors", "soft_divisors"},
      {"stably_finite", "stably_finite"},
      {"residually_stably_finite", "residually_stably_finite"},
      {"weak_cancellation", "weak_cancellation"},
      {"O5", "O5"},
      {"O6", "O6"},
      {"O7", "O7"},
  };
  return a;
}

bool is_flag(const std::string& s) {
  const auto& f = Classifier::element_flags();
  return std::find(f.begin(), f.end(), s) != f.end();
}

class Parser {
 public:
  explicit Parser(const std::string& s) { tokenize(s); }

  std::shared_ptr<const Target::Node> parse() {
    auto e = expr();
    if (pos_ != toks_.size()) throw ParseError("unexpected token '" + toks_[pos_] + "' in target");
    return e;
  }

 private:
  using NodeP = std::shared_ptr<const Target::Node>;
  using Kind = Target::Node::Kind;

  void tokenize(const std::string& s) {
    std::size_t i = 0;
    auto starts = [&](const char* lit) { return s.compare(i, std::char_traits<char>::length(lit), lit) == 0; };
    while (i < s.size()) {
      const unsigned char c = s[i];
      if (std::isspace(c)) {
        ++i;
      } else if (starts("∧") || starts("&&")) {
        toks_.emplace_back("&");
        i += starts("∧") ? std::char_traits<char>::length("∧") : 2;
      } else if (starts("∨") || starts("||")) {
        toks_.emplace_back("|");
        i += starts("∨") ? std::char_traits<char>::length("∨") : 2;
      } else if (starts("¬")) {
        toks_.emplace_back("!");
        i += std::char_traits<char>::length("¬");
      } else if (c == '&' || c == '|' || c == '!' || c == '(' || c == ')') {
        toks_.emplace_back(1, static_cast<char>(c));
        ++i;
      } else if (std::isalnum(c) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        auto w = s.substr(i, j - i);
        if (w == "and") w = "&";
        if (w == "or") w = "|";
        if (w == "not") w = "!";
        toks_.push_back(std::move(w));
        i = j;
      } else {
        throw ParseError("unexpected character in target at offset " + std::to_string(i));
      }
    }
  }

  bool accept(const std::string& t) {
    if (pos_ < toks_.size() && toks_[pos_] == t) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& t) {
    if (!accept(t)) throw ParseError("expected '" + t + "' in target");
  }

  NodeP fold(Kind k, std::vector<NodeP> kids) {
    if (kids.size() == 1) return kids.front();
    auto n = std::make_shared<Target::Node>();
    n->kind = k;
    n->kids = std::move(kids);
    return n;
  }

  NodeP expr() {
    std::vector<NodeP> kids{term()};
    while (accept("|")) kids.push_back(term());
    return fold(Kind::disjunction, std::move(kids));
  }
  NodeP term() {
    std::vector<NodeP> kids{factor()};
    while (accept("&")) kids.push_back(factor());
    return fold(Kind::conjunction, std::move(kids));
  }
  NodeP factor() {
    if (accept("!")) {
      auto n = std::make_shared<Target::Node>();
      n->kind = Kind::negation;
      n->kids = {factor()};
      return n;
    }
    if (accept("(")) {
      auto e = expr();
      expect(")");
      return e;
    }
    if (pos_ >= toks_.size()) throw ParseError("target ends unexpectedly");
    const auto w = toks_[pos_++];
    auto n = std::make_shared<Target::Node>();
    if (w == "true" || w == "false") {
      n->value = w == "true";
      return n;
    }
    n->kind = Kind::name;
    if (w == "some" || w == "all") {
      expect("(");
      if (pos_ >= toks_.size() || !is_flag(toks_[pos_])) throw ParseError(w + "(...) needs an element flag");
      n->name = w + ":" + toks_[pos_++];
      expect(")");
      return n;
    }
    if (is_flag(w)) throw ParseError("element flag " + w + " needs some(...) or all(...)");
    auto it = aliases().find(w);
    if (it == aliases().end()) throw ParseError("unknown predicate '" + w + "' in target");
    n->name = it->second;
    return n;
  }

  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

bool eval(const Target::Node& n, const std::function<Status(const std::string&)>& lookup) {
  using Kind = Target::Node::Kind;
  switch (n.kind) {
    case Kind::literal:
      return n.value;
    case Kind::name:
      return lookup(n.name) == Status::proven;
    case Kind::negation:
      return !eval(*n.kids[0], lookup);
    case Kind::conjunction:
      return std::all_of(n.kids.begin(), n.kids.end(), [&](const auto& k) { return eval(*k, lookup); });
    case Kind::disjunction:
      return std::any_of(n.kids.begin(), n.kids.end(), [&](const auto& k) { return eval(*k, lookup); });
  }
  return false;
}

void collect(const Target::Node& n, std::set<std::string>& out) {
  if (n.kind == Target::Node::Kind::name) out.insert(n.name);
  for (const auto& k : n.kids) collect(*k, out);
}

}  // namespace

Target Target::parse(const std::string& text) {
  Target t;
  t.text_ = text;
  t.root_ = Parser(text).parse();
  return t;
}

std::vector<std::string> Target::names() const {
  std::set<std::string> s;
  collect(*root_, s);
  return {s.begin(), s.end()};
}

bool Target::evaluate(const std::function<Status(const std::string&)>& lookup) const {
  return eval(*root_, lookup);
}

// --- classification -------------------------------------------------------

Classifier::Classifier(CuModel model, Budget budget)
    : model_(std::move(model)), budget_(budget), scale_(Scale::whole(model_)) {}

const std::vector<std::string>& Classifier::model_predicates() {
  static const std::vector<std::string> p{"O5",
                                          "O6",
                                          "O7",
                                          "stably_finite",
                                          "residually_stably_finite",
                                          "weak_cancellation",
                                          "two_omega_divisible",
                                          "weakly_divisible",
                                          "ideal_filtered",
                                          "property_V",
                                          "abundance",
                                          "2_splitting",
                                          "soft_dominators",
                                          "soft_divisors"};
  return p;
}

const std::vector<std::string>& Classifier::element_flags() {
  static const std::vector<std::string> f{"strongly_soft", "weakly_soft", "functionally_soft", "purely_noncompact",
                                          "weakly_purely_noncompact"};
  return f;
}

const Verdict& Classifier::predicate(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) return it->second;
  const auto& m = model_;
  const auto& b = budget_;
  Verdict v;
  if (name == "O5") {
    v = check_axiom(m, Axiom::o5, b);
  } else if (name == "O6") {
    v = check_axiom(m, Axiom::o6, b);
  } else if (name == "O7") {
    v = check_axiom(m, Axiom::o7, b);
  } else if (name == "stably_finite" || name == "residually_stably_finite" || name == "weak_cancellation") {
    auto f = classify_finiteness(m, b);
    cache_["stably_finite"] = f.stably_finite;
    cache_["residually_stably_finite"] = f.residually_stably_finite;
    cache_["weak_cancellation"] = f.weak_cancellation;
    return cache_.at(name);
  } else if (name == "two_omega_divisible" || name == "weakly_divisible") {
    auto d = classify_divisibility(m, scale_, b, {});
    cache_["two_omega_divisible"] = d.two_omega_divisible;
    cache_["weakly_divisible"] = d.weakly_two_omega_divisible;
    return cache_.at(name);
  } else if (name == "ideal_filtered") {
    v = is_ideal_filtered(m, scale_, b);
  } else if (name == "property_V") {
    v = has_property_V(m, scale_, b);
  } else if (name == "abundance") {
    v = has_abundance_soft(m, scale_, b);
  } else if (name == "2_splitting") {
    v = has_2_splitting(m, scale_, b);
  } else if (name == "soft_dominators") {
    v = has_soft_dominators(m, scale_, b);
  } else if (name == "soft_divisors") {
    v = has_soft_divisors(m, 2, b);
  } else if (name.rfind("some:", 0) == 0 || name.rfind("all:", 0) == 0) {
    const bool some = name[0] == 's';
    const auto flag = name.substr(name.find(':') + 1);
    const auto idx = static_cast<std::size_t>(
        std::find(element_flags().begin(), element_flags().end(), flag) - element_flags().begin());
    bool unsure = false;
    std::optional<Element> hit;
    for (const auto& x : m.is_finite() ? m.elements() : m.sample(b.grid)) {
      const auto r = classify_softness(m, x, b);
      const auto s = flags(r)[idx].second->status;
      if (s == Status::unknown) unsure = true;
      if ((some && s == Status::proven) || (!some && s == Status::refuted)) {
        hit = x;
        break;
      }
    }
    Instance inst;
    if (hit) inst.given.push_back(Binding{"x", *hit});
    if (hit) {
      v = some ? Verdict::make_proven({inst}) : Verdict::make_refuted(inst);
    } else if (unsure) {
      v = Verdict::make_unknown("some element flag is undecided");
    } else {
      v = some ? Verdict::make_refuted({}) : Verdict::make_proven();
    }
  } else {
    throw Error("unknown predicate " + name);
  }
  return cache_.emplace(name, std::move(v)).first->second;
}

Status Classifier::status(const std::string& name) { return predicate(name).status; }

std::map<std::string, Status> Classifier::bundle() {
  std::map<std::string, Status> out;
  for (const auto& p : model_predicates()) out[p] = status(p);
  return out;
}

std::vector<SearchResult> hunt(const SearchSpec& spec) {
  if (spec.max_size == 0) throw Error("max_size must be at least 1");
  const auto target = Target::parse(spec.target);
  std::vector<SearchResult> out;
  for (std::size_t n = std::max<std::size_t>(spec.min_size, 1); n <= spec.max_size && out.size() < spec.limit; ++n) {
    const auto models = enumerate_models(n, {spec.required_axioms, spec.jobs});
    std::vector<std::optional<SearchResult>> hits(models.size());
    detail::parallel_for(models.size(), spec.jobs, [&](std::size_t k) {
      Classifier c(models[k], spec.budget);
      if (!target.evaluate([&](const std::string& p) { return c.status(p); })) return;
      SearchResult r;
      r.canonical = models[k].table();
      r.model = models[k];
      r.classification = c.bundle();
      for (const auto& p : target.names()) r.extracts.emplace_back(p, c.predicate(p));
      hits[k] = std::move(r);
    });
    for (auto& h : hits) {
      if (h && out.size() < spec.limit) out.push_back(std::move(*h));
    }
  }
  return out;
}

}  // namespace culab
