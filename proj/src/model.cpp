#include "culab/model.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace culab {

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::finite_table: return "finite-table";
    case ModelKind::nbar: return "nbar";
    case ModelKind::e_k: return "e-k";
    case ModelKind::lsc: return "lsc";
    case ModelKind::product: return "product";
    case ModelKind::quotient: return "quotient";
  }
  return "unknown";
}

ChainDescriptor ChainDescriptor::stabilizing(std::vector<Element> terms) {
  if (terms.empty()) throw NotIncreasing("stabilizing chain needs at least one term");
  ChainDescriptor c;
  c.form_ = Form::stabilizing_list;
  c.terms_ = std::move(terms);
  return c;
}

ChainDescriptor ChainDescriptor::truncation(Element base) {
  ChainDescriptor c;
  c.form_ = Form::truncation_family;
  c.base_ = std::move(base);
  return c;
}

Element ChainDescriptor::term(const CuModel& model, std::size_t n) const {
  if (form_ == Form::stabilizing_list) return terms_[std::min(n, terms_.size() - 1)];
  return model.truncate(base_, ExtNat(n));
}

namespace detail {

namespace {
std::atomic<ModelId> next_id{1};
}

ModelImpl::ModelImpl(ModelKind kind) : id_(next_id.fetch_add(1)), kind_(kind) {}

namespace {

class FiniteImpl final : public ModelImpl {
 public:
  FiniteImpl(FiniteTable t, ModelKind kind) : ModelImpl(kind), t_(std::move(t)) {
    const auto n = t_.n;
    omega_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t m = x;
      // n·x is increasing, so it stabilizes within n steps.
      for (std::size_t step = 0; step <= n; ++step) {
        const std::size_t next = t_.sum(m, x);
        if (next == m) break;
        m = next;
      }
      omega_[x] = static_cast<Index>(m);
    }
    top_ = 0;
    for (std::size_t x = 1; x < n; ++x) top_ = t_.sum(top_, x);
  }

  const FiniteTable& table() const { return t_; }

  bool is_finite() const override { return true; }
  std::size_t arity() const override { return 1; }
  bool valid(PayloadView x) const override {
    return x.size() == 1 && x[0].is_finite() && x[0].value() < t_.n;
  }
  bool leq(PayloadView x, PayloadView y) const override { return t_.le(i(x), i(y)); }
  Payload add(PayloadView x, PayloadView y) const override { return {ExtNat(t_.sum(i(x), i(y)))}; }
  bool way_below(PayloadView x, PayloadView y) const override { return leq(x, y); }
  Payload omega(PayloadView x) const override { return {ExtNat(omega_[i(x)])}; }
  Payload zero() const override { return {ExtNat(0)}; }
  Payload top() const override { return {ExtNat(top_)}; }
  Payload truncate(PayloadView x, ExtNat) const override { return {x.begin(), x.end()}; }
  ExtNat level(PayloadView) const override { return ExtNat(0); }
  std::vector<Payload> grid(ExtNat) const override {
    std::vector<Payload> out;
    out.reserve(t_.n);
    for (std::size_t k = 0; k < t_.n; ++k) out.push_back({ExtNat(k)});
    return out;
  }
  std::uint64_t multiplicity_bound(ExtNat) const override { return std::max<std::size_t>(t_.n, 1); }
  std::string format(PayloadView x) const override { return t_.names[i(x)]; }

 private:
  static std::size_t i(PayloadView x) { return static_cast<std::size_t>(x[0].value()); }

  FiniteTable t_;
  std::vector<Index> omega_;
  std::size_t top_ = 0;
};

class LscImpl final : public ModelImpl {
 public:
  LscImpl(Space s, ModelKind kind) : ModelImpl(kind), s_(std::move(s)) {}

  const Space& space() const { return s_; }

  bool is_finite() const override { return false; }
  std::size_t arity() const override { return s_.size(); }
  bool valid(PayloadView x) const override {
    if (x.size() != s_.size()) return false;
    for (std::size_t p = 0; p < x.size(); ++p) {
      for (std::size_t q = 0; q < x.size(); ++q) {
        if (s_.le(p, q) && x[p] > x[q]) return false;
      }
    }
    return true;
  }
  bool leq(PayloadView x, PayloadView y) const override {
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (x[p] > y[p]) return false;
    }
    return true;
  }
  Payload add(PayloadView x, PayloadView y) const override {
    Payload r(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) r[p] = x[p] + y[p];
    return r;
  }
  bool way_below(PayloadView x, PayloadView y) const override {
    return leq(x, y) && std::all_of(x.begin(), x.end(), [](ExtNat v) { return v.is_finite(); });
  }
  Payload omega(PayloadView x) const override {
    Payload r(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) r[p] = culab::omega(x[p]);
    return r;
  }
  Payload zero() const override { return Payload(s_.size(), ExtNat(0)); }
  Payload top() const override { return Payload(s_.size(), ExtNat::infinity()); }
  Payload truncate(PayloadView x, ExtNat level) const override {
    Payload r(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) r[p] = culab::min(x[p], level);
    return r;
  }
  ExtNat level(PayloadView x) const override {
    ExtNat m(0);
    for (auto v : x) {
      if (v.is_finite()) m = culab::max(m, v);
    }
    return m;
  }
  std::vector<Payload> grid(ExtNat level) const override {
    std::vector<ExtNat> values;
    for (std::uint64_t v = 0; v <= level.value(); ++v) values.emplace_back(v);
    values.push_back(ExtNat::infinity());
    std::vector<Payload> out;
    Payload cur(s_.size());
    extend(values, cur, 0, out);
    return out;
  }
  std::uint64_t multiplicity_bound(ExtNat level) const override {
    return std::max<std::uint64_t>(1, level.value());
  }
  std::string format(PayloadView x) const override {
    if (x.size() == 1) return x[0].to_string();
    std::string out = "(";
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (p) out += ",";
      out += x[p].to_string();
    }
    return out + ")";
  }

 private:
  void extend(const std::vector<ExtNat>& values, Payload& cur, std::size_t p,
              std::vector<Payload>& out) const {
    if (p == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (auto v : values) {
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        if (s_.le(q, p) && cur[q] > v) ok = false;
        if (s_.le(p, q) && v > cur[q]) ok = false;
      }
      if (!ok) continue;
      cur[p] = v;
      extend(values, cur, p + 1, out);
    }
  }

  Space s_;
};

class ProductImpl final : public ModelImpl {
 public:
  explicit ProductImpl(std::vector<CuModel> factors)
      : ModelImpl(ModelKind::product), factors_(std::move(factors)) {
    std::size_t off = 0;
    for (const auto& f : factors_) {
      offsets_.push_back(off);
      off += f.arity();
    }
    arity_ = off;
  }

  const std::vector<CuModel>& factors() const { return factors_; }
  PayloadView slice(PayloadView x, std::size_t f) const {
    return x.subspan(offsets_[f], factors_[f].arity());
  }

  bool is_finite() const override { return false; }
  std::size_t arity() const override { return arity_; }
  bool valid(PayloadView x) const override {
    if (x.size() != arity_) return false;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (!factors_[f].impl().valid(slice(x, f))) return false;
    }
    return true;
  }
  bool leq(PayloadView x, PayloadView y) const override {
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (!factors_[f].impl().leq(slice(x, f), slice(y, f))) return false;
    }
    return true;
  }
  bool way_below(PayloadView x, PayloadView y) const override {
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (!factors_[f].impl().way_below(slice(x, f), slice(y, f))) return false;
    }
    return true;
  }
  Payload add(PayloadView x, PayloadView y) const override {
    return map2(x, y, [](const ModelImpl& m, PayloadView a, PayloadView b) { return m.add(a, b); });
  }
  Payload omega(PayloadView x) const override {
    return map1(x, [](const ModelImpl& m, PayloadView a) { return m.omega(a); });
  }
  Payload zero() const override {
    Payload r;
    for (const auto& f : factors_) {
      auto z = f.impl().zero();
      r.insert(r.end(), z.begin(), z.end());
    }
    return r;
  }
  Payload top() const override {
    Payload r;
    for (const auto& f : factors_) {
      auto z = f.impl().top();
      r.insert(r.end(), z.begin(), z.end());
    }
    return r;
  }
  Payload truncate(PayloadView x, ExtNat level) const override {
    return map1(x, [level](const ModelImpl& m, PayloadView a) { return m.truncate(a, level); });
  }
  ExtNat level(PayloadView x) const override {
    ExtNat l(0);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      l = culab::max(l, factors_[f].impl().level(slice(x, f)));
    }
    return l;
  }
  std::vector<Payload> grid(ExtNat level) const override {
    std::vector<Payload> out{Payload{}};
    for (const auto& f : factors_) {
      const auto part = f.impl().grid(level);
      std::vector<Payload> next;
      next.reserve(out.size() * part.size());
      for (const auto& head : out) {
        for (const auto& tail : part) {
          Payload p = head;
          p.insert(p.end(), tail.begin(), tail.end());
          next.push_back(std::move(p));
        }
      }
      out = std::move(next);
    }
    return out;
  }
  std::uint64_t multiplicity_bound(ExtNat level) const override {
    std::uint64_t b = 1;
    for (const auto& f : factors_) {
      b = std::min<std::uint64_t>(b * f.impl().multiplicity_bound(level), 1u << 20);
    }
    return b;
  }
  std::string format(PayloadView x) const override {
    std::string out = "(";
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (f) out += ", ";
      out += factors_[f].impl().format(slice(x, f));
    }
    return out + ")";
  }

 private:
  template <class F>
  Payload map1(PayloadView x, F fn) const {
    Payload r;
    r.reserve(arity_);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      auto part = fn(factors_[f].impl(), slice(x, f));
      r.insert(r.end(), part.begin(), part.end());
    }
    return r;
  }
  template <class F>
  Payload map2(PayloadView x, PayloadView y, F fn) const {
    Payload r;
    r.reserve(arity_);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      auto part = fn(factors_[f].impl(), slice(x, f), slice(y, f));
      r.insert(r.end(), part.begin(), part.end());
    }
    return r;
  }

  std::vector<CuModel> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t arity_ = 0;
};

}  // namespace
}  // namespace detail

using detail::FiniteImpl;
using detail::LscImpl;
using detail::ProductImpl;

std::size_t CuModel::size() const { return table().n; }

const FiniteTable& CuModel::table() const {
  auto* f = dynamic_cast<const FiniteImpl*>(impl_.get());
  if (!f) throw UnsupportedModel("operation requires a finite model");
  return f->table();
}

const Space& CuModel::space() const {
  auto* l = dynamic_cast<const LscImpl*>(impl_.get());
  if (!l) throw UnsupportedModel("operation requires an lsc model");
  return l->space();
}

const std::vector<CuModel>& CuModel::factors() const {
  auto* p = dynamic_cast<const ProductImpl*>(impl_.get());
  if (!p) throw UnsupportedModel("operation requires a product of infinite models");
  return p->factors();
}

Element CuModel::component(const Element& x, std::size_t factor) const {
  require(x);
  auto* p = dynamic_cast<const ProductImpl*>(impl_.get());
  if (!p) throw UnsupportedModel("operation requires a product of infinite models");
  auto s = p->slice(x.payload(), factor);
  return p->factors()[factor].make(Payload(s.begin(), s.end()));
}

Element CuModel::compose(std::span<const Element> parts) const {
  const auto& fs = factors();
  if (parts.size() != fs.size()) throw ElementModelMismatch("wrong number of product components");
  Payload p;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    fs[f].require(parts[f]);
    p.insert(p.end(), parts[f].payload().begin(), parts[f].payload().end());
  }
  return make(std::move(p));
}

Element CuModel::element(std::size_t index) const {
  if (index >= size()) throw Error("element index out of range");
  return Element(id(), Payload{ExtNat(index)});
}

std::vector<Element> CuModel::elements() const {
  std::vector<Element> out;
  for (std::size_t k = 0; k < size(); ++k) out.push_back(element(k));
  return out;
}

Element CuModel::make(Payload payload) const {
  if (!impl_->valid(payload)) throw Error("payload is not an element of this model");
  return Element(id(), std::move(payload));
}

void CuModel::require(const Element& x) const {
  if (x.model() != id()) throw ElementModelMismatch("element belongs to a different model");
}

Element CuModel::zero() const { return Element(id(), impl_->zero()); }
Element CuModel::top() const { return Element(id(), impl_->top()); }

bool CuModel::leq(const Element& x, const Element& y) const {
  require(x);
  require(y);
  return impl_->leq(x.payload(), y.payload());
}

Element CuModel::add(const Element& x, const Element& y) const {
  require(x);
  require(y);
  return Element(id(), impl_->add(x.payload(), y.payload()));
}

Element CuModel::multiple(std::uint64_t n, const Element& x) const {
  require(x);
  Element acc = zero();
  Element step = x;
  // binary powering; the monoid is commutative so order does not matter
  while (n > 0) {
    if (n & 1u) acc = add(acc, step);
    n >>= 1u;
    if (n) step = add(step, step);
  }
  return acc;
}

bool CuModel::way_below(const Element& x, const Element& y) const {
  require(x);
  require(y);
  return impl_->way_below(x.payload(), y.payload());
}

Element CuModel::omega_multiple(const Element& x) const {
  require(x);
  return Element(id(), impl_->omega(x.payload()));
}

bool CuModel::is_compact(const Element& x) const { return way_below(x, x); }

Element CuModel::truncate(const Element& x, ExtNat level) const {
  require(x);
  return Element(id(), impl_->truncate(x.payload(), level));
}

Element CuModel::sup(const ChainDescriptor& chain) const {
  if (chain.form() == ChainDescriptor::Form::truncation_family) {
    require(chain.base());
    return chain.base();
  }
  const auto& t = chain.terms();
  for (const auto& e : t) require(e);
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    if (!leq(t[k], t[k + 1])) {
      throw NotIncreasing("chain decreases at position " + std::to_string(k + 1));
    }
  }
  return t.back();
}

ChainDescriptor CuModel::basis_chain(const Element& x) const {
  require(x);
  if (is_compact(x)) return ChainDescriptor::stabilizing({x});
  return ChainDescriptor::truncation(x);
}

std::vector<Element> CuModel::basis_terms(const Element& x, std::size_t depth) const {
  require(x);
  if (is_compact(x)) return {x};
  const auto lvl = impl_->level(x.payload());
  const std::uint64_t top = std::max<std::uint64_t>(depth, lvl.value() + 1);
  std::vector<Element> out;
  for (std::uint64_t n = 0; n <= top; ++n) {
    auto t = truncate(x, ExtNat(n));
    if (out.empty() || !(out.back() == t)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Element> CuModel::sample(std::size_t grid) const {
  std::vector<Element> out;
  for (auto& p : impl_->grid(ExtNat(grid))) out.emplace_back(id(), std::move(p));
  return out;
}

ExtNat CuModel::level(std::span<const Element> params) const {
  ExtNat l(0);
  for (const auto& p : params) {
    require(p);
    l = culab::max(l, impl_->level(p.payload()));
  }
  return l;
}

std::vector<Element> CuModel::witness_domain(std::span<const Element> params) const {
  const auto l = culab::max(level(params), ExtNat(1));
  std::vector<Element> out;
  for (auto& p : impl_->grid(l)) out.emplace_back(id(), std::move(p));
  return out;
}

std::uint64_t CuModel::multiplicity_bound(std::span<const Element> params) const {
  return impl_->multiplicity_bound(level(params));
}

std::string CuModel::format(const Element& x) const {
  require(x);
  return impl_->format(x.payload());
}

std::vector<std::string> validate_table(const FiniteTable& t) {
  std::vector<std::string> v;
  const auto n = t.n;
  auto pair = [](std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  auto triple = [](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  if (n == 0) return {"empty carrier"};
  if (t.names.size() != n) v.push_back("names: expected " + std::to_string(n) + " entries");
  if (t.leq.size() != n * n) v.push_back("leq: expected " + std::to_string(n * n) + " entries");
  if (t.add.size() != n * n) v.push_back("add: expected " + std::to_string(n * n) + " entries");
  if (!v.empty()) return v;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.sum(i, j) >= n) v.push_back("add entry out of range at " + pair(i, j));
    }
  }
  if (!v.empty()) return v;

  for (std::size_t i = 0; i < n; ++i) {
    if (!t.le(i, i)) v.push_back("reflexivity at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.le(i, j) && t.le(j, i)) v.push_back("antisymmetry at " + pair(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!t.le(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (t.le(j, k) && !t.le(i, k)) v.push_back("transitivity at " + triple(i, j, k));
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (t.sum(0, j) != j || t.sum(j, 0) != j) v.push_back("zero-neutral at " + pair(0, j));
    if (!t.le(0, j)) v.push_back("zero-least at " + std::to_string(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.sum(i, j) != t.sum(j, i)) v.push_back("commutativity at " + pair(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (t.sum(t.sum(i, j), k) != t.sum(i, t.sum(j, k))) {
          v.push_back("associativity at " + triple(i, j, k));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !t.le(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!t.le(t.sum(i, k), t.sum(j, k))) v.push_back("order-compatibility at " + triple(i, j, k));
      }
    }
  }
  return v;
}

FiniteTable make_table(std::vector<std::string> names, const std::vector<std::vector<int>>& leq,
                       const std::vector<std::vector<int>>& add) {
  FiniteTable t;
  t.n = names.size();
  t.names = std::move(names);
  for (const auto& row : leq) {
    for (int b : row) t.leq.push_back(static_cast<std::uint8_t>(b != 0));
  }
  for (const auto& row : add) {
    for (int s : row) t.add.push_back(static_cast<Index>(s));
  }
  return t;
}

CuModel finite_model(FiniteTable table, ModelKind kind) {
  if (table.names.empty() && table.n > 0) {
    for (std::size_t k = 0; k < table.n; ++k) table.names.push_back(std::to_string(k));
  }
  auto violations = validate_table(table);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return CuModel(std::make_shared<FiniteImpl>(std::move(table), kind));
}

CuModel nbar() {
  Space s{{"*"}, {1}};
  return CuModel(std::make_shared<LscImpl>(std::move(s), ModelKind::nbar));
}

CuModel e_k(unsigned k) {
  if (k == 0) throw Error("E_k requires k >= 1");
  const std::size_t n = k + 2;
  FiniteTable t;
  t.n = n;
  for (unsigned v = 0; v <= k; ++v) t.names.push_back(std::to_string(v));
  t.names.emplace_back("inf");
  t.leq.assign(n * n, 0);
  t.add.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.leq[i * n + j] = static_cast<std::uint8_t>(i <= j);
      const bool overflow = i == n - 1 || j == n - 1 || i + j > k;
      t.add[i * n + j] = static_cast<Index>(overflow ? n - 1 : i + j);
    }
  }
  return finite_model(std::move(t), ModelKind::e_k);
}

CuModel lsc_model(Space space) {
  const auto n = space.size();
  if (space.leq.size() != n * n) throw Error("space order matrix must be square");
  std::vector<std::string> problems;
  for (std::size_t p = 0; p < n; ++p) {
    if (!space.le(p, p)) problems.push_back("space reflexivity at " + std::to_string(p));
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t r = 0; r < n; ++r) {
        if (space.le(p, q) && space.le(q, r) && !space.le(p, r)) {
          problems.push_back("space transitivity at (" + std::to_string(p) + "," +
                             std::to_string(q) + "," + std::to_string(r) + ")");
        }
      }
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (space.le(p, q) && space.le(q, p)) {
        throw NotT0("points " + space.points[p] + " and " + space.points[q] +
                    " are topologically indistinguishable");
      }
    }
  }
  if (n == 0) return finite_model(make_table({"0"}, {{1}}, {{0}}));
  return CuModel(std::make_shared<LscImpl>(std::move(space), ModelKind::lsc));
}

namespace {

CuModel finite_product(const CuModel& a, const CuModel& b) {
  const auto& ta = a.table();
  const auto& tb = b.table();
  FiniteTable t;
  t.n = ta.n * tb.n;
  t.leq.assign(t.n * t.n, 0);
  t.add.assign(t.n * t.n, 0);
  for (std::size_t i = 0; i < ta.n; ++i) {
    for (std::size_t j = 0; j < tb.n; ++j) {
      t.names.push_back("(" + ta.names[i] + "," + tb.names[j] + ")");
    }
  }
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      const auto xa = x / tb.n, xb = x % tb.n, ya = y / tb.n, yb = y % tb.n;
      t.leq[x * t.n + y] = static_cast<std::uint8_t>(ta.le(xa, ya) && tb.le(xb, yb));
      t.add[x * t.n + y] = static_cast<Index>(ta.sum(xa, ya) * tb.n + tb.sum(xb, yb));
    }
  }
  return finite_model(std::move(t), ModelKind::product);
}

}  // namespace

CuModel product(const CuModel& a, const CuModel& b) {
  if (a.is_finite() && b.is_finite()) return finite_product(a, b);
  return CuModel(std::make_shared<ProductImpl>(std::vector<CuModel>{a, b}));
}

CuModel product(std::span<const CuModel> factors) {
  if (factors.empty()) throw Error("product needs at least one factor");
  if (std::all_of(factors.begin(), factors.end(), [](const CuModel& m) { return m.is_finite(); })) {
    CuModel acc = factors[0];
    for (std::size_t f = 1; f < factors.size(); ++f) acc = finite_product(acc, factors[f]);
    return acc;
  }
  return CuModel(std::make_shared<ProductImpl>(std::vector<CuModel>(factors.begin(), factors.end())));
}

}  // namespace culab
