#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

bool le(const FiniteTable& t, std::size_t i, std::size_t j) { return t.leq[i * t.n + j] != 0; }
std::size_t sum(const FiniteTable& t, std::size_t i, std::size_t j) { return t.add[i * t.n + j]; }

}  // namespace

bool laws_hold(const FiniteTable& t) {
  const auto n = t.n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!le(t, i, i) || !le(t, 0, i) || sum(t, 0, i) != i) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le(t, i, j) && le(t, j, i)) return false;
      if (sum(t, i, j) != sum(t, j, i)) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (le(t, i, j) && le(t, j, k) && !le(t, i, k)) return false;
        if (sum(t, sum(t, i, j), k) != sum(t, i, sum(t, j, k))) return false;
        if (le(t, i, j) && !le(t, sum(t, i, k), sum(t, j, k))) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> isomorphism(const FiniteTable& a, const FiniteTable& b) {
  if (a.n != b.n) return std::nullopt;
  const auto n = a.n;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = le(a, i, j) == le(b, p[i], p[j]) && p[sum(a, i, j)] == sum(b, p[i], p[j]);
      }
    }
    if (ok) return p;
  } while (std::next_permutation(p.begin() + (n ? 1 : 0), p.end()));
  return std::nullopt;
}

std::vector<FiniteTable> naive_models(std::size_t n) {
  std::vector<FiniteTable> out;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  std::size_t add_count = 1;
  for (std::size_t c = 0; c < cells.size(); ++c) add_count *= n;
  FiniteTable t;
  t.n = n;
  t.leq.assign(n * n, 0);
  t.add.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) t.names.push_back(std::to_string(i));
  for (std::uint64_t order = 0; order < (std::uint64_t{1} << (n * n)); ++order) {
    for (std::size_t c = 0; c < n * n; ++c) t.leq[c] = (order >> c) & 1;
    for (std::size_t code = 0; code < add_count; ++code) {
      auto rest = code;
      for (const auto& [i, j] : cells) {
        const auto v = static_cast<culab::Index>(rest % n);
        rest /= n;
        t.add[i * n + j] = v;
        t.add[j * n + i] = v;
      }
      if (!laws_hold(t)) continue;
      if (std::none_of(out.begin(), out.end(), [&](const FiniteTable& u) { return isomorphic(u, t); })) {
        out.push_back(t);
      }
    }
  }
  return out;
}

bool o5(const FiniteTable& t) {
  const auto n = t.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp) {
      if (!le(t, xp, x)) continue;
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t yp = 0; yp < n; ++yp) {
          if (!le(t, yp, y)) continue;
          for (std::size_t z = 0; z < n; ++z) {
            if (!le(t, sum(t, x, y), z)) continue;
            bool found = false;
            for (std::size_t c = 0; c < n && !found; ++c) {
              found = le(t, sum(t, xp, c), z) && le(t, z, sum(t, x, c)) && le(t, yp, c);
            }
            if (!found) return false;
          }
        }
    }
  return true;
}

bool o6(const FiniteTable& t) {
  const auto n = t.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp) {
      if (!le(t, xp, x)) continue;
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          if (!le(t, x, sum(t, y, z))) continue;
          bool found = false;
          for (std::size_t e = 0; e < n && !found; ++e) {
            if (!le(t, e, x) || !le(t, e, y)) continue;
            for (std::size_t f = 0; f < n && !found; ++f) {
              found = le(t, f, x) && le(t, f, z) && le(t, xp, sum(t, e, f));
            }
          }
          if (!found) return false;
        }
    }
  return true;
}

bool o7(const FiniteTable& t) {
  const auto n = t.n;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x) {
      if (!le(t, x, z)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!le(t, y, z)) continue;
        for (std::size_t xp = 0; xp < n; ++xp) {
          if (!le(t, xp, x)) continue;
          for (std::size_t yp = 0; yp < n; ++yp) {
            if (!le(t, yp, y)) continue;
            bool found = false;
            for (std::size_t w = 0; w < n && !found; ++w) {
              found = le(t, xp, w) && le(t, yp, w) && le(t, w, z) && le(t, w, sum(t, x, y));
            }
            if (!found) return false;
          }
        }
      }
    }
  return true;
}

std::vector<std::vector<bool>> ideal_masks(const FiniteTable& t) {
  const auto n = t.n;
  std::vector<std::vector<bool>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    auto in = [&](std::size_t i) { return ((s >> i) & 1) != 0; };
    if (!in(0)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!in(i)) continue;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (le(t, j, i) && !in(j)) ok = false;
        if (in(j) && !in(sum(t, i, j))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i < n; ++i) mask[i] = in(i);
    out.push_back(std::move(mask));
  }
  return out;
}

}  // namespace oracle
