#pragma once

// Test-only reference for the degree-zero H^2 count. Brackets, windows and
// the cocycle identity are re-derived here from the defining relations; the
// only shared piece is the Rational type. Dimensions use dense ranks:
// the projection of ker A onto coordinates S has dimension
// nullity(A) - nullity(A stacked with the unit rows of S).

#include "oracle/dense_elimination.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

struct Gen {
  char fam;  // 'L', 'Y' or 'M'
  Rational idx;
  bool operator<(const Gen& o) const {
    return fam != o.fam ? fam < o.fam : idx < o.idx;
  }
  bool operator==(const Gen& o) const { return fam == o.fam && idx == o.idx; }
};

struct NaiveParams {
  Rational lambda, mu;
};

inline Rational deg(const Gen& g, const NaiveParams& p) {
  if (g.fam == 'L') return g.idx;
  if (g.fam == 'Y') return g.idx + p.mu;
  return g.idx + 2 * p.mu;
}

// [a, b] = coeff * target, or nothing.
inline std::optional<std::pair<Rational, Gen>> br(const Gen& a, const Gen& b, const NaiveParams& p) {
  const Rational n = a.idx, m = b.idx;
  auto ret = [](Rational c, char f, Rational i) -> std::optional<std::pair<Rational, Gen>> {
    if (c == 0) return std::nullopt;
    return std::pair{c, Gen{f, i}};
  };
  if (a.fam == 'L' && b.fam == 'L') return ret(m - n, 'L', m + n);
  if (a.fam == 'L' && b.fam == 'Y') return ret(m - (p.lambda + 1) * n / 2 + p.mu, 'Y', m + n);
  if (a.fam == 'Y' && b.fam == 'L') return ret(-(n - (p.lambda + 1) * m / 2 + p.mu), 'Y', m + n);
  if (a.fam == 'Y' && b.fam == 'Y') return ret(m - n, 'M', m + n);
  if (a.fam == 'L' && b.fam == 'M') return ret(m - p.lambda * n + 2 * p.mu, 'M', m + n);
  if (a.fam == 'M' && b.fam == 'L') return ret(-(n - p.lambda * m + 2 * p.mu), 'M', m + n);
  return std::nullopt;
}

inline std::vector<Gen> window(int N) {
  std::vector<Gen> w;
  for (int n = -N; n <= N; ++n) w.push_back({'L', Rational(n)});
  for (int k = -N - 1; k <= N; ++k) {
    Rational y(2 * k + 1, 2);
    y.canonicalize();
    w.push_back({'Y', y});
  }
  for (int n = -N; n <= N; ++n) w.push_back({'M', Rational(n)});
  return w;
}

inline bool in(const std::vector<Gen>& w, const Gen& g) {
  for (const auto& x : w)
    if (x == g) return true;
  return false;
}

struct NaiveCounts {
  std::size_t cocycle_dim = 0, coboundary_dim = 0, h2_dim = 0;
};

// Outer basis `outer`, counts on pairs lying in `inner`.
inline NaiveCounts naive_h2(const NaiveParams& p, const std::vector<Gen>& outer,
                            const std::vector<Gen>& inner) {
  std::map<std::pair<Gen, Gen>, std::size_t> col;
  std::vector<std::pair<Gen, Gen>> pairs;
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t j = 0; j < outer.size(); ++j) {
      const auto& a = outer[i];
      const auto& b = outer[j];
      if (a < b && deg(a, p) + deg(b, p) == 0) {
        col[{a, b}] = pairs.size();
        pairs.push_back({a, b});
      }
    }
  const std::size_t n = pairs.size();

  // psi(a, b) as (column, sign); nullopt means an unknown outside the system.
  auto unknown = [&](const Gen& a, const Gen& b) -> std::optional<std::pair<std::size_t, int>> {
    if (a < b) {
      auto it = col.find({a, b});
      if (it == col.end()) return std::nullopt;
      return std::pair{it->second, 1};
    }
    auto it = col.find({b, a});
    if (it == col.end()) return std::nullopt;
    return std::pair{it->second, -1};
  };

  Dense A;
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t j = i + 1; j < outer.size(); ++j)
      for (std::size_t k = j + 1; k < outer.size(); ++k) {
        const Gen t[3] = {outer[i], outer[j], outer[k]};
        if (deg(t[0], p) + deg(t[1], p) + deg(t[2], p) != 0) continue;
        std::vector<Rational> row(n, Rational(0));
        bool ok = true;
        for (int s = 0; s < 3 && ok; ++s) {
          const auto& x = t[s];
          const auto& y = t[(s + 1) % 3];
          const auto& z = t[(s + 2) % 3];
          auto b = br(x, y, p);
          if (!b || b->second == z) continue;
          auto u = in(outer, b->second) ? unknown(b->second, z) : std::nullopt;
          if (!u) {
            ok = false;
            break;
          }
          row[u->first] += u->second * b->first;
        }
        if (ok) A.push_back(std::move(row));
      }

  std::vector<std::size_t> inner_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (in(inner, pairs[c].first) && in(inner, pairs[c].second)) inner_cols.push_back(c);

  auto nullity = [&](const Dense& m) { return n - (m.empty() ? 0 : dense_rank(m)); };
  Dense stacked = A;
  for (auto c : inner_cols) {
    std::vector<Rational> e(n, Rational(0));
    e[c] = 1;
    stacked.push_back(std::move(e));
  }

  // Coboundaries delta_g for each degree-zero generator g of the outer basis.
  Dense cob;
  for (const auto& g : outer) {
    if (deg(g, p) != 0) continue;
    std::vector<Rational> v;
    for (auto c : inner_cols) {
      auto b = br(pairs[c].first, pairs[c].second, p);
      v.push_back(b && b->second == g ? b->first : Rational(0));
    }
    cob.push_back(std::move(v));
  }

  NaiveCounts out;
  out.cocycle_dim = nullity(A) - nullity(stacked);
  out.coboundary_dim = cob.empty() ? 0 : dense_rank(cob);
  out.h2_dim = out.cocycle_dim - out.coboundary_dim;
  return out;
}

inline NaiveCounts naive_h2(const NaiveParams& p, int N, int M) {
  return naive_h2(p, window(N), window(M));
}

}  // namespace oracle
