#include "svcoh/h2_solver.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>

namespace svcoh {

UnknownRegistry::UnknownRegistry(std::vector<PairKey> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) index_.emplace(pairs_[i], i);
}

std::optional<std::size_t> UnknownRegistry::column(const PairKey& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::size_t, int>> UnknownRegistry::column(const BasisIndex& a,
                                                                   const BasisIndex& b) const {
  auto key = canonical_pair(a, b);
  if (!key) return std::nullopt;
  auto col = column(key->first);
  if (!col) return std::nullopt;
  return std::pair{*col, key->second};
}

SparseVector UnknownRegistry::vectorize(const PairFunction& psi) const {
  SparseVector v;
  for (std::size_t i = 0; i < pairs_.size(); ++i) v.set(i, psi(pairs_[i].first, pairs_[i].second));
  return v;
}

namespace {

std::vector<BasisIndex> sorted_unique(std::vector<BasisIndex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using RowKey = std::vector<std::pair<std::size_t, std::string>>;

RowKey row_key(const SparseVector& v) {
  RowKey k;
  k.reserve(v.nnz());
  for (const auto& e : v.entries()) k.emplace_back(e.col, e.value.get_str());
  return k;
}

// Term handling for one cyclic summand psi([x, y], z) of the identity.
enum class TermAction { Use, Skip, Reject };

template <typename OutOfRange>
std::optional<SparseVector> assemble_row(const Triple& t, const UnknownRegistry& registry,
                                         const std::function<bool(const BasisIndex&)>& contains,
                                         const Params& params, OutOfRange&& on_missing) {
  const auto& [a, b, c] = t;
  const std::array<Triple, 3> terms{Triple{a, b, c}, Triple{b, c, a}, Triple{c, a, b}};
  SparseVector row;
  for (const auto& [x, y, z] : terms) {
    auto bt = bracket_term(x, y, params);
    if (!bt || bt->target == z) continue;
    auto col = contains(bt->target) ? registry.column(bt->target, z) : std::nullopt;
    if (!col) {
      if (on_missing(bt->target, z) == TermAction::Skip) continue;
      return std::nullopt;
    }
    row.add(col->first, col->second * bt->coeff);
  }
  return row;
}

std::function<bool(const BasisIndex&)> membership(const std::vector<BasisIndex>& window) {
  auto set = std::make_shared<std::set<BasisIndex>>(window.begin(), window.end());
  return [set](const BasisIndex& b) { return set->count(b) > 0; };
}

}  // namespace

void for_each_degree_zero_triple(const std::vector<BasisIndex>& window, const Params& params,
                                 const std::function<void(const Triple&)>& fn) {
  const auto basis = sorted_unique(window);
  std::vector<Rational> deg;
  deg.reserve(basis.size());
  std::map<Rational, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    deg.push_back(degree(basis[i], params));
    by_degree[deg.back()].push_back(i);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto it = by_degree.find(-deg[i] - deg[j]);
      if (it == by_degree.end()) continue;
      for (std::size_t k : it->second)
        if (k > j) fn(Triple{basis[i], basis[j], basis[k]});
    }
  }
}

UnknownRegistry degree_zero_pairs(const std::vector<BasisIndex>& window, const Params& params) {
  const auto basis = sorted_unique(window);
  std::vector<Rational> deg;
  for (const auto& b : basis) deg.push_back(degree(b, params));
  std::vector<PairKey> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (deg[i] + deg[j] == 0) pairs.push_back({basis[i], basis[j]});
  return UnknownRegistry(std::move(pairs));
}

std::optional<SparseVector> constraint_row(const Triple& t, const UnknownRegistry& registry,
                                           const std::function<bool(const BasisIndex&)>& contains,
                                           const Params& params) {
  return assemble_row(t, registry, contains, params,
                      [](const BasisIndex&, const BasisIndex&) { return TermAction::Reject; });
}

ConstraintSystem build_constraints(const UnknownRegistry& registry,
                                   const std::vector<BasisIndex>& window, const Params& params) {
  const auto contains = membership(window);
  ConstraintSystem sys{SparseMatrix(registry.size()), {}};
  std::set<RowKey> seen;
  for_each_degree_zero_triple(window, params, [&](const Triple& t) {
    auto row = constraint_row(t, registry, contains, params);
    if (!row || row->empty()) return;
    if (!seen.insert(row_key(*row)).second) return;
    sys.matrix.add_row(std::move(*row));
    sys.triple_log.push_back(t);
  });
  return sys;
}

std::vector<SparseVector> coboundary_basis(const UnknownRegistry& registry, const Params& params) {
  std::vector<SparseVector> out;
  for (const auto& target : degree_zero_basis(params)) {
    SparseVector v;
    for (std::size_t i = 0; i < registry.size(); ++i) {
      const auto& p = registry.pairs()[i];
      auto bt = bracket_term(p.first, p.second, params);
      if (bt && bt->target == target) v.set(i, bt->coeff);
    }
    out.push_back(std::move(v));
  }
  return out;
}

WindowCounts solve_window(const std::vector<BasisIndex>& outer,
                          const std::function<bool(const BasisIndex&)>& inner,
                          const Params& params, const std::vector<KnownCocycleId>& generators) {
  const auto registry = degree_zero_pairs(outer, params);
  const auto system = build_constraints(registry, outer, params);
  const auto elim = eliminate(system.matrix);

  auto inner_col = [&](std::size_t col) {
    const auto& p = registry.pairs()[col];
    return inner(p.first) && inner(p.second);
  };
  std::vector<SparseVector> cocycles;
  for (const auto& v : elim.nullspace_basis) cocycles.push_back(v.filtered(inner_col));
  std::vector<SparseVector> coboundaries;
  for (const auto& v : coboundary_basis(registry, params))
    coboundaries.push_back(v.filtered(inner_col));

  WindowCounts out;
  out.unknowns = registry.size();
  out.constraints = system.matrix.nrows();
  out.cocycle_dim = span_rank(cocycles);
  out.coboundary_dim = span_rank(coboundaries);
  out.h2_dim = quotient_dim(cocycles, coboundaries);

  for (auto id : generators) {
    const auto v = registry.vectorize(known_cocycle_function(id, params)).filtered(inner_col);
    const bool matched = !v.empty() && in_span(v, cocycles) && !in_span(v, coboundaries);
    out.matched.push_back({id, matched});
  }
  return out;
}

H2Report solve_h2(const Params& params, int N, int M) {
  if (M < 2) throw WindowTooSmall("inner window must be at least 2, got " + std::to_string(M));
  if (N < M + 2)
    throw WindowTooSmall("outer window must be at least inner + 2, got N=" + std::to_string(N) +
                         ", M=" + std::to_string(M));

  const auto inner = [M](const BasisIndex& b) { return in_window(b, M); };
  const auto expected = expected_h2(params);
  const auto current = solve_window(enumerate_window(N), inner, params, expected.generators);
  const auto previous = solve_window(enumerate_window(N - 2), inner, params, {});

  H2Report r;
  r.params = params;
  r.outer_window = N;
  r.inner_window = M;
  r.cocycle_dim = current.cocycle_dim;
  r.coboundary_dim = current.coboundary_dim;
  r.h2_dim = current.h2_dim;
  r.expected_dim = expected.dimension;
  r.stabilized = previous.h2_dim == current.h2_dim;
  r.matched = current.matched;
  return r;
}

std::vector<H2Report> sweep(const std::vector<Params>& grid, int N, int M) {
  std::vector<H2Report> out;
  out.reserve(grid.size());
  for (const auto& p : grid) out.push_back(solve_h2(p, N, M));
  return out;
}

WindowCounts virasoro_subsystem(const Params& params, int N, int M) {
  if (M < 2 || N < M) throw WindowTooSmall("need 2 <= M <= N for the Virasoro subsystem");
  std::vector<BasisIndex> ls;
  for (int n = -N; n <= N; ++n) ls.push_back(BasisIndex::L(n));
  return solve_window(ls, [M](const BasisIndex& b) { return in_window(b, M); }, params,
                      {KnownCocycleId::VIR});
}

SufficiencyResult degree_zero_sufficiency(const Params& params, int N) {
  const auto window = enumerate_window(N);
  const auto contains = membership(window);
  const UnknownRegistry registry(all_pairs(window));
  const auto L0 = BasisIndex::L(0);

  SufficiencyResult res;
  res.unknowns = registry.size();
  std::vector<bool> off_degree(registry.size(), false);
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const auto& p = registry.pairs()[i];
    off_degree[i] = degree(p.first, params) + degree(p.second, params) != 0;
    if (off_degree[i]) ++res.nonzero_degree_unknowns;
  }

  SparseMatrix m(registry.size());
  // Gauge: psi(L_0, X) = 0 whenever deg X != 0.
  for (const auto& x : window) {
    if (x == L0 || degree(x, params) == 0) continue;
    SparseVector row;
    row.set(registry.column(L0, x)->first, 1);
    m.add_row(std::move(row));
  }
  // Every identity on distinct window triples. A term psi(X, L_0) with X
  // outside the window is zero under the gauge when deg X != 0.
  const auto gauge_zero = [&](const BasisIndex& target, const BasisIndex& z) {
    return (z == L0 && degree(target, params) != 0) ? TermAction::Skip : TermAction::Reject;
  };
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j)
      for (std::size_t k = j + 1; k < window.size(); ++k) {
        const Triple t{window[i], window[j], window[k]};
        auto row = assemble_row(t, registry, contains, params, gauge_zero);
        if (row && !row->empty()) m.add_row(std::move(*row));
      }

  const auto elim = eliminate(m);
  res.nullity = elim.nullspace_basis.size();
  for (const auto& v : elim.nullspace_basis) {
    const bool bad = std::any_of(v.entries().begin(), v.entries().end(),
                                 [&](const SparseVector::Entry& e) { return off_degree[e.col]; });
    if (bad) ++res.violating_vectors;
  }
  return res;
}

KnownCocycleCheck verify_known(KnownCocycleId id, const Params& params, int N) {
  const auto psi = known_cocycle_function(id, params);
  const auto window = enumerate_window(N);
  KnownCocycleCheck out{id};
  for_each_degree_zero_triple(window, params, [&](const Triple& t) {
    ++out.triples_checked;
    if (cocycle_defect(psi, t[0], t[1], t[2], params) != 0) ++out.nonzero_defects;
  });
  const auto registry = degree_zero_pairs(window, params);
  out.nontrivial = !in_span(registry.vectorize(psi), coboundary_basis(registry, params));
  return out;
}

}  // namespace svcoh
