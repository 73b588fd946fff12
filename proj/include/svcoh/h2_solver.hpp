#pragma once

#include "svcoh/cocycle.hpp"
#include "svcoh/exact_linalg.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace svcoh {

using Triple = std::array<BasisIndex, 3>;

/// Column numbering for the unknowns psi(a, b) of a constraint system.
class UnknownRegistry {
 public:
  UnknownRegistry() = default;
  explicit UnknownRegistry(std::vector<PairKey> pairs);

  const std::vector<PairKey>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  /// Column of the canonical pair, or nullopt if it is not an unknown.
  std::optional<std::size_t> column(const PairKey& p) const;
  /// Column and orientation sign for psi(a, b); nullopt when a == b or the
  /// pair is not registered.
  std::optional<std::pair<std::size_t, int>> column(const BasisIndex& a,
                                                    const BasisIndex& b) const;

  /// Coordinates of psi on the registered pairs.
  SparseVector vectorize(const PairFunction& psi) const;

 private:
  std::vector<PairKey> pairs_;
  std::map<PairKey, std::size_t> index_;
};

struct ConstraintSystem {
  SparseMatrix matrix;
  /// Generating triple of each matrix row.
  std::vector<Triple> triple_log;
};

/// Calls fn(a, b, c) for every triple a < b < c of distinct window elements
/// whose degrees sum to zero.
void for_each_degree_zero_triple(const std::vector<BasisIndex>& window, const Params& params,
                                 const std::function<void(const Triple&)>& fn);

/// Canonical pairs from the window whose degrees sum to zero.
UnknownRegistry degree_zero_pairs(const std::vector<BasisIndex>& window, const Params& params);

/// The cocycle identity on (a, b, c) as a row over the registry. nullopt if
/// a bracket leaves `contains` or touches an unregistered pair.
std::optional<SparseVector> constraint_row(const Triple& t, const UnknownRegistry& registry,
                                           const std::function<bool(const BasisIndex&)>& contains,
                                           const Params& params);

/// One row per degree-zero triple whose brackets all stay in the window.
/// Zero rows and exact duplicates are dropped.
ConstraintSystem build_constraints(const UnknownRegistry& registry,
                                   const std::vector<BasisIndex>& window, const Params& params);

/// psi_f on the registered pairs for f = delta_b, one vector per degree-zero
/// basis element b (in basis order). A vector may be zero.
std::vector<SparseVector> coboundary_basis(const UnknownRegistry& registry, const Params& params);

struct WindowTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GeneratorMatch {
  KnownCocycleId id;
  bool matched = false;
  friend bool operator==(const GeneratorMatch&, const GeneratorMatch&) = default;
};

struct H2Report {
  Params params;
  int outer_window = 0;
  int inner_window = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t h2_dim = 0;
  int expected_dim = 0;
  bool stabilized = false;
  std::vector<GeneratorMatch> matched;

  bool agrees() const { return static_cast<int>(h2_dim) == expected_dim; }
  friend bool operator==(const H2Report&, const H2Report&) = default;
};

/// Dimensions of the degree-zero cocycle and coboundary spaces restricted
/// to the inner window, for one outer window.
struct WindowCounts {
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t h2_dim = 0;
  std::size_t unknowns = 0;
  std::size_t constraints = 0;
  std::vector<GeneratorMatch> matched;
};

/// Core computation on an arbitrary outer basis set. Unknowns are the
/// degree-zero pairs of `outer`; counts are taken on pairs with both ends
/// inside `inner`. Each id in `generators` is matched by span membership.
WindowCounts solve_window(const std::vector<BasisIndex>& outer,
                          const std::function<bool(const BasisIndex&)>& inner,
                          const Params& params, const std::vector<KnownCocycleId>& generators);

/// H^2 on window N, counted on inner window M, with stabilization against
/// the (N - 2, M) run. Requires 2 <= M <= N - 2.
H2Report solve_h2(const Params& params, int N, int M);

std::vector<H2Report> sweep(const std::vector<Params>& grid, int N, int M);

/// Same computation restricted to the L_n: unknowns psi(L_{-n}, L_n),
/// constraints from L-triples only.
WindowCounts virasoro_subsystem(const Params& params, int N, int M);

struct SufficiencyResult {
  std::size_t unknowns = 0;
  std::size_t nonzero_degree_unknowns = 0;
  std::size_t nullity = 0;
  /// Nullspace vectors with a nonzero entry on a nonzero-degree pair.
  std::size_t violating_vectors = 0;
  bool holds() const { return violating_vectors == 0; }
};

/// All pairs of window N are unknowns. Rows: every in-window cocycle
/// identity, every (L_0, a, b) identity, and the gauge psi(L_0, X) = 0 for
/// deg X != 0. Checks that no cocycle survives off degree zero.
SufficiencyResult degree_zero_sufficiency(const Params& params, int N);

struct KnownCocycleCheck {
  KnownCocycleId id;
  std::size_t triples_checked = 0;
  std::size_t nonzero_defects = 0;
  /// Restriction to degree-zero pairs lies outside the coboundary span.
  bool nontrivial = false;
  bool passes() const { return nonzero_defects == 0 && nontrivial; }
};

/// Cocycle identity on every degree-zero triple of window N, and
/// non-triviality against the coboundaries on the same window.
KnownCocycleCheck verify_known(KnownCocycleId id, const Params& params, int N);

}  // namespace svcoh
