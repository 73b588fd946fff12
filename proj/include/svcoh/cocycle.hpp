#pragma once

#include "svcoh/sv_algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace svcoh {

/// Canonically ordered basis pair, first < second.
struct PairKey {
  BasisIndex first;
  BasisIndex second;

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// Canonical key for (a, b) and the sign relating psi(a, b) to the stored
/// value; nullopt when a == b.
std::optional<std::pair<PairKey, int>> canonical_pair(const BasisIndex& a, const BasisIndex& b);

/// All canonical pairs drawn from `basis` (which need not be sorted).
std::vector<PairKey> all_pairs(const std::vector<BasisIndex>& basis);

/// Any alternating bilinear form, given on basis pairs.
using PairFunction = std::function<Rational(const BasisIndex&, const BasisIndex&)>;

/// Sparse alternating 2-cochain stored on canonical pairs.
class Cochain2 {
 public:
  using Values = std::map<PairKey, Rational>;

  /// Sets psi(a, b) = v (and so psi(b, a) = -v). Setting a diagonal value
  /// other than zero throws std::invalid_argument.
  void set(const BasisIndex& a, const BasisIndex& b, const Rational& v);

  const Values& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  PairFunction as_function() const;

  friend bool operator==(const Cochain2&, const Cochain2&) = default;

 private:
  Values values_;
};

Rational eval(const Cochain2& c, const BasisIndex& a, const BasisIndex& b);

/// psi([a,b],x) + psi([b,x],a) + psi([x,a],b)
Rational cocycle_defect(const PairFunction& psi, const BasisIndex& a, const BasisIndex& b,
                        const BasisIndex& x, const Params& params);
Rational cocycle_defect(const Cochain2& c, const BasisIndex& a, const BasisIndex& b,
                        const BasisIndex& x, const Params& params);

/// Finitely supported linear functional on the algebra.
class LinearFunctional {
 public:
  using Values = std::map<BasisIndex, Rational>;

  void set(const BasisIndex& b, const Rational& v);
  Rational value(const BasisIndex& b) const;
  Rational apply(const Element& e) const;
  const Values& values() const { return values_; }

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  Values values_;
};

/// psi_f(a, b) = f([a, b])
Rational coboundary_value(const LinearFunctional& f, const BasisIndex& a, const BasisIndex& b,
                          const Params& params);

Cochain2 coboundary(const LinearFunctional& f, const std::vector<PairKey>& pairs,
                    const Params& params);

/// The explicit classes of the classification: the Virasoro cocycle and the
/// extra generators that appear at special (lambda, mu).
enum class KnownCocycleId {
  VIR,
  C_LY_LAM_M3,
  C1_MY_LAM_M1,
  C2_LY_LAM_M1,
  C1_LY_LAM_1,
  C2_LM_YY_LAM_1,
  C_YY_MU_INT,
};

inline constexpr KnownCocycleId kAllKnownCocycles[] = {
    KnownCocycleId::VIR,          KnownCocycleId::C_LY_LAM_M3,  KnownCocycleId::C1_MY_LAM_M1,
    KnownCocycleId::C2_LY_LAM_M1, KnownCocycleId::C1_LY_LAM_1,  KnownCocycleId::C2_LM_YY_LAM_1,
    KnownCocycleId::C_YY_MU_INT,
};

std::string to_string(KnownCocycleId id);
std::optional<KnownCocycleId> parse_known_cocycle(std::string_view name);

struct RegimeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Whether `id` is defined at these parameters.
bool regime_valid(KnownCocycleId id, const Params& params);

/// Formula value of a known cocycle on (a, b). Throws RegimeMismatch outside
/// the generator's parameter regime.
Rational known_cocycle_value(KnownCocycleId id, const Params& params, const BasisIndex& a,
                             const BasisIndex& b);

/// Lazy evaluator; checks the regime once on construction.
PairFunction known_cocycle_function(KnownCocycleId id, const Params& params);

/// Materializes the known cocycle on `pairs`.
Cochain2 known_cocycle(KnownCocycleId id, const Params& params,
                       const std::vector<PairKey>& pairs);

/// The gauge functional f that strips a cocycle of its ad L_0-trivial part:
///
///   f(L_n) = psi(L_0, L_n) / n                        n != 0
///   f(L_0) = psi(L_{-1}, L_1) / 2
///   f(M_n) = psi(L_0, M_n) / (n + 2 mu)               n + 2 mu != 0
///   f(M_n) = -psi(L_1, M_{-2mu-1}) / (lambda + 1)     n = -2 mu, lambda != -1
///   f(Y_p) = psi(L_0, Y_p) / (p + mu)                 p + mu != 0
///   f(Y_p) = -2 psi(L_1, Y_{-mu-1}) / (lambda + 3)    p = -mu, lambda != -3
///
/// and f = 0 on the remaining degree-zero slot (M_{-2mu} at lambda = -1,
/// Y_{-mu} at lambda = -3). Defined on every element of `window`.
LinearFunctional normalizing_functional(const PairFunction& psi, const Params& params,
                                        const std::vector<BasisIndex>& window);
LinearFunctional normalizing_functional(const Cochain2& psi, const Params& params,
                                        const std::vector<BasisIndex>& window);

/// phi = psi - psi_f - c * xi_Vir, with c chosen so phi(L_2, L_{-2}) = 0.
struct Normalization {
  LinearFunctional f;
  Rational virasoro_scale;
  PairFunction phi;
};

Normalization normalize(const PairFunction& psi, const Params& params,
                        const std::vector<BasisIndex>& window);

struct ExpectedH2 {
  int dimension = 0;
  std::vector<KnownCocycleId> generators;
};

/// Reference classification of H^2 by (lambda, mu) class.
ExpectedH2 expected_h2(const Params& params);

}  // namespace svcoh
