#pragma once

#include "svcoh/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svcoh {

// Deformed Schrodinger-Virasoro algebra L(lambda, mu): basis L_n, M_n
// (n integer) and Y_p (p half an odd integer), brackets
//
//   [L_n, L_m] = (m - n) L_{m+n}
//   [L_n, Y_m] = (m - (lambda+1) n / 2 + mu) Y_{m+n}
//   [Y_n, Y_m] = (m - n) M_{m+n}
//   [L_n, M_m] = (m - lambda n + 2 mu) M_{m+n}
//   [Y_n, M_m] = [M_n, M_m] = 0

enum class Family : int { L = 0, Y = 1, M = 2 };

/// One basis vector. The index is stored doubled so that Y_p with
/// p in 1/2 + Z is integral: L and M carry even idx2, Y carries odd idx2.
struct BasisIndex {
  Family family = Family::L;
  int idx2 = 0;

  static BasisIndex L(int n) { return {Family::L, 2 * n}; }
  static BasisIndex M(int n) { return {Family::M, 2 * n}; }
  /// Y_p given 2p (must be odd).
  static BasisIndex Y2(int twice_p);
  /// Y_p for p in 1/2 + Z.
  static BasisIndex Y(const Rational& p);
  /// Checks the parity invariant; throws std::invalid_argument otherwise.
  static BasisIndex make(Family f, int idx2);

  Rational index() const { return make_rational(idx2, 2); }

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

std::string to_string(const BasisIndex& b);
std::string to_string(Family f);

enum class MuClass { NotHalfInteger, Integer, HalfOddInteger };

std::string to_string(MuClass c);

struct Params {
  Rational lambda;
  Rational mu;
  MuClass mu_class = MuClass::Integer;

  Params() = default;
  Params(Rational lambda, Rational mu);

  friend bool operator==(const Params& a, const Params& b) {
    return a.lambda == b.lambda && a.mu == b.mu;
  }
};

MuClass classify_mu(const Params& params);
MuClass classify_mu(const Rational& mu);

/// Sparse finite linear combination of basis vectors. Never stores zeros.
class Element {
 public:
  using Terms = std::map<BasisIndex, Rational>;

  Element() = default;
  Element(const BasisIndex& b, const Rational& c = 1) { add(b, c); }

  void add(const BasisIndex& b, const Rational& c);
  void add(const Element& other, const Rational& scale = 1);

  Rational coefficient(const BasisIndex& b) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { a.add(b); return a; }
  friend Element operator-(Element a, const Element& b) { a.add(b, -1); return a; }
  friend Element operator*(const Rational& s, const Element& e);
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

std::string to_string(const Element& e);

/// Result of bracketing two basis vectors: every nonzero bracket is a
/// single basis vector times a coefficient.
struct BracketTerm {
  BasisIndex target;
  Rational coeff;
};

/// [a, b] as a monomial; nullopt when the bracket vanishes.
std::optional<BracketTerm> bracket_term(const BasisIndex& a, const BasisIndex& b,
                                        const Params& params);

Element bracket(const BasisIndex& a, const BasisIndex& b, const Params& params);

Element bracket_elements(const Element& x, const Element& y, const Params& params);

/// Eigenvalue of ad L_0: deg L_n = n, deg Y_p = p + mu, deg M_n = n + 2 mu.
Rational degree(const BasisIndex& b, const Params& params);

/// [[a,b],c] + [[b,c],a] + [[c,a],b]; zero for a Lie algebra.
Element jacobi_defect(const BasisIndex& a, const BasisIndex& b, const BasisIndex& c,
                      const Params& params);

/// L_n, M_n with |n| <= N and Y_p with |p| <= N + 1/2, ordered by
/// family (L < Y < M) then index.
std::vector<BasisIndex> enumerate_window(int N);

bool in_window(const BasisIndex& b, int N);

/// Basis vectors of degree zero at these parameters: L_0 always,
/// Y_{-mu} when mu is half an odd integer, M_{-2 mu} when 2 mu is an integer.
std::vector<BasisIndex> degree_zero_basis(const Params& params);

}  // namespace svcoh
