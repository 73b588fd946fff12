#include "svcoh/cocycle.hpp"

#include <algorithm>

namespace svcoh {

std::optional<std::pair<PairKey, int>> canonical_pair(const BasisIndex& a, const BasisIndex& b) {
  if (a == b) return std::nullopt;
  if (a < b) return std::pair{PairKey{a, b}, 1};
  return std::pair{PairKey{b, a}, -1};
}

std::vector<PairKey> all_pairs(const std::vector<BasisIndex>& basis) {
  std::vector<BasisIndex> sorted = basis;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<PairKey> out;
  out.reserve(sorted.size() * (sorted.size() - 1) / 2);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) out.push_back({sorted[i], sorted[j]});
  return out;
}

void Cochain2::set(const BasisIndex& a, const BasisIndex& b, const Rational& v) {
  auto key = canonical_pair(a, b);
  if (!key) {
    if (v != 0) throw std::invalid_argument("alternating cochain must vanish on (x, x)");
    return;
  }
  const Rational stored = key->second > 0 ? v : Rational(-v);
  if (stored == 0)
    values_.erase(key->first);
  else
    values_[key->first] = stored;
}

PairFunction Cochain2::as_function() const {
  return [self = *this](const BasisIndex& a, const BasisIndex& b) { return eval(self, a, b); };
}

Rational eval(const Cochain2& c, const BasisIndex& a, const BasisIndex& b) {
  auto key = canonical_pair(a, b);
  if (!key) return 0;
  auto it = c.values().find(key->first);
  if (it == c.values().end()) return 0;
  return key->second > 0 ? it->second : Rational(-it->second);
}

Rational cocycle_defect(const PairFunction& psi, const BasisIndex& a, const BasisIndex& b,
                        const BasisIndex& x, const Params& params) {
  Rational s = 0;
  if (auto t = bracket_term(a, b, params)) s += t->coeff * psi(t->target, x);
  if (auto t = bracket_term(b, x, params)) s += t->coeff * psi(t->target, a);
  if (auto t = bracket_term(x, a, params)) s += t->coeff * psi(t->target, b);
  return s;
}

Rational cocycle_defect(const Cochain2& c, const BasisIndex& a, const BasisIndex& b,
                        const BasisIndex& x, const Params& params) {
  return cocycle_defect(
      [&c](const BasisIndex& u, const BasisIndex& v) { return eval(c, u, v); }, a, b, x,
      params);
}

void LinearFunctional::set(const BasisIndex& b, const Rational& v) {
  if (v == 0)
    values_.erase(b);
  else
    values_[b] = v;
}

Rational LinearFunctional::value(const BasisIndex& b) const {
  auto it = values_.find(b);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational LinearFunctional::apply(const Element& e) const {
  Rational s = 0;
  for (const auto& [b, c] : e.terms()) s += c * value(b);
  return s;
}

Rational coboundary_value(const LinearFunctional& f, const BasisIndex& a, const BasisIndex& b,
                          const Params& params) {
  auto t = bracket_term(a, b, params);
  return t ? t->coeff * f.value(t->target) : Rational(0);
}

Cochain2 coboundary(const LinearFunctional& f, const std::vector<PairKey>& pairs,
                    const Params& params) {
  Cochain2 out;
  for (const auto& p : pairs) out.set(p.first, p.second, coboundary_value(f, p.first, p.second, params));
  return out;
}

std::string to_string(KnownCocycleId id) {
  switch (id) {
    case KnownCocycleId::VIR: return "VIR";
    case KnownCocycleId::C_LY_LAM_M3: return "C_LY_LAM_M3";
    case KnownCocycleId::C1_MY_LAM_M1: return "C1_MY_LAM_M1";
    case KnownCocycleId::C2_LY_LAM_M1: return "C2_LY_LAM_M1";
    case KnownCocycleId::C1_LY_LAM_1: return "C1_LY_LAM_1";
    case KnownCocycleId::C2_LM_YY_LAM_1: return "C2_LM_YY_LAM_1";
    case KnownCocycleId::C_YY_MU_INT: return "C_YY_MU_INT";
  }
  return "?";
}

std::optional<KnownCocycleId> parse_known_cocycle(std::string_view name) {
  for (auto id : kAllKnownCocycles)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

bool regime_valid(KnownCocycleId id, const Params& params) {
  const bool half_odd = params.mu_class == MuClass::HalfOddInteger;
  switch (id) {
    case KnownCocycleId::VIR: return true;
    case KnownCocycleId::C_LY_LAM_M3: return half_odd && params.lambda == -3;
    case KnownCocycleId::C1_MY_LAM_M1:
    case KnownCocycleId::C2_LY_LAM_M1: return half_odd && params.lambda == -1;
    case KnownCocycleId::C1_LY_LAM_1:
    case KnownCocycleId::C2_LM_YY_LAM_1: return half_odd && params.lambda == 1;
    case KnownCocycleId::C_YY_MU_INT:
      return params.mu_class == MuClass::Integer && params.lambda == -1;
  }
  return false;
}

namespace {

Rational cubic(const Rational& m) { return m * (m * m - 1); }

// Formula value when (a, b) is in the orientation the formula is written in.
std::optional<Rational> oriented_value(KnownCocycleId id, const Params& params,
                                       const BasisIndex& a, const BasisIndex& b) {
  const Rational& mu = params.mu;
  const Rational i = a.index();
  const Rational j = b.index();
  auto is = [&](Family fa, Family fb) { return a.family == fa && b.family == fb; };

  switch (id) {
    case KnownCocycleId::VIR:
      // xi(L_n, L_m) = (n^3 - n)/12 delta_{m,-n}
      if (is(Family::L, Family::L)) return i + j == 0 ? (i * i * i - i) / 12 : Rational(0);
      break;
    case KnownCocycleId::C_LY_LAM_M3:
      // c(L_n, Y_m) = delta_{n,-m-mu}
      if (is(Family::L, Family::Y)) return i == -j - mu ? Rational(1) : Rational(0);
      break;
    case KnownCocycleId::C1_MY_LAM_M1:
      // c1(M_m, Y_n) = delta_{n,-m-3mu}
      if (is(Family::M, Family::Y)) return j == -i - 3 * mu ? Rational(1) : Rational(0);
      break;
    case KnownCocycleId::C2_LY_LAM_M1:
      // c2(L_{-m}, Y_n) = m(m+1)/2 delta_{n,m-mu}
      if (is(Family::L, Family::Y)) {
        const Rational m = -i;
        return j == m - mu ? Rational(m * (m + 1) / 2) : Rational(0);
      }
      break;
    case KnownCocycleId::C1_LY_LAM_1:
      // c1(L_{-m}, Y_n) = m(m^2-1) delta_{n,m-mu}
      if (is(Family::L, Family::Y)) {
        const Rational m = -i;
        return j == m - mu ? cubic(m) : Rational(0);
      }
      break;
    case KnownCocycleId::C2_LM_YY_LAM_1:
      // c2(L_{-m}, M_{n-2mu}) = c2(Y_{-m-mu}, Y_{n-mu}) = m(m^2-1) delta_{m,n}
      if (is(Family::L, Family::M)) {
        const Rational m = -i;
        const Rational n = j + 2 * mu;
        return m == n ? cubic(m) : Rational(0);
      }
      if (is(Family::Y, Family::Y)) {
        const Rational m = -i - mu;
        const Rational n = j + mu;
        return m == n ? cubic(m) : Rational(0);
      }
      break;
    case KnownCocycleId::C_YY_MU_INT:
      // c(Y_p, Y_q) = -delta_{q,-p-2mu} (p + mu)
      if (is(Family::Y, Family::Y)) return j == -i - 2 * mu ? Rational(-(i + mu)) : Rational(0);
      break;
  }
  return std::nullopt;
}

Rational formula_value(KnownCocycleId id, const Params& params, const BasisIndex& a,
                       const BasisIndex& b) {
  if (a == b) return 0;
  if (auto v = oriented_value(id, params, a, b)) return *v;
  if (auto v = oriented_value(id, params, b, a)) return -*v;
  return 0;
}

void require_regime(KnownCocycleId id, const Params& params) {
  if (!regime_valid(id, params))
    throw RegimeMismatch(to_string(id) + " is not defined at lambda=" + to_string(params.lambda) +
                         ", mu=" + to_string(params.mu));
}

}  // namespace

Rational known_cocycle_value(KnownCocycleId id, const Params& params, const BasisIndex& a,
                             const BasisIndex& b) {
  require_regime(id, params);
  return formula_value(id, params, a, b);
}

PairFunction known_cocycle_function(KnownCocycleId id, const Params& params) {
  require_regime(id, params);
  return [id, params](const BasisIndex& a, const BasisIndex& b) {
    return formula_value(id, params, a, b);
  };
}

Cochain2 known_cocycle(KnownCocycleId id, const Params& params,
                       const std::vector<PairKey>& pairs) {
  require_regime(id, params);
  Cochain2 out;
  for (const auto& p : pairs) out.set(p.first, p.second, formula_value(id, params, p.first, p.second));
  return out;
}

LinearFunctional normalizing_functional(const PairFunction& psi, const Params& params,
                                        const std::vector<BasisIndex>& window) {
  const Rational& lambda = params.lambda;
  const Rational& mu = params.mu;
  const bool mu_half_z = is_integer(2 * mu);
  const bool mu_half_odd = params.mu_class == MuClass::HalfOddInteger;
  const auto L0 = BasisIndex::L(0);

  LinearFunctional f;
  for (const auto& b : window) {
    const Rational n = b.index();
    switch (b.family) {
      case Family::L:
        if (n != 0)
          f.set(b, psi(L0, b) / n);
        else
          f.set(b, psi(BasisIndex::L(-1), BasisIndex::L(1)) / 2);
        break;
      case Family::M:
        if ((mu_half_z && n != -2 * mu) || !mu_half_z) {
          f.set(b, psi(L0, b) / (n + 2 * mu));
        } else if (lambda != -1) {
          const Rational k = -2 * mu - 1;
          f.set(b, -psi(BasisIndex::L(1), BasisIndex::M(static_cast<int>(k.get_num().get_si()))) /
                       (lambda + 1));
        }
        break;
      case Family::Y:
        if ((mu_half_odd && n != -mu) || !mu_half_odd) {
          f.set(b, psi(L0, b) / (n + mu));
        } else if (lambda != -3) {
          f.set(b, -2 * psi(BasisIndex::L(1), BasisIndex::Y(-mu - 1)) / (lambda + 3));
        }
        break;
    }
  }
  return f;
}

LinearFunctional normalizing_functional(const Cochain2& psi, const Params& params,
                                        const std::vector<BasisIndex>& window) {
  return normalizing_functional(psi.as_function(), params, window);
}

Normalization normalize(const PairFunction& psi, const Params& params,
                        const std::vector<BasisIndex>& window) {
  Normalization out;
  out.f = normalizing_functional(psi, params, window);
  const auto L2 = BasisIndex::L(2);
  const auto Lm2 = BasisIndex::L(-2);
  // After removing psi_f the L-L tail is b (n^3 - n); match it to xi, which
  // takes the value 1/2 on (L_2, L_{-2}).
  const Rational residual = psi(L2, Lm2) - coboundary_value(out.f, L2, Lm2, params);
  out.virasoro_scale = 2 * residual;
  out.phi = [psi, f = out.f, c = out.virasoro_scale, params](const BasisIndex& a,
                                                             const BasisIndex& b) {
    Rational v = psi(a, b) - coboundary_value(f, a, b, params);
    if (c != 0) v -= c * known_cocycle_value(KnownCocycleId::VIR, params, a, b);
    return v;
  };
  return out;
}

ExpectedH2 expected_h2(const Params& params) {
  using K = KnownCocycleId;
  const Rational& lambda = params.lambda;
  switch (params.mu_class) {
    case MuClass::NotHalfInteger:
      return {1, {K::VIR}};
    case MuClass::HalfOddInteger:
      if (lambda == -3) return {2, {K::VIR, K::C_LY_LAM_M3}};
      if (lambda == -1) return {3, {K::VIR, K::C1_MY_LAM_M1, K::C2_LY_LAM_M1}};
      if (lambda == 1) return {3, {K::VIR, K::C1_LY_LAM_1, K::C2_LM_YY_LAM_1}};
      return {1, {K::VIR}};
    case MuClass::Integer:
      if (lambda == -1) return {2, {K::VIR, K::C_YY_MU_INT}};
      return {1, {K::VIR}};
  }
  return {};
}

}  // namespace svcoh
