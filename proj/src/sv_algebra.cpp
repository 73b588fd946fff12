#include "svcoh/sv_algebra.hpp"

#include <cstdlib>
#include <stdexcept>

namespace svcoh {

BasisIndex BasisIndex::Y2(int twice_p) { return make(Family::Y, twice_p); }

BasisIndex BasisIndex::Y(const Rational& p) {
  Rational twice = 2 * p;
  if (!is_integer(twice))
    throw std::invalid_argument("Y index must be half an odd integer");
  return make(Family::Y, static_cast<int>(twice.get_num().get_si()));
}

BasisIndex BasisIndex::make(Family f, int idx2) {
  const bool odd = (idx2 % 2) != 0;
  if ((f == Family::Y) != odd)
    throw std::invalid_argument("basis index parity does not match family");
  return {f, idx2};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::Y: return "Y";
    case Family::M: return "M";
  }
  return "?";
}

std::string to_string(const BasisIndex& b) {
  return to_string(b.family) + "_" + to_string(b.index());
}

std::string to_string(MuClass c) {
  switch (c) {
    case MuClass::NotHalfInteger: return "NotHalfInteger";
    case MuClass::Integer: return "Integer";
    case MuClass::HalfOddInteger: return "HalfOddInteger";
  }
  return "?";
}

MuClass classify_mu(const Rational& mu) {
  if (is_integer(mu)) return MuClass::Integer;
  if (is_half_odd(mu)) return MuClass::HalfOddInteger;
  return MuClass::NotHalfInteger;
}

MuClass classify_mu(const Params& params) { return classify_mu(params.mu); }

Params::Params(Rational lambda_, Rational mu_)
    : lambda(std::move(lambda_)), mu(std::move(mu_)), mu_class(classify_mu(mu)) {}

void Element::add(const BasisIndex& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Element::add(const Element& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [b, c] : other.terms_) add(b, scale * c);
}

Rational Element::coefficient(const BasisIndex& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

Element operator*(const Rational& s, const Element& e) {
  Element out;
  out.add(e, s);
  return out;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + to_string(b);
  }
  return out;
}

std::optional<BracketTerm> bracket_term(const BasisIndex& a, const BasisIndex& b,
                                        const Params& params) {
  // Work with (a, b) in family order and flip the sign afterwards.
  if (b.family < a.family) {
    auto t = bracket_term(b, a, params);
    if (t) t->coeff = -t->coeff;
    return t;
  }
  const Rational n = a.index();
  const Rational m = b.index();
  const int sum2 = a.idx2 + b.idx2;
  Rational c;
  Family target = Family::L;

  switch (a.family) {
    case Family::L:
      switch (b.family) {
        case Family::L:
          c = m - n;
          target = Family::L;
          break;
        case Family::Y:
          c = m - (params.lambda + 1) * n / 2 + params.mu;
          target = Family::Y;
          break;
        case Family::M:
          c = m - params.lambda * n + 2 * params.mu;
          target = Family::M;
          break;
      }
      break;
    case Family::Y:
      if (b.family != Family::Y) return std::nullopt;
      c = m - n;
      target = Family::M;
      break;
    case Family::M:
      return std::nullopt;
  }
  if (c == 0) return std::nullopt;
  return BracketTerm{BasisIndex{target, sum2}, c};
}

Element bracket(const BasisIndex& a, const BasisIndex& b, const Params& params) {
  auto t = bracket_term(a, b, params);
  if (!t) return {};
  return Element(t->target, t->coeff);
}

Element bracket_elements(const Element& x, const Element& y, const Params& params) {
  Element out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (auto t = bracket_term(a, b, params)) out.add(t->target, ca * cb * t->coeff);
  return out;
}

Rational degree(const BasisIndex& b, const Params& params) {
  switch (b.family) {
    case Family::L: return b.index();
    case Family::Y: return b.index() + params.mu;
    case Family::M: return b.index() + 2 * params.mu;
  }
  return 0;
}

Element jacobi_defect(const BasisIndex& a, const BasisIndex& b, const BasisIndex& c,
                      const Params& params) {
  Element out;
  const Element ec(c), ea(a), eb(b);
  out.add(bracket_elements(bracket(a, b, params), ec, params));
  out.add(bracket_elements(bracket(b, c, params), ea, params));
  out.add(bracket_elements(bracket(c, a, params), eb, params));
  return out;
}

std::vector<BasisIndex> enumerate_window(int N) {
  if (N < 1) throw std::invalid_argument("window size must be >= 1");
  std::vector<BasisIndex> out;
  out.reserve(6 * N + 4);
  for (int i = -2 * N; i <= 2 * N; i += 2) out.push_back({Family::L, i});
  for (int i = -2 * N - 1; i <= 2 * N + 1; i += 2) out.push_back({Family::Y, i});
  for (int i = -2 * N; i <= 2 * N; i += 2) out.push_back({Family::M, i});
  return out;
}

bool in_window(const BasisIndex& b, int N) {
  const int bound = b.family == Family::Y ? 2 * N + 1 : 2 * N;
  return std::abs(b.idx2) <= bound;
}

std::vector<BasisIndex> degree_zero_basis(const Params& params) {
  std::vector<BasisIndex> out{BasisIndex::L(0)};
  if (params.mu_class == MuClass::HalfOddInteger)
    out.push_back(BasisIndex::Y(-params.mu));
  const Rational twice_mu = 2 * params.mu;
  if (is_integer(twice_mu))
    out.push_back(BasisIndex::M(static_cast<int>(-twice_mu.get_num().get_si())));
  return out;
}

}  // namespace svcoh
