#pragma once

// Sparse integer Laurent polynomials in one variable.
//
// Two instantiations are used throughout: GradedDims (variable t, one unit =
// one real homological degree) and QPoly (variable q, one unit = two real
// degrees, exponents >= 0). The only bridge between them is to_t().

#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conres/errors.hpp"

namespace conres {

struct TVariable {
  static constexpr char symbol = 't';
  static constexpr bool nonnegative = false;
};

struct QVariable {
  static constexpr char symbol = 'q';
  static constexpr bool nonnegative = true;
};

template <class Var>
class Laurent {
 public:
  using Terms = std::map<int, Coeff>;

  Laurent() = default;

  static Laurent constant(Coeff c) { return monomial(0, c); }

  static Laurent monomial(int exponent, Coeff c = 1) {
    Laurent p;
    p.add_term(exponent, c);
    return p;
  }

  /// Dense coefficients c0 + c1 x + c2 x^2 + ..., multiplied by x^start.
  static Laurent dense(std::initializer_list<Coeff> coefficients, int start = 0) {
    Laurent p;
    int e = start;
    for (Coeff c : coefficients) p.add_term(e++, c);
    return p;
  }

  static Laurent from_terms(const std::vector<std::pair<int, Coeff>>& terms) {
    Laurent p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff operator[](int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  int min_exponent() const {
    if (is_zero()) throw DomainError("min_exponent of the zero polynomial");
    return terms_.begin()->first;
  }
  int max_exponent() const {
    if (is_zero()) throw DomainError("max_exponent of the zero polynomial");
    return terms_.rbegin()->first;
  }

  Coeff at_one() const {
    Coeff s = 0;
    for (auto [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  bool nonnegative() const {
    for (auto [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  bool is_palindromic() const {
    if (is_zero()) return true;
    const int lo = min_exponent(), hi = max_exponent();
    for (auto [e, c] : terms_)
      if ((*this)[lo + hi - e] != c) return false;
    return true;
  }

  /// Multiply by x^k.
  Laurent shifted(int k) const {
    Laurent r;
    for (auto [e, c] : terms_) r.add_term(e + k, c);
    return r;
  }

  /// P(x) -> P(x^c).
  Laurent substitute_power(int c) const {
    if (c < 1) throw DomainError("substitute_power: exponent factor must be >= 1");
    Laurent r;
    for (auto [e, coeff] : terms_) r.add_term(e * c, coeff);
    return r;
  }

  /// Exact quotient; throws ConsistencyError if the divisor does not divide.
  Laurent divided_exactly(const Laurent& divisor) const {
    if (divisor.is_zero()) throw ConsistencyError("division by the zero polynomial");
    if (is_zero()) return {};
    const int shift = min_exponent() - divisor.min_exponent();
    std::map<int, Coeff> rem;
    for (auto [e, c] : terms_) rem[e - min_exponent()] = c;
    std::map<int, Coeff> den;
    for (auto [e, c] : divisor.terms_) den[e - divisor.min_exponent()] = c;
    const int den_deg = den.rbegin()->first;
    const Coeff lead = den.rbegin()->second;

    Laurent quotient;
    while (!rem.empty()) {
      auto [top, c] = *rem.rbegin();
      if (top < den_deg || c % lead != 0)
        throw ConsistencyError("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
      const Coeff factor = c / lead;
      const int qe = top - den_deg;
      quotient.add_term(qe + shift, factor);
      for (auto [e, d] : den) {
        Coeff& slot = rem[e + qe];
        slot = detail::checked_add(slot, -detail::checked_mul(factor, d));
        if (slot == 0) rem.erase(e + qe);
      }
    }
    return quotient;
  }

  /// Coefficient-wise exact division by an integer.
  Laurent divided_exactly(Coeff k) const {
    if (k == 0) throw ConsistencyError("division by zero");
    Laurent r;
    for (auto [e, c] : terms_) {
      if (c % k != 0) throw ConsistencyError("inexact scalar division of " + to_string() + " by " + std::to_string(k));
      r.add_term(e, c / k);
    }
    return r;
  }

  /// Keep only exponents <= max_exponent.
  Laurent truncated(int max_exp) const {
    Laurent r;
    for (auto [e, c] : terms_)
      if (e <= max_exp) r.add_term(e, c);
    return r;
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent& operator*=(Coeff k) { return *this = *this * k; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) { return a * Coeff{-1}; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, detail::checked_mul(ca, cb));
    return r;
  }
  friend Laurent operator*(const Laurent& a, Coeff k) {
    Laurent r;
    for (auto [e, c] : a.terms_) r.add_term(e, detail::checked_mul(c, k));
    return r;
  }
  friend Laurent operator*(Coeff k, const Laurent& a) { return a * k; }

  Laurent pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    Laurent r = constant(1);
    for (int j = 0; j < k; ++j) r *= *this;
    return r;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Human form, e.g. "1 - t + 2t^3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
      Coeff mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag;
      os << Var::symbol;
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

 private:
  void add_term(int exponent, Coeff c) {
    if (c == 0) return;
    if constexpr (Var::nonnegative) {
      if (exponent < 0) throw DomainError(std::string("negative exponent in polynomial in ") + Var::symbol);
    }
    Coeff& slot = terms_[exponent];
    slot = detail::checked_add(slot, c);
    if (slot == 0) terms_.erase(exponent);
  }

  Terms terms_;
};

using GradedDims = Laurent<TVariable>;
using QPoly = Laurent<QVariable>;

/// q -> t^2.
inline GradedDims to_t(const QPoly& p) {
  GradedDims r;
  for (auto [e, c] : p.terms()) r += GradedDims::monomial(2 * e, c);
  return r;
}

/// Π (1 - x^{step*j}) for j = 1..count.
template <class Var>
Laurent<Var> q_factorial_product(int count, int step = 1) {
  auto r = Laurent<Var>::constant(1);
  for (int j = 1; j <= count; ++j) r *= Laurent<Var>::constant(1) - Laurent<Var>::monomial(step * j);
  return r;
}

}  // namespace conres
