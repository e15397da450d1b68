#pragma once

// H*(H(n) \ Σ(n)) = Z[c^1, ..., c^n] / (symmetric polynomials of positive
// degree), with normal forms on the Artin basis Π (c^i)^{e_i}, e_i <= n - i.
//
// Reduction uses the Gröbner basis of the symmetric ideal for the lex order
// with c^n most significant: for each j, h_{n+1-j}(c^1, ..., c^j) has leading
// term (c^j)^{n+1-j}. For j = n this is e_1, eliminating c^n.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "conres/errors.hpp"
#include "conres/poly.hpp"

namespace conres {

/// Exponents (e_1, ..., e_n) of c^1 ... c^n.
using Exponents = std::vector<int>;

/// A formal integer combination of monomials, not necessarily reduced.
using Combination = std::map<Exponents, Coeff>;

namespace detail {

/// Lex order with the last variable most significant.
struct HighVariableFirst {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  }
};

/// All exponent vectors of length `vars` padded to n with total degree d.
inline void monomials_rec(int n, int vars, int d, int index, Exponents& cur, std::vector<Exponents>& out) {
  if (index == vars - 1) {
    cur[index] = d;
    out.push_back(cur);
    cur[index] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[index] = e;
    monomials_rec(n, vars, d - e, index + 1, cur, out);
  }
  cur[index] = 0;
}

inline std::vector<Exponents> monomials_of_degree(int n, int vars, int d) {
  std::vector<Exponents> out;
  if (vars == 0) {
    if (d == 0) out.emplace_back(static_cast<std::size_t>(n), 0);
    return out;
  }
  Exponents cur(static_cast<std::size_t>(n), 0);
  monomials_rec(n, vars, d, 0, cur, out);
  return out;
}

}  // namespace detail

class RingElement;
RingElement normal_form(const Combination& expr, int n);

/// An element of the ring in normal form. Only normal_form() constructs
/// nonzero elements.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(int n) : n_(n) {}

  int n() const { return n_; }
  const Combination& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Component of q-degree d (real degree 2d).
  RingElement component(int d) const {
    RingElement r(n_);
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    return r;
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    Combination sum = a.terms_;
    for (const auto& [e, c] : b.terms_) sum[e] = detail::checked_add(sum[e], c);
    return normal_form(sum, a.n_);
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) { return a + b * Coeff{-1}; }
  friend RingElement operator*(const RingElement& a, Coeff k) {
    Combination scaled;
    for (const auto& [e, c] : a.terms_) scaled[e] = detail::checked_mul(c, k);
    return normal_form(scaled, a.n_);
  }

  friend bool operator==(const RingElement&, const RingElement&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const Coeff mag = c < 0 ? -c : c;
      const bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      if (mag != 1 || unit) os << mag;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "c" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

  static void same_ring(const RingElement& a, const RingElement& b) {
    if (a.n_ != b.n_) throw DomainError("ring elements from different n");
  }

 private:
  friend RingElement normal_form(const Combination& expr, int n);
  int n_ = 0;
  Combination terms_;
};

inline bool is_artin(const Exponents& e) {
  const int n = static_cast<int>(e.size());
  for (int i = 0; i < n; ++i)
    if (e[i] > n - 1 - i) return false;
  return true;
}

/// Canonical representative of expr on the Artin basis. Terms are reduced
/// largest-first, so every monomial is rewritten at most once.
inline RingElement normal_form(const Combination& expr, int n) {
  if (n < 1) throw DomainError("normal_form: n must be >= 1");
  // Tails of the relations: (c^j)^{n+1-j} = -Σ tail_j (j is 0-based here).
  std::vector<std::vector<Exponents>> tail(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int k = n - j;  // degree of the relation for variable c^{j+1}
    for (auto& m : detail::monomials_of_degree(n, j + 1, k))
      if (m[j] != k) tail[j].push_back(std::move(m));
  }

  std::map<Exponents, Coeff, detail::HighVariableFirst> pending;
  for (const auto& [e, c] : expr) {
    if (static_cast<int>(e.size()) != n) throw DomainError("normal_form: exponent vector has wrong length");
    for (int x : e)
      if (x < 0) throw DomainError("normal_form: negative exponent");
    if (c != 0) pending[e] = detail::checked_add(pending[e], c);
  }

  RingElement result(n);
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Exponents e = node.key();
    const Coeff c = node.mapped();
    if (c == 0) continue;
    int violating = -1;
    for (int j = n - 1; j >= 0; --j)
      if (e[j] > n - 1 - j) {
        violating = j;
        break;
      }
    if (violating < 0) {
      result.terms_.emplace(e, c);
      continue;
    }
    Exponents rest = e;
    rest[violating] -= n - violating;
    for (const auto& m : tail[violating]) {
      Exponents prod = rest;
      for (int i = 0; i < n; ++i) prod[i] += m[i];
      Coeff& slot = pending[prod];
      slot = detail::checked_add(slot, -c);
    }
  }
  for (auto it = result.terms_.begin(); it != result.terms_.end();)
    it = it->second == 0 ? result.terms_.erase(it) : std::next(it);
  return result;
}

inline RingElement cup(const RingElement& x, const RingElement& y) {
  RingElement::same_ring(x, y);
  Combination prod;
  for (const auto& [ex, cx] : x.terms())
    for (const auto& [ey, cy] : y.terms()) {
      Exponents e(ex.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      prod[e] = detail::checked_add(prod[e], detail::checked_mul(cx, cy));
    }
  return normal_form(prod, x.n());
}

inline RingElement ring_unit(int n) { return normal_form({{Exponents(static_cast<std::size_t>(n), 0), 1}}, n); }

/// The class of c^i (1-based).
inline RingElement generator(int n, int i) {
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  Exponents e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return normal_form({{e, 1}}, n);
}

/// e_k(c^1, ..., c^n) as an unreduced combination.
inline Combination elementary_symmetric(int n, int k) {
  Combination out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    out[Exponents(pick.begin(), pick.end())] += 1;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

/// Artin basis monomials, ordered by degree then descending lex.
inline std::vector<Exponents> artin_basis(int n) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (int x = 0; x <= n - 1 - i; ++x) {
      e[i] = x;
      rec(i + 1);
    }
    e[i] = 0;
  };
  if (n >= 1) rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return out;
}

/// Number of Artin basis elements by q-degree.
inline QPoly artin_basis_poincare(int n) {
  QPoly r;
  for (const auto& e : artin_basis(n)) r += QPoly::monomial(std::accumulate(e.begin(), e.end(), 0));
  return r;
}

/// Π_{j=2..n} (1 + q + ... + q^{j-1}).
inline QPoly ring_poincare(int n) {
  if (n < 0) throw DomainError("ring_poincare: n must be >= 0");
  QPoly r = QPoly::constant(1);
  for (int j = 2; j <= n; ++j) {
    QPoly f;
    for (int k = 0; k < j; ++k) f += QPoly::monomial(k);
    r *= f;
  }
  return r;
}

/// A degree-2 class Σ α_i c^i; sequences differing by a constant are the same
/// class.
class DegreeTwoClass {
 public:
  explicit DegreeTwoClass(std::vector<Coeff> alpha) : alpha_(std::move(alpha)) {}

  const std::vector<Coeff>& alpha() const { return alpha_; }
  int n() const { return static_cast<int>(alpha_.size()); }

  RingElement element() const {
    if (alpha_.empty()) throw DomainError("empty degree-two class");
    Combination expr;
    for (int i = 0; i < n(); ++i) {
      Exponents e(alpha_.size(), 0);
      e[static_cast<std::size_t>(i)] = 1;
      expr[e] = alpha_[static_cast<std::size_t>(i)];
    }
    return normal_form(expr, n());
  }

 private:
  std::vector<Coeff> alpha_;
};

/// (α_2 - α_1, ..., α_n - α_{n-1}): the shift operator minus identity on
/// degree-2 coefficient sequences.
inline DegreeTwoClass shift_difference(const DegreeTwoClass& alpha) {
  const auto& a = alpha.alpha();
  if (a.size() < 2) throw DomainError("shift_difference: sequence must have length >= 2");
  std::vector<Coeff> d(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) d[i] = detail::checked_add(a[i + 1], -a[i]);
  return DegreeTwoClass(std::move(d));
}

/// Smallest p such that α (mod constants) is an integer-valued polynomial of
/// degree <= p: the index of the last nonzero finite difference.
inline int h2_order(const DegreeTwoClass& alpha) {
  if (alpha.alpha().empty()) throw DomainError("h2_order: empty sequence");
  std::vector<Coeff> d = alpha.alpha();
  int order = 0;
  for (int k = 1; d.size() > 1; ++k) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = detail::checked_add(d[i + 1], -d[i]);
    d.pop_back();
    if (std::any_of(d.begin(), d.end(), [](Coeff x) { return x != 0; })) order = k;
  }
  return order;
}

/// Normal form of Σ_i i (c^i)^2.
inline RingElement first_order_h4(int n) {
  if (n < 2) throw DomainError("first_order_h4: n must be >= 2");
  Combination expr;
  for (int i = 1; i <= n; ++i) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 2;
    expr[e] = i;
  }
  return normal_form(expr, n);
}

}  // namespace conres
