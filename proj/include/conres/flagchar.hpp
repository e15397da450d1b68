#pragma once

// Graded characters of S(A) on H*(Γ!_A(n)) and Poincaré polynomials of the
// quotients Γ_A(n) = Γ!_A(n) / S(A), over ℂ.
//
// H*(Γ!_A(n)) is the W_A-invariant part of the S_n coinvariant algebra,
// W_A = S_{a_1} x ... x S_{a_l} x S_δ. A block permutation σ normalizes W_A,
// so its trace on the invariants is the W_A-average of traces of σu on the
// full coinvariant algebra. All characters here are real, so isotypic
// multiplicities are plain averages.

#include <map>
#include <numeric>
#include <vector>

#include "conres/combinat.hpp"
#include "conres/errors.hpp"
#include "conres/poly.hpp"

namespace conres {

enum class Character { trivial, sign };

/// Graded trace of a permutation of cycle type mu on the coinvariant algebra
/// of S_n: Π_{i<=n}(1 - q^i) / Π_j (1 - q^{mu_j}).
inline QPoly coinvariant_trace(int n, const Partition& mu) {
  if (std::accumulate(mu.begin(), mu.end(), 0) != n) throw DomainError("coinvariant_trace: mu must partition n");
  QPoly den = QPoly::constant(1);
  for (int part : mu) {
    if (part < 1) throw DomainError("coinvariant_trace: parts must be positive");
    den *= QPoly::constant(1) - QPoly::monomial(part);
  }
  return q_factorial_product<QVariable>(n).divided_exactly(den);
}

namespace detail {

inline void check_class(const MultiIndex& A, int n, const BlockClass& cls) {
  if (A.size() > n) throw DomainError("multiindex " + A.key() + " does not fit in dimension " + std::to_string(n));
  if (!cls.belongs_to(A)) throw DomainError("conjugacy class " + cls.to_string() + " is not a class of S(" + A.key() + ")");
}

/// One wreath factor: the average over u_1..u_c in S_a of
/// 1/det(1 - q·(cycle of blocks twisted by u)), written as
/// numerator / (scalar · denominator) with denominator Π_{j<=a}(1 - q^{cj}).
struct WreathFactor {
  QPoly numerator;
  QPoly denominator;
  Coeff scalar = 1;
};

inline WreathFactor wreath_factor(int cycle_length, int block_size) {
  WreathFactor f;
  f.denominator = q_factorial_product<QVariable>(block_size, cycle_length);
  f.scalar = factorial(block_size);
  for (const auto& lambda : partitions(block_size, 1)) {
    QPoly term_den = QPoly::constant(1);
    for (int part : lambda) term_den *= QPoly::constant(1) - QPoly::monomial(cycle_length * part);
    f.numerator += f.denominator.divided_exactly(term_den) * (f.scalar / z_value(lambda));
  }
  return f;
}

}  // namespace detail

/// Graded trace of any σ in cls on H*(Γ!_A(n)), by the wreath-product
/// reduction: each block-cycle (c, a) contributes Σ_{λ⊢a} z_λ^{-1}
/// Π_k 1/(1 - q^{cλ_k}), the free part of size δ contributes the same with
/// c = 1, and the product is multiplied by Π_{i<=n}(1 - q^i).
inline QPoly gamma_trace(const MultiIndex& A, int n, const BlockClass& cls) {
  detail::check_class(A, n, cls);
  QPoly numerator = q_factorial_product<QVariable>(n);
  QPoly denominator = QPoly::constant(1);
  Coeff scalar = 1;
  auto absorb = [&](int c, int a) {
    auto f = detail::wreath_factor(c, a);
    numerator *= f.numerator;
    denominator *= f.denominator;
    scalar = detail::checked_mul(scalar, f.scalar);
  };
  for (auto [c, a] : cls.cycles()) absorb(c, a);
  absorb(1, A.liberty(n));
  return numerator.divided_exactly(denominator).divided_exactly(scalar);
}

struct NaiveBudget {
  int max_n = 8;
};

/// Oracle for gamma_trace: explicit average of coinvariant_trace over every
/// element u of W_A, for a concrete representative σ of cls.
inline QPoly gamma_trace_naive(const MultiIndex& A, int n, const BlockClass& cls, NaiveBudget budget = {}) {
  detail::check_class(A, n, cls);
  if (n > budget.max_n)
    throw ResourceError("gamma_trace_naive: n = " + std::to_string(n) + " exceeds budget " + std::to_string(budget.max_n));

  // Blocks of A in order, then the free block of size δ.
  std::vector<int> block_start, block_size;
  int pos = 0;
  for (int a : A.parts()) {
    block_start.push_back(pos);
    block_size.push_back(a);
    pos += a;
  }
  const int delta = n - pos;
  if (delta > 0) {
    block_start.push_back(pos);
    block_size.push_back(delta);
  }

  // σ: cycles of consecutive equal-size blocks with lengths from ρ.
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::size_t block = 0;
  for (const auto& b : cls.per_size) {
    for (int c : b.rho) {
      for (int j = 0; j < c; ++j) {
        const auto from = block + static_cast<std::size_t>(j);
        const auto to = block + static_cast<std::size_t>((j + 1) % c);
        for (int k = 0; k < b.part_size; ++k) sigma[block_start[from] + k] = block_start[to] + k;
      }
      block += static_cast<std::size_t>(c);
    }
  }

  // Odometer over Π S_{size} acting inside each block.
  std::vector<std::vector<int>> local(block_size.size());
  for (std::size_t j = 0; j < block_size.size(); ++j) {
    local[j].resize(static_cast<std::size_t>(block_size[j]));
    std::iota(local[j].begin(), local[j].end(), 0);
  }
  std::map<Partition, QPoly> memo;
  QPoly sum;
  Coeff count = 0;
  std::vector<int> composed(static_cast<std::size_t>(n));
  while (true) {
    std::vector<int> u(static_cast<std::size_t>(n));
    std::iota(u.begin(), u.end(), 0);
    for (std::size_t j = 0; j < local.size(); ++j)
      for (int k = 0; k < block_size[j]; ++k) u[block_start[j] + k] = block_start[j] + local[j][k];
    for (int x = 0; x < n; ++x) composed[x] = sigma[u[x]];
    auto type = cycle_type(composed);
    auto it = memo.find(type);
    if (it == memo.end()) it = memo.emplace(type, coinvariant_trace(n, type)).first;
    sum += it->second;
    ++count;

    std::size_t j = 0;
    while (j < local.size() && !std::next_permutation(local[j].begin(), local[j].end())) ++j;
    if (j == local.size()) break;
  }
  return sum.divided_exactly(count);
}

/// Isotypic Poincaré series of H*(Γ_A(n), ℂ): trivial gives ordinary
/// cohomology of the quotient, sign gives cohomology with the sign local
/// system.
inline QPoly gamma_poincare(const MultiIndex& A, int n, Character chi) {
  QPoly sum;
  for (const auto& cls : conjugacy_classes(A)) {
    const Coeff weight = chi == Character::sign ? cls.sign() : 1;
    sum += gamma_trace(A, n, cls) * detail::checked_mul(cls.class_size, weight);
  }
  QPoly r = sum.divided_exactly(A.symmetry_order());
  if (!r.nonnegative()) throw ConsistencyError("negative isotypic dimension for Γ_" + A.key() + "(" + std::to_string(n) + ")");
  return r;
}

}  // namespace conres
