#pragma once

// Stabilization of cohomological E_1 terms as the ambient dimension grows.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conres/combinat.hpp"
#include "conres/errors.hpp"
#include "conres/poly.hpp"
#include "conres/resolution.hpp"

namespace conres {

struct StabReport {
  MultiIndex A;
  int degree = 0;  // real cohomological degree of Γ!_A(m); clamped to >= 0
  int stab_n = 0;
  QPoly witness;  // coefficients in q-degree <= degree/2 at m = stab_n
};

/// Smallest m >= |A| past which H^{<=degree}(Γ!_A(m)) stops changing, found
/// by scanning Gaussian-multinomial coefficients; m is also kept >= |A| +
/// degree/2, past which the low coefficients are provably constant.
inline StabReport stab_index(const MultiIndex& A, int degree) {
  StabReport r;
  r.A = A;
  r.degree = std::max(degree, 0);
  const int qdeg = r.degree / 2;
  const int guard = A.size() + qdeg;
  auto low = [&](int m) { return gauss_multinomial(m, A.parts()).truncated(qdeg); };
  int m = std::max(A.size(), guard);
  for (; !(low(m) == low(m + 1) && low(m) == low(m + 2)); ++m) {
  }
  r.stab_n = m;
  r.witness = low(m);
  return r;
}

struct StableBound {
  int n = 0;
  std::optional<std::string> note;
};

/// max over A of complexity -p of stab(A, p + q - 2#A).
inline StableBound e1_stable_bound(int p, int q) {
  if (p > 0) throw DomainError("e1_stable_bound: p must be <= 0");
  if (p + q < 0) throw DomainError("e1_stable_bound: p + q must be >= 0");
  StableBound b;
  const auto indices = multiindices_with_complexity(-p);
  if (indices.empty()) {
    b.n = 2;
    b.note = "no multiindex of complexity 0; only the unit class lives in column p = 0";
    return b;
  }
  for (const auto& A : indices) b.n = std::max(b.n, stab_index(A, p + q - 2 * A.length()).stab_n);
  return b;
}

struct StableCell {
  int p = 0;
  int q = 0;
  int n_star = 0;
  std::array<Coeff, 3> ranks{};  // at n*, n*+1, n*+2
};

/// Cohomological E_1 ranks for p_min <= p <= 0 and 0 <= p + q <= total_max,
/// evaluated at the stable bound and the next two dimensions.
inline std::vector<StableCell> stable_table(int p_min, int total_max, const Resolution& resolution) {
  if (p_min > 0) throw DomainError("stable_table: p_min must be <= 0");
  std::map<int, SpectralTable> tables;
  auto table = [&](int n) -> const SpectralTable& {
    auto it = tables.find(n);
    if (it == tables.end()) it = tables.emplace(n, resolution.spectral_table(n)).first;
    return it->second;
  };
  std::vector<StableCell> out;
  for (int p = 0; p >= p_min; --p) {
    for (int total = 0; total <= total_max; ++total) {
      StableCell cell;
      cell.p = p;
      cell.q = total - p;
      cell.n_star = e1_stable_bound(p, cell.q).n;
      for (int k = 0; k < 3; ++k) cell.ranks[k] = table(cell.n_star + k).cohomological_rank(p, cell.q);
      if (cell.ranks[0] != cell.ranks[1] || cell.ranks[0] != cell.ranks[2])
        throw ConsistencyError("E_1^{" + std::to_string(p) + "," + std::to_string(cell.q) +
                               "} is not stable at n* = " + std::to_string(cell.n_star));
      out.push_back(cell);
    }
  }
  return out;
}

}  // namespace conres
