#pragma once

// Partitions, multiindices, block-permutation conjugacy classes and
// Gaussian multinomials.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conres/errors.hpp"
#include "conres/poly.hpp"

namespace conres {

/// Weakly decreasing list of positive integers.
using Partition = std::vector<int>;

namespace detail {

inline void partitions_rec(int remaining, int max_part, int min_part, Partition& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= min_part; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, min_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of m with every part >= min_part, lexicographically
/// decreasing: (6), (4,2), (3,3), (2,2,2) for (6, 2). m = 0 yields the empty
/// partition.
inline std::vector<Partition> partitions(int m, int min_part = 1) {
  if (m < 0) throw DomainError("partitions: negative integer");
  if (min_part < 1) throw DomainError("partitions: min_part must be >= 1");
  std::vector<Partition> out;
  Partition prefix;
  detail::partitions_rec(m, m, min_part, prefix, out);
  return out;
}

inline Coeff factorial(int k) {
  if (k < 0) throw DomainError("factorial of a negative integer");
  Coeff r = 1;
  for (int j = 2; j <= k; ++j) r = detail::checked_mul(r, j);
  return r;
}

/// z_λ = Π k^{m_k} m_k!, the order of the centralizer of a permutation of
/// cycle type λ.
inline Coeff z_value(const Partition& lambda) {
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  Coeff z = 1;
  for (auto [k, m] : mult) {
    for (int j = 0; j < m; ++j) z = detail::checked_mul(z, k);
    z = detail::checked_mul(z, factorial(m));
  }
  return z;
}

/// Cycle type of a permutation given as an image vector, sorted decreasing.
inline Partition cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  Partition type;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

/// An eigenvalue-multiplicity index A = (a_1 >= ... >= a_l), every a_i >= 2.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (parts_[j] < 2) throw DomainError("multiindex parts must be >= 2");
      if (j > 0 && parts_[j] > parts_[j - 1]) throw DomainError("multiindex parts must be weakly decreasing");
    }
  }

  /// Parses "3,2,2". Whitespace is not accepted.
  static MultiIndex parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return MultiIndex{};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw DomainError("malformed multiindex '" + text + "'");
      }
      if (used != item.size()) throw DomainError("malformed multiindex '" + text + "'");
      parts.push_back(value);
    }
    return MultiIndex(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// |A|
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// #A
  int length() const { return static_cast<int>(parts_.size()); }
  int complexity() const { return size() - length(); }

  /// δ(A) = n - |A|.
  int liberty(int n) const {
    if (size() > n) throw DomainError("multiindex " + key() + " does not fit in dimension " + std::to_string(n));
    return n - size();
  }

  /// Distinct part sizes with multiplicities, decreasing by size.
  std::vector<std::pair<int, int>> multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int part : parts_) {
      if (!out.empty() && out.back().first == part)
        ++out.back().second;
      else
        out.emplace_back(part, 1);
    }
    return out;
  }

  /// |S(A)| = Π m_a!.
  Coeff symmetry_order() const {
    Coeff r = 1;
    for (auto [a, m] : multiplicities()) r = detail::checked_mul(r, factorial(m));
    return r;
  }

  /// "3,2,2"
  std::string key() const {
    std::string s;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(parts_[j]);
    }
    return s;
  }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> parts_;
};

/// All multiindices with |A| <= n and 1 <= complexity <= max_complexity,
/// grouped by complexity; inside a group the order is lexicographically
/// decreasing ((3) before (2,2)).
inline std::map<int, std::vector<MultiIndex>> multiindices(int n, int max_complexity) {
  std::map<int, std::vector<MultiIndex>> groups;
  if (n < 2 || max_complexity < 1) return groups;
  std::vector<Partition> all;
  for (int m = 2; m <= n; ++m)
    for (auto& p : partitions(m, 2)) all.push_back(std::move(p));
  std::sort(all.begin(), all.end(), std::greater<>{});
  for (auto& p : all) {
    MultiIndex a(p);
    if (a.complexity() <= max_complexity) groups[a.complexity()].push_back(std::move(a));
  }
  return groups;
}

/// Every multiindex with |A| <= n, ordered by complexity then as above.
inline std::vector<MultiIndex> all_multiindices(int n) {
  std::vector<MultiIndex> out;
  for (auto& [c, group] : multiindices(n, n)) out.insert(out.end(), group.begin(), group.end());
  return out;
}

/// Multiindices of a fixed complexity with no ambient bound.
inline std::vector<MultiIndex> multiindices_with_complexity(int complexity) {
  std::vector<MultiIndex> out;
  if (complexity < 1) return out;
  for (auto p : partitions(complexity, 1)) {
    for (int& part : p) ++part;
    out.emplace_back(std::move(p));
  }
  return out;
}

/// Cycle type ρ ⊢ m of the permutation of the m blocks of size part_size.
struct BlockCycleType {
  int part_size = 0;
  int multiplicity = 0;
  Partition rho;

  friend bool operator==(const BlockCycleType&, const BlockCycleType&) = default;
};

/// A conjugacy class of S(A) = Π_a S_{m_a}.
struct BlockClass {
  std::vector<BlockCycleType> per_size;
  Coeff class_size = 1;

  bool is_trivial() const {
    for (const auto& b : per_size)
      for (int c : b.rho)
        if (c != 1) return false;
    return true;
  }

  /// Block-cycles as (cycle length c, block size a).
  std::vector<std::pair<int, int>> cycles() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : per_size)
      for (int c : b.rho) out.emplace_back(c, b.part_size);
    return out;
  }

  /// Sign of the permutation of blocks: Π (-1)^{c-1}.
  int sign() const {
    int s = 1;
    for (auto [c, a] : cycles())
      if ((c - 1) % 2) s = -s;
    return s;
  }

  bool belongs_to(const MultiIndex& A) const {
    auto mult = A.multiplicities();
    if (mult.size() != per_size.size()) return false;
    for (std::size_t j = 0; j < mult.size(); ++j) {
      const auto& b = per_size[j];
      if (b.part_size != mult[j].first || b.multiplicity != mult[j].second) return false;
      if (std::accumulate(b.rho.begin(), b.rho.end(), 0) != b.multiplicity) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& b : per_size) {
      if (!s.empty()) s += ' ';
      s += std::to_string(b.part_size) + ":(";
      for (std::size_t j = 0; j < b.rho.size(); ++j) s += (j ? "," : "") + std::to_string(b.rho[j]);
      s += ')';
    }
    return s;
  }

  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

/// Conjugacy classes of S(A), in the product order of partitions(m) for each
/// distinct size (largest size varies slowest). The first class is the
/// trivial one for every A.
inline std::vector<BlockClass> conjugacy_classes(const MultiIndex& A) {
  std::vector<BlockClass> out{BlockClass{}};
  for (auto [a, m] : A.multiplicities()) {
    std::vector<BlockClass> next;
    auto rhos = partitions(m, 1);
    std::reverse(rhos.begin(), rhos.end());  // (1,...,1) first
    for (const auto& cls : out) {
      for (const auto& rho : rhos) {
        BlockClass c = cls;
        c.per_size.push_back({a, m, rho});
        c.class_size = detail::checked_mul(c.class_size, factorial(m) / z_value(rho));
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Gaussian binomial [m; k]_q by the q-Pascal rule.
inline QPoly gauss_binomial(int m, int k) {
  if (k < 0 || k > m) return {};
  k = std::min(k, m - k);
  // row[j] = [i; j]_q for the current i, updated in place from the right
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly::constant(1);
  for (int i = 1; i <= m; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + row[j].shifted(j);
  return row[k];
}

/// Gaussian multinomial [n; parts..., n - Σparts]_q: the Poincaré polynomial
/// (q = t^2) of the partial flag manifold with steps given by parts.
inline QPoly gauss_multinomial(int n, const std::vector<int>& parts) {
  int remaining = n;
  QPoly r = QPoly::constant(1);
  for (int part : parts) {
    if (part < 1) throw DomainError("gauss_multinomial: parts must be positive");
    if (part > remaining) throw DomainError("gauss_multinomial: parts exceed the ambient dimension");
    r *= gauss_binomial(remaining, part);
    remaining -= part;
  }
  return r;
}

/// Ordinary multinomial n! / (Π parts! (n - Σparts)!).
inline Coeff multinomial(int n, const std::vector<int>& parts) {
  Coeff r = 1;
  int remaining = n;
  for (int part : parts) {
    if (part > remaining) throw DomainError("multinomial: parts exceed n");
    // binomial(remaining, part) incrementally
    Coeff b = 1;
    for (int j = 1; j <= part; ++j) b = detail::checked_mul(b, remaining - part + j) / j;
    r = detail::checked_mul(r, b);
    remaining -= part;
  }
  return r;
}

}  // namespace conres
