#pragma once

// Blocks β_A(n) of the conical resolution of Σ(n), the recursion for the
// h-polynomials of the open cones, and the assembled E^1 tables.
//
// Degree shifts are applied in exactly one place, fiber_char().

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "conres/combinat.hpp"
#include "conres/errors.hpp"
#include "conres/flagchar.hpp"
#include "conres/poly.hpp"

namespace conres {

/// How a block permutation acts on h_*(γ) = ⊗ h_*(γ_i).
///
/// transposition: the reordering sign (-1)^s is the whole sign of the factor
/// permutation, so the action is the plain permutation of tensor factors
/// times the sign character. koszul: degree-dependent Koszul signs are applied
/// on top of it. In both cases the orientation character of the R^{#A} factor
/// is also the sign character.
enum class SignRule { transposition, koszul };

/// Poincaré polynomial of h_*(γ) for dim γ = a; coefficient of t^i is
/// rank H̄_{i-1} of the open cone over γ.
struct HPoly {
  int a = 0;
  GradedDims poly;
};

/// Poincaré polynomial of the Borel–Moore homology of Σ(n) over ℂ, from the
/// cohomology of the complement (product of CP^{j-1}) by Alexander duality in
/// dimension n².
inline GradedDims total_discriminant_poincare(int n) {
  if (n < 2) throw DomainError("total_discriminant_poincare: n must be >= 2");
  GradedDims complement = GradedDims::constant(1);
  for (int j = 2; j <= n; ++j) {
    GradedDims factor;
    for (int k = 0; k < j; ++k) factor += GradedDims::monomial(2 * k);
    complement *= factor;
  }
  GradedDims r;
  for (auto [e, c] : complement.terms())
    if (e > 0) r += GradedDims::monomial(n * n - 1 - e, c);
  return r;
}

struct SpectralCell {
  int p = 0;
  int i = 0;
  Coeff rank = 0;
  std::map<MultiIndex, Coeff> blocks;
};

/// A cell as displayed in one of the two views. For the homological view
/// (p, q) = (complexity, i - p); for the cohomological view
/// (p, q) = (-complexity, n² - (i - p) - 1).
struct ViewCell {
  int p = 0;
  int q = 0;
  Coeff rank = 0;
  std::map<MultiIndex, Coeff> blocks;

  friend bool operator==(const ViewCell&, const ViewCell&) = default;
};

enum class View { homological, cohomological };

/// E^1 of the main spectral sequence, keyed by (complexity p, total
/// homological degree i), with the per-block breakdown.
class SpectralTable {
 public:
  SpectralTable() = default;
  explicit SpectralTable(int n) : n_(n) {}

  int n() const { return n_; }

  void add(const MultiIndex& A, const GradedDims& block) {
    for (auto [i, r] : block.terms()) {
      auto& cell = cells_[{A.complexity(), i}];
      cell.p = A.complexity();
      cell.i = i;
      cell.rank = detail::checked_add(cell.rank, r);
      cell.blocks[A] = detail::checked_add(cell.blocks[A], r);
    }
  }

  const std::map<std::pair<int, int>, SpectralCell>& cells() const { return cells_; }

  Coeff rank(int p, int i) const {
    auto it = cells_.find({p, i});
    return it == cells_.end() ? 0 : it->second.rank;
  }

  /// Σ over A of complexity p, as a polynomial in the total degree.
  GradedDims column(int p) const {
    GradedDims r;
    for (const auto& [key, cell] : cells_)
      if (cell.p == p) r += GradedDims::monomial(cell.i, cell.rank);
    return r;
  }

  /// Σ_p rank(p, i) t^i.
  GradedDims total() const {
    GradedDims r;
    for (const auto& [key, cell] : cells_) r += GradedDims::monomial(cell.i, cell.rank);
    return r;
  }

  /// Ranks per A at degree i restricted to complexity p.
  std::map<MultiIndex, Coeff> blocks_at(int p, int i) const {
    auto it = cells_.find({p, i});
    return it == cells_.end() ? std::map<MultiIndex, Coeff>{} : it->second.blocks;
  }

  /// The cohomological view carries in addition the unit class at (0, 0),
  /// attributed to the empty multiindex.
  std::vector<ViewCell> view(View v) const {
    std::vector<ViewCell> out;
    if (v == View::cohomological) out.push_back({0, 0, 1, {{MultiIndex{}, 1}}});
    for (const auto& [key, cell] : cells_) {
      ViewCell vc;
      vc.rank = cell.rank;
      vc.blocks = cell.blocks;
      if (v == View::homological) {
        vc.p = cell.p;
        vc.q = cell.i - cell.p;
      } else {
        vc.p = -cell.p;
        vc.q = n_ * n_ - (cell.i - cell.p) - 1;
      }
      out.push_back(std::move(vc));
    }
    std::sort(out.begin(), out.end(), [](const ViewCell& a, const ViewCell& b) {
      return std::pair(a.p, a.q) < std::pair(b.p, b.q);
    });
    return out;
  }

  /// Rank of the cohomological cell E_1^{p,q}, unit class included.
  Coeff cohomological_rank(int p, int q) const {
    if (p == 0 && q == 0) return 1;
    const int complexity = -p;
    const int i = n_ * n_ - 1 - (p + q);
    return rank(complexity, i);
  }

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, SpectralCell> cells_;
};

struct MillerReport {
  int n = 0;
  GradedDims lhs;  // Π (1 + t^{2i-1})
  GradedDims rhs;  // Σ_p t^{p²} [n; p]_{t²}
  bool ok = false;
};

/// Checks the splitting H*(U(n)) = ⊕_p H*(G_p(ℂ^n))[-p²] as a polynomial
/// identity.
inline MillerReport miller_check(int n) {
  if (n < 1) throw DomainError("miller_check: n must be >= 1");
  MillerReport r;
  r.n = n;
  r.lhs = GradedDims::constant(1);
  for (int i = 1; i <= n; ++i) r.lhs *= GradedDims::constant(1) + GradedDims::monomial(2 * i - 1);
  for (int p = 0; p <= n; ++p) {
    const std::vector<int> parts = p == 0 ? std::vector<int>{} : std::vector<int>{p};
    r.rhs += to_t(gauss_multinomial(n, parts)).shifted(p * p);
  }
  r.ok = r.lhs == r.rhs;
  return r;
}

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::vector<std::string> details;
};

struct VerifyReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::failed; });
  }
};

struct VerifyOptions {
  bool block_parity = true;
  bool table_total = true;
  bool h_polys = true;
  bool miller = true;
  bool oracle = true;
  NaiveBudget budget{};
};

/// Order of degree-i classes and the symbol ranks at that order.
struct SymbolReport {
  std::optional<int> order;
  std::map<MultiIndex, Coeff> ranks;
};

class Resolution {
 public:
  explicit Resolution(SignRule rule = SignRule::transposition) : rule_(rule) {}

  SignRule sign_rule() const { return rule_; }

  /// Graded trace (in t) of the class on H̄_* of the fiber
  /// R^{#A} x H(δ) x Ξ̆(γ).
  GradedDims fiber_char(const MultiIndex& A, int n, const BlockClass& cls) const {
    detail::check_class(A, n, cls);
    const int delta = A.liberty(n);
    const int orientation = cls.sign();  // R^{#A}: odd block permutations reverse it
    const int reorder = cls.sign();      // (-1)^s of the tensor decomposition of h
    GradedDims trace = GradedDims::monomial(A.length() + delta * delta - 1, orientation * reorder);
    for (auto [c, a] : cls.cycles()) trace *= cyclic_trace(h_poly(a).poly, c);
    return trace;
  }

  /// Poincaré polynomial of H̄_*(β_A(n), ℂ).
  GradedDims block_poincare(const MultiIndex& A, int n) const {
    if (A.empty()) throw DomainError("block_poincare: empty multiindex");
    if (A.size() > n) throw DomainError("multiindex " + A.key() + " does not fit in dimension " + std::to_string(n));
    {
      std::lock_guard lock(mutex_);
      auto it = block_memo_.find({A, n});
      if (it != block_memo_.end()) return it->second;
    }
    GradedDims sum;
    for (const auto& cls : conjugacy_classes(A))
      sum += to_t(gamma_trace(A, n, cls)) * fiber_char(A, n, cls) * cls.class_size;
    GradedDims r = sum.divided_exactly(A.symmetry_order());
    if (!r.nonnegative())
      throw ConsistencyError("negative rank in block β_" + A.key() + "(" + std::to_string(n) + "): " + r.to_string());
    std::lock_guard lock(mutex_);
    block_memo_.emplace(std::pair{A, n}, r);
    return r;
  }

  /// h-polynomial by subtraction of all lower blocks from the total; the
  /// top block β_(a)(a) has exactly this Poincaré polynomial.
  HPoly h_poly(int a) const {
    if (a < 2) throw DomainError("h_poly: a must be >= 2");
    {
      std::lock_guard lock(mutex_);
      auto it = h_memo_.find(a);
      if (it != h_memo_.end()) return it->second;
    }
    HPoly h{a, {}};
    if (a == 2) {
      h.poly = GradedDims::monomial(1);  // Ξ̆ of a 2-plane is a point
    } else {
      h.poly = total_discriminant_poincare(a);
      for (const auto& [complexity, group] : multiindices(a, a - 2))
        for (const auto& A : group) h.poly -= block_poincare(A, a);
      if (!h.poly.nonnegative())
        throw ConsistencyError("h-recursion produced a negative rank for a = " + std::to_string(a) + ": " +
                               h.poly.to_string());
      for (auto [i, c] : h.poly.terms())
        if ((i - a) % 2 == 0)
          throw ConsistencyError("h-polynomial for a = " + std::to_string(a) + " has parity-violating degree " +
                                 std::to_string(i));
    }
    std::lock_guard lock(mutex_);
    return h_memo_.emplace(a, h).first->second;
  }

  /// Reduced homology Poincaré polynomial of the link ∂Ξ(n).
  GradedDims link_poincare(int n) const {
    if (n < 3) throw DomainError("link_poincare: n must be >= 3 (the link of a 2-plane is empty)");
    return h_poly(n).poly.shifted(-2);
  }

  /// E^1 for Σ(n). Blocks are computed on `threads` workers once the
  /// h-polynomials are filled; the result does not depend on the count.
  SpectralTable spectral_table(int n, unsigned threads = 1) const {
    if (n < 2) throw DomainError("spectral_table: n must be >= 2");
    h_poly(n);
    const auto indices = all_multiindices(n);
    std::vector<GradedDims> blocks(indices.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(indices.size())));
    if (threads == 1) {
      for (std::size_t j = 0; j < indices.size(); ++j) blocks[j] = block_poincare(indices[j], n);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t j = w; j < indices.size(); j += threads) blocks[j] = block_poincare(indices[j], n);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    SpectralTable table(n);
    for (std::size_t j = 0; j < indices.size(); ++j) table.add(indices[j], blocks[j]);
    return table;
  }

  /// The order of degree-i classes is the largest p with a nonzero cell
  /// (p, i); the symbols live in the blocks of that complexity.
  SymbolReport symbols(int n, int i) const {
    auto table = spectral_table(n);
    SymbolReport r;
    for (int p = n - 1; p >= 1; --p) {
      if (table.rank(p, i) != 0) {
        r.order = p;
        for (auto [A, rank] : table.blocks_at(p, i))
          if (rank != 0) r.ranks[A] = rank;
        break;
      }
    }
    return r;
  }

  VerifyReport verify(int n, const VerifyOptions& opt = {}) const {
    if (n < 2) throw DomainError("verify: n must be >= 2");
    VerifyReport report;
    report.n = n;
    auto run = [&](bool enabled, const std::string& name, auto&& body) {
      CheckResult res;
      res.name = name;
      if (!enabled) {
        res.status = CheckStatus::skipped;
        res.details.push_back("disabled");
      } else {
        try {
          body(res);
        } catch (const ConsistencyError& e) {
          res.status = CheckStatus::failed;
          res.details.push_back(e.what());
        }
      }
      report.checks.push_back(std::move(res));
    };

    run(opt.h_polys, "h_polynomials", [&](CheckResult& res) {
      for (int a = 2; a <= n; ++a) {
        const auto h = h_poly(a);
        if (!h.poly.nonnegative()) fail(res, "h_" + std::to_string(a) + " has a negative coefficient");
        for (auto [i, c] : h.poly.terms())
          if ((i - a) % 2 == 0) fail(res, "h_" + std::to_string(a) + " has degree " + std::to_string(i));
      }
      if (h_poly(2).poly != GradedDims::monomial(1)) fail(res, "h_2 != t");
    });

    run(opt.block_parity, "block_parity", [&](CheckResult& res) {
      for (const auto& A : all_multiindices(n)) {
        const auto block = block_poincare(A, n);
        for (auto [i, c] : block.terms())
          if ((i - n) % 2 == 0) fail(res, "β_" + A.key() + " has rank in degree " + std::to_string(i));
      }
    });

    run(opt.table_total, "table_total", [&](CheckResult& res) {
      const auto total = spectral_table(n).total();
      const auto expected = total_discriminant_poincare(n);
      if (total != expected) fail(res, "Σ_p E^1 = " + total.to_string() + " but H̄_*(Σ) = " + expected.to_string());
    });

    run(opt.miller, "miller", [&](CheckResult& res) {
      auto m = miller_check(n);
      if (!m.ok) fail(res, "lhs " + m.lhs.to_string() + " != rhs " + m.rhs.to_string());
    });

    if (opt.oracle && n > opt.budget.max_n) {
      report.checks.push_back({"oracle", CheckStatus::skipped, {"n exceeds the naive-oracle budget"}});
    } else {
      run(opt.oracle, "oracle", [&](CheckResult& res) {
        for (const auto& A : all_multiindices(n)) {
          for (const auto& cls : conjugacy_classes(A)) {
            const auto fast = gamma_trace(A, n, cls);
            const auto naive = gamma_trace_naive(A, n, cls, opt.budget);
            if (fast != naive)
              fail(res, "gamma_trace(" + A.key() + ", " + cls.to_string() + ") = " + fast.to_string() +
                            " but naive average = " + naive.to_string());
            if (!cls.is_trivial() && fast.at_one() != 0)
              fail(res, "nontrivial class " + cls.to_string() + " of S(" + A.key() + ") has nonzero Lefschetz number");
          }
        }
      });
    }
    return report;
  }

 private:
  static void fail(CheckResult& res, std::string msg) {
    res.status = CheckStatus::failed;
    res.details.push_back(std::move(msg));
  }

  /// Trace of a cyclic permutation of c tensor factors on V^{⊗c}.
  GradedDims cyclic_trace(const GradedDims& v, int c) const {
    if (rule_ == SignRule::transposition) return v.substitute_power(c);
    GradedDims r;
    for (auto [e, coeff] : v.terms()) {
      const bool odd = (static_cast<long>(e) * (c - 1)) % 2 != 0;
      r += GradedDims::monomial(e * c, odd ? -coeff : coeff);
    }
    return r;
  }

  SignRule rule_;
  mutable std::mutex mutex_;
  mutable std::map<int, HPoly> h_memo_;
  mutable std::map<std::pair<MultiIndex, int>, GradedDims> block_memo_;
};

}  // namespace conres
