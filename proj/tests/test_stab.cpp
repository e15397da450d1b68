#include <gtest/gtest.h>

#include "conres/stab.hpp"

using conres::MultiIndex;
using conres::QPoly;

namespace {

// [m]! / (Π [a_j]! · [δ]!) by exact division of q-factorials.
QPoly multinomial_by_factorials(int m, const std::vector<int>& parts) {
  auto qfact = [](int k) {
    QPoly r = QPoly::constant(1);
    for (int j = 1; j <= k; ++j) {
      QPoly qint;
      for (int e = 0; e < j; ++e) qint += QPoly::monomial(e);
      r *= qint;
    }
    return r;
  };
  QPoly den = QPoly::constant(1);
  int used = 0;
  for (int a : parts) {
    den *= qfact(a);
    used += a;
  }
  den *= qfact(m - used);
  return qfact(m).divided_exactly(den);
}

int scanned_stab(const MultiIndex& A, int degree) {
  const int qdeg = std::max(degree, 0) / 2;
  auto low = [&](int m) { return multinomial_by_factorials(m, A.parts()).truncated(qdeg); };
  for (int m = A.size();; ++m) {
    bool stable = m >= A.size() + qdeg;
    for (int k = 1; k <= 2 && stable; ++k) stable = low(m) == low(m + k);
    if (stable) return m;
  }
}

}  // namespace

TEST(StabIndex, Examples) {
  EXPECT_EQ(conres::stab_index(MultiIndex({2}), 0).stab_n, 2);
  EXPECT_EQ(conres::stab_index(MultiIndex({2}), 2).stab_n, 3);
  EXPECT_EQ(conres::stab_index(MultiIndex({2, 2}), 4).stab_n, 6);
  EXPECT_EQ(conres::stab_index(MultiIndex({2}), 2).witness, QPoly::dense({1, 1}));
}

TEST(StabIndex, MatchesFactorialScan) {
  for (int c = 1; c <= 3; ++c)
    for (const auto& A : conres::multiindices_with_complexity(c))
      for (int degree = 0; degree <= 10; ++degree)
        EXPECT_EQ(conres::stab_index(A, degree).stab_n, scanned_stab(A, degree)) << A.key() << " degree " << degree;
}

TEST(StabIndex, MonotoneAndClamped) {
  for (const auto& A : conres::multiindices_with_complexity(2)) {
    int previous = 0;
    for (int degree = 0; degree <= 12; ++degree) {
      const int s = conres::stab_index(A, degree).stab_n;
      EXPECT_GE(s, previous);
      previous = s;
    }
    EXPECT_EQ(conres::stab_index(A, -3).stab_n, A.size());
    EXPECT_EQ(conres::stab_index(A, -3).degree, 0);
  }
}

TEST(StableBound, Values) {
  EXPECT_EQ(conres::e1_stable_bound(-1, 3).n, 2);
  EXPECT_EQ(conres::e1_stable_bound(-1, 5).n, 3);
  EXPECT_EQ(conres::e1_stable_bound(-2, 6).n,
            std::max(conres::stab_index(MultiIndex({3}), 2).stab_n, conres::stab_index(MultiIndex({2, 2}), 0).stab_n));
  const auto unit = conres::e1_stable_bound(0, 0);
  EXPECT_EQ(unit.n, 2);
  EXPECT_TRUE(unit.note.has_value());
  EXPECT_THROW(conres::e1_stable_bound(1, 0), conres::DomainError);
  EXPECT_THROW(conres::e1_stable_bound(-2, 1), conres::DomainError);
}

TEST(StableTable, RanksAgreeAtThreeDimensions) {
  const conres::Resolution resolution;
  const auto cells = conres::stable_table(-3, 10, resolution);
  EXPECT_EQ(cells.size(), 4u * 11u);
  for (const auto& c : cells) {
    EXPECT_EQ(c.ranks[0], c.ranks[1]);
    EXPECT_EQ(c.ranks[0], c.ranks[2]);
    if (c.p == 0) {
      EXPECT_EQ(c.ranks[0], c.q == 0 ? 1 : 0);
    }
    if (c.p == -1 && (c.p + c.q == 2 || c.p + c.q == 4)) {
      EXPECT_EQ(c.ranks[0], 1);
    }
  }
  EXPECT_THROW(conres::stable_table(1, 4, resolution), conres::DomainError);
}
