#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "conres/cohomring.hpp"
#include "conres/flagchar.hpp"

using conres::Character;
using conres::MultiIndex;
using conres::QPoly;

namespace {

// Graded trace of the variable permutation sigma on the coinvariant algebra,
// computed on the Artin basis: permute exponents, reduce, read the diagonal.
QPoly coinvariant_trace_on_basis(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  QPoly r;
  for (const auto& b : conres::artin_basis(n)) {
    conres::Exponents image(b.size(), 0);
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = b[static_cast<std::size_t>(i)];
    const auto nf = conres::normal_form({{image, 1}}, n);
    r += QPoly::monomial(std::accumulate(b.begin(), b.end(), 0), nf.coefficient(b));
  }
  return r;
}

std::vector<int> permutation_of_type(const conres::Partition& mu) {
  std::vector<int> sigma;
  int start = 0;
  for (int len : mu) {
    for (int k = 0; k < len; ++k) sigma.push_back(start + (k + 1) % len);
    start += len;
  }
  return sigma;
}

}  // namespace

TEST(CoinvariantTrace, MatchesActionOnArtinBasis) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : conres::partitions(n))
      EXPECT_EQ(conres::coinvariant_trace(n, mu), coinvariant_trace_on_basis(permutation_of_type(mu))) << "n = " << n;
}

TEST(CoinvariantTrace, IdentityIsFlagPoincare) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(conres::coinvariant_trace(n, conres::Partition(static_cast<std::size_t>(n), 1)), conres::ring_poincare(n));
  EXPECT_THROW(conres::coinvariant_trace(3, {2}), conres::DomainError);
}

TEST(GammaTrace, TrivialClassIsMultinomial) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& A : conres::all_multiindices(n))
      EXPECT_EQ(conres::gamma_trace(A, n, conres::conjugacy_classes(A).front()), conres::gauss_multinomial(n, A.parts()));
}

TEST(GammaTrace, AgreesWithNaiveAverage) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& A : conres::all_multiindices(n))
      for (const auto& cls : conres::conjugacy_classes(A)) {
        const auto fast = conres::gamma_trace(A, n, cls);
        EXPECT_EQ(fast, conres::gamma_trace_naive(A, n, cls)) << A.key() << " " << cls.to_string();
        if (!cls.is_trivial()) {
          EXPECT_EQ(fast.at_one(), 0);
        }
      }
}

TEST(GammaTrace, RejectsForeignClassesAndLargeNaiveRuns) {
  const auto A = MultiIndex::parse("2,2");
  const auto B = MultiIndex::parse("3,3");
  EXPECT_THROW(conres::gamma_trace(A, 4, conres::conjugacy_classes(B).front()), conres::DomainError);
  EXPECT_THROW(conres::gamma_trace(B, 5, conres::conjugacy_classes(B).front()), conres::DomainError);
  EXPECT_THROW(conres::gamma_trace_naive(A, 9, conres::conjugacy_classes(A).back()), conres::ResourceError);
  EXPECT_NO_THROW(conres::gamma_trace_naive(A, 4, conres::conjugacy_classes(A).back(), {4}));
}

TEST(GammaPoincare, TwoPlanesInFourSpace) {
  const auto A = MultiIndex::parse("2,2");
  EXPECT_EQ(conres::gamma_poincare(A, 4, Character::trivial), QPoly::from_terms({{0, 1}, {2, 1}, {4, 1}}));
  EXPECT_EQ(conres::gamma_poincare(A, 4, Character::sign), QPoly::from_terms({{1, 1}, {2, 1}, {3, 1}}));
}

TEST(GammaPoincare, IsotypicPartsAddUpForOneSwap) {
  for (int n = 4; n <= 8; ++n)
    for (const auto& A : conres::all_multiindices(n)) {
      if (A.symmetry_order() != 2) continue;
      EXPECT_EQ(conres::gamma_poincare(A, n, Character::trivial) + conres::gamma_poincare(A, n, Character::sign),
                conres::gauss_multinomial(n, A.parts()))
          << A.key();
    }
}

TEST(GammaPoincare, DistinctPartsHaveNoSignPart) {
  const auto A = MultiIndex::parse("3,2");
  EXPECT_EQ(conres::gamma_poincare(A, 6, Character::trivial), conres::gauss_multinomial(6, A.parts()));
  EXPECT_EQ(conres::gamma_poincare(A, 6, Character::sign), conres::gauss_multinomial(6, A.parts()));
}
