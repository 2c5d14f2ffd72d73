#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ssav/arith.hpp"
#include "ssav/modclass/module.hpp"

namespace {

using namespace ssav::arith;

std::vector<Valuation> vals(std::initializer_list<int> finite, int infinite = 0) {
  std::vector<Valuation> out;
  for (int v : finite) out.emplace_back(v);
  out.insert(out.end(), infinite, Valuation::infinite());
  std::sort(out.begin(), out.end());
  return out;
}

ResidueMatrix random_unimodular(std::size_t n, int k, std::mt19937_64& rng) {
  return ssav::modclass::random_unimodular(n, k, rng());
}

TEST(Smith, DiagonalExamples) {
  const std::vector<std::uint64_t> d{1, 2, 0};
  EXPECT_EQ(snf_mod2k(ResidueMatrix::diagonal(4, d)), vals({0, 1}, 1));
  EXPECT_EQ(snf_mod2k(ResidueMatrix(2, 4)), vals({}, 2));
}

TEST(Smith, DiagonalMatricesReturnTheirEntryValuations) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 4 + static_cast<int>(rng() % 20);
    const std::size_t n = 1 + rng() % 7;
    std::vector<std::uint64_t> diag(n);
    std::vector<Valuation> expected;
    for (auto& x : diag) {
      const int v = static_cast<int>(rng() % (k + 1));
      if (v == k) {
        x = 0;
        expected.push_back(Valuation::infinite());
      } else {
        x = ((rng() | 1) << v) & ((std::uint64_t{1} << k) - 1);
        expected.emplace_back(v);
      }
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(snf_mod2k(ResidueMatrix::diagonal(k, diag)), expected);
  }
}

TEST(Smith, InvariantUnderUnimodularEquivalence) {
  std::mt19937_64 rng(500);
  const std::vector<std::uint64_t> d{1, 2, 0};
  const auto base = ResidueMatrix::diagonal(4, d);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = random_unimodular(3, 4, rng);
    const auto v = random_unimodular(3, 4, rng);
    ASSERT_EQ(snf_mod2k(u * base * v), vals({0, 1}, 1)) << trial;
  }
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const int k = 4 + static_cast<int>(rng() % 12);
    ResidueMatrix a(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.set(i, j, rng() << (rng() % k));
    const auto expected = snf_mod2k(a);
    const auto u = random_unimodular(n, k, rng);
    const auto v = random_unimodular(n, k, rng);
    ASSERT_EQ(snf_mod2k(u * a * v), expected) << trial;
  }
}

TEST(Smith, TransformsReproduceDiagonal) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const int k = 4 + static_cast<int>(rng() % 40);
    ResidueMatrix a(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.set(i, j, rng() << (rng() % 5));
    const auto sf = smith_form(a);
    ASSERT_EQ(sf.left * a * sf.right, sf.diagonal);
    ASSERT_TRUE(inverse(sf.left).has_value());
    ASSERT_TRUE(inverse(sf.right).has_value());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          ASSERT_EQ(sf.diagonal(i, j), 0u);
        }
      }
      const auto& v = sf.valuations[i];
      ASSERT_EQ(sf.diagonal(i, i), v.is_infinite() ? 0 : std::uint64_t{1} << v.value());
    }
    ASSERT_TRUE(std::is_sorted(sf.valuations.begin(), sf.valuations.end()));
  }
}

}  // namespace
