#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "ssav/arith.hpp"
#include "ssav/count.hpp"
#include "ssav/qform.hpp"

namespace {

using namespace ssav::count;

TEST(Count, KnownValues) {
  EXPECT_EQ(count_superspecial(2, 5).total, 1u);
  EXPECT_EQ(count_superspecial(3, 4).total, 5u);
  EXPECT_EQ(count_superspecial(11, 2).total, 5u);
  EXPECT_EQ(count_superspecial(13, 1).total, 2u);
}

TEST(Count, ReportFields) {
  const auto r = count_superspecial(11, 2);
  EXPECT_EQ(r.branch, Branch::three_mod_8);
  EXPECT_EQ(branch_name(r.branch), "3mod8");
  EXPECT_EQ(r.h_field, 1u);
  EXPECT_EQ(r.h_order, 3u);
  EXPECT_EQ(r.unit_index, 3u);
  EXPECT_EQ(r.per_genus, (std::vector<std::size_t>{1, 1, 3}));
  EXPECT_EQ(r.genus_sum_total, 5u);
  EXPECT_EQ(branch_name(count_superspecial(3, 1).branch), "7mod8or3");
  EXPECT_EQ(branch_name(count_superspecial(2, 1).branch), "2or1mod4");
}

TEST(GenusSum, KnownValues) {
  EXPECT_EQ(count_via_genus_sum(11, 2).per_genus, (std::vector<std::size_t>{1, 1, 3}));
  EXPECT_EQ(count_via_genus_sum(3, 4).per_genus, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(count_via_genus_sum(23, 1).per_genus, (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(count_via_genus_sum(23, 1).total, 6u);
  EXPECT_EQ(count_via_genus_sum(13, 3).per_genus, (std::vector<std::size_t>{2}));
}

TEST(Count, FieldClassNumberUsesMaximalOrder) {
  EXPECT_EQ(field_discriminant(2), -8);
  EXPECT_EQ(field_discriminant(13), -52);
  EXPECT_EQ(field_discriminant(23), -23);
  // p = 3 mod 4: the field, not Z[sqrt(-p)]
  EXPECT_EQ(field_class_number(11), 1u);
  EXPECT_EQ(ssav::qform::class_number<std::int64_t>(-44), 3u);
}

TEST(UnitIndex, KnownValues) {
  EXPECT_EQ(unit_index(7), 1u);
  EXPECT_EQ(unit_index(3), 1u);
  EXPECT_EQ(unit_index(11), 3u);
  EXPECT_THROW(unit_index(13), std::invalid_argument);
}

TEST(Deuring, KnownValues) {
  EXPECT_EQ(deuring_hprime(13), 1u);
  EXPECT_EQ(deuring_hprime(7), 1u);
  EXPECT_EQ(deuring_hprime(11), 2u);
  EXPECT_EQ(eichler_h(5), 1u);
  EXPECT_EQ(eichler_h(11), 2u);
  EXPECT_EQ(eichler_h(13), 1u);
  EXPECT_EQ(type_number_check(7), 1u);
  EXPECT_EQ(type_number_check(11), 2u);
  EXPECT_EQ(type_number_check(13), 1u);
  EXPECT_THROW(deuring_hprime(3), std::invalid_argument);
}

TEST(Sprime, SmallPrimes) {
  EXPECT_EQ(sprime_small(2), 3u);
  EXPECT_EQ(sprime_small(3), 4u);
  EXPECT_THROW(sprime_small(5), std::invalid_argument);
}

TEST(Count, RejectsBadInputs) {
  try {
    count_superspecial(15, 1);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "p must be prime, got 15");
  }
  EXPECT_THROW(count_superspecial(0, 1), std::invalid_argument);
  EXPECT_THROW(count_superspecial(1, 1), std::invalid_argument);
  EXPECT_THROW(count_superspecial(11, 0), std::invalid_argument);
}

// Brute-force field class number: count reduced forms by direct search over
// (a, b) without going through the library enumerator.
std::size_t brute_h(std::int64_t d) {
  std::size_t n = 0;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++n;
    }
  return n;
}

TEST(Count, ClosedFormMatchesGenusSumAndBruteForce) {
  for (std::uint64_t p = 2; p < 600; ++p) {
    if (!ssav::arith::is_prime(p)) continue;
    ASSERT_EQ(field_class_number(p), brute_h(field_discriminant(p))) << p;
    for (std::uint64_t g = 1; g <= 6; ++g) {
      const auto r = count_superspecial(p, g);
      ASSERT_EQ(r.total, r.genus_sum_total) << p << " " << g;
      ASSERT_EQ(r.genus_sum_total, std::accumulate(r.per_genus.begin(), r.per_genus.end(), std::size_t{0}));
      if (p % 4 == 3) {
        ASSERT_EQ(r.h_order, brute_h(-4 * static_cast<std::int64_t>(p)));
      }
    }
  }
}

TEST(Count, GrowthInGenus) {
  for (std::uint64_t p : {3, 7, 11, 19, 23, 43}) {
    const auto t1 = count_superspecial(p, 1).total;
    const auto t2 = count_superspecial(p, 2).total;
    EXPECT_EQ(t2 - t1, field_class_number(p));
  }
  EXPECT_EQ(count_superspecial(5, 1).total, count_superspecial(5, 9).total);
}

TEST(Deuring, TypeNumberIntegralSmallRange) {
  for (std::uint64_t p = 5; p < 3000; ++p) {
    if (!ssav::arith::is_prime(p)) continue;
    ASSERT_NO_THROW(type_number_check(p)) << p;
    ASSERT_GE(2 * type_number_check(p), eichler_h(p));
  }
}

}  // namespace
