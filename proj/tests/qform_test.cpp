#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>

#include "ssav/qform.hpp"

namespace {

using namespace ssav::qform;
using Form = QuadForm<std::int64_t>;

// Proper equivalence witness search: (a,b,c) under [[p,q],[r,s]] with ps-qr=1.
bool properly_equivalent_small(const Form& f, const Form& g, int bound) {
  for (std::int64_t p = -bound; p <= bound; ++p)
    for (std::int64_t q = -bound; q <= bound; ++q)
      for (std::int64_t r = -bound; r <= bound; ++r)
        for (std::int64_t s = -bound; s <= bound; ++s) {
          if (p * s - q * r != 1) continue;
          const std::int64_t a = f.a * p * p + f.b * p * r + f.c * r * r;
          const std::int64_t b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
          const std::int64_t c = f.a * q * q + f.b * q * s + f.c * s * s;
          if (Form{a, b, c} == g) return true;
        }
  return false;
}

TEST(Reduce, KnownValues) {
  EXPECT_EQ(reduce(Form{1, 0, 1}), (Form{1, 0, 1}));
  EXPECT_EQ(reduce(Form{5, 4, 3}), (Form{3, 2, 4}));
  EXPECT_EQ(reduce(Form{2, 2, 3}), (Form{2, 2, 3}));
  // the three reduced forms of -44 are (1,0,11), (3,+-2,4); only one is
  // properly equivalent to (5,4,3)
  EXPECT_TRUE(properly_equivalent_small({5, 4, 3}, {3, 2, 4}, 3));
  EXPECT_FALSE(properly_equivalent_small({5, 4, 3}, {3, -2, 4}, 3));
  EXPECT_FALSE(properly_equivalent_small({5, 4, 3}, {1, 0, 11}, 3));
}

TEST(Reduce, RejectsIndefinite) {
  EXPECT_THROW(reduce(Form{1, 3, 1}), std::invalid_argument);
  EXPECT_THROW(reduce(Form{-1, 0, -1}), std::invalid_argument);
}

TEST(Reduce, IdempotentAndPreservesInvariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t b = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const Form f{a, b, c};
    if (!f.is_positive_definite()) continue;
    const Form g = reduce(f);
    ASSERT_TRUE(g.is_reduced()) << f << " -> " << g;
    ASSERT_EQ(g.discriminant(), f.discriminant());
    ASSERT_EQ(g.is_primitive(), f.is_primitive());
    ASSERT_EQ(reduce(g), g);
  }
}

TEST(ClassNumber, KnownValues) {
  EXPECT_EQ(class_number<std::int64_t>(-3), 1u);
  EXPECT_EQ(class_number<std::int64_t>(-23), 3u);
  EXPECT_EQ(class_number<std::int64_t>(-44), 3u);
  EXPECT_EQ(reduced_forms<std::int64_t>(-44), (std::vector<Form>{{1, 0, 11}, {3, -2, 4}, {3, 2, 4}}));
}

TEST(ClassNumber, KnownSmallValues) {
  // Heegner discriminants have class number one.
  for (std::int64_t d : {-3, -4, -7, -8, -11, -19, -43, -67, -163}) EXPECT_EQ(class_number(d), 1u) << d;
  EXPECT_EQ(class_number<std::int64_t>(-47), 5u);
  EXPECT_EQ(class_number<std::int64_t>(-52), 2u);
  EXPECT_EQ(class_number<std::int64_t>(-92), 3u);
  // imprimitive forms are excluded: (2,0,2) has D=-16
  EXPECT_EQ(class_number<std::int64_t>(-16), 1u);
}

TEST(ClassNumber, RejectsInadmissibleDiscriminants) {
  EXPECT_THROW(class_number<std::int64_t>(0), std::invalid_argument);
  EXPECT_THROW(class_number<std::int64_t>(5), std::invalid_argument);
  EXPECT_THROW(class_number<std::int64_t>(-5), std::invalid_argument);
  EXPECT_THROW(class_number<std::int64_t>(-6), std::invalid_argument);
}

TEST(Dirichlet, KnownValues) {
  EXPECT_EQ(class_number_dirichlet<std::int64_t>(-7), 1u);
  EXPECT_EQ(class_number_dirichlet<std::int64_t>(-4), 1u);
  EXPECT_EQ(class_number_dirichlet<std::int64_t>(-3), 1u);
  EXPECT_EQ(class_number_dirichlet<std::int64_t>(-12), 1u);
  EXPECT_EQ(class_number_dirichlet<std::int64_t>(-23), 3u);
  EXPECT_EQ(class_number_dirichlet<std::int64_t>(-44), 3u);
  EXPECT_EQ(class_number_dirichlet<std::int64_t>(-16), 1u);
}

TEST(Dirichlet, RejectsLargerConductors) {
  EXPECT_THROW(class_number_dirichlet<std::int64_t>(-27), std::invalid_argument);  // f = 3
  EXPECT_THROW(class_number_dirichlet<std::int64_t>(-64), std::invalid_argument);  // f = 4
}

TEST(Dirichlet, AgreesWithEnumerationSmallRange) {
  for (std::int64_t d = -3; d > -6000; --d) {
    const auto r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    const auto f = factor_discriminant(d);
    if (f.conductor > 2) continue;
    ASSERT_EQ(class_number(d), class_number_dirichlet(d)) << d;
  }
}

TEST(Discriminant, Factorization) {
  auto check = [](std::int64_t d, std::int64_t fund, std::int64_t cond) {
    const auto f = factor_discriminant(d);
    EXPECT_EQ(f.fundamental, fund) << d;
    EXPECT_EQ(f.conductor, cond) << d;
  };
  check(-3, -3, 1);
  check(-12, -3, 2);
  check(-27, -3, 3);
  check(-16, -4, 2);
  check(-32, -8, 2);
  check(-44, -11, 2);
  check(-52, -52, 1);
  check(-63, -7, 3);
  check(-4 * 9 * 7, -7, 6);
  EXPECT_TRUE(is_fundamental_discriminant<std::int64_t>(-8));
  EXPECT_FALSE(is_fundamental_discriminant<std::int64_t>(-12));
}

TEST(ArbitraryPrecision, CppIntInstantiation) {
  using boost::multiprecision::cpp_int;
  EXPECT_EQ(class_number(cpp_int(-23)), 3u);
  EXPECT_EQ(class_number(cpp_int(-47)), 5u);
  EXPECT_EQ(class_number_dirichlet(cpp_int(-44)), 3u);
  const QuadForm<cpp_int> f{3, 1, 2};
  const auto sq = compose(f, f);
  EXPECT_EQ(sq, (QuadForm<cpp_int>{2, 1, 3}));
  EXPECT_EQ(pic_localized(cpp_int(-23), 3), 1u);
  // a form with coefficients beyond 64 bits
  const cpp_int big = cpp_int(1) << 80;
  const QuadForm<cpp_int> g{big, 1, big};
  const auto r = reduce(g);
  EXPECT_TRUE(r.is_reduced());
  EXPECT_EQ(r.discriminant(), g.discriminant());
}

}  // namespace
