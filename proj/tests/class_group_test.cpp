#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "ssav/qform.hpp"

namespace {

using namespace ssav::qform;
using Form = QuadForm<std::int64_t>;

TEST(Compose, KnownValues) {
  const std::int64_t d = -23;
  const Form principal = principal_form(d);
  EXPECT_EQ(principal, (Form{1, 1, 6}));
  for (const auto& f : reduced_forms(d)) EXPECT_EQ(compose(principal, f), reduce(f));
  EXPECT_EQ(compose(Form{3, 1, 2}, Form{3, -1, 2}), (Form{1, 1, 6}));
  // (3,1,2) ~ (2,-1,3); its square is the inverse class, reduced (2,1,3) ~ (3,-1,2)
  EXPECT_EQ(compose(Form{3, 1, 2}, Form{3, 1, 2}), reduce(Form{3, -1, 2}));
  EXPECT_EQ(reduce(Form{3, -1, 2}), (Form{2, 1, 3}));
}

TEST(Compose, RejectsBadInputs) {
  EXPECT_THROW(compose(Form{1, 1, 6}, Form{1, 0, 11}), std::invalid_argument);
  EXPECT_THROW(compose(Form{2, 0, 2}, Form{1, 0, 4}), std::invalid_argument);  // imprimitive
}

TEST(Compose, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(200);
  for (std::int64_t d : {-23, -47, -44, -92, -163, -231, -420, -1155, -3299, -4 * 1019}) {
    const auto forms = reduced_forms(d);
    const Form id = principal_form(d);
    for (int trial = 0; trial < 200; ++trial) {
      const Form& f = forms[rng() % forms.size()];
      const Form& g = forms[rng() % forms.size()];
      const Form& h = forms[rng() % forms.size()];
      ASSERT_EQ(compose(f, id), f);
      ASSERT_EQ(compose(f, f.inverse()), id);
      ASSERT_EQ(compose(f, g), compose(g, f));
      ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h))) << d;
    }
  }
}

TEST(ClassGroup, KnownValues) {
  const auto g4 = class_group<std::int64_t>(-4);
  EXPECT_EQ(g4.size(), 1u);

  const auto g23 = class_group<std::int64_t>(-23);
  EXPECT_EQ(g23.size(), 3u);
  EXPECT_TRUE(g23.is_cyclic());
  const auto gen = g23.index_of({2, 1, 3});
  EXPECT_EQ(g23.order(gen), 3u);

  const auto g47 = class_group<std::int64_t>(-47);
  EXPECT_EQ(g47.size(), 5u);
  EXPECT_TRUE(g47.is_cyclic());
}

TEST(ClassGroup, OrdersDivideGroupOrderAndTableMatchesDirectComposition) {
  for (std::int64_t d : {-23, -47, -44, -92, -163, -84, -420, -5 * 4 * 13, -3299}) {
    const auto g = class_group(d);
    const FormClassGroup<std::int64_t> untabled(d, 0);
    ASSERT_TRUE(g.has_table());
    ASSERT_FALSE(untabled.has_table());
    EXPECT_EQ(g.size(), class_number(d));
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(g.size() % g.order(i), 0u) << d;
      EXPECT_EQ(g.order(i), untabled.order(i));
      EXPECT_EQ(g.compose(i, g.inverse(i)), g.identity());
      for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(g.compose(i, j), untabled.compose(i, j));
    }
  }
  // (-420) has class group (Z/2)^3: not cyclic
  EXPECT_FALSE(class_group<std::int64_t>(-420).is_cyclic());
}

TEST(PicLocalized, KnownValues) {
  EXPECT_EQ(pic_localized<std::int64_t>(-4, 3), 1u);
  EXPECT_EQ(pic_localized<std::int64_t>(-23, 3), 1u);
  EXPECT_EQ(pic_localized<std::int64_t>(-23, 5), 3u);
}

TEST(PicLocalized, DividesClassNumber) {
  for (std::int64_t d = -3; d > -1500; --d) {
    const auto r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    const std::size_t h = class_number(d);
    const auto cond = factor_discriminant(d).conductor;
    for (std::uint64_t ell : {3, 5, 7, 11, 13, 17, 19, 23}) {
      if (cond % static_cast<std::int64_t>(ell) == 0) continue;
      ASSERT_EQ(h % pic_localized(d, ell), 0u) << d << " " << ell;
    }
  }
}

TEST(PicLocalized, RejectsBadPrimes) {
  EXPECT_THROW(pic_localized<std::int64_t>(-23, 2), std::invalid_argument);
  EXPECT_THROW(pic_localized<std::int64_t>(-23, 9), std::invalid_argument);
  EXPECT_THROW(pic_localized<std::int64_t>(-36, 3), std::invalid_argument);  // 3 | conductor
}

TEST(PrimeForm, RepresentsEll) {
  const auto f = prime_form<std::int64_t>(-44, 3);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(reduce(*f), (Form{3, 2, 4}));
  EXPECT_FALSE(prime_form<std::int64_t>(-44, 13).has_value());  // 13 inert
}

}  // namespace
