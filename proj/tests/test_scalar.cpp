#include <gtest/gtest.h>

#include <random>

#include "rsf/dual.hpp"
#include "rsf/error.hpp"
#include "rsf/scalar.hpp"

using namespace rsf;

TEST(Scalar, ImaginaryUnitSquaresToMinusOne) {
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(Scalar, FieldOperationsAgainstComplexDouble) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    Scalar a(mpq_class(d(rng), 7), mpq_class(d(rng), 5));
    Scalar b(mpq_class(d(rng), 3), mpq_class(d(rng), 2));
    auto ca = a.to_complex(), cb = b.to_complex();
    EXPECT_NEAR(std::abs((a * b).to_complex() - ca * cb), 0.0, 1e-12);
    EXPECT_NEAR(std::abs((a - b).to_complex() - (ca - cb)), 0.0, 1e-12);
    if (!b.is_zero()) {
      EXPECT_NEAR(std::abs((a / b).to_complex() - ca / cb), 0.0, 1e-12);
      EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(Scalar, StringFormat) {
  EXPECT_EQ(Scalar(0).str(), "0");
  EXPECT_EQ(Scalar(mpq_class(-3, 4)).str(), "-3/4");
  EXPECT_EQ(Scalar(3, 1).str(), "3+1*i");
  EXPECT_EQ(Scalar(mpq_class(1, 2), mpq_class(-2, 3)).str(), "1/2-2/3*i");
  EXPECT_EQ(Scalar(0, -5).str(), "-5*i");
}

TEST(Scalar, ParseRoundTrip) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (int t = 0; t < 200; ++t) {
    mpq_class re(d(rng), den(rng)), im(d(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    Scalar s(re, im);
    EXPECT_EQ(Scalar::parse(s.str()), s) << s.str();
  }
  EXPECT_EQ(Scalar::parse("i"), Scalar::i());
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::i());
  EXPECT_EQ(Scalar::parse("3+i"), Scalar(3, 1));
  EXPECT_EQ(Scalar::parse("4/6"), Scalar(mpq_class(2, 3)));
}

TEST(Scalar, ParseRejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1+", "1.5", "2*j", "1//2"})
    EXPECT_THROW(Scalar::parse(bad), Error) << bad;
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(1) / Scalar(0), Error);
  EXPECT_THROW(Scalar(0).inverse(), Error);
}

TEST(Scalar, Powers) {
  Scalar a(1, 1);
  EXPECT_EQ(a.pow(2), Scalar(0, 2));
  EXPECT_EQ(a.pow(-2) * a.pow(2), Scalar(1));
  EXPECT_EQ(a.pow(0), Scalar(1));
}

TEST(Dual, ProductRuleAndQuotientRule) {
  using D = Dual<Scalar>;
  D x(Scalar(3), Scalar(1));
  D y = x * x * x;
  EXPECT_EQ(y.v, Scalar(27));
  EXPECT_EQ(y.d, Scalar(27));
  D q = D(Scalar(1), Scalar(0)) / x;
  EXPECT_EQ(q.d, Scalar(mpq_class(-1, 9)));
}
