#include <gtest/gtest.h>

#include "../support.hpp"
#include "entatlas/errors.hpp"

using namespace entatlas;
using namespace testing_support;

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, PromotesPastInt64AndAgreesWithGmp) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> big(-(1LL << 62), 1LL << 62), den(1, 1LL << 40);
  for (int i = 0; i < 200; ++i) {
    Rational a(big(rng), den(rng)), b(big(rng), den(rng));
    mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    EXPECT_EQ((a * b).to_mpq(), qa * qb);
    EXPECT_EQ((a + b).to_mpq(), qa + qb);
    EXPECT_EQ((a - b).to_mpq(), qa - qb);
    if (!b.is_zero()) EXPECT_EQ((a / b).to_mpq(), qa / qb);
  }
  Rational huge = Rational(1LL << 62).pow(3);
  EXPECT_FALSE(huge.is_small());
  EXPECT_TRUE((huge / huge).is_one());
  EXPECT_TRUE((huge / huge).is_small());
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
  EXPECT_EQ(Rational::from_double(-2.0), Rational(-2));
}

TEST(Scalar, GaussianArithmetic) {
  Scalar i(Rational(0), Rational(1));
  EXPECT_EQ(i * i, Scalar(-1));
  Scalar z(Rational(3), Rational(4));
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(z * z.conj(), Scalar(25));
}

TEST(Polynomial, AddCancelsAndCombines) {
  EXPECT_TRUE((x(1, 0) + (-x(1, 0))).is_zero());
  EXPECT_EQ((x(1, 0) + x(1, 1)) + x(1, 1), x(1, 0) + x(1, 1).scaled(Scalar(2)));
  std::mt19937_64 rng(1);
  auto p = random_poly(rng);
  EXPECT_EQ(p + Polynomial(), p);
}

TEST(Polynomial, Multiply) {
  auto a = x(1, 0), b = x(1, 1);
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  std::mt19937_64 rng(2);
  auto p = random_poly(rng);
  EXPECT_EQ(p * constant(1), p);
  EXPECT_EQ((a + b).pow(2), a * a + (a * b).scaled(Scalar(2)) + b * b);
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Polynomial, Derivative) {
  auto x0 = x(1, 0), x1 = x(1, 1);
  EXPECT_EQ((x0 * x0 * x1).derivative(VariableId(1, 0)), (x0 * x1).scaled(Scalar(2)));
  EXPECT_TRUE(x1.pow(3).derivative(VariableId(1, 0)).is_zero());
  EXPECT_TRUE(constant(7).derivative(VariableId(2, 1)).is_zero());
}

TEST(Polynomial, DerivativeIsLinearAndLeibniz) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(rng), q = random_poly(rng);
    VariableId v(1 + i % 4, i % 2);
    EXPECT_EQ((p * q).derivative(v), p * q.derivative(v) + q * p.derivative(v));
    EXPECT_EQ((p + q.scaled(Scalar(3))).derivative(v), p.derivative(v) + q.derivative(v).scaled(Scalar(3)));
  }
}

TEST(Polynomial, Substitute) {
  VariableId x0(1, 0), x0p(1, 0, Copy::primed), x0pp(1, 0, Copy::double_primed);
  auto prod = Polynomial::variable(x0p) * Polynomial::variable(x0pp);
  auto base = Polynomial::variable(x0);
  EXPECT_EQ(prod.substitute({{x0p, base}, {x0pp, base}}), base * base);
  EXPECT_TRUE(Polynomial().substitute({{x0, constant(2)}}).is_zero());
  // Evaluation at numbers.
  auto p = x(1, 0) * x(2, 1) + x(3, 0).scaled(Scalar(5));
  auto v = p.substitute({{VariableId(1, 0), constant(2)}, {VariableId(2, 1), constant(3)}, {VariableId(3, 0), constant(-1)}});
  EXPECT_EQ(v, constant(1));
}

TEST(Polynomial, SubstitutionIsSimultaneous) {
  VariableId a(1, 0), b(1, 1);
  auto p = Polynomial::variable(a) - Polynomial::variable(b);
  auto swapped = p.substitute({{a, Polynomial::variable(b)}, {b, Polynomial::variable(a)}});
  EXPECT_EQ(swapped, -p);
}

TEST(Polynomial, Multidegree) {
  EXPECT_FALSE((x(1, 0) - x(1, 0)).multidegree().has_value());
  auto p = x(1, 1) * x(2, 1) * x(2, 0) + x(1, 0) * x(2, 1) * x(2, 1);
  EXPECT_EQ(*p.multidegree(), (std::array<int, 4>{1, 2, 0, 0}));
  EXPECT_THROW((x(1, 0) + x(2, 0) * x(2, 1)).multidegree(), NotHomogeneousError);
}

TEST(Polynomial, CanonicalOrderIsGradedLex) {
  auto p = x(1, 0) + x(1, 0) * x(1, 1) + constant(3);
  std::vector<int> degrees;
  for (const auto& [m, c] : p.terms()) degrees.push_back(m.degree());
  EXPECT_TRUE(std::is_sorted(degrees.rbegin(), degrees.rend()));
  EXPECT_EQ(p, constant(3) + x(1, 0) * x(1, 1) + x(1, 0));
}

TEST(Polynomial, ExactNullityNeedsNoTolerance) {
  // (x0 + x1)^5 - sum binom(5,k) x0^(5-k) x1^k vanishes exactly.
  auto a = x(1, 0), b = x(1, 1);
  Polynomial expansion;
  const long long binom[] = {1, 5, 10, 10, 5, 1};
  for (int k = 0; k <= 5; ++k) expansion += (a.pow(5 - k) * b.pow(k)).scaled(Scalar(binom[k]));
  EXPECT_TRUE(((a + b).pow(5) - expansion).vanishes());
}

TEST(FloatCoeff, RelativeNullity) {
  using cd = std::complex<double>;
  FloatCoeff big(cd(1e6));
  EXPECT_TRUE((big - FloatCoeff(cd(1e6 + 1e-6))).negligible(1e-9));
  EXPECT_FALSE((big - FloatCoeff(cd(999990.0))).negligible(1e-9));
}
