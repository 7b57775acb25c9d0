#include <gtest/gtest.h>

#include "../support.hpp"
#include "entatlas/errors.hpp"
#include "entatlas/golden.hpp"
#include "entatlas/invariants.hpp"
#include "entatlas/orbits.hpp"

using namespace entatlas;
using namespace testing_support;

namespace {

// G_abcd family; its SLOCC invariants are symmetric functions of a^2..d^2.
State gabcd(long long a, long long b, long long c, long long d) {
  State s;
  Scalar h(Rational(1, 2));
  auto set = [&](std::string_view k, long long v) {
    s[State::index(k[0] - '0', k[1] - '0', k[2] - '0', k[3] - '0')] = Scalar(v) * h;
  };
  set("0000", a + d);
  set("1111", a + d);
  set("0011", a - d);
  set("1100", a - d);
  set("0101", b + c);
  set("1010", b + c);
  set("0110", b - c);
  set("1001", b - c);
  return s;
}

Scalar pow_scalar(const Scalar& x, int k) {
  Scalar r(1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace

TEST(Invariants, GhzAndNullcone) {
  State ghz = ket_sum({"0000", "1111"});
  EXPECT_TRUE(inv_L<Scalar>(ghz).is_zero());
  EXPECT_TRUE(inv_M<Scalar>(ghz).is_zero());
  EXPECT_FALSE(inv_B<Scalar>(ghz).is_zero());
  for (int label : golden::nullcone_labels()) {
    if (label == 0) continue;
    auto g = generators<Scalar>(find_orbit(label)->normal_form);
    EXPECT_TRUE(g.B.is_zero() && g.L.is_zero() && g.M.is_zero() && g.Dxy.is_zero()) << label;
  }
}

TEST(Invariants, LMNSumToZero) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    State s = random_state(seed);
    EXPECT_TRUE((inv_L<Scalar>(s) + inv_M<Scalar>(s) + inv_N<Scalar>(s)).is_zero()) << seed;
  }
}

TEST(Invariants, DxyExamples) {
  State sep = ket_sum({"0000"});
  for (auto p : {SitePair::xy, SitePair::xz, SitePair::xt, SitePair::yz, SitePair::yt, SitePair::zt})
    EXPECT_TRUE(b_form<Scalar>(sep, p).is_zero()) << to_string(p);
  auto special = generators<Scalar>(find_orbit(59777)->normal_form);
  EXPECT_TRUE(special.B.is_zero());
  EXPECT_FALSE(special.Dxy.is_zero());
  auto ghz = generators<Scalar>(find_orbit(65259)->normal_form);
  EXPECT_FALSE(ghz.B.is_zero());
  EXPECT_TRUE(ghz.Dxy.is_zero());
}

TEST(Invariants, DegreesUnderScaling) {
  State s = random_state(7);
  State t = scaled(s, 3, 1);
  auto g = generators<Scalar>(s), h = generators<Scalar>(t);
  EXPECT_EQ(h.B, g.B * pow_scalar(Scalar(3), 2));
  EXPECT_EQ(h.L, g.L * pow_scalar(Scalar(3), 4));
  EXPECT_EQ(h.M, g.M * pow_scalar(Scalar(3), 4));
  EXPECT_EQ(h.Dxy, g.Dxy * pow_scalar(Scalar(3), 6));
  EXPECT_EQ(inv_Z<Scalar>(t), inv_Z<Scalar>(s) * pow_scalar(Scalar(3), 6));
  EXPECT_EQ(hyperdet_Delta(t), hyperdet_Delta(s) * pow_scalar(Scalar(3), 24));
}

TEST(Invariants, SlInvariance) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    State s = random_state(seed);
    State t = apply_local(random_sl2_tuple(seed + 100), s);
    auto g = generators<Scalar>(s), h = generators<Scalar>(t);
    EXPECT_EQ(g.B, h.B);
    EXPECT_EQ(g.L, h.L);
    EXPECT_EQ(g.M, h.M);
    EXPECT_EQ(g.Dxy, h.Dxy);
    EXPECT_EQ(hyperdet_Delta(s), hyperdet_Delta(t));
  }
}

TEST(Invariants, ZSeparatesTheGenericSecantClass) {
  EXPECT_FALSE(inv_Z<Scalar>(find_orbit(65257)->normal_form).is_zero());
  EXPECT_TRUE(inv_Z<Scalar>(find_orbit(6014)->normal_form).is_zero());
  EXPECT_TRUE(inv_Z<Scalar>(decode_form(6014)).is_zero());
}

TEST(Hyperdeterminant, QuarticOnTheGenericFamily) {
  // Roots of the quartic are the squares a^2, b^2, c^2, d^2.
  const long long tuples[][4] = {{1, 2, 3, 5}, {2, 3, 7, 11}, {1, 4, 6, 13}, {-3, 5, 8, 2}};
  for (const auto& t : tuples) {
    State s = gabcd(t[0], t[1], t[2], t[3]);
    Polynomial expected = constant(1);
    Polynomial t0 = Polynomial::variable(VariableId::t(0)), t1 = Polynomial::variable(VariableId::t(1));
    for (long long r : t) expected = expected * (t0 - t1 * constant(r * r));
    EXPECT_EQ(binary_quartic_raw(verstraete_quartic(s)), binary_quartic_raw(expected));

    Scalar vandermonde(1);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Scalar diff(t[i] * t[i] - t[j] * t[j]);
        vandermonde = vandermonde * diff * diff;
      }
    EXPECT_EQ(hyperdet_Delta(s) * Scalar(256), vandermonde);
  }
}

TEST(Hyperdeterminant, DiscriminantRatioIs256) {
  EXPECT_EQ(verstraete_discriminant_ratio(), Rational(256));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    State s = random_state(seed);
    EXPECT_EQ(binary_quartic_discriminant(verstraete_quartic(s)), hyperdet_Delta(s) * Scalar(256)) << seed;
  }
}

TEST(Hyperdeterminant, NullconeQuarticIsPure) {
  for (int label : {59520, 65511, 65534 /* not nilpotent */}) {
    auto raw = binary_quartic_raw(verstraete_quartic(find_orbit(label)->normal_form));
    EXPECT_EQ(raw[0], Scalar(1));
    if (label == 65534) continue;
    for (int k = 1; k < 5; ++k) EXPECT_TRUE(raw[k].is_zero()) << label;
  }
}

TEST(Hyperdeterminant, SexticRouteAgrees) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    State s = random_state(seed);
    EXPECT_EQ(delta_via_sextic(s), hyperdet_Delta(s)) << seed;
  }
  EXPECT_EQ(sextic_delta_factor(), Rational(3, 25 * (1 << 19)));
}

TEST(Hyperdeterminant, ComputeInvariantsBundlesTheSameValues) {
  State s = random_state(11);
  InvariantOptions opt;
  opt.alternates = true;
  opt.sextic = true;
  auto v = compute_invariants(s, opt);
  EXPECT_EQ(v.B, inv_B<Scalar>(s));
  EXPECT_EQ(*v.Dxt, inv_D<Scalar>(s, SitePair::xt));
  EXPECT_EQ(*v.Delta, pow_scalar(*v.S, 3) - Scalar(27) * pow_scalar(*v.T, 2));
  EXPECT_EQ(*v.Z, v.Dxy - pow_scalar(v.B, 3) * Scalar(Rational(1, 27)));
  EXPECT_EQ(*v.Delta, *v.I2 * Scalar(sextic_delta_factor()));
}

TEST(Membership, Examples) {
  EXPECT_TRUE(is_nilpotent(decode_form(59520)));
  EXPECT_FALSE(is_nilpotent(decode_form(65534)));
  EXPECT_TRUE(in_third_secant(decode_form(65534)));
  EXPECT_FALSE(in_third_secant(decode_form(4680)));
  EXPECT_TRUE(in_third_secant(decode_form(43690)));  // a product state
  EXPECT_THROW(is_nilpotent(decode_form(0)), InputError);
  EXPECT_THROW(in_third_secant(State()), InputError);
}
