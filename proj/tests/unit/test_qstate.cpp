#include <gtest/gtest.h>

#include "../support.hpp"
#include "entatlas/errors.hpp"
#include "entatlas/state_io.hpp"

using namespace entatlas;
using namespace testing_support;

namespace {

Matrix2 flip() { return {{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}}; }

}  // namespace

TEST(DecodeForm, Examples) {
  EXPECT_EQ(decode_form(1), ket_sum({"0000"}));
  State all = decode_form(65535);
  for (int b = 0; b < 16; ++b) EXPECT_TRUE(all[b].is_one());
  EXPECT_EQ(decode_form(59520), ket_sum({"1110", "1101", "1011", "0111", "1111"}));
  EXPECT_THROW(decode_form(65536), InputError);
  EXPECT_THROW(decode_form(-1), InputError);
}

TEST(DecodeForm, EncodeInvertsOnAllForms) {
  for (int n = 0; n < 65536; ++n) ASSERT_EQ(encode_form(decode_form(n)), n);
  EXPECT_FALSE(encode_form(decode_form(3).scaled(Scalar(2))).has_value());
}

TEST(DecodeForm, IndexConvention) {
  // b = i1 + 2 i2 + 4 i3 + 8 i4, so |1000> is bit 0 of the index.
  EXPECT_EQ(State::index(1, 0, 0, 0), 1);
  EXPECT_EQ(State::index(0, 0, 0, 1), 8);
  EXPECT_EQ(decode_form(1 << State::index(0, 1, 1, 0)), ket_sum({"0110"}));
}

TEST(GroundForm, Examples) {
  auto a = to_ground_form(ket_sum({"0000"}));
  EXPECT_EQ(a, x(1, 0) * x(2, 0) * x(3, 0) * x(4, 0));
  auto ghz = to_ground_form(ket_sum({"0000", "1111"}));
  EXPECT_EQ(ghz, x(1, 0) * x(2, 0) * x(3, 0) * x(4, 0) + x(1, 1) * x(2, 1) * x(3, 1) * x(4, 1));
  Polynomial product = constant(1);
  for (int k = 1; k <= 4; ++k) product = product * (x(k, 0) + x(k, 1));
  EXPECT_EQ(to_ground_form(decode_form(65535)), product);
  EXPECT_EQ(product.size(), 16u);
  EXPECT_EQ(*to_ground_form(random_state(5)).multidegree(), (std::array<int, 4>{1, 1, 1, 1}));
}

TEST(ApplyLocal, Examples) {
  State s = random_state(7);
  EXPECT_EQ(apply_local(LocalOperator::identity(), s), s);
  EXPECT_EQ(apply_local(LocalOperator::uniform(flip()), ket_sum({"0000"})), ket_sum({"1111"}));
  EXPECT_EQ(apply_local(LocalOperator::uniform(flip()), decode_form(59520)),
            ket_sum({"0001", "0010", "0100", "1000", "0000"}));
  LocalOperator singular = LocalOperator::identity();
  singular.factors[2] = {{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}};
  EXPECT_THROW(apply_local(singular, s), InputError);
}

TEST(ApplyLocal, IsAnAction) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    State s = random_state(seed);
    LocalOperator g = random_sl2_tuple(seed + 100), h = random_sl2_tuple(seed + 200);
    EXPECT_EQ(apply_local(g * h, s), apply_local(g, apply_local(h, s)));
  }
}

TEST(PermuteQubits, Examples) {
  State s = random_state(9);
  EXPECT_EQ(permute_qubits(QubitPermutation(), s), s);
  EXPECT_EQ(permute_qubits(QubitPermutation::transposition(3, 4), ket_sum({"0010"})), ket_sum({"0001"}));
  // Qubit 1 moves to position 2.
  EXPECT_EQ(permute_qubits(QubitPermutation({2, 3, 4, 1}), ket_sum({"1000"})), ket_sum({"0100"}));
}

TEST(PermuteQubits, GroupActionCommutingWithLocalOperators) {
  auto perms = QubitPermutation::all();
  ASSERT_EQ(perms.size(), 24u);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto& sigma = perms[i];
    const auto& tau = perms[(i * 7 + 3) % perms.size()];
    State s = random_state(i);
    EXPECT_EQ(permute_qubits(sigma * tau, s), permute_qubits(sigma, permute_qubits(tau, s)));
    EXPECT_EQ(permute_qubits(sigma.inverse(), permute_qubits(sigma, s)), s);
    LocalOperator g = random_sl2_tuple(i + 40);
    EXPECT_EQ(permute_qubits(sigma, apply_local(g, s)), apply_local(permute_factors(sigma, g), permute_qubits(sigma, s)));
  }
}

TEST(Random, DeterministicAndSpecial) {
  EXPECT_EQ(random_state(42), random_state(42));
  EXPECT_NE(random_state(42), random_state(43));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    LocalOperator g = random_sl2_tuple(seed);
    for (const auto& m : g.factors) EXPECT_TRUE(det(m).is_one());
    EXPECT_TRUE(g.is_special());
    State b = random_state(seed, RandomMode::binary);
    EXPECT_TRUE(encode_form(b).has_value());
  }
}

TEST(StateJson, RoundTripAndErrors) {
  State s = random_state(3).scaled(Scalar(Rational(2, 3)));
  EXPECT_EQ(parse_state_json(state_to_json(s)), s);
  State c = s;
  c[5] = Scalar(Rational(1, 2), Rational(-3, 7));
  EXPECT_EQ(parse_state_json(state_to_json(c)), c);
  EXPECT_EQ(parse_state_json(R"({"form": 59520})"), decode_form(59520));
  EXPECT_EQ(parse_state_json(R"({"amplitudes": [1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"1"]})"), ket_sum({"0000", "1111"}));
  EXPECT_THROW(parse_state_json(R"({"amplitudes": [1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"x"]})"), InputError);
  EXPECT_THROW(parse_state_json("{"), InputError);
  EXPECT_THROW(parse_state_json(R"({"amplitudes": [[1,1]]})"), InputError);
  EXPECT_THROW(parse_state_json(R"({"form": 70000})"), InputError);
}
