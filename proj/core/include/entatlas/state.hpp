#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entatlas/polynomial.hpp"
#include "entatlas/scalar.hpp"

namespace entatlas {

// Four-qubit state. Amplitude a_{i1 i2 i3 i4} lives at index
// b = i1 + 2*i2 + 4*i3 + 8*i4.
class State {
 public:
  static constexpr int kSize = 16;

  State() = default;
  explicit State(std::array<Scalar, kSize> amplitudes) : amp_(std::move(amplitudes)) {}

  static constexpr int index(int i1, int i2, int i3, int i4) { return i1 + 2 * i2 + 4 * i3 + 8 * i4; }
  // Bit of site k (1..4) in index b.
  static constexpr int bit(int b, int site) { return (b >> (site - 1)) & 1; }

  const Scalar& operator[](int b) const { return amp_[static_cast<std::size_t>(b)]; }
  Scalar& operator[](int b) { return amp_[static_cast<std::size_t>(b)]; }
  const std::array<Scalar, kSize>& amplitudes() const { return amp_; }

  bool is_zero() const;
  bool is_real() const;
  State scaled(const Scalar& lambda) const;

  friend bool operator==(const State& a, const State& b) { return a.amp_ == b.amp_; }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }

  // Ket notation with kets written i1 i2 i3 i4, e.g. "|0000> + 2|1111>".
  std::string str() const;

 private:
  std::array<Scalar, kSize> amp_{};
};

// Form n in 0..65535: amplitude b is 1 iff bit b of n is set.
State decode_form(long long n);
// Inverse of decode_form on {0,1}-valued states.
std::optional<int> encode_form(const State& s);

// Sum of basis kets written as "i1i2i3i4" strings, each with coefficient 1.
State ket_sum(std::initializer_list<std::string_view> kets);
State ket_sum(const std::vector<std::string>& kets);

// Multilinear ground form A = sum a_i x^(1)_{i1} x^(2)_{i2} x^(3)_{i3} x^(4)_{i4}.
Polynomial to_ground_form(const State& s);
FloatPolynomial to_float_ground_form(const State& s);

using Matrix2 = std::array<std::array<Scalar, 2>, 2>;

Scalar det(const Matrix2& m);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);

struct LocalOperator {
  std::array<Matrix2, 4> factors;

  static LocalOperator identity();
  static LocalOperator uniform(const Matrix2& m);
  bool is_special() const;
  LocalOperator operator*(const LocalOperator& o) const;
};

// (g1 (x) g2 (x) g3 (x) g4)|s>. Throws InputError for a singular factor.
State apply_local(const LocalOperator& g, const State& s);

// sigma given by its images sigma(1..4).
class QubitPermutation {
 public:
  QubitPermutation() : image_{1, 2, 3, 4} {}
  explicit QubitPermutation(std::array<int, 4> image);

  static QubitPermutation transposition(int a, int b);
  static std::vector<QubitPermutation> all();

  int operator()(int site) const { return image_[static_cast<std::size_t>(site - 1)]; }
  const std::array<int, 4>& image() const { return image_; }
  QubitPermutation inverse() const;
  // (this * o)(k) = this(o(k))
  QubitPermutation operator*(const QubitPermutation& o) const;
  friend bool operator==(const QubitPermutation& a, const QubitPermutation& b) { return a.image_ == b.image_; }

  std::string str() const;

 private:
  std::array<int, 4> image_;
};

// Qubit at position k moves to position sigma(k).
State permute_qubits(const QubitPermutation& sigma, const State& s);
// Factor k of g moves to position sigma(k), so that
// permute(sigma, g.s) = permute_factors(sigma, g).permute(sigma, s).
LocalOperator permute_factors(const QubitPermutation& sigma, const LocalOperator& g);

enum class RandomMode { exact, binary };

// Reproducible small-integer state (entries in [-3, 3], never all zero), or
// decode_form(n) for uniform n in 1..65535 in binary mode.
State random_state(std::uint64_t seed, RandomMode mode = RandomMode::exact);
// Each factor is a product of unit upper/lower triangular matrices.
LocalOperator random_sl2_tuple(std::uint64_t seed);
// v1 (x) v2 (x) v3 (x) v4 with nonzero small-integer factors.
State product_state(const std::array<std::array<Scalar, 2>, 4>& factors);
State random_product_state(std::uint64_t seed);

}  // namespace entatlas
