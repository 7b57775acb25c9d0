#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "entatlas/rational.hpp"

namespace entatlas {

// Gaussian rational re + im*i. Real values (im == 0) take the cheap path.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(unsigned e) const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  // "p/q" for real values, "a+b*i" otherwise.
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

// Floating coefficient used by the approximate evaluation mode, carrying a
// first-order error bound. `sens` bounds how far `val` moves when every input
// amplitude is perturbed by a relative amount 1; `rnd` bounds the accumulated
// rounding error. Exact constants have sens = 0.
struct FloatCoeff {
  static constexpr double kUnitRoundoff = 4.0 * std::numeric_limits<double>::epsilon();

  std::complex<double> val{};
  double sens = 0.0;
  double rnd = 0.0;

  FloatCoeff() = default;
  FloatCoeff(long long n) : val(static_cast<double>(n)) {  // NOLINT
    if (std::abs(n) > (1LL << 53)) rnd = kUnitRoundoff * std::abs(val);
  }
  // A measured amplitude.
  FloatCoeff(std::complex<double> v) : val(v), sens(std::abs(v)), rnd(kUnitRoundoff * std::abs(v)) {}  // NOLINT
  FloatCoeff(std::complex<double> v, double s, double r) : val(v), sens(s), rnd(r) {}
  explicit FloatCoeff(const Scalar& s) : FloatCoeff(s.to_complex()) {}
  // An exact constant such as a catalog coefficient.
  static FloatCoeff constant(const Scalar& s) {
    auto v = s.to_complex();
    return {v, 0.0, kUnitRoundoff * std::abs(v)};
  }

  bool is_zero() const { return val == std::complex<double>{} && sens == 0.0 && rnd == 0.0; }
  // |val| within the error bound for inputs known to relative precision rel_tol.
  double error_bound(double rel_tol) const { return rel_tol * sens + rnd; }
  bool negligible(double rel_tol) const { return std::abs(val) <= error_bound(rel_tol); }

  FloatCoeff operator-() const { return {-val, sens, rnd}; }
  FloatCoeff& operator+=(const FloatCoeff& o) {
    val += o.val;
    sens += o.sens;
    rnd += o.rnd + kUnitRoundoff * std::abs(val);
    return *this;
  }
  FloatCoeff& operator-=(const FloatCoeff& o) { return *this += -o; }
  FloatCoeff& operator*=(const FloatCoeff& o) {
    double a = std::abs(val), b = std::abs(o.val);
    val *= o.val;
    sens = a * o.sens + b * sens;
    rnd = a * o.rnd + b * rnd + rnd * o.rnd + kUnitRoundoff * std::abs(val);
    return *this;
  }
  friend FloatCoeff operator+(FloatCoeff a, const FloatCoeff& b) { return a += b; }
  friend FloatCoeff operator-(FloatCoeff a, const FloatCoeff& b) { return a -= b; }
  friend FloatCoeff operator*(FloatCoeff a, const FloatCoeff& b) { return a *= b; }
  friend bool operator==(const FloatCoeff& a, const FloatCoeff& b) { return a.val == b.val; }

  std::string str() const;
};

// Exact structural zero test in exact mode, relative tolerance in float mode.
inline bool coefficient_vanishes(const Scalar& c, double /*rel_tol*/) { return c.is_zero(); }
inline bool coefficient_vanishes(const FloatCoeff& c, double rel_tol) { return c.negligible(rel_tol); }

inline Scalar coefficient_from(const Scalar& s, const Scalar*) { return s; }
inline FloatCoeff coefficient_from(const Scalar& s, const FloatCoeff*) { return FloatCoeff(s); }
inline Scalar constant_from(const Scalar& s, const Scalar*) { return s; }
inline FloatCoeff constant_from(const Scalar& s, const FloatCoeff*) { return FloatCoeff::constant(s); }

template <class C>
C convert_scalar(const Scalar& s) {
  return coefficient_from(s, static_cast<const C*>(nullptr));
}

// As convert_scalar, for values that are exact rather than measured.
template <class C>
C convert_constant(const Scalar& s) {
  return constant_from(s, static_cast<const C*>(nullptr));
}

}  // namespace entatlas
