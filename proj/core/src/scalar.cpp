#include "entatlas/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace entatlas {

Scalar Scalar::inverse() const {
  if (im_.is_zero()) return Scalar(re_.inverse());
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im = im_.str();
  if (re_.is_zero()) return im + "*i";
  return re_.str() + (im_.sign() < 0 ? "" : "+") + im + "*i";
}

std::string FloatCoeff::str() const {
  std::ostringstream os;
  os.precision(17);
  if (val.imag() == 0.0)
    os << val.real();
  else
    os << val.real() << (val.imag() < 0 ? "" : "+") << val.imag() << "*i";
  return os.str();
}

}  // namespace entatlas
