#include "entatlas/rational.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace entatlas {
namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v > kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
  u128 m = uabs(v);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) z = -z;
  return z;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  u128 g = gcd128(uabs(nn), static_cast<u128>(dd));
  if (g > 1) {
    nn /= static_cast<i128>(g);
    dd /= static_cast<i128>(g);
  }
  if (fits(nn) && fits(dd)) {
    num_ = static_cast<std::int64_t>(nn);
    den_ = static_cast<std::int64_t>(dd);
  } else {
    assign_mpq(mpq_class(to_mpz(nn), to_mpz(dd)));
  }
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const mpz_class& z) { assign_mpq(mpq_class(z)); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_)
    big_ = std::make_unique<mpq_class>(*o.big_);
  else
    big_.reset();
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    mpz_class n(s.substr(0, slash), 10), d(s.substr(slash + 1), 10);
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("Rational: non-finite double");
  return Rational(mpq_class(v));
}

void Rational::assign_mpq(mpq_class q) {
  q.canonicalize();
  if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    if (big_)
      *big_ = std::move(q);
    else
      big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_)
    r.assign_mpq(-*big_);
  else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  if (big_) {
    Rational r;
    r.assign_mpq(1 / *big_);
    return r;
  }
  Rational r;
  if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

void Rational::add_sub(const Rational& o, bool subtract) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      bool ovf = subtract ? __builtin_sub_overflow(num_, o.num_, &r)
                          : __builtin_add_overflow(num_, o.num_, &r);
      if (!ovf && r != kMin) {
        num_ = r;
        return;
      }
    }
    i128 a = static_cast<i128>(num_) * o.den_;
    i128 b = static_cast<i128>(o.num_) * den_;
    i128 n = subtract ? a - b : a + b;
    i128 d = static_cast<i128>(den_) * o.den_;
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      mpq_class q(to_mpz(n), to_mpz(d));
      assign_mpq(std::move(q));
    }
    return;
  }
  mpq_class q = to_mpq();
  if (subtract)
    q -= o.to_mpq();
  else
    q += o.to_mpq();
  assign_mpq(std::move(q));
}

Rational& Rational::operator+=(const Rational& o) {
  add_sub(o, false);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  add_sub(o, true);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    std::int64_t g1 = static_cast<std::int64_t>(gcd128(uabs(num_), static_cast<u128>(o.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(gcd128(uabs(o.num_), static_cast<u128>(den_)));
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign_mpq(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return *this;
  }
  assign_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (!a.big_ || !b.big_) return false;  // canonical form: big values never fit inline
  return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

Rational Rational::pow(unsigned e) const {
  Rational result(1), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::size_t Rational::hash() const {
  if (!big_) return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
  return std::hash<std::string>{}(big_->get_str());
}

}  // namespace entatlas
