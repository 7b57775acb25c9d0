#pragma once

#include <random>
#include <string_view>

#include "entatlas/polynomial.hpp"
#include "entatlas/state.hpp"

namespace testing_support {

using namespace entatlas;

inline Polynomial x(int site, int comp) { return Polynomial::variable(VariableId(site, comp)); }
inline Polynomial constant(long long c) { return Polynomial::constant(Scalar(c)); }

// Sparse polynomial in the 8 base variables with small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, int terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5), expo(0, max_exp), var(0, 7);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < 3; ++k) {
      int v = var(rng);
      m.set_exponent(VariableId(v / 2 + 1, v % 2), expo(rng));
    }
    p += Polynomial::monomial(m, Scalar(coeff(rng)));
  }
  return p;
}

// Multihomogeneous form of the given multidegree with random coefficients.
inline Polynomial random_form(std::mt19937_64& rng, std::array<int, 4> deg) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  Polynomial out = constant(1);
  for (int k = 0; k < 4; ++k) {
    Polynomial sum;
    for (int j = 0; j <= deg[k]; ++j) {
      Monomial m;
      m.set_exponent(VariableId(k + 1, 0), deg[k] - j);
      m.set_exponent(VariableId(k + 1, 1), j);
      sum += Polynomial::monomial(m, Scalar(coeff(rng)));
    }
    out = out * sum;
  }
  return out;
}

inline const Scalar& amp(const State& s, std::string_view ket) {
  return s[State::index(ket[0] - '0', ket[1] - '0', ket[2] - '0', ket[3] - '0')];
}

// Same state up to a nonzero scalar (the classifiers work projectively).
inline State scaled(const State& s, long long num, long long den) { return s.scaled(Scalar(Rational(num, den))); }

}  // namespace testing_support
