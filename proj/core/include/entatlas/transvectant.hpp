#pragma once

#include <array>

#include "entatlas/polynomial.hpp"

namespace entatlas {

using MultiIndex = std::array<int, 4>;

// Omega_{x^(site)} = d/dx0' d/dx1'' - d/dx1' d/dx0'', applied `times` times.
template <class C>
BasicPolynomial<C> omega_power(const BasicPolynomial<C>& p, int site, int times);

// (B,C)^idx by the literal Omega process: B on primed copies, C on
// double-primed copies, Omega at each site, then every copy erased to base.
// Throws IntegrityError if an index exceeds a site degree or an operand is
// not multihomogeneous in the base variables.
template <class C>
BasicPolynomial<C> transvect(const BasicPolynomial<C>& b, const BasicPolynomial<C>& c, const MultiIndex& idx);

// Same result via the closed form: a pair of monomials contributes a single
// monomial whose coefficient is a product of per-site sums
//   sum_j (-1)^j binom(i,j) ff(b0,i-j) ff(b1,j) ff(c0,j) ff(c1,i-j).
template <class C>
BasicPolynomial<C> transvect_fast(const BasicPolynomial<C>& b, const BasicPolynomial<C>& c, const MultiIndex& idx);

}  // namespace entatlas
