#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "entatlas/evaluator.hpp"
#include "entatlas/linalg.hpp"
#include "entatlas/polynomial.hpp"
#include "entatlas/state.hpp"

namespace entatlas {

// Retained sites of b_uv; (x, y, z, t) are sites (1, 2, 3, 4).
enum class SitePair { xy, xz, xt, yz, yt, zt };
std::pair<int, int> retained_sites(SitePair p);
std::string to_string(SitePair p);

// B = 1/2 (A,A)^1111.
template <class C> C inv_B(const State& s);
// The two 4x4 determinants L and M.
template <class C> C inv_L(const State& s);
template <class C> C inv_M(const State& s);
// The 4x4 determinant printed for N (equals -L-M).
template <class C> C inv_N(const State& s);

// det of the Hessian of A over the two non-retained sites: bidegree (2,2).
template <class C> BasicPolynomial<C> b_form(const State& s, SitePair pair);
// Gram matrix: entry (i,j) is the coefficient of u0^(2-i) u1^i v0^(2-j) v1^j.
template <class C> Matrix<C> b_matrix(const State& s, SitePair pair);
template <class C> C inv_D(const State& s, SitePair pair = SitePair::xy);
// Z = D_xy - B^3/27.
template <class C> C inv_Z(const State& s);

template <class C>
struct Generators {
  C B, L, M, Dxy;
};
template <class C> Generators<C> generators(const State& s);

// R(t) = sum binom(4,i) c_i t0^(4-i) t1^i.
struct QuarticCoeffs {
  std::array<Scalar, 5> c;
  Polynomial assemble() const;
};
// L_6000 = sum binom(6,i) d_i x0^(6-i) x1^i at site 1.
struct SexticCoeffs {
  std::array<Scalar, 7> d;
};

// det of the Hessian of b_xt in the site-1 variables, written in t0, t1.
Polynomial r_form(const State& s);
QuarticCoeffs extract_quartic(const Polynomial& binary_quartic);
QuarticCoeffs hyperdet_quartic(const State& s);
Scalar quartic_S(const QuarticCoeffs& q);
Scalar quartic_T(const QuarticCoeffs& q);
// S^3 - 27 T^2 of R(t).
Scalar hyperdet_Delta(const State& s);

SexticCoeffs extract_sextic(const Polynomial& l6000);
// d0 d6 - 6 d1 d5 + 15 d2 d4 - 10 d3^2.
Scalar sextic_I2(const SexticCoeffs& d);
Scalar inv_I2(const State& s);
Scalar inv_I2(Evaluator& ev);
// 3/(2^19 5^2) I2.
Rational sextic_delta_factor();
Scalar delta_via_sextic(const State& s);
Scalar delta_via_sextic(Evaluator& ev);

// t0^4 - 2B t0^3t1 + (B^2+2L+4M) t0^2t1^2 - 4(B(M+L/2) + Dxy) t0t1^3 + L^2 t1^4.
// Dxy enters with the sign opposite to the printed formula; with the printed
// sign the discriminant is not proportional to Delta.
Polynomial verstraete_quartic(const State& s);
// Raw coefficients a..e of a t0^4 + b t0^3t1 + c t0^2t1^2 + d t0t1^3 + e t1^4.
std::array<Scalar, 5> binary_quartic_raw(const Polynomial& q);
// Standard discriminant of a binary quartic in t0, t1.
Scalar binary_quartic_discriminant(const Polynomial& q);
// disc(verstraete_quartic) / Delta, measured once and frozen.
Rational verstraete_discriminant_ratio();

struct InvariantValues {
  Scalar B, L, M, N, Dxy;
  std::optional<Scalar> Dxz, Dxt, Dyz, Dyt, Dzt;
  std::optional<Scalar> S, T, Delta, Z, I2;
};

struct InvariantOptions {
  bool alternates = false;  // D_uv for the other five pairs
  bool hyperdet = true;     // S, T, Delta, Z
  bool sextic = false;      // I2, needs the degree-12 covariant chain
};
InvariantValues compute_invariants(const State& s, const InvariantOptions& opt = {});

// B = L = M = Dxy = 0. Throws InputError for the zero state.
bool is_nilpotent(const State& s);
// L = M = 0. Throws InputError for the zero state.
bool in_third_secant(const State& s);

}  // namespace entatlas
