#include "entatlas/invariants.hpp"

#include "entatlas/errors.hpp"
#include "entatlas/transvectant.hpp"

namespace entatlas {
namespace {

template <class C>
BasicPolynomial<C> ground(const State& s) {
  if constexpr (std::is_same_v<C, Scalar>)
    return to_ground_form(s);
  else
    return to_float_ground_form(s);
}

template <class C>
C amp(const State& s, const char* ket) {
  return convert_scalar<C>(s[State::index(ket[0] - '0', ket[1] - '0', ket[2] - '0', ket[3] - '0')]);
}

template <class C>
C det4(const State& s, const std::array<std::array<const char*, 4>, 4>& kets) {
  Matrix<C> m(4, std::vector<C>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = amp<C>(s, kets[i][j]);
  return leibniz_det(m);
}

template <class C>
C rational_const(long long n, long long d) {
  return convert_constant<C>(Scalar(Rational(n, d)));
}

Monomial pair_monomial(int site_u, int i, int site_v, int j) {
  Monomial m;
  if (2 - i) m.set_exponent(xvar(site_u, 0), 2 - i);
  if (i) m.set_exponent(xvar(site_u, 1), i);
  if (2 - j) m.set_exponent(xvar(site_v, 0), 2 - j);
  if (j) m.set_exponent(xvar(site_v, 1), j);
  return m;
}

Monomial binary_monomial(VariableId v0, VariableId v1, int deg, int i) {
  Monomial m;
  if (deg - i) m.set_exponent(v0, deg - i);
  if (i) m.set_exponent(v1, i);
  return m;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

std::pair<int, int> retained_sites(SitePair p) {
  switch (p) {
    case SitePair::xy: return {1, 2};
    case SitePair::xz: return {1, 3};
    case SitePair::xt: return {1, 4};
    case SitePair::yz: return {2, 3};
    case SitePair::yt: return {2, 4};
    case SitePair::zt: return {3, 4};
  }
  throw InputError("bad site pair");
}

std::string to_string(SitePair p) {
  static const char* names[] = {"xy", "xz", "xt", "yz", "yt", "zt"};
  return names[static_cast<int>(p)];
}

template <class C>
C inv_B(const State& s) {
  auto a = ground<C>(s);
  auto b = transvect_fast(a, a, {1, 1, 1, 1});
  return b.coefficient(Monomial()) * rational_const<C>(1, 2);
}

template <class C>
C inv_L(const State& s) {
  return det4<C>(s, {{{"0000", "0010", "0001", "0011"},
                      {"1000", "1010", "1001", "1011"},
                      {"0100", "0110", "0101", "0111"},
                      {"1100", "1110", "1101", "1111"}}});
}

template <class C>
C inv_M(const State& s) {
  return det4<C>(s, {{{"0000", "0001", "0100", "0101"},
                      {"1000", "1001", "1100", "1101"},
                      {"0010", "0011", "0110", "0111"},
                      {"1010", "1011", "1110", "1111"}}});
}

template <class C>
C inv_N(const State& s) {
  return det4<C>(s, {{{"0000", "1000", "0001", "1001"},
                      {"0100", "1100", "0101", "1101"},
                      {"0010", "1010", "0011", "1011"},
                      {"0110", "1110", "0111", "1111"}}});
}

template <class C>
BasicPolynomial<C> b_form(const State& s, SitePair pair) {
  auto [u, v] = retained_sites(pair);
  int other[2], n = 0;
  for (int k = 1; k <= 4; ++k)
    if (k != u && k != v) other[n++] = k;
  auto f = ground<C>(s);
  BasicPolynomial<C> h[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h[i][j] = f.derivative(xvar(other[0], i)).derivative(xvar(other[1], j));
  return h[0][0] * h[1][1] - h[0][1] * h[1][0];
}

template <class C>
Matrix<C> b_matrix(const State& s, SitePair pair) {
  auto [u, v] = retained_sites(pair);
  auto b = b_form<C>(s, pair);
  Matrix<C> m(3, std::vector<C>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b.coefficient(pair_monomial(u, i, v, j));
  return m;
}

template <class C>
C inv_D(const State& s, SitePair pair) {
  return leibniz_det(b_matrix<C>(s, pair));
}

template <class C>
C inv_Z(const State& s) {
  C b = inv_B<C>(s);
  return inv_D<C>(s, SitePair::xy) - b * b * b * rational_const<C>(1, 27);
}

template <class C>
Generators<C> generators(const State& s) {
  return {inv_B<C>(s), inv_L<C>(s), inv_M<C>(s), inv_D<C>(s, SitePair::xy)};
}

#define ENTATLAS_INSTANTIATE_INVARIANTS(C)                       \
  template C inv_B<C>(const State&);                             \
  template C inv_L<C>(const State&);                             \
  template C inv_M<C>(const State&);                             \
  template C inv_N<C>(const State&);                             \
  template BasicPolynomial<C> b_form<C>(const State&, SitePair); \
  template Matrix<C> b_matrix<C>(const State&, SitePair);        \
  template C inv_D<C>(const State&, SitePair);                   \
  template C inv_Z<C>(const State&);                             \
  template Generators<C> generators<C>(const State&);

ENTATLAS_INSTANTIATE_INVARIANTS(Scalar)
ENTATLAS_INSTANTIATE_INVARIANTS(FloatCoeff)

Polynomial QuarticCoeffs::assemble() const {
  Polynomial r;
  for (int i = 0; i <= 4; ++i)
    r += Polynomial::monomial(binary_monomial(VariableId::t(0), VariableId::t(1), 4, i),
                              c[static_cast<std::size_t>(i)] * Scalar(binom(4, i)));
  return r;
}

Polynomial r_form(const State& s) {
  auto b = b_form<Scalar>(s, SitePair::xt);
  Polynomial h[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h[i][j] = b.derivative(xvar(1, i)).derivative(xvar(1, j));
  Polynomial r = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  return r.relabel([](VariableId v) { return v.site() == 4 ? VariableId::t(v.component()) : v; });
}

std::array<Scalar, 5> binary_quartic_raw(const Polynomial& q) {
  std::array<Scalar, 5> raw;
  std::size_t found = 0;
  for (int i = 0; i <= 4; ++i) {
    Monomial m = binary_monomial(VariableId::t(0), VariableId::t(1), 4, i);
    raw[static_cast<std::size_t>(i)] = q.coefficient(m);
    if (!raw[static_cast<std::size_t>(i)].is_zero()) ++found;
  }
  if (found != q.size()) throw IntegrityError("not a binary quartic in t0, t1: " + q.str());
  return raw;
}

QuarticCoeffs extract_quartic(const Polynomial& binary_quartic) {
  auto raw = binary_quartic_raw(binary_quartic);
  QuarticCoeffs q;
  for (int i = 0; i <= 4; ++i)
    q.c[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] / Scalar(binom(4, i));
  return q;
}

QuarticCoeffs hyperdet_quartic(const State& s) { return extract_quartic(r_form(s)); }

Scalar quartic_S(const QuarticCoeffs& q) {
  const auto& c = q.c;
  return c[0] * c[4] - Scalar(4) * c[1] * c[3] + Scalar(3) * c[2] * c[2];
}

Scalar quartic_T(const QuarticCoeffs& q) {
  const auto& c = q.c;
  return c[0] * c[2] * c[4] - c[0] * c[3] * c[3] + Scalar(2) * c[1] * c[2] * c[3] - c[1] * c[1] * c[4] -
         c[2] * c[2] * c[2];
}

Scalar hyperdet_Delta(const State& s) {
  auto q = hyperdet_quartic(s);
  Scalar S = quartic_S(q), T = quartic_T(q);
  return S * S * S - Scalar(27) * T * T;
}

SexticCoeffs extract_sextic(const Polynomial& l6000) {
  SexticCoeffs d;
  std::size_t found = 0;
  for (int i = 0; i <= 6; ++i) {
    Scalar c = l6000.coefficient(binary_monomial(xvar(1, 0), xvar(1, 1), 6, i));
    if (!c.is_zero()) ++found;
    d.d[static_cast<std::size_t>(i)] = c / Scalar(binom(6, i));
  }
  if (found != l6000.size()) throw IntegrityError("L_6000 is not a binary sextic at site 1");
  return d;
}

Scalar sextic_I2(const SexticCoeffs& s) {
  const auto& d = s.d;
  return d[0] * d[6] - Scalar(6) * d[1] * d[5] + Scalar(15) * d[2] * d[4] - Scalar(10) * d[3] * d[3];
}

Scalar inv_I2(Evaluator& ev) { return sextic_I2(extract_sextic(ev.eval(CovariantId::parse("L_6000")))); }

Scalar inv_I2(const State& s) {
  Evaluator ev(s);
  return inv_I2(ev);
}

Rational sextic_delta_factor() { return Rational(3, (1LL << 19) * 25); }

Scalar delta_via_sextic(Evaluator& ev) { return Scalar(sextic_delta_factor()) * inv_I2(ev); }

Scalar delta_via_sextic(const State& s) {
  Evaluator ev(s);
  return delta_via_sextic(ev);
}

Polynomial verstraete_quartic(const State& s) {
  auto g = generators<Scalar>(s);
  const Scalar& B = g.B;
  const Scalar& L = g.L;
  const Scalar& M = g.M;
  std::array<Scalar, 5> raw{Scalar(1), Scalar(-2) * B, B * B + Scalar(2) * L + Scalar(4) * M,
                            Scalar(-4) * (B * (M + Scalar(Rational(1, 2)) * L) + g.Dxy), L * L};
  Polynomial q;
  for (int i = 0; i <= 4; ++i)
    q += Polynomial::monomial(binary_monomial(VariableId::t(0), VariableId::t(1), 4, i),
                              raw[static_cast<std::size_t>(i)]);
  return q;
}

Scalar binary_quartic_discriminant(const Polynomial& q) {
  auto r = binary_quartic_raw(q);
  const Scalar &a = r[0], &b = r[1], &c = r[2], &d = r[3], &e = r[4];
  auto k = [](long long n) { return Scalar(n); };
  return k(256) * a.pow(3) * e.pow(3) - k(192) * a.pow(2) * b * d * e.pow(2) -
         k(128) * a.pow(2) * c.pow(2) * e.pow(2) + k(144) * a.pow(2) * c * d.pow(2) * e -
         k(27) * a.pow(2) * d.pow(4) + k(144) * a * b.pow(2) * c * e.pow(2) - k(6) * a * b.pow(2) * d.pow(2) * e -
         k(80) * a * b * c.pow(2) * d * e + k(18) * a * b * c * d.pow(3) + k(16) * a * c.pow(4) * e -
         k(4) * a * c.pow(3) * d.pow(2) - k(27) * b.pow(4) * e.pow(2) + k(18) * b.pow(3) * c * d * e -
         k(4) * b.pow(3) * d.pow(3) - k(4) * b.pow(2) * c.pow(3) * e + b.pow(2) * c.pow(2) * d.pow(2);
}

Rational verstraete_discriminant_ratio() { return Rational(256); }

InvariantValues compute_invariants(const State& s, const InvariantOptions& opt) {
  InvariantValues v;
  auto g = generators<Scalar>(s);
  v.B = g.B;
  v.L = g.L;
  v.M = g.M;
  v.Dxy = g.Dxy;
  v.N = -v.L - v.M;
  if (opt.alternates) {
    v.Dxz = inv_D<Scalar>(s, SitePair::xz);
    v.Dxt = inv_D<Scalar>(s, SitePair::xt);
    v.Dyz = inv_D<Scalar>(s, SitePair::yz);
    v.Dyt = inv_D<Scalar>(s, SitePair::yt);
    v.Dzt = inv_D<Scalar>(s, SitePair::zt);
  }
  if (opt.hyperdet) {
    auto q = hyperdet_quartic(s);
    v.S = quartic_S(q);
    v.T = quartic_T(q);
    v.Delta = *v.S * *v.S * *v.S - Scalar(27) * *v.T * *v.T;
    v.Z = v.Dxy - v.B * v.B * v.B * Scalar(Rational(1, 27));
  }
  if (opt.sextic) v.I2 = inv_I2(s);
  return v;
}

bool is_nilpotent(const State& s) {
  if (s.is_zero()) throw InputError("the zero state has no class");
  auto g = generators<Scalar>(s);
  return g.B.is_zero() && g.L.is_zero() && g.M.is_zero() && g.Dxy.is_zero();
}

bool in_third_secant(const State& s) {
  if (s.is_zero()) throw InputError("the zero state has no class");
  return inv_L<Scalar>(s).is_zero() && inv_M<Scalar>(s).is_zero();
}

}  // namespace entatlas
