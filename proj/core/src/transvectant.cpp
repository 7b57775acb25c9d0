#include "entatlas/transvectant.hpp"

#include <string>

#include "entatlas/errors.hpp"

namespace entatlas {
namespace {

template <class C>
std::array<int, 4> checked_multidegree(const BasicPolynomial<C>& p) {
  for (const auto& t : p.terms())
    for (int i = 0; i < VariableId::kCount; ++i) {
      VariableId v = VariableId::from_index(i);
      if (t.first.exponent(v) && (v.is_aux() || v.copy() != Copy::base))
        throw IntegrityError("transvectant operand uses non-base variable " + v.name());
    }
  return *p.multidegree();
}

template <class C>
void check_index(const BasicPolynomial<C>& b, const BasicPolynomial<C>& c, const MultiIndex& idx) {
  auto db = checked_multidegree(b), dc = checked_multidegree(c);
  for (int k = 0; k < 4; ++k)
    if (idx[k] < 0 || idx[k] > db[k] || idx[k] > dc[k])
      throw IntegrityError("transvectant index " + std::to_string(idx[k]) + " exceeds degree at site " +
                           std::to_string(k + 1));
}

long long falling(int e, int n) {
  long long r = 1;
  for (int j = 0; j < n; ++j) r *= e - j;
  return r;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

struct SiteExponents {
  std::array<int, 4> e0, e1;
};

SiteExponents site_exponents(const Monomial& m) {
  SiteExponents s;
  for (int k = 1; k <= 4; ++k) {
    s.e0[k - 1] = m.exponent(xvar(k, 0));
    s.e1[k - 1] = m.exponent(xvar(k, 1));
  }
  return s;
}

}  // namespace

template <class C>
BasicPolynomial<C> omega_power(const BasicPolynomial<C>& p, int site, int times) {
  const VariableId x0p(site, 0, Copy::primed), x1p(site, 1, Copy::primed);
  const VariableId x0pp(site, 0, Copy::double_primed), x1pp(site, 1, Copy::double_primed);
  BasicPolynomial<C> r = p;
  for (int t = 0; t < times && !r.is_zero(); ++t)
    r = r.derivative(x0p).derivative(x1pp) - r.derivative(x1p).derivative(x0pp);
  return r;
}

template <class C>
BasicPolynomial<C> transvect(const BasicPolynomial<C>& b, const BasicPolynomial<C>& c, const MultiIndex& idx) {
  if (b.is_zero() || c.is_zero()) return {};
  check_index(b, c, idx);
  auto primed = b.relabel([](VariableId v) { return v.with_copy(Copy::primed); });
  auto dprimed = c.relabel([](VariableId v) { return v.with_copy(Copy::double_primed); });
  BasicPolynomial<C> r = primed * dprimed;
  for (int k = 1; k <= 4; ++k) r = omega_power(r, k, idx[static_cast<std::size_t>(k - 1)]);
  return r.relabel([](VariableId v) { return v.with_copy(Copy::base); });
}

template <class C>
BasicPolynomial<C> transvect_fast(const BasicPolynomial<C>& b, const BasicPolynomial<C>& c, const MultiIndex& idx) {
  if (b.is_zero() || c.is_zero()) return {};
  check_index(b, c, idx);

  std::vector<SiteExponents> ce;
  ce.reserve(c.size());
  for (const auto& t : c.terms()) ce.push_back(site_exponents(t.first));

  std::array<std::array<long long, 5>, 4> signed_binom{};
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j <= idx[k]; ++j) signed_binom[k][j] = (j % 2 ? -1 : 1) * binom(idx[k], j);

  using Term = typename BasicPolynomial<C>::Term;
  std::vector<Term> out;
  out.reserve(b.size() * c.size());
  for (const auto& tb : b.terms()) {
    SiteExponents be = site_exponents(tb.first);
    for (std::size_t n = 0; n < c.size(); ++n) {
      const SiteExponents& e = ce[n];
      long long factor = 1;
      for (int k = 0; k < 4 && factor != 0; ++k) {
        const int i = idx[k];
        if (i == 0) continue;
        long long s = 0;
        for (int j = 0; j <= i; ++j)
          s += signed_binom[k][j] * falling(be.e0[k], i - j) * falling(be.e1[k], j) * falling(e.e0[k], j) *
               falling(e.e1[k], i - j);
        factor *= s;
      }
      if (factor == 0) continue;
      Monomial m;
      for (int k = 0; k < 4; ++k) {
        int a0 = be.e0[k] + e.e0[k] - idx[k];
        int a1 = be.e1[k] + e.e1[k] - idx[k];
        if (a0) m.set_exponent(xvar(k + 1, 0), a0);
        if (a1) m.set_exponent(xvar(k + 1, 1), a1);
      }
      out.emplace_back(m, tb.second * c.terms()[n].second * C(factor));
    }
  }
  return BasicPolynomial<C>::from_terms(std::move(out));
}

template BasicPolynomial<Scalar> omega_power(const BasicPolynomial<Scalar>&, int, int);
template BasicPolynomial<FloatCoeff> omega_power(const BasicPolynomial<FloatCoeff>&, int, int);
template BasicPolynomial<Scalar> transvect(const BasicPolynomial<Scalar>&, const BasicPolynomial<Scalar>&,
                                           const MultiIndex&);
template BasicPolynomial<FloatCoeff> transvect(const BasicPolynomial<FloatCoeff>&, const BasicPolynomial<FloatCoeff>&,
                                               const MultiIndex&);
template BasicPolynomial<Scalar> transvect_fast(const BasicPolynomial<Scalar>&, const BasicPolynomial<Scalar>&,
                                                const MultiIndex&);
template BasicPolynomial<FloatCoeff> transvect_fast(const BasicPolynomial<FloatCoeff>&,
                                                    const BasicPolynomial<FloatCoeff>&, const MultiIndex&);

}  // namespace entatlas
