#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entatlas/errors.hpp"
#include "entatlas/scalar.hpp"

namespace entatlas {

enum class Copy : std::uint8_t { base = 0, primed = 1, double_primed = 2 };

// x^(site)_component in one of three copies, or the auxiliary pair t0, t1.
// Index order: site-major, component, copy; t last.
class VariableId {
 public:
  static constexpr int kCount = 26;
  static constexpr int kAuxBase = 24;

  constexpr VariableId(int site, int component, Copy copy = Copy::base)
      : index_(static_cast<std::uint8_t>((site - 1) * 6 + component * 3 + static_cast<int>(copy))) {}

  static constexpr VariableId t(int component) {
    return VariableId(static_cast<std::uint8_t>(kAuxBase + component));
  }
  static constexpr VariableId from_index(int i) { return VariableId(static_cast<std::uint8_t>(i)); }

  constexpr int index() const { return index_; }
  constexpr bool is_aux() const { return index_ >= kAuxBase; }
  constexpr int site() const { return is_aux() ? 0 : index_ / 6 + 1; }
  constexpr int component() const { return is_aux() ? index_ - kAuxBase : (index_ % 6) / 3; }
  constexpr Copy copy() const { return is_aux() ? Copy::base : static_cast<Copy>(index_ % 3); }
  constexpr VariableId with_copy(Copy c) const { return VariableId(site(), component(), c); }

  // x0(1), x1'(3), x0''(2), t0
  std::string name() const;

  friend constexpr bool operator==(VariableId a, VariableId b) { return a.index_ == b.index_; }
  friend constexpr auto operator<=>(VariableId a, VariableId b) { return a.index_ <=> b.index_; }

 private:
  explicit constexpr VariableId(std::uint8_t raw) : index_(raw) {}
  std::uint8_t index_;
};

// Base variable x^(site)_component.
constexpr VariableId xvar(int site, int component) { return VariableId(site, component); }

// Exponent vector. Byte 0 holds the total degree so that a bytewise
// comparison is graded lexicographic order.
class Monomial {
 public:
  Monomial() { bytes_.fill(0); }

  static Monomial of(VariableId v, int e = 1) {
    Monomial m;
    m.set_exponent(v, e);
    return m;
  }

  int exponent(VariableId v) const { return bytes_[1 + v.index()]; }
  int degree() const { return bytes_[0]; }
  bool is_constant() const { return bytes_[0] == 0; }

  void set_exponent(VariableId v, int e) {
    int deg = bytes_[0] - bytes_[1 + v.index()] + e;
    check(e);
    check(deg);
    bytes_[1 + v.index()] = static_cast<std::uint8_t>(e);
    bytes_[0] = static_cast<std::uint8_t>(deg);
  }

  // Sum of exponents of every copy at the site.
  int site_degree(int site) const {
    int d = 0;
    for (int i = (site - 1) * 6; i < site * 6; ++i) d += bytes_[1 + i];
    return d;
  }
  std::array<int, 4> multidegree() const {
    return {site_degree(1), site_degree(2), site_degree(3), site_degree(4)};
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i <= VariableId::kCount; ++i) {
      int e = bytes_[i] + o.bytes_[i];
      check(e);
      r.bytes_[i] = static_cast<std::uint8_t>(e);
    }
    return r;
  }

  friend int compare(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.bytes_.data(), b.bytes_.data(), VariableId::kCount + 1);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return compare(a, b) != 0; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  std::string str() const;

 private:
  static void check(int e) {
    if (e < 0 || e > 255) throw std::overflow_error("Monomial: exponent out of range");
  }
  std::array<std::uint8_t, 32> bytes_;
};

// Sparse polynomial with terms kept in strictly decreasing monomial order and
// no zero coefficients, so structural equality is mathematical equality.
template <class C>
class BasicPolynomial {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  BasicPolynomial() = default;

  static BasicPolynomial constant(C c) { return monomial(Monomial(), std::move(c)); }
  static BasicPolynomial variable(VariableId v) { return monomial(Monomial::of(v), C(1)); }
  static BasicPolynomial monomial(Monomial m, C c) {
    BasicPolynomial p;
    if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
    return p;
  }
  // Sorts, merges equal monomials and drops zeros.
  static BasicPolynomial from_terms(std::vector<Term> terms) {
    BasicPolynomial p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return compare(t.first, k) > 0; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C();
  }

  // Per-site degrees; nullopt for the zero polynomial.
  std::optional<std::array<int, 4>> multidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto d = terms_.front().first.multidegree();
    for (const auto& t : terms_)
      if (t.first.multidegree() != d) throw NotHomogeneousError("polynomial is not multihomogeneous");
    return d;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  // Exact emptiness in exact mode; every coefficient negligible in float mode.
  bool vanishes(double rel_tol = 0.0) const {
    for (const auto& t : terms_)
      if (!coefficient_vanishes(t.second, rel_tol)) return false;
    return true;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = merge(*this, o, false); }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this = merge(*this, o, true); }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    return merge(a, b, false);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return merge(a, b, true);
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) out.emplace_back(ta.first * tb.first, ta.second * tb.second);
    return from_terms(std::move(out));
  }

  BasicPolynomial scaled(const C& c) const {
    if (c.is_zero()) return {};
    BasicPolynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      C v = t.second * c;
      if (!v.is_zero()) r.terms_.emplace_back(t.first, std::move(v));
    }
    return r;
  }

  BasicPolynomial pow(unsigned e) const {
    BasicPolynomial result = constant(C(1)), base(*this);
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  // Division by a variable preserves the monomial order, so no re-sort.
  BasicPolynomial derivative(VariableId v) const {
    BasicPolynomial r;
    for (const auto& t : terms_) {
      int e = t.first.exponent(v);
      if (e == 0) continue;
      Monomial m = t.first;
      m.set_exponent(v, e - 1);
      C c = t.second * C(e);
      if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
    }
    return r;
  }

  // Simultaneous substitution of the bound variables.
  BasicPolynomial substitute(const std::map<VariableId, BasicPolynomial>& bindings) const {
    std::map<std::pair<int, int>, BasicPolynomial> powers;
    auto power = [&](VariableId v, int e) -> const BasicPolynomial& {
      auto key = std::make_pair(v.index(), e);
      auto it = powers.find(key);
      if (it != powers.end()) return it->second;
      return powers.emplace(key, bindings.at(v).pow(static_cast<unsigned>(e))).first->second;
    };
    BasicPolynomial result;
    std::vector<Term> untouched;
    for (const auto& t : terms_) {
      Monomial rest = t.first;
      BasicPolynomial factor;
      bool bound = false;
      for (const auto& [v, _] : bindings) {
        int e = rest.exponent(v);
        if (e == 0) continue;
        rest.set_exponent(v, 0);
        factor = bound ? factor * power(v, e) : power(v, e);
        bound = true;
      }
      if (!bound) {
        untouched.push_back(t);
        continue;
      }
      result += factor * monomial(rest, t.second);
    }
    return result + from_terms(std::move(untouched));
  }

  // Renames variables through `f`; colliding monomials are merged.
  template <class F>
  BasicPolynomial relabel(F f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < VariableId::kCount; ++i) {
        VariableId v = VariableId::from_index(i);
        int e = t.first.exponent(v);
        if (e == 0) continue;
        VariableId w = f(v);
        m.set_exponent(w, m.exponent(w) + e);
      }
      out.emplace_back(m, t.second);
    }
    return from_terms(std::move(out));
  }

  template <class D, class F>
  BasicPolynomial<D> map_coefficients(F f) const {
    std::vector<typename BasicPolynomial<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first, f(t.second));
    return BasicPolynomial<D>::from_terms(std::move(out));
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }
  friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.str();
      bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
      if (negative) cs.erase(0, 1);
      if (cs.find_first_of("+-*", 0) != std::string::npos) cs = "(" + cs + ")";
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      if (m.is_constant())
        out += cs;
      else if (cs == "1")
        out += m.str();
      else
        out += cs + "*" + m.str();
    }
    return out;
  }

 private:
  static BasicPolynomial merge(const BasicPolynomial& a, const BasicPolynomial& b, bool subtract) {
    BasicPolynomial r;
    r.terms_.reserve(a.size() + b.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      int c = ia == a.terms_.end() ? -1 : ib == b.terms_.end() ? 1 : compare(ia->first, ib->first);
      if (c > 0) {
        r.terms_.push_back(*ia++);
      } else if (c < 0) {
        r.terms_.emplace_back(ib->first, subtract ? -ib->second : ib->second);
        ++ib;
      } else {
        C v = subtract ? ia->second - ib->second : ia->second + ib->second;
        if (!v.is_zero()) r.terms_.emplace_back(ia->first, std::move(v));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return compare(x.first, y.first) > 0; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].first == acc.first; ++j) acc.second += terms_[j].second;
      if (!acc.second.is_zero()) terms_[w++] = std::move(acc);
      i = j;
    }
    terms_.resize(w);
  }

  std::vector<Term> terms_;
};

using Polynomial = BasicPolynomial<Scalar>;
using FloatPolynomial = BasicPolynomial<FloatCoeff>;

extern template class BasicPolynomial<Scalar>;
extern template class BasicPolynomial<FloatCoeff>;

inline FloatPolynomial to_float(const Polynomial& p) {
  return p.map_coefficients<FloatCoeff>([](const Scalar& s) { return FloatCoeff(s); });
}

}  // namespace entatlas
