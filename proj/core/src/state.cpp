#include "entatlas/state.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "entatlas/errors.hpp"

namespace entatlas {

bool State::is_zero() const {
  return std::all_of(amp_.begin(), amp_.end(), [](const Scalar& a) { return a.is_zero(); });
}

bool State::is_real() const {
  return std::all_of(amp_.begin(), amp_.end(), [](const Scalar& a) { return a.is_real(); });
}

State State::scaled(const Scalar& lambda) const {
  State r(*this);
  for (auto& a : r.amp_) a *= lambda;
  return r;
}

std::string State::str() const {
  std::string out;
  for (int b = 0; b < kSize; ++b) {
    const Scalar& a = amp_[static_cast<std::size_t>(b)];
    if (a.is_zero()) continue;
    std::string ket = "|";
    for (int k = 1; k <= 4; ++k) ket += static_cast<char>('0' + bit(b, k));
    ket += ">";
    std::string c = a.str();
    bool negative = c[0] == '-' && a.is_real();
    if (negative) c.erase(0, 1);
    if (!a.is_real()) c = "(" + c + ")";
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    out += (c == "1" ? "" : c) + ket;
  }
  return out.empty() ? "0" : out;
}

State decode_form(long long n) {
  if (n < 0 || n > 65535) throw InputError("form number out of range 0..65535: " + std::to_string(n));
  State s;
  for (int b = 0; b < State::kSize; ++b)
    if ((n >> b) & 1) s[b] = Scalar(1);
  return s;
}

std::optional<int> encode_form(const State& s) {
  int n = 0;
  for (int b = 0; b < State::kSize; ++b) {
    if (s[b].is_one())
      n |= 1 << b;
    else if (!s[b].is_zero())
      return std::nullopt;
  }
  return n;
}

State ket_sum(std::initializer_list<std::string_view> kets) {
  State s;
  for (auto k : kets) {
    if (k.size() != 4 || k.find_first_not_of("01") != std::string_view::npos)
      throw InputError("bad ket '" + std::string(k) + "'");
    int b = State::index(k[0] - '0', k[1] - '0', k[2] - '0', k[3] - '0');
    s[b] += Scalar(1);
  }
  return s;
}

State ket_sum(const std::vector<std::string>& kets) {
  State s;
  for (const auto& k : kets) {
    State one = ket_sum({std::string_view(k)});
    for (int b = 0; b < State::kSize; ++b) s[b] += one[b];
  }
  return s;
}

namespace {

template <class C>
BasicPolynomial<C> ground_form_impl(const State& s) {
  std::vector<typename BasicPolynomial<C>::Term> terms;
  for (int b = 0; b < State::kSize; ++b) {
    if (s[b].is_zero()) continue;
    Monomial m;
    for (int k = 1; k <= 4; ++k) m.set_exponent(xvar(k, State::bit(b, k)), 1);
    terms.emplace_back(m, convert_scalar<C>(s[b]));
  }
  return BasicPolynomial<C>::from_terms(std::move(terms));
}

}  // namespace

Polynomial to_ground_form(const State& s) { return ground_form_impl<Scalar>(s); }
FloatPolynomial to_float_ground_form(const State& s) { return ground_form_impl<FloatCoeff>(s); }

Scalar det(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

LocalOperator LocalOperator::identity() { return uniform(Matrix2{{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}}); }

LocalOperator LocalOperator::uniform(const Matrix2& m) { return LocalOperator{{m, m, m, m}}; }

bool LocalOperator::is_special() const {
  return std::all_of(factors.begin(), factors.end(), [](const Matrix2& m) { return det(m).is_one(); });
}

LocalOperator LocalOperator::operator*(const LocalOperator& o) const {
  LocalOperator r;
  for (std::size_t k = 0; k < 4; ++k) r.factors[k] = factors[k] * o.factors[k];
  return r;
}

State apply_local(const LocalOperator& g, const State& s) {
  for (const auto& m : g.factors)
    if (det(m).is_zero()) throw InputError("local operator has a singular factor");
  State cur = s;
  for (int k = 1; k <= 4; ++k) {
    const Matrix2& m = g.factors[static_cast<std::size_t>(k - 1)];
    State next;
    int mask = 1 << (k - 1);
    for (int b = 0; b < State::kSize; ++b) {
      int row = State::bit(b, k);
      const Scalar& a0 = cur[b & ~mask];
      const Scalar& a1 = cur[b | mask];
      next[b] = m[row][0] * a0 + m[row][1] * a1;
    }
    cur = std::move(next);
  }
  return cur;
}

QubitPermutation::QubitPermutation(std::array<int, 4> image) : image_(image) {
  std::array<int, 4> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{1, 2, 3, 4}) throw InputError("not a permutation of {1,2,3,4}");
}

QubitPermutation QubitPermutation::transposition(int a, int b) {
  std::array<int, 4> img{1, 2, 3, 4};
  std::swap(img[static_cast<std::size_t>(a - 1)], img[static_cast<std::size_t>(b - 1)]);
  return QubitPermutation(img);
}

std::vector<QubitPermutation> QubitPermutation::all() {
  std::vector<QubitPermutation> out;
  std::array<int, 4> img{1, 2, 3, 4};
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

QubitPermutation QubitPermutation::inverse() const {
  std::array<int, 4> inv{};
  for (int k = 1; k <= 4; ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return QubitPermutation(inv);
}

QubitPermutation QubitPermutation::operator*(const QubitPermutation& o) const {
  std::array<int, 4> img{};
  for (int k = 1; k <= 4; ++k) img[static_cast<std::size_t>(k - 1)] = (*this)(o(k));
  return QubitPermutation(img);
}

std::string QubitPermutation::str() const {
  std::string s;
  for (int v : image_) s += static_cast<char>('0' + v);
  return s;
}

State permute_qubits(const QubitPermutation& sigma, const State& s) {
  State r;
  for (int b = 0; b < State::kSize; ++b) {
    int j = 0;
    for (int k = 1; k <= 4; ++k) j |= State::bit(b, k) << (sigma(k) - 1);
    r[j] = s[b];
  }
  return r;
}

LocalOperator permute_factors(const QubitPermutation& sigma, const LocalOperator& g) {
  LocalOperator r;
  for (int k = 1; k <= 4; ++k)
    r.factors[static_cast<std::size_t>(sigma(k) - 1)] = g.factors[static_cast<std::size_t>(k - 1)];
  return r;
}

State random_state(std::uint64_t seed, RandomMode mode) {
  std::mt19937_64 rng(seed);
  if (mode == RandomMode::binary) {
    std::uniform_int_distribution<int> form(1, 65535);
    return decode_form(form(rng));
  }
  std::uniform_int_distribution<int> entry(-3, 3);
  State s;
  do {
    for (int b = 0; b < State::kSize; ++b) s[b] = Scalar(entry(rng));
  } while (s.is_zero());
  return s;
}

LocalOperator random_sl2_tuple(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> entry(-2, 2);
  LocalOperator g;
  for (auto& f : g.factors) {
    Matrix2 upper{{{Scalar(1), Scalar(entry(rng))}, {Scalar(0), Scalar(1)}}};
    Matrix2 lower{{{Scalar(1), Scalar(0)}, {Scalar(entry(rng)), Scalar(1)}}};
    Matrix2 upper2{{{Scalar(1), Scalar(entry(rng))}, {Scalar(0), Scalar(1)}}};
    f = upper * lower * upper2;
  }
  return g;
}

State product_state(const std::array<std::array<Scalar, 2>, 4>& factors) {
  State s;
  for (int b = 0; b < State::kSize; ++b) {
    Scalar a(1);
    for (int k = 1; k <= 4; ++k) a *= factors[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(State::bit(b, k))];
    s[b] = a;
  }
  return s;
}

State random_product_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::array<std::array<Scalar, 2>, 4> v;
  for (auto& f : v) {
    int a, b;
    do {
      a = entry(rng);
      b = entry(rng);
    } while (a == 0 && b == 0);
    f = {Scalar(a), Scalar(b)};
  }
  return product_state(v);
}

}  // namespace entatlas
