#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entatlas/catalog.hpp"
#include "entatlas/polynomial.hpp"
#include "entatlas/state.hpp"

namespace entatlas {

// Ordered nullity bits ('1' = nonzero), usable as a map key.
class SignatureVector {
 public:
  SignatureVector() = default;
  explicit SignatureVector(std::string bits);
  explicit SignatureVector(const std::vector<bool>& bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] == '1'; }
  const std::string& str() const { return bits_; }
  void push_back(bool b) { bits_.push_back(b ? '1' : '0'); }
  bool all_zero() const { return bits_.find('1') == std::string::npos; }
  bool all_one() const { return bits_.find('0') == std::string::npos; }
  // Every nonzero entry of *this is nonzero in `o`.
  bool subset_of(const SignatureVector& o) const;

  friend auto operator<=>(const SignatureVector&, const SignatureVector&) = default;
  friend bool operator==(const SignatureVector&, const SignatureVector&) = default;

 private:
  std::string bits_;
};

// Memoized evaluation of catalog covariants on one state. Each entry is
// computed once, after its dependencies, and checked against the degree law.
inline constexpr double kConfidenceMargin = 1e3;

template <class C>
class BasicEvaluator {
 public:
  using Poly = BasicPolynomial<C>;

  explicit BasicEvaluator(const State& s, const Catalog& cat = Catalog::builtin(), double rel_tol = 1e-9);

  const Poly& eval(const CovariantId& id) { return eval_index(cat_->require(id)); }
  const Poly& eval_index(std::size_t index);
  bool nonzero(const CovariantId& id) { return !vanishes(eval(id)); }
  bool vanishes(const Poly& p) const;
  // Float mode: some nullity decision so far had a coefficient within a
  // factor kConfidenceMargin of its error bound. Always false in exact mode.
  bool ambiguous() const { return ambiguous_; }

  SignatureVector signature(const std::vector<CovariantId>& ids);

  const Catalog& catalog() const { return *cat_; }
  const State& state() const { return state_; }
  double tolerance() const { return tol_; }

 private:
  const Catalog* cat_;
  State state_;
  double tol_;
  std::vector<std::optional<Poly>> cache_;
  mutable bool ambiguous_ = false;
};

using Evaluator = BasicEvaluator<Scalar>;
using FloatEvaluator = BasicEvaluator<FloatCoeff>;

extern template class BasicEvaluator<Scalar>;
extern template class BasicEvaluator<FloatCoeff>;

// Parses a whitespace-separated id list.
std::vector<CovariantId> parse_id_list(std::string_view text);

// A; six B; C_3111..C_1113; D_4000..D_0004; six D_2200-type; F^1_2220-type; L.
const std::vector<CovariantId>& t_vector_ids();
const std::vector<std::string>& v_vector_names();
const std::vector<CovariantId>& vp_vector_ids();
const std::vector<std::string>& vpp_vector_names();
const std::vector<std::string>& w_vector_names();

template <class C> SignatureVector vector_T(BasicEvaluator<C>& ev);
template <class C> SignatureVector vector_V(BasicEvaluator<C>& ev);
template <class C> SignatureVector vector_Vp(BasicEvaluator<C>& ev);
template <class C> SignatureVector vector_Vpp(BasicEvaluator<C>& ev);
// Exact mode decides the two product entries factor by factor; float mode,
// where nullity is a tolerance judgement, forms the products.
template <class C> SignatureVector vector_W(BasicEvaluator<C>& ev);
// Always forms the products before the zero test.
template <class C> SignatureVector vector_W_literal(BasicEvaluator<C>& ev);

}  // namespace entatlas
