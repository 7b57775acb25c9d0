#include "entatlas/evaluator.hpp"

#include <sstream>

#include "entatlas/errors.hpp"

namespace entatlas {

SignatureVector::SignatureVector(std::string bits) : bits_(std::move(bits)) {
  if (bits_.find_first_not_of("01") != std::string::npos) throw InputError("signature must be a 0/1 string");
}

SignatureVector::SignatureVector(const std::vector<bool>& bits) {
  for (bool b : bits) push_back(b);
}

bool SignatureVector::subset_of(const SignatureVector& o) const {
  if (o.size() != size()) throw IntegrityError("signature length mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] == '1' && o.bits_[i] == '0') return false;
  return true;
}

template <class C>
BasicEvaluator<C>::BasicEvaluator(const State& s, const Catalog& cat, double rel_tol)
    : cat_(&cat), state_(s), tol_(rel_tol), cache_(cat.size()) {}

template <class C>
const typename BasicEvaluator<C>::Poly& BasicEvaluator<C>::eval_index(std::size_t index) {
  auto& slot = cache_[index];
  if (slot) return *slot;
  const CovariantDef& def = cat_->entries()[index];
  if (index == 0) {
    if constexpr (std::is_same_v<C, Scalar>)
      slot = to_ground_form(state_);
    else
      slot = to_float_ground_form(state_);
    return *slot;
  }
  Poly sum;
  for (const auto& t : def.terms) {
    const Poly& lhs = eval_index(cat_->require(t.lhs));
    const Poly& rhs = eval_index(cat_->require(t.rhs));
    Poly p = transvect_fast(lhs, rhs, t.index);
    if (!t.coefficient.is_one()) p = p.scaled(convert_constant<C>(Scalar(t.coefficient)));
    sum += p;
  }
  if (!sum.is_zero() && *sum.multidegree() != def.id.multidegree)
    throw IntegrityError("degree law violated while evaluating " + def.id.str());
  slot = std::move(sum);
  return *slot;
}

template <class C>
SignatureVector BasicEvaluator<C>::signature(const std::vector<CovariantId>& ids) {
  SignatureVector v;
  for (const auto& id : ids) v.push_back(nonzero(id));
  return v;
}

template class BasicEvaluator<Scalar>;
template <class C>
bool BasicEvaluator<C>::vanishes(const Poly& p) const {
  bool zero = p.vanishes(tol_);
  if constexpr (std::is_same_v<C, FloatCoeff>) {
    bool robust = true;
    if (zero) {
      for (const auto& t : p.terms())
        if (std::abs(t.second.val) * kConfidenceMargin > t.second.error_bound(tol_)) robust = false;
    } else {
      robust = false;
      for (const auto& t : p.terms())
        if (std::abs(t.second.val) > kConfidenceMargin * t.second.error_bound(tol_)) robust = true;
    }
    if (!robust) ambiguous_ = true;
  }
  return zero;
}

template class BasicEvaluator<FloatCoeff>;

std::vector<CovariantId> parse_id_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<CovariantId> out;
  std::string tok;
  while (in >> tok) out.push_back(CovariantId::parse(tok));
  return out;
}

const std::vector<CovariantId>& t_vector_ids() {
  static const auto ids = parse_id_list(
      "A "
      "B_2200 B_2020 B_2002 B_0220 B_0202 B_0022 "
      "C_3111 C_1311 C_1131 C_1113 "
      "D_4000 D_0400 D_0040 D_0004 "
      "D_2200 D_2020 D_2002 D_0220 D_0202 D_0022 "
      "F_2220^1 F_2202^1 F_2022^1 F_0222^1 "
      "L_6000 L_0600 L_0060 L_0006");
  return ids;
}

const std::vector<std::string>& v_vector_names() {
  static const std::vector<std::string> names{"A", "P_B", "P_C^1", "P_C^2", "P_D^1", "P_D^2", "P_F", "P_L"};
  return names;
}

const std::vector<CovariantId>& vp_vector_ids() {
  static const auto ids = parse_id_list("L_6000 L_0600 L_0060 L_0006");
  return ids;
}

const std::vector<std::string>& vpp_vector_names() {
  static const std::vector<std::string> names{"F_**00", "F_*0*0", "F_*00*", "F_0**0", "F_0*0*",
                                              "F_00**", "L_6000", "L_0600", "L_0060", "L_0006"};
  return names;
}

const std::vector<std::string>& w_vector_names() {
  static const std::vector<std::string> names{"F_42", "F~_**00*F~_*0*0*F~_*00*", "F_**00*...*F_00**"};
  return names;
}

namespace {

template <class C>
BasicPolynomial<C> sum_of(BasicEvaluator<C>& ev, std::string_view ids) {
  BasicPolynomial<C> s;
  for (const auto& id : parse_id_list(ids)) s += ev.eval(id);
  return s;
}

template <class C>
BasicPolynomial<C> product_of(BasicEvaluator<C>& ev, std::string_view ids) {
  auto list = parse_id_list(ids);
  BasicPolynomial<C> p = ev.eval(list.front());
  for (std::size_t i = 1; i < list.size(); ++i) p *= ev.eval(list[i]);
  return p;
}

// Bold F sums in the order **00, *0*0, *00*, 0**0, 0*0*, 00**.
template <class C>
std::array<BasicPolynomial<C>, 6> bold_f(BasicEvaluator<C>& ev) {
  return {sum_of(ev, "F_4200 F_2400"), sum_of(ev, "F_4020 F_2040"), sum_of(ev, "F_4002 F_2004"),
          sum_of(ev, "F_0420 F_0240"), sum_of(ev, "F_0402 F_0204"), sum_of(ev, "F_0042 F_0024")};
}

}  // namespace

template <class C>
SignatureVector vector_T(BasicEvaluator<C>& ev) {
  return ev.signature(t_vector_ids());
}

template <class C>
SignatureVector vector_V(BasicEvaluator<C>& ev) {
  SignatureVector v;
  v.push_back(ev.nonzero(kGroundForm));
  v.push_back(!ev.vanishes(sum_of(ev, "B_2200 B_2020 B_2002 B_0220 B_0202 B_0022")));
  v.push_back(!ev.vanishes(sum_of(ev, "C_3111 C_1311 C_1131 C_1113")));
  v.push_back(!ev.vanishes(product_of(ev, "C_3111 C_1311 C_1131 C_1113")));
  v.push_back(!ev.vanishes(sum_of(ev, "D_4000 D_0400 D_0040 D_0004")));
  v.push_back(!ev.vanishes(sum_of(ev, "D_2200 D_2020 D_2002 D_0220 D_0202 D_0022")));
  v.push_back(!ev.vanishes(sum_of(ev, "F_2220^1 F_2202^1 F_2022^1 F_0222^1")));
  v.push_back(!ev.vanishes(sum_of(ev, "L_6000 L_0600 L_0060 L_0006")));
  return v;
}

template <class C>
SignatureVector vector_Vp(BasicEvaluator<C>& ev) {
  return ev.signature(vp_vector_ids());
}

template <class C>
SignatureVector vector_Vpp(BasicEvaluator<C>& ev) {
  SignatureVector v;
  for (const auto& f : bold_f(ev)) v.push_back(!ev.vanishes(f));
  for (const auto& id : vp_vector_ids()) v.push_back(ev.nonzero(id));
  return v;
}

namespace {

template <class C>
SignatureVector w_vector(BasicEvaluator<C>& ev, bool literal_products) {
  auto f = bold_f(ev);
  BasicPolynomial<C> f42;
  for (const auto& p : f) f42 += p;
  std::array<BasicPolynomial<C>, 3> bars{f42 - f[0] - f[5], f42 - f[1] - f[4], f42 - f[2] - f[3]};
  // Over an integral domain a product vanishes iff a factor does.
  auto product_nonzero = [&](const auto& factors) {
    if (!literal_products) {
      for (const auto& p : factors)
        if (ev.vanishes(p)) return false;
      return true;
    }
    BasicPolynomial<C> prod = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) prod *= factors[i];
    return !ev.vanishes(prod);
  };
  SignatureVector v;
  v.push_back(!ev.vanishes(f42));
  v.push_back(product_nonzero(bars));
  v.push_back(product_nonzero(f));
  return v;
}

}  // namespace

template <class C>
SignatureVector vector_W(BasicEvaluator<C>& ev) {
  return w_vector(ev, !std::is_same_v<C, Scalar>);
}

template <class C>
SignatureVector vector_W_literal(BasicEvaluator<C>& ev) {
  return w_vector(ev, true);
}

#define ENTATLAS_INSTANTIATE_VECTORS(C)                        \
  template SignatureVector vector_T(BasicEvaluator<C>&);         \
  template SignatureVector vector_V(BasicEvaluator<C>&);         \
  template SignatureVector vector_Vp(BasicEvaluator<C>&);        \
  template SignatureVector vector_Vpp(BasicEvaluator<C>&);       \
  template SignatureVector vector_W(BasicEvaluator<C>&);         \
  template SignatureVector vector_W_literal(BasicEvaluator<C>&);

ENTATLAS_INSTANTIATE_VECTORS(Scalar)
ENTATLAS_INSTANTIATE_VECTORS(FloatCoeff)

}  // namespace entatlas
