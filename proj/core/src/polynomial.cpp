#include "entatlas/polynomial.hpp"

namespace entatlas {

std::string VariableId::name() const {
  if (is_aux()) return "t" + std::to_string(component());
  std::string s = "x" + std::to_string(component());
  if (copy() == Copy::primed) s += "'";
  if (copy() == Copy::double_primed) s += "''";
  return s + "(" + std::to_string(site()) + ")";
}

std::string Monomial::str() const {
  if (is_constant()) return "1";
  std::string out;
  for (int i = 0; i < VariableId::kCount; ++i) {
    VariableId v = VariableId::from_index(i);
    int e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

template class BasicPolynomial<Scalar>;
template class BasicPolynomial<FloatCoeff>;

}  // namespace entatlas
