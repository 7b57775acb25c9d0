#include "entatlas/classifier.hpp"

#include <numeric>

#include "entatlas/errors.hpp"
#include "entatlas/golden.hpp"
#include "entatlas/invariants.hpp"
#include "entatlas/orbits.hpp"

namespace entatlas {

namespace {

template <class C>
class Session {
 public:
  Session(const State& s, const ClassifyOptions& opt)
      : opt_(opt), ev_(s, Catalog::builtin(), opt.tolerance), gen_(generators<C>(s)) {}

  bool zero(const C& v) {
    if constexpr (std::is_same_v<C, FloatCoeff>) {
      double a = std::abs(v.val), bound = v.error_bound(opt_.tolerance);
      // Ambiguous when |val| lies within kConfidenceMargin of the bound.
      if (a * kConfidenceMargin > bound && a <= kConfidenceMargin * bound) confident_ = false;
      return a <= bound;
    } else {
      return v.is_zero();
    }
  }

  // The tables are checked in exact mode, so in float mode an unmatched
  // signature means some nullity decision went the wrong way.
  [[noreturn]] void unmatched(const std::string& what) {
    if constexpr (std::is_same_v<C, FloatCoeff>)
      throw ClassificationFailure("FAIL: float nullity decisions are inconsistent (" + what + "); use exact mode");
    throw IntegrityError(what);
  }

  bool nilpotent() { return zero(gen_.B) && zero(gen_.L) && zero(gen_.M) && zero(gen_.Dxy); }

  ClassificationResult nullcone() {
    if (!nilpotent()) throw ClassificationFailure("FAIL: the state is not nilpotent");
    auto t = vector_T(ev_);
    auto v = vector_V(ev_);
    int label = -1;
    for (const auto& row : golden::appendix_b())
      if (row.bits == t.str()) label = row.label;
    if (label < 0) unmatched("T signature " + t.str() + " matches no Appendix B block");
    std::string gr;
    for (const auto& row : golden::table1())
      if (row.bits == v.str()) gr = row.stratum;
    if (gr.empty()) unmatched("V signature " + v.str() + " matches no stratum");
    if (find_orbit(label)->group != gr)
      unmatched("V places " + std::to_string(label) + " in " + gr + ", T disagrees");
    return finish(label, gr, {{"T", t}, {"V", v}});
  }

  ClassificationResult secant(bool extended) {
    if (!zero(gen_.L) || !zero(gen_.M)) throw ClassificationFailure("FAIL: the state is not in the third secant variety");
    bool b0 = zero(gen_.B), d0 = zero(gen_.Dxy);
    if (b0 && d0) return nullcone();
    if (b0) return finish(59777, "special", {});
    if (d0) {
      auto vpp = vector_Vpp(ev_);
      auto w = vector_W(ev_);
      const golden::LabeledRow* hit = nullptr;
      for (const auto& row : golden::table5())
        if (row.bits == vpp.str()) hit = &row;
      if (!hit) unmatched("V'' signature " + vpp.str() + " matches no row of the V'' table");
      std::string gr;
      for (const auto& row : golden::table6())
        if (row.bits == w.str()) gr = row.stratum;
      if (gr != hit->stratum)
        unmatched("W signature " + w.str() + " disagrees with stratum " + hit->stratum);
      return finish(hit->label, gr, {{"V''", vpp}, {"W", w}});
    }
    auto vp = vector_Vp(ev_);
    if (extended) {
      C z = gen_.Dxy - gen_.B * gen_.B * gen_.B * convert_constant<C>(Scalar(Rational(1, 27)));
      SignatureVector zbit;
      zbit.push_back(!zero(z));
      if (zbit[0]) return finish(65257, "Gr'_2", {{"Z", zbit}, {"V'", vp}});
      if (vp.all_zero()) return finish(59510, "Gr'_1", {{"Z", zbit}, {"V'", vp}});
      return finish(6014, "special", {{"Z", zbit}, {"V'", vp}});
    }
    for (const auto& row : golden::table4())
      if (row.bits == vp.str()) return finish(row.label, row.stratum, {{"V'", vp}});
    unmatched("V' signature " + vp.str() + " matches no row of the V' table");
  }

 private:
  ClassificationResult finish(int label, std::string gr,
                              std::vector<std::pair<std::string, SignatureVector>> sigs) {
    ClassificationResult r;
    r.label = label;
    r.variety = find_orbit(label)->variety;
    r.stratum = std::move(gr);
    r.signatures = std::move(sigs);
    r.mode = std::is_same_v<C, Scalar> ? Mode::exact : Mode::floating;
    r.confident = confident_ && !ev_.ambiguous();
    return r;
  }

  ClassifyOptions opt_;
  BasicEvaluator<C> ev_;
  Generators<C> gen_;
  bool confident_ = true;
};

template <class F>
ClassificationResult dispatch(const State& s, const ClassifyOptions& opt, F f) {
  if (s.is_zero()) throw InputError("the zero state has no class");
  if (opt.mode == Mode::exact) {
    Session<Scalar> session(s, opt);
    return f(session);
  }
  Session<FloatCoeff> session(s, opt);
  return f(session);
}

}  // namespace

ClassificationResult classify_nullcone(const State& s, const ClassifyOptions& opt) {
  return dispatch(s, opt, [](auto& session) { return session.nullcone(); });
}

ClassificationResult classify_secant3(const State& s, const ClassifyOptions& opt) {
  return dispatch(s, opt, [](auto& session) { return session.secant(false); });
}

ClassificationResult classify_secant3_extended(const State& s, const ClassifyOptions& opt) {
  return dispatch(s, opt, [](auto& session) { return session.secant(true); });
}

std::string stratum(const State& s, const ClassifyOptions& opt) { return classify_secant3_extended(s, opt).stratum; }

int permuted_label(const QubitPermutation& sigma, int label) {
  const OrbitRecord* rec = find_orbit(label);
  if (!rec) throw InputError("unknown label " + std::to_string(label));
  if (label == 0) return 0;
  return classify_secant3_extended(permute_qubits(sigma, rec->normal_form)).label;
}

const std::map<int, int>& permutation_types() {
  static const std::map<int, int> types = [] {
    auto labels = entangled_labels();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    std::vector<std::size_t> parent(labels.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (const auto& sigma : QubitPermutation::all()) {
        int image = permuted_label(sigma, labels[i]);
        auto it = index.find(image);
        if (it == index.end())
          throw IntegrityError("permutation maps " + std::to_string(labels[i]) + " outside the entangled classes");
        parent[find(i)] = find(it->second);
      }
    std::map<std::size_t, int> root_id;
    std::map<int, int> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = root_id.try_emplace(find(i), static_cast<int>(root_id.size()) + 1);
      out[labels[i]] = it->second;
    }
    return out;
  }();
  return types;
}

std::optional<int> permutation_type(int label) {
  const auto& types = permutation_types();
  auto it = types.find(label);
  if (it == types.end()) return std::nullopt;
  return it->second;
}

}  // namespace entatlas
