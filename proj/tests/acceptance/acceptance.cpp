// Prints one PASS/FAIL line per acceptance criterion. Every check is an exact
// equality; kTolerance documents that nothing is compared approximately.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "entatlas/atlas.hpp"
#include "entatlas/classifier.hpp"
#include "entatlas/dimension.hpp"
#include "entatlas/golden.hpp"
#include "entatlas/invariants.hpp"
#include "entatlas/orbits.hpp"

using namespace entatlas;

namespace {

constexpr double kTolerance = 0.0;
constexpr int kSlImages = 20;
constexpr int kRandomStates = 100;
constexpr int kFactorizationImages = 10;
// Criterion 8 is known to fail: the stated constant does not hold. It is
// reported but does not set the exit code.
constexpr int kKnownRed = 8;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using EdgeSet = std::set<std::pair<int, int>>;
EdgeSet edge_set(const std::vector<golden::Edge>& edges) {
  EdgeSet out;
  for (const auto& e : edges) out.insert({e.lower, e.upper});
  return out;
}

std::set<int> representatives(const ClassTable& t) {
  std::set<int> out;
  for (const auto& c : t.classes) out.insert(c.representative);
  return out;
}

struct Censuses {
  std::vector<int> nullcone_forms, secant_forms;
  ClassTable nullcone, secant;
};

const Censuses& censuses() {
  static const Censuses c = [] {
    Censuses out;
    out.nullcone_forms = enumerate_forms(nullcone_filter);
    out.nullcone = discover_classes(out.nullcone_forms, full_catalog_spec());
    out.secant_forms = enumerate_forms(secant_non_nilpotent_filter);
    out.secant = discover_classes(out.secant_forms, secant_spec());
    return out;
  }();
  return c;
}

void nullcone_census(Outcome& o) {
  const auto& c = censuses();
  const auto& want = golden::nullcone_labels();
  o.detail << c.nullcone_forms.size() << " forms, " << c.nullcone.classes.size() << " classes";
  o.require(c.nullcone_forms.size() == 11662, "form count");
  o.require(c.nullcone.classes.size() == 31, "class count");
  o.require(representatives(c.nullcone) == std::set<int>(want.begin(), want.end()), "representative set");
}

void appendix_b(Outcome& o) {
  int matched = 0;
  for (const auto& row : golden::appendix_b()) {
    Evaluator ev(decode_form(row.label));
    bool ok = vector_T(ev).str() == row.bits;
    matched += ok;
    o.require(ok, "T of " + std::to_string(row.label));
  }
  o.detail << matched << "/" << golden::appendix_b().size() << " blocks";
  o.require(golden::appendix_b().size() == 31, "block count");
}

void strata_table(Outcome& o) {
  int checked = 0;
  for (const auto& [gr, labels] : golden::nullcone_strata()) {
    std::string want;
    for (const auto& row : golden::table1())
      if (row.stratum == gr) want = row.bits;
    for (int label : labels) {
      Evaluator ev(decode_form(label));
      o.require(vector_V(ev).str() == want, "V of " + std::to_string(label) + " in " + gr);
      ++checked;
    }
  }
  o.detail << checked << " labels over " << golden::table1().size() << " strata";
  o.require(golden::table1().size() == 9, "stratum count");
}

void secant_census(Outcome& o) {
  const auto& c = censuses();
  const auto& want = golden::secant_labels();
  o.detail << c.secant_forms.size() << " forms, " << c.secant.classes.size() << " classes";
  o.require(c.secant.classes.size() == 17, "class count");
  o.require(representatives(c.secant) == std::set<int>(want.begin(), want.end()), "representative set");
  for (const auto& row : golden::table4()) {
    Evaluator ev(decode_form(row.label));
    o.require(vector_Vp(ev).str() == row.bits, "V' of " + std::to_string(row.label));
  }
  o.require(golden::table5().size() == 14, "V'' row count");
  for (const auto& row : golden::table5()) {
    Evaluator ev(decode_form(row.label));
    o.require(vector_Vpp(ev).str() == row.bits, "V'' of " + std::to_string(row.label));
    std::string w;
    for (const auto& s : golden::table6())
      if (s.stratum == row.stratum) w = s.bits;
    o.require(vector_W(ev).str() == w, "W of " + std::to_string(row.label));
  }
}

void adherence(Outcome& o) {
  const auto& c = censuses();
  auto fig1 = edge_set(adherence_order(c.nullcone).edges);
  auto fig4_graph = adherence_order(c.secant, {59510});
  o.detail << fig1.size() << " nullcone edges, " << fig4_graph.edges.size() << " secant edges";
  o.require(fig1 == edge_set(golden::fig1_edges()), "nullcone edge set");
  o.require(edge_set(fig4_graph.edges) == edge_set(golden::fig4_edges()), "secant edge set");
  for (const auto& e : fig4_graph.edges) o.require(e.caveat == (e.upper == 59510), "caveat flags");
  std::size_t cross = 0;
  for (const auto& panel : golden::cross_panels()) {
    o.require(edge_set(panel_cross_edges(panel)) == edge_set(panel.edges), "cross panel " + panel.name);
    cross += panel.edges.size();
  }
  o.detail << ", " << cross << " cross edges in " << golden::cross_panels().size() << " panels";
}

void round_trip(Outcome& o) {
  int records = 0;
  for (const auto& rec : orbit_catalog()) {
    if (rec.label == 0 || rec.label == 6014) continue;
    ++records;
    o.require(classify_secant3_extended(rec.normal_form).label == rec.label, "normal form of " + std::to_string(rec.label));
    for (int k = 0; k < kSlImages; ++k) {
      State moved = apply_local(random_sl2_tuple(7919 * static_cast<std::uint64_t>(rec.label) + static_cast<std::uint64_t>(k)),
                                rec.normal_form);
      o.require(classify_secant3_extended(moved).label == rec.label, "SL image of " + std::to_string(rec.label));
    }
  }
  o.detail << records << " records x " << kSlImages << " SL images";
}

Scalar power(const Scalar& x, int k) {
  Scalar r(1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

void identities(Outcome& o) {
  for (int seed = 0; seed < kRandomStates; ++seed) {
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    State s = random_state(static_cast<std::uint64_t>(seed));
    auto g = generators<Scalar>(s);
    o.require((g.L + g.M + inv_N<Scalar>(s)).is_zero(), "N = -L - M" + tag);
    Scalar delta = hyperdet_Delta(s);
    o.require(delta_via_sextic(s) == delta, "sextic route" + tag);
    o.require(hyperdet_Delta(s.scaled(Scalar(2))) == delta * power(Scalar(2), 24), "degree 24" + tag);
    State moved = apply_local(random_sl2_tuple(static_cast<std::uint64_t>(seed) + 5000), s);
    auto h = generators<Scalar>(moved);
    o.require(h.B == g.B && h.L == g.L && h.M == g.M && h.Dxy == g.Dxy, "SL invariance of B, L, M, Dxy" + tag);
    o.require(hyperdet_Delta(moved) == delta, "SL invariance of Delta" + tag);
  }
  o.detail << kRandomStates << " states";
}

void factorization(Outcome& o) {
  int stated = 0, measured = 0, total = 0;
  for (int label : golden::secant_labels()) {
    const State& nf = find_orbit(label)->normal_form;
    for (int k = 0; k <= kFactorizationImages; ++k) {
      State s = k == 0 ? nf : apply_local(random_sl2_tuple(104729 * static_cast<std::uint64_t>(label) + static_cast<std::uint64_t>(k)), nf);
      Scalar dz = inv_D<Scalar>(s) * inv_Z<Scalar>(s);
      Scalar delta = hyperdet_Delta(s);
      stated += delta == Scalar(6912) * dz;
      measured += delta == Scalar(-27) * dz;
      ++total;
    }
  }
  o.require(stated == total, "Delta = 6912 Dxy Z");
  o.detail << "Delta = 6912*Dxy*Z on " << stated << "/" << total << "; Delta = -27*Dxy*Z on " << measured << "/"
           << total;
}

void dimensions(Outcome& o) {
  int exact = 0, bounded = 0;
  for (const auto& rec : orbit_catalog()) {
    if (rec.label == 0 || !rec.dimension) continue;
    int d = orbit_dimension(rec.normal_form);
    if (rec.quasihomogeneous) {
      o.require(d == *rec.dimension, "dim of " + std::to_string(rec.label));
      ++exact;
    } else {
      o.require(d <= *rec.dimension, "dim bound of " + std::to_string(rec.label));
      ++bounded;
    }
  }
  o.require(orbit_dimension(ket_sum({"0000", "1111"})) == 9, "sigma(X) = 9");
  int t1 = terracini_rank(generic_points(1, 2024));
  int t2 = terracini_rank(generic_points(2, 2024));
  int t3 = terracini_rank(generic_points(3, 2024));
  o.require(t1 == 4 && t2 == 9 && t3 == 13, "Terracini ranks");
  o.detail << exact << " exact, " << bounded << " bounded; Terracini " << t1 << "/" << t2 << "/" << t3;
}

void permutation_grouping(Outcome& o) {
  std::set<int> ids;
  for (const auto& [label, id] : permutation_types()) ids.insert(id);
  o.detail << permutation_types().size() << " classes, " << ids.size() << " types";
  o.require(permutation_types().size() == 47, "class count");
  o.require(ids.size() == 15, "type count");
}

void extended_branch(Outcome& o) {
  State s = decode_form(6014);
  auto g = generators<Scalar>(s);
  o.require(g.L.is_zero() && g.M.is_zero(), "L = M = 0");
  o.require(!g.B.is_zero(), "B != 0");
  o.require(!g.Dxy.is_zero(), "Dxy != 0");
  o.require(inv_Z<Scalar>(s).is_zero(), "Z = 0");
  for (int label : {6014, 59510, 65257})
    o.require(classify_secant3_extended(decode_form(label)).label == label, "extended class of " + std::to_string(label));
  o.detail << "B=" << g.B.str() << " Dxy=" << g.Dxy.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"nullcone census", nullcone_census},
      {"Appendix B reproduction", appendix_b},
      {"strata table", strata_table},
      {"secant census and tables", secant_census},
      {"adherence graphs", adherence},
      {"normal-form round trip", round_trip},
      {"invariant identities", identities},
      {"secant factorization", factorization},
      {"dimensions", dimensions},
      {"permutation grouping", permutation_grouping},
      {"extended branch", extended_branch},
  };
  std::cout << "tolerance " << kTolerance << " (exact arithmetic throughout)\n";
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << n << ' ' << criteria[i].first << ": " << o.detail.str() << " ["
              << timing << "]" << (o.pass || n != kKnownRed ? "" : " (known: the stated constant does not hold)")
              << std::endl;
    if (!o.pass && n != kKnownRed) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
