#include "entatlas/atlas.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "entatlas/errors.hpp"
#include "entatlas/orbits.hpp"
#include "entatlas/parallel.hpp"

namespace entatlas {

bool nullcone_filter(const InvariantValues& v) {
  return v.B.is_zero() && v.L.is_zero() && v.M.is_zero() && v.Dxy.is_zero();
}

bool third_secant_filter(const InvariantValues& v) { return v.L.is_zero() && v.M.is_zero(); }

bool secant_non_nilpotent_filter(const InvariantValues& v) { return third_secant_filter(v) && !nullcone_filter(v); }

std::vector<int> enumerate_forms(const FormPredicate& pred) {
  constexpr int kForms = 1 << 16;
  std::vector<char> keep(kForms, 0);
  InvariantOptions opt;
  opt.hyperdet = false;
  parallel_for(kForms, [&](std::size_t n) {
    keep[n] = pred(compute_invariants(decode_form(static_cast<long long>(n)), opt)) ? 1 : 0;
  });
  std::vector<int> out;
  for (int n = 0; n < kForms; ++n)
    if (keep[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

SignatureSpec full_catalog_spec() { return {Catalog::builtin().ids(), {}}; }

SignatureSpec secant_spec() {
  SignatureSpec spec;
  const std::vector<CovariantId> dropped = parse_id_list("D_0000^1 D_0000^2 F_0000");
  for (const auto& id : Catalog::builtin().ids())
    if (std::find(dropped.begin(), dropped.end(), id) == dropped.end()) spec.covariants.push_back(id);
  spec.invariant_bits = {"Dxy"};
  return spec;
}

SignatureSpec extended_spec() {
  SignatureSpec spec = secant_spec();
  spec.invariant_bits.push_back("Z");
  return spec;
}

SignatureVector compute_signature(const State& s, const SignatureSpec& spec) {
  Evaluator ev(s);
  SignatureVector sig = ev.signature(spec.covariants);
  if (spec.invariant_bits.empty()) return sig;
  auto g = generators<Scalar>(s);
  for (const auto& name : spec.invariant_bits) {
    Scalar v;
    if (name == "B") v = g.B;
    else if (name == "L") v = g.L;
    else if (name == "M") v = g.M;
    else if (name == "Dxy") v = g.Dxy;
    else if (name == "Z") v = g.Dxy - g.B * g.B * g.B * Scalar(Rational(1, 27));
    else throw InputError("unknown invariant bit " + name);
    sig.push_back(!v.is_zero());
  }
  return sig;
}

std::size_t ClassTable::form_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.members.size();
  return n;
}

const FormClass* ClassTable::find(int representative) const {
  for (const auto& c : classes)
    if (c.representative == representative) return &c;
  return nullptr;
}

const FormClass* ClassTable::class_of(int form) const {
  for (const auto& c : classes)
    if (std::binary_search(c.members.begin(), c.members.end(), form)) return &c;
  return nullptr;
}

ClassTable discover_classes(const std::vector<int>& forms, const SignatureSpec& spec) {
  std::vector<SignatureVector> sigs(forms.size());
  parallel_for(forms.size(), [&](std::size_t i) { sigs[i] = compute_signature(decode_form(forms[i]), spec); });

  // Merge in input order so the table does not depend on scheduling.
  std::map<SignatureVector, std::vector<int>> groups;
  for (std::size_t i = 0; i < forms.size(); ++i) groups[sigs[i]].push_back(forms[i]);

  ClassTable t;
  for (auto& [sig, members] : groups) {
    std::sort(members.begin(), members.end());
    FormClass c;
    c.signature = sig;
    c.members = std::move(members);
    c.representative = c.members.back();
    for (auto it = c.members.rbegin(); it != c.members.rend(); ++it)
      if (find_orbit(*it)) {
        c.representative = *it;
        c.known_label = true;
        break;
      }
    t.classes.push_back(std::move(c));
  }
  std::sort(t.classes.begin(), t.classes.end(),
            [](const FormClass& a, const FormClass& b) { return a.representative < b.representative; });
  return t;
}

bool operator==(const AdherenceGraph& a, const AdherenceGraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    if (a.nodes[i].label != b.nodes[i].label || a.nodes[i].signature != b.nodes[i].signature) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i].lower != b.edges[i].lower || a.edges[i].upper != b.edges[i].upper ||
        a.edges[i].caveat != b.edges[i].caveat)
      return false;
  return true;
}

namespace {

bool strictly_below(const SignatureVector& a, const SignatureVector& b) { return a != b && a.subset_of(b); }

void sort_graph(AdherenceGraph& g) {
  std::sort(g.nodes.begin(), g.nodes.end(), [](const GraphNode& a, const GraphNode& b) { return a.label < b.label; });
  std::sort(g.edges.begin(), g.edges.end(), [](const golden::Edge& a, const golden::Edge& b) {
    return std::pair(a.lower, a.upper) < std::pair(b.lower, b.upper);
  });
}

}  // namespace

AdherenceGraph adherence_order(std::vector<GraphNode> nodes, const std::vector<int>& caveat_uppers,
                               const std::vector<std::pair<int, int>>& non_inclusions) {
  AdherenceGraph g;
  g.nodes = std::move(nodes);
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::pair<int, int> key{g.nodes[a].label, g.nodes[b].label};
      below[a][b] = strictly_below(g.nodes[a].signature, g.nodes[b].signature) &&
                    std::find(non_inclusions.begin(), non_inclusions.end(), key) == non_inclusions.end();
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!below[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (below[a][c] && below[c][b]) covered = false;
      if (!covered) continue;
      int upper = g.nodes[b].label;
      bool caveat = std::find(caveat_uppers.begin(), caveat_uppers.end(), upper) != caveat_uppers.end();
      g.edges.push_back({g.nodes[a].label, upper, caveat});
    }
  sort_graph(g);
  return g;
}

AdherenceGraph adherence_order(const ClassTable& t, const std::vector<int>& caveat_uppers) {
  std::vector<GraphNode> nodes;
  for (const auto& c : t.classes) nodes.push_back({c.representative, c.signature});
  return adherence_order(std::move(nodes), caveat_uppers);
}

std::vector<GraphNode> representative_nodes(const std::vector<int>& labels, const SignatureSpec& spec) {
  std::vector<GraphNode> nodes(labels.size());
  parallel_for(labels.size(), [&](std::size_t i) {
    const OrbitRecord* rec = find_orbit(labels[i]);
    State s = rec ? rec->normal_form : decode_form(labels[i]);
    nodes[i] = {labels[i], compute_signature(s, spec)};
  });
  return nodes;
}

std::vector<golden::Edge> panel_cross_edges(const golden::Panel& panel) {
  std::vector<std::pair<int, int>> dotted;
  for (const auto& e : golden::fig4_edges())
    if (e.caveat) dotted.emplace_back(e.lower, e.upper);
  auto g = adherence_order(representative_nodes(panel.nodes, full_catalog_spec()), {}, dotted);
  const auto& nullcone = golden::nullcone_labels();
  auto in_nullcone = [&](int l) { return std::find(nullcone.begin(), nullcone.end(), l) != nullcone.end(); };
  std::vector<golden::Edge> out;
  for (const auto& e : g.edges)
    if (in_nullcone(e.lower) && !in_nullcone(e.upper)) out.push_back(e);
  return out;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string export_graph(const AdherenceGraph& g, GraphFormat format) {
  AdherenceGraph sorted = g;
  sort_graph(sorted);
  if (format == GraphFormat::json) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& n : sorted.nodes) j["nodes"].push_back({{"label", n.label}, {"signature", n.signature.str()}});
    for (const auto& e : sorted.edges)
      j["edges"].push_back({{"lower", e.lower}, {"upper", e.upper}, {"caveat", e.caveat}});
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "digraph adherence {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& n : sorted.nodes) out << "  \"" << n.label << "\" [signature=\"" << n.signature.str() << "\"];\n";
  for (const auto& e : sorted.edges) {
    out << "  \"" << e.lower << "\" -> \"" << e.upper << "\"";
    if (e.caveat) out << " [style=dotted]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

AdherenceGraph graph_from_json(std::string_view text) {
  AdherenceGraph g;
  try {
    auto j = nlohmann::json::parse(text);
    for (const auto& n : j.at("nodes"))
      g.nodes.push_back({n.at("label").get<int>(), SignatureVector(n.at("signature").get<std::string>())});
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("lower").get<int>(), e.at("upper").get<int>(), e.at("caveat").get<bool>()});
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  sort_graph(g);
  return g;
}

bool VerifyReport::all_pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const TableCheck& c) { return !c.pass(); }));
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass() ? "PASS " : "FAIL ") << c.table << ' ' << c.key << " expected=" << c.expected
        << " computed=" << c.computed;
    if (!c.chain.empty()) {
      out << " chain=";
      for (std::size_t i = 0; i < c.chain.size(); ++i) out << (i ? "," : "") << c.chain[i];
    }
    out << '\n';
  }
  out << (all_pass() ? "PASS" : "FAIL") << " summary " << checks.size() - failures() << '/' << checks.size()
      << " checks\n";
  return out.str();
}

namespace {

std::vector<std::string> mismatch_names(const std::string& expected, const std::string& computed,
                                        const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (i >= expected.size() || i >= computed.size() || expected[i] != computed[i]) out.push_back(names[i]);
  return out;
}

TableCheck check(std::string table, std::string key, std::string expected, std::string computed,
                 const std::vector<std::string>& names) {
  TableCheck c{std::move(table), std::move(key), std::move(expected), std::move(computed), {}};
  if (!c.pass()) c.chain = mismatch_names(c.expected, c.computed, names);
  return c;
}

std::string stratum_representative(const std::string& gr) {
  for (const auto& [name, labels] : golden::nullcone_strata())
    if (name == gr) return std::to_string(labels.front());
  throw IntegrityError("no representative for " + gr);
}

}  // namespace

VerifyReport verify_tables() {
  struct Job {
    std::string table, key, expected;
    int label;
  };
  std::vector<Job> jobs;
  for (const auto& row : golden::appendix_b()) jobs.push_back({"Appendix B", std::to_string(row.label), row.bits, row.label});
  for (const auto& row : golden::table1())
    jobs.push_back({"Table 1", row.stratum, row.bits, std::stoi(stratum_representative(row.stratum))});
  for (const auto& row : golden::table4()) jobs.push_back({"Table 4", std::to_string(row.label), row.bits, row.label});
  for (const auto& row : golden::table5()) jobs.push_back({"Table 5", std::to_string(row.label), row.bits, row.label});
  for (const auto& row : golden::table5())
    for (const auto& w : golden::table6())
      if (w.stratum == row.stratum)
        jobs.push_back({"Table 6", row.stratum + ":" + std::to_string(row.label), w.bits, row.label});

  std::vector<std::string> t_names;
  for (const auto& id : t_vector_ids()) t_names.push_back(id.str());
  std::vector<std::string> vp_names;
  for (const auto& id : vp_vector_ids()) vp_names.push_back(id.str());

  std::vector<TableCheck> checks(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    Evaluator ev(find_orbit(job.label)->normal_form);
    if (job.table == "Appendix B") {
      checks[i] = check(job.table, job.key, job.expected, vector_T(ev).str(), t_names);
      // Expand mismatching T entries to their full dependency chains.
      std::vector<std::string> chain;
      for (const auto& name : checks[i].chain)
        for (const auto& id : Catalog::builtin().dependency_chain(CovariantId::parse(name)))
          if (std::find(chain.begin(), chain.end(), id.str()) == chain.end()) chain.push_back(id.str());
      checks[i].chain = std::move(chain);
    } else if (job.table == "Table 1") {
      checks[i] = check(job.table, job.key, job.expected, vector_V(ev).str(), v_vector_names());
    } else if (job.table == "Table 4") {
      checks[i] = check(job.table, job.key, job.expected, vector_Vp(ev).str(), vp_names);
    } else if (job.table == "Table 5") {
      checks[i] = check(job.table, job.key, job.expected, vector_Vpp(ev).str(), vpp_vector_names());
    } else {
      checks[i] = check(job.table, job.key, job.expected, vector_W(ev).str(), w_vector_names());
    }
  });
  return {std::move(checks)};
}

}  // namespace entatlas
