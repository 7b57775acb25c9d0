#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../support.hpp"
#include "entatlas/atlas.hpp"
#include "entatlas/errors.hpp"
#include "entatlas/invariants.hpp"

using namespace entatlas;
using namespace testing_support;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet edge_set(const std::vector<golden::Edge>& edges) {
  EdgeSet out;
  for (const auto& e : edges) out.insert({e.lower, e.upper});
  return out;
}

const AdherenceGraph& nullcone_graph() {
  static const AdherenceGraph g = adherence_order(representative_nodes(golden::nullcone_labels(), full_catalog_spec()));
  return g;
}

const AdherenceGraph& secant_graph() {
  static const AdherenceGraph g =
      adherence_order(representative_nodes(golden::secant_labels(), secant_spec()), {59510});
  return g;
}

std::set<int> below(const AdherenceGraph& g, int upper) {
  std::set<int> out;
  for (const auto& e : g.edges)
    if (e.upper == upper) out.insert(e.lower);
  return out;
}

std::set<int> above(const AdherenceGraph& g, int lower) {
  std::set<int> out;
  for (const auto& e : g.edges)
    if (e.lower == lower) out.insert(e.upper);
  return out;
}

// Nilpotent forms among a slice of the form range.
std::vector<int> nilpotent_slice(int from, int to) {
  InvariantOptions opt;
  opt.hyperdet = false;
  std::vector<int> out;
  for (int n = from; n < to; ++n)
    if (n > 0 && nullcone_filter(compute_invariants(decode_form(n), opt))) out.push_back(n);
  return out;
}

}  // namespace

TEST(Atlas, SingletonZeroClass) {
  auto t = discover_classes({0}, full_catalog_spec());
  ASSERT_EQ(t.classes.size(), 1u);
  EXPECT_TRUE(t.classes[0].signature.all_zero());
  EXPECT_EQ(t.classes[0].representative, 0);
  EXPECT_TRUE(t.classes[0].known_label);
}

TEST(Atlas, PartitionAndOrderIndependence) {
  auto forms = nilpotent_slice(59000, 60500);
  ASSERT_FALSE(forms.empty());
  auto spec = full_catalog_spec();
  auto t = discover_classes(forms, spec);
  EXPECT_EQ(t.form_count(), forms.size());
  std::set<int> seen;
  for (const auto& c : t.classes)
    for (int m : c.members) {
      EXPECT_TRUE(seen.insert(m).second) << m;
      EXPECT_EQ(t.class_of(m), &c);
    }
  EXPECT_EQ(seen.size(), forms.size());
  EXPECT_NE(t.find(59520), nullptr);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 2; ++k) {
    auto shuffled = spec;
    std::shuffle(shuffled.covariants.begin(), shuffled.covariants.end(), rng);
    auto u = discover_classes(forms, shuffled);
    ASSERT_EQ(u.classes.size(), t.classes.size());
    for (const auto& c : t.classes) EXPECT_EQ(u.class_of(c.representative)->members, c.members);
  }
}

TEST(Atlas, EnumerationFilters) {
  InvariantOptions opt;
  opt.hyperdet = false;
  auto check = [&](int n) { return compute_invariants(decode_form(n), opt); };
  EXPECT_TRUE(nullcone_filter(check(59520)));
  EXPECT_FALSE(nullcone_filter(check(65534)));
  EXPECT_TRUE(third_secant_filter(check(65534)));
  EXPECT_TRUE(secant_non_nilpotent_filter(check(59777)));
  EXPECT_FALSE(third_secant_filter(check(4680)));
}

TEST(Graph, NullconeExamples) {
  const auto& g = nullcone_graph();
  EXPECT_EQ(g.nodes.size(), 31u);
  EXPECT_EQ(below(g, 59520), (std::set<int>{64160, 61064, 64704, 59624}));
  EXPECT_EQ(above(g, 65535), (std::set<int>{65520, 65484, 65450, 64764, 64250, 61166}));
  EXPECT_EQ(edge_set(g.edges), edge_set(golden::fig1_edges()));
}

TEST(Graph, SecantMatchesTheInclusionDiagram) {
  const auto& g = secant_graph();
  EXPECT_EQ(edge_set(g.edges), edge_set(golden::fig4_edges()));
  for (const auto& e : g.edges) EXPECT_EQ(e.caveat, e.upper == 59510) << e.lower << "->" << e.upper;
}

TEST(Graph, CrossPanels) {
  for (const auto& panel : golden::cross_panels())
    EXPECT_EQ(edge_set(panel_cross_edges(panel)), edge_set(panel.edges)) << panel.name;
  const auto& fig8 = golden::cross_panels().back();
  std::set<int> under_ghz;
  for (const auto& e : panel_cross_edges(fig8))
    if (e.upper == 65534) under_ghz.insert(e.lower);
  EXPECT_EQ(under_ghz, (std::set<int>{59520, 65530, 65518, 65532, 65278}));
}

TEST(Graph, OrderProperties) {
  const auto& g = nullcone_graph();
  std::map<int, SignatureVector> sig;
  for (const auto& n : g.nodes) sig[n.label] = n.signature;
  for (const auto& e : g.edges) {
    EXPECT_TRUE(sig[e.lower].subset_of(sig[e.upper]));
    EXPECT_FALSE(sig[e.upper].subset_of(sig[e.lower]));  // antisymmetric, hence acyclic
  }
  // Cover edges: no edge is implied by a two-step path.
  auto edges = edge_set(g.edges);
  for (const auto& [a, b] : edges)
    for (const auto& [c, d] : edges)
      if (b == c) EXPECT_FALSE(edges.count({a, d})) << a << "->" << d;
}

TEST(Graph, NonInclusionsDropPairsBeforeReduction) {
  std::vector<GraphNode> nodes{{1, SignatureVector("100")}, {2, SignatureVector("110")}, {3, SignatureVector("111")}};
  auto plain = adherence_order(nodes);
  EXPECT_EQ(edge_set(plain.edges), (EdgeSet{{1, 2}, {2, 3}}));
  auto cut = adherence_order(nodes, {3}, {{2, 3}});
  EXPECT_EQ(edge_set(cut.edges), (EdgeSet{{1, 2}, {1, 3}}));
  for (const auto& e : cut.edges) EXPECT_EQ(e.caveat, e.upper == 3);
}

TEST(Export, DotAndJson) {
  AdherenceGraph empty;
  EXPECT_EQ(export_graph(empty, GraphFormat::dot), "digraph adherence {\n  rankdir=BT;\n  node [shape=box];\n}\n");
  EXPECT_EQ(graph_from_json(export_graph(empty, GraphFormat::json)), empty);

  const auto& g = nullcone_graph();
  std::string dot = export_graph(g, GraphFormat::dot);
  EXPECT_EQ(dot, export_graph(g, GraphFormat::dot));
  EXPECT_EQ(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '[')) - 1 /* node [shape=box] */,
            g.nodes.size());
  EXPECT_EQ(graph_from_json(export_graph(g, GraphFormat::json)), g);
  EXPECT_EQ(graph_from_json(export_graph(secant_graph(), GraphFormat::json)), secant_graph());

  EXPECT_EQ(parse_graph_format("dot"), GraphFormat::dot);
  EXPECT_THROW(parse_graph_format("svg"), InputError);
}

TEST(Verify, PrintedTablesReproduce) {
  auto report = verify_tables();
  EXPECT_TRUE(report.all_pass()) << report.text();
  std::size_t appendix = 0, table5 = 0, table1 = 0;
  for (const auto& c : report.checks) {
    appendix += c.table == "Appendix B";
    table5 += c.table == "Table 5";
    table1 += c.table == "Table 1";
    if (c.table == "Appendix B" && c.key == "65511") EXPECT_TRUE(c.pass());
  }
  EXPECT_EQ(appendix, 31u);
  EXPECT_EQ(table5, 14u);
  EXPECT_EQ(table1, 9u);
  EXPECT_EQ(report.text().substr(0, 5), "PASS ");
}
