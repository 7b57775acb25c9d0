#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entatlas/catalog.hpp"
#include "entatlas/evaluator.hpp"
#include "entatlas/golden.hpp"
#include "entatlas/invariants.hpp"
#include "entatlas/state.hpp"

namespace entatlas {

// Generators only; S, T, Delta and Z are left empty.
using FormPredicate = std::function<bool(const InvariantValues&)>;

bool nullcone_filter(const InvariantValues& v);             // B = L = M = Dxy = 0
bool third_secant_filter(const InvariantValues& v);         // L = M = 0
bool secant_non_nilpotent_filter(const InvariantValues& v); // L = M = 0, not nilpotent

// All n in 0..65535 whose decoded state satisfies `pred`, ascending.
// Runs on thread_count() threads.
std::vector<int> enumerate_forms(const FormPredicate& pred);

// Catalog covariants plus optional invariant bits ("B", "L", "M", "Dxy", "Z").
struct SignatureSpec {
  std::vector<CovariantId> covariants;
  std::vector<std::string> invariant_bits;
};

SignatureSpec full_catalog_spec();
// Full catalog without the degree-4 and degree-6 invariants D_0000^1,
// D_0000^2, F_0000 (they split continuous families), plus the Dxy bit.
SignatureSpec secant_spec();
// secant_spec() plus the Z bit.
SignatureSpec extended_spec();

SignatureVector compute_signature(const State& s, const SignatureSpec& spec);

struct FormClass {
  SignatureVector signature;
  std::vector<int> members;  // ascending
  int representative = 0;
  bool known_label = false;  // representative comes from the orbit catalog
};

struct ClassTable {
  std::vector<FormClass> classes;  // sorted by representative

  std::size_t form_count() const;
  const FormClass* find(int representative) const;
  const FormClass* class_of(int form) const;
};

// Representative: the largest orbit-catalog label in the class, else the
// largest member.
ClassTable discover_classes(const std::vector<int>& forms, const SignatureSpec& spec);

struct GraphNode {
  int label = 0;
  SignatureVector signature;
};

struct AdherenceGraph {
  std::vector<GraphNode> nodes;      // sorted by label
  std::vector<golden::Edge> edges;   // sorted by (lower, upper)

  friend bool operator==(const AdherenceGraph& a, const AdherenceGraph& b);
};

// a below b iff every nonzero bit of a is nonzero in b. Edges are the cover
// relations; an edge whose upper end is in `caveat_uppers` is flagged.
// Pairs in `non_inclusions` are dropped from the relation first, so they
// neither become edges nor hide other covers.
AdherenceGraph adherence_order(std::vector<GraphNode> nodes, const std::vector<int>& caveat_uppers = {},
                               const std::vector<std::pair<int, int>>& non_inclusions = {});
AdherenceGraph adherence_order(const ClassTable& t, const std::vector<int>& caveat_uppers = {});

// Labels the caller wants compared across tables get signatures on one basis.
std::vector<GraphNode> representative_nodes(const std::vector<int>& labels, const SignatureSpec& spec);

// Cross edges (nullcone lower end, secant upper end) of the order restricted
// to the panel's nodes, on full-catalog signatures. The dotted Gr''_3 -> 59510
// pairs are treated as non-inclusions.
std::vector<golden::Edge> panel_cross_edges(const golden::Panel& panel);

enum class GraphFormat { dot, json };
GraphFormat parse_graph_format(std::string_view name);
std::string export_graph(const AdherenceGraph& g, GraphFormat format);
AdherenceGraph graph_from_json(std::string_view text);

struct TableCheck {
  std::string table;  // e.g. "Appendix B", "Table 5"
  std::string key;    // label or stratum
  std::string expected;
  std::string computed;
  // Catalog entries the mismatching bits depend on; empty when they agree.
  std::vector<std::string> chain;
  bool pass() const { return expected == computed; }
};

struct VerifyReport {
  std::vector<TableCheck> checks;
  bool all_pass() const;
  std::size_t failures() const;
  // One "PASS|FAIL <table> <key> ..." line per check.
  std::string text() const;
};

VerifyReport verify_tables();

}  // namespace entatlas
