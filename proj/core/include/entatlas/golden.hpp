#pragma once

#include <string>
#include <vector>

// Reference data transcribed from the printed tables and figures. Label typos
// are normalized (65635 -> 65535, 6527 -> 65257) and figure edges are stored
// as (lower, upper) pairs using the label displayed at each node.
namespace entatlas::golden {

struct SignatureRow {
  int label;
  std::string bits;
};

struct StratumRow {
  std::string stratum;
  std::string bits;
};

struct LabeledRow {
  int label;
  std::string bits;
  std::string stratum;
};

struct Edge {
  int lower;
  int upper;
  bool caveat = false;  // drawn dotted: not an inclusion of varieties
};

// 29-bit T blocks for the 31 nullcone representatives.
const std::vector<SignatureRow>& appendix_b();
// V on Gr_0..Gr_8.
const std::vector<StratumRow>& table1();
// Members of Gr_0..Gr_8.
const std::vector<std::pair<std::string, std::vector<int>>>& nullcone_strata();
// V' on 65257 and 59510.
const std::vector<LabeledRow>& table4();
// V'' on the 14 forms with B != 0 and Dxy = 0.
const std::vector<LabeledRow>& table5();
// W on Gr''_4..Gr''_1.
const std::vector<StratumRow>& table6();

// The 31 nullcone representatives, in printed order.
const std::vector<int>& nullcone_labels();
// The 17 secant representatives, in printed order.
const std::vector<int>& secant_labels();

const std::vector<Edge>& fig1_edges();
// Secant-only diagram; edges into 59510 from Gr''_3 carry the caveat.
const std::vector<Edge>& fig4_edges();
// One inclusion picture between a secant stratum and nullcone strata. The
// drawn edges are the covers among `nodes` only.
struct Panel {
  std::string name;
  std::vector<int> nodes;
  std::vector<Edge> edges;  // nullcone lower end, secant upper end
};
const std::vector<Panel>& cross_panels();
// Union of the panel edges.
std::vector<Edge> cross_edges();
// The two solid edges added by the extended atlas.
const std::vector<Edge>& extended_edges();

inline constexpr int kNullconeForms = 11662;
inline constexpr int kNullconeClasses = 31;
inline constexpr int kSecantClasses = 17;
inline constexpr int kPermutationTypes = 15;

}  // namespace entatlas::golden
