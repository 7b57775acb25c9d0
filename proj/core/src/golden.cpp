#include "entatlas/golden.hpp"

namespace entatlas::golden {

namespace {

std::vector<Edge> fan(int lower, std::initializer_list<int> uppers, bool caveat = false) {
  std::vector<Edge> out;
  for (int u : uppers) out.push_back({lower, u, caveat});
  return out;
}

void append(std::vector<Edge>& dst, const std::vector<Edge>& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

const std::vector<SignatureRow>& appendix_b() {
  static const std::vector<SignatureRow> rows{
      {65511, "11111111111111111111111110001"},
      {65218, "11111111111111111111111111000"},
      {65271, "11111111111111111111111110010"},
      {65247, "11111111111111111111111110100"},
      {65508, "11111111111011100011100010000"},
      {64762, "11111111111111011010010000000"},
      {65506, "11111111111101101100100100000"},
      {65482, "11111111111110110101001000000"},
      {64700, "11111111111011000010000000000"},
      {65041, "11111111111001100000100000000"},
      {65075, "11111111111010100001000000000"},
      {61158, "11111111111110010000000000000"},
      {65109, "11111111111100100100000000000"},
      {64218, "11111111111101001000000000000"},
      {65530, "11001100100010000000000000000"},
      {65518, "10101010010001000000000000000"},
      {65532, "11110001000100000000000000000"},
      {65278, "10010110001000100000000000000"},
      {59520, "11111111111000000000000000000"},
      {64160, "11001100100000000000000000000"},
      {61064, "10101010010000000000000000000"},
      {64704, "11110001000000000000000000000"},
      {59624, "10010110001000000000000000000"},
      {65520, "11000000000000000000000000000"},
      {65484, "10100000000000000000000000000"},
      {65450, "10001000000000000000000000000"},
      {64764, "10010000000000000000000000000"},
      {64250, "10000100000000000000000000000"},
      {61166, "10000010000000000000000000000"},
      {65535, "10000000000000000000000000000"},
      {0, "00000000000000000000000000000"},
  };
  return rows;
}

const std::vector<StratumRow>& table1() {
  static const std::vector<StratumRow> rows{
      {"Gr_0", "00000000"}, {"Gr_1", "10000000"}, {"Gr_2", "11000000"},
      {"Gr_3", "11100000"}, {"Gr_4", "11101000"}, {"Gr_5", "11110000"},
      {"Gr_6", "11111100"}, {"Gr_7", "11111110"}, {"Gr_8", "11111111"},
  };
  return rows;
}

const std::vector<std::pair<std::string, std::vector<int>>>& nullcone_strata() {
  static const std::vector<std::pair<std::string, std::vector<int>>> rows{
      {"Gr_0", {0}},
      {"Gr_1", {65535}},
      {"Gr_2", {65520, 65484, 65450, 64764, 64250, 61166}},
      {"Gr_3", {64160, 61064, 64704, 59624}},
      {"Gr_4", {65530, 65518, 65532, 65278}},
      {"Gr_5", {59520}},
      {"Gr_6", {64700, 65041, 65075, 61158, 65109, 64218}},
      {"Gr_7", {65508, 64762, 65506, 65482}},
      {"Gr_8", {65511, 65218, 65271, 65247}},
  };
  return rows;
}

const std::vector<LabeledRow>& table4() {
  static const std::vector<LabeledRow> rows{
      {65257, "1111", "Gr'_2"},
      {59510, "0000", "Gr'_1"},
  };
  return rows;
}

const std::vector<LabeledRow>& table5() {
  static const std::vector<LabeledRow> rows{
      {65259, "1111111000", "Gr''_4"}, {65261, "1111110100", "Gr''_4"},
      {65513, "1111110001", "Gr''_4"}, {65273, "1111110010", "Gr''_4"},
      {65267, "1111010000", "Gr''_3"}, {65509, "1011110000", "Gr''_3"},
      {65507, "1110110000", "Gr''_3"}, {65269, "1101110000", "Gr''_3"},
      {65510, "0111110000", "Gr''_3"}, {65231, "1111100000", "Gr''_3"},
      {65529, "1000010000", "Gr''_2"}, {65515, "0011000000", "Gr''_2"},
      {65517, "0100100000", "Gr''_2"}, {65534, "0000000000", "Gr''_1"},
  };
  return rows;
}

const std::vector<StratumRow>& table6() {
  static const std::vector<StratumRow> rows{
      {"Gr''_4", "111"}, {"Gr''_3", "110"}, {"Gr''_2", "100"}, {"Gr''_1", "000"}};
  return rows;
}

const std::vector<int>& nullcone_labels() {
  static const std::vector<int> labels{0,     65535, 65520, 65484, 65450, 64764, 64250, 61166,
                                       64160, 61064, 64704, 59624, 59520, 65530, 65518, 65532,
                                       65278, 64700, 65041, 65075, 61158, 65109, 64218, 65508,
                                       64762, 65506, 65482, 65511, 65218, 65271, 65247};
  return labels;
}

const std::vector<int>& secant_labels() {
  static const std::vector<int> labels{65257, 59777, 59510, 65259, 65261, 65513, 65273, 65267, 65509,
                                       65507, 65269, 65510, 65231, 65529, 65515, 65517, 65534};
  return labels;
}

const std::vector<Edge>& fig1_edges() {
  static const std::vector<Edge> edges = [] {
    std::vector<Edge> e;
    append(e, fan(0, {65535}));
    append(e, fan(65535, {65520, 65484, 65450, 64764, 64250, 61166}));
    append(e, fan(65520, {64160, 64704}));
    append(e, fan(65484, {61064, 64704}));
    append(e, fan(65450, {61064, 64160}));
    append(e, fan(64764, {64704, 59624}));
    append(e, fan(61166, {59624, 61064}));
    append(e, fan(64250, {59624, 64160}));
    for (int g3 : {64160, 61064, 64704, 59624}) append(e, fan(g3, {59520}));
    append(e, fan(64160, {65530}));
    append(e, fan(61064, {65518}));
    append(e, fan(64704, {65532}));
    append(e, fan(59624, {65278}));
    append(e, fan(65530, {64700, 65075, 61158}));
    append(e, fan(65518, {64700, 65041, 64218}));
    append(e, fan(59520, {64700, 65041, 65075, 61158, 65109, 64218}));
    append(e, fan(65532, {61158, 65109, 64218}));
    append(e, fan(65278, {65041, 65075, 65109}));
    append(e, fan(64700, {65508, 64762}));
    append(e, fan(65041, {65508, 65506}));
    append(e, fan(65075, {65508, 65482}));
    append(e, fan(61158, {64762, 65482}));
    append(e, fan(65109, {65506, 65482}));
    append(e, fan(64218, {64762, 65506}));
    for (int g7 : {65508, 64762, 65506, 65482}) append(e, fan(g7, {65511, 65218, 65271, 65247}));
    return e;
  }();
  return edges;
}

const std::vector<Edge>& fig4_edges() {
  static const std::vector<Edge> edges = [] {
    std::vector<Edge> e;
    for (int l : {59510, 59777, 65261, 65259, 65513, 65273}) append(e, fan(l, {65257}));
    for (int g3 : {65267, 65509, 65507, 65269, 65510, 65231}) {
      append(e, fan(g3, {65259, 65261, 65513, 65273}));
      append(e, fan(g3, {59510}, true));
    }
    append(e, fan(65529, {65267, 65509, 65507, 65269}));
    append(e, fan(65515, {65267, 65509, 65510, 65231}));
    append(e, fan(65517, {65269, 65507, 65510, 65231}));
    append(e, fan(65534, {65529, 65515, 65517}));
    return e;
  }();
  return edges;
}

const std::vector<Panel>& cross_panels() {
  static const std::vector<Panel> panels = [] {
    std::vector<Panel> p(4);
    p[0].name = "Gr''_4, 59777, Gr_8";
    p[0].nodes = {65259, 65261, 65513, 65273, 59777, 65511, 65218, 65271, 65247};
    append(p[0].edges, fan(65511, {65513, 59777}));
    append(p[0].edges, fan(65218, {65259, 59777}));
    append(p[0].edges, fan(65271, {65273, 59777}));
    append(p[0].edges, fan(65247, {65261, 59777}));
    p[1].name = "Gr''_3, 59510, Gr_7";
    p[1].nodes = {65267, 65509, 65507, 65269, 65510, 65231, 59510, 65508, 64762, 65506, 65482};
    append(p[1].edges, fan(65508, {65509, 65269, 65510, 59510}));
    append(p[1].edges, fan(64762, {65269, 65267, 65231, 59510}));
    append(p[1].edges, fan(65506, {65510, 65267, 65507, 59510}));
    append(p[1].edges, fan(65482, {65509, 65231, 65507, 59510}));
    p[2].name = "Gr''_3, Gr''_2, Gr_6";
    p[2].nodes = {65267, 65509, 65507, 65269, 65510, 65231, 65529, 65515, 65517,
                  64700, 65041, 65075, 61158, 65109, 64218};
    append(p[2].edges, fan(64700, {65515, 65269}));
    append(p[2].edges, fan(65041, {65529, 65510}));
    append(p[2].edges, fan(65075, {65517, 65509}));
    append(p[2].edges, fan(61158, {65529, 65231}));
    append(p[2].edges, fan(65109, {65515, 65507}));
    append(p[2].edges, fan(64218, {65517, 65267}));
    p[3].name = "Gr''_1, Gr_4, Gr_5";
    p[3].nodes = {65534, 59520, 65530, 65518, 65532, 65278};
    for (int l : {59520, 65278, 65530, 65518, 65532}) append(p[3].edges, fan(l, {65534}));
    return p;
  }();
  return panels;
}

std::vector<Edge> cross_edges() {
  std::vector<Edge> e;
  for (const auto& p : cross_panels()) append(e, p.edges);
  return e;
}

const std::vector<Edge>& extended_edges() {
  static const std::vector<Edge> edges{{6014, 65257, false}, {59510, 6014, false}};
  return edges;
}

}  // namespace entatlas::golden
