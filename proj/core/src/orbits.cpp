#include "entatlas/orbits.hpp"

#include <algorithm>

namespace entatlas {

namespace {

State nf(std::initializer_list<std::string_view> kets) { return ket_sum(kets); }

std::vector<OrbitRecord> build() {
  std::vector<OrbitRecord> r{
      // Genuinely entangled nilpotent orbits.
      {65247, "Osc₂₃₆(X)", "Gr_8", nf({"0001", "0010", "0100", "1000", "1010", "1001", "0011"}), 11, true,
       "printed with the Osc₁₃₅ row"},
      {65271, "Osc₁₃₅(X)", "Gr_8", nf({"0001", "0010", "0100", "1000", "1100", "1001", "0101"}), 11, true,
       "printed with the Osc₂₃₆ row"},
      {65218, "Osc₄₅₆(X)", "Gr_8", nf({"0001", "0010", "0100", "1000", "0110", "0101", "0011"}), 11, true, ""},
      {65511, "Osc₁₂₄(X)", "Gr_8", nf({"0001", "0010", "0100", "1000", "1100", "1010", "0110"}), 11, true, ""},
      {65482, "Z₃(X)", "Gr_7", nf({"1000", "0100", "0110", "0011"}), 10, true, ""},
      {65506, "Z₂(X)", "Gr_7", nf({"1000", "0010", "1100", "0101"}), 10, true, ""},
      {64762, "Z₄(X)", "Gr_7", nf({"1000", "0100", "0101", "0011"}), 10, true, ""},
      {65508, "Z₁(X)", "Gr_7", nf({"0100", "0001", "1100", "1010"}), 10, true, ""},
      {64218, "Osc₅(X)", "Gr_6", nf({"0000", "1000", "0100", "0010", "0001", "0101"}), 9, true, ""},
      {65109, "Osc₄(X)", "Gr_6", nf({"0000", "1000", "0100", "0010", "0001", "0110"}), 9, true, ""},
      {61158, "Osc₆(X)", "Gr_6", nf({"0000", "1000", "0100", "0010", "0001", "0011"}), 9, true, ""},
      {65075, "Osc₂(X)", "Gr_6", nf({"0000", "1000", "0100", "0010", "0001", "1010"}), 9, true, ""},
      {65041, "Osc₁(X)", "Gr_6", nf({"0000", "1000", "0100", "0010", "0001", "1100"}), 9, true, ""},
      {64700, "Osc₃(X)", "Gr_6", nf({"0000", "1000", "0100", "0010", "0001", "1001"}), 9, true, ""},
      {59520, "τ(X)", "Gr_5", nf({"0001", "0010", "0100", "1000"}), 8, true, ""},
      // Partially entangled nilpotent orbits.
      {65278, "ℙ⁷×ℙ¹", "Gr_4", nf({"0000", "1110"}), 8, true, ""},
      {65532, "ℙ¹×ℙ⁷", "Gr_4", nf({"0000", "0111"}), 8, true, ""},
      {65518, "σ(ℙ¹×ℙ¹×[ℙ¹]×ℙ¹)×ℙ¹", "Gr_4", nf({"0000", "1101"}), 8, true, ""},
      {65530, "σ(ℙ¹×[ℙ¹]×ℙ¹×ℙ¹)×ℙ¹", "Gr_4", nf({"0000", "1011"}), 8, true, ""},
      {59624, "τ(ℙ¹×ℙ¹×ℙ¹)×ℙ¹", "Gr_3", nf({"0110", "1010", "1100"}), 7, true, ""},
      {64704, "ℙ¹×τ(ℙ¹×ℙ¹×ℙ¹)", "Gr_3", nf({"0011", "0101", "0110"}), 7, true, ""},
      {61064, "τ(ℙ¹×ℙ¹×[ℙ¹]×ℙ¹)×ℙ¹", "Gr_3", nf({"0101", "1001", "1100"}), 7, true, ""},
      {64160, "τ(ℙ¹×[ℙ¹]×ℙ¹×ℙ¹)×ℙ¹", "Gr_3", nf({"0011", "1001", "1010"}), 7, true, ""},
      {61166, "σ(ℙ¹×ℙ¹)×ℙ¹×ℙ¹", "Gr_2", nf({"0000", "1100"}), 5, true, ""},
      {64250, "σ(ℙ¹×[ℙ¹]×ℙ¹×[ℙ¹])×ℙ¹×ℙ¹", "Gr_2", nf({"0000", "1010"}), 5, true, ""},
      {64764, "ℙ¹×σ(ℙ¹×ℙ¹)×ℙ¹", "Gr_2", nf({"0000", "0110"}), 5, true, ""},
      {65450, "σ(ℙ¹×[ℙ¹]×[ℙ¹]×ℙ¹)×ℙ¹×ℙ¹", "Gr_2", nf({"0000", "1001"}), 5, true, ""},
      {65484, "ℙ¹×σ(ℙ¹×[ℙ¹]×ℙ¹)×ℙ¹", "Gr_2", nf({"0000", "0101"}), 5, true, ""},
      {65520, "ℙ¹×ℙ¹×σ(ℙ¹×ℙ¹)", "Gr_2", nf({"0000", "0011"}), 5, true, ""},
      {65535, "ℙ¹×ℙ¹×ℙ¹×ℙ¹", "Gr_1", nf({"0000"}), 4, true, "printed as 65635"},
      {0, "0", "Gr_0", State{}, std::nullopt, false, "trivial class"},
      // Non-nilpotent orbits of the third secant variety.
      {65257, "σ₃(X)", "Gr'_2", nf({"1111", "0000", "1000", "0100", "0010", "0001"}), 13, false, "printed as 6527"},
      {59777, "σ₃⁽¹⁾(X)", "special", nf({"1111", "1000", "0100", "0010", "0001"}), 12, false, ""},
      {65513, "J(X,τ(ℙ¹×ℙ¹×ℙ¹)×ℙ¹)", "Gr''_4", nf({"1111", "0000", "1000", "0100", "0010"}), 12, false, ""},
      {65261, "J(X,τ(ℙ¹×[ℙ¹]×ℙ¹×ℙ¹)×ℙ¹)", "Gr''_4", nf({"1111", "0000", "1000", "0010", "0001"}), 12, false,
       "printed with the other τ row"},
      {65273, "J(X,τ(ℙ¹×ℙ¹×[ℙ¹]×ℙ¹)×ℙ¹)", "Gr''_4", nf({"1111", "0000", "1000", "0100", "0001"}), 12, false,
       "printed with the other τ row"},
      {65259, "J(X,ℙ¹×τ(ℙ¹×ℙ¹×ℙ¹))", "Gr''_4", nf({"1111", "0000", "0100", "0010", "0001"}), 12, false, ""},
      {59510, "Osc′(X)", "Gr'_1", nf({"1100", "1010", "1001", "0110", "0101", "0011"}), 12, false, ""},
      {65507, "J(ℙ³×ℙ¹×ℙ¹,σ([ℙ¹]×ℙ¹×[ℙ¹]×ℙ¹)×ℙ¹×ℙ¹)", "Gr''_3", nf({"0000", "0011", "0101", "1111"}), 11, false, ""},
      {65509, "J(ℙ³×ℙ¹×ℙ¹,σ(ℙ¹×[ℙ¹]×[ℙ¹]×ℙ¹)×ℙ¹×ℙ¹)", "Gr''_3", nf({"0000", "1010", "0110", "1001"}), 11, false, ""},
      {65510, "J(σ(ℙ¹×[ℙ¹]×ℙ¹×[ℙ¹])×ℙ¹×ℙ¹,σ(ℙ¹×[ℙ¹]×[ℙ¹]×ℙ¹)×ℙ¹×ℙ¹)", "Gr''_3",
       nf({"0000", "1010", "0110", "1111"}), 11, false, ""},
      {65231, "J(ℙ¹×ℙ³×ℙ¹,σ(ℙ¹×[ℙ¹]×ℙ¹×[ℙ¹])×ℙ¹×ℙ¹)", "Gr''_3", nf({"0000", "0110", "0101", "1111"}), 11, false, ""},
      {65267, "J(ℙ³×ℙ¹×ℙ¹,ℙ¹×ℙ³×ℙ¹)", "Gr''_3", nf({"0000", "0110", "1001", "0101"}), 11, false, ""},
      {65269, "J(ℙ¹×ℙ¹×ℙ³,σ([ℙ¹]×ℙ¹×[ℙ¹]×ℙ¹)×ℙ¹×ℙ¹)", "Gr''_3", nf({"0000", "1010", "1001", "0101"}), 11, false, ""},
      {65529, "J(X,ℙ³×ℙ¹×ℙ¹)", "Gr''_2", nf({"1111", "0000", "1000", "0100"}), 10, false, ""},
      {65517, "J(X,σ([ℙ¹]×ℙ¹×[ℙ¹]×ℙ¹)×ℙ¹×ℙ¹)", "Gr''_2", nf({"1111", "0000", "0100", "0001"}), 10, false, ""},
      {65515, "J(X,ℙ¹×ℙ³×ℙ¹)", "Gr''_2", nf({"1111", "0000", "0100", "0010"}), 10, false, ""},
      {65534, "σ(X)", "Gr''_1", nf({"0000", "1111"}), 9, true, ""},
      // Found only by the extended algorithm; the representative is the form itself.
      {6014, "Osc(X)", "special", decode_form(6014), std::nullopt, false, "extended atlas"},
  };
  return r;
}

}  // namespace

const std::vector<OrbitRecord>& orbit_catalog() {
  static const std::vector<OrbitRecord> records = build();
  return records;
}

const OrbitRecord* find_orbit(int label) {
  const auto& all = orbit_catalog();
  auto it = std::find_if(all.begin(), all.end(), [&](const OrbitRecord& r) { return r.label == label; });
  return it == all.end() ? nullptr : &*it;
}

std::vector<int> entangled_labels() {
  std::vector<int> out;
  for (const auto& r : orbit_catalog())
    if (r.label != 0 && r.label != 65535) out.push_back(r.label);
  return out;
}

}  // namespace entatlas
