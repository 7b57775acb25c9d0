#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entatlas/state.hpp"

namespace entatlas {

struct OrbitRecord {
  int label;
  std::string variety;
  // Gr_0..Gr_8, Gr'_1, Gr'_2, Gr''_1..Gr''_4 or "special".
  std::string group;
  State normal_form;
  std::optional<int> dimension;  // projective dimension of the variety
  bool quasihomogeneous;
  std::string note;
};

// 31 nullcone records (including 0), 17 secant records and 6014.
const std::vector<OrbitRecord>& orbit_catalog();
// nullptr for an unknown label.
const OrbitRecord* find_orbit(int label);

// The 47 entangled classes: everything except 0 and 65535.
std::vector<int> entangled_labels();

}  // namespace entatlas
