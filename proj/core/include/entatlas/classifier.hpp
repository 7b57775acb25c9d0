#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entatlas/evaluator.hpp"
#include "entatlas/state.hpp"

namespace entatlas {

enum class Mode { exact, floating };

struct ClassifyOptions {
  Mode mode = Mode::exact;
  double tolerance = 1e-9;  // relative, float mode only
};

struct ClassificationResult {
  int label = 0;
  std::string variety;
  std::string stratum;
  // Named bit vectors consulted on the way, in evaluation order.
  std::vector<std::pair<std::string, SignatureVector>> signatures;
  Mode mode = Mode::exact;
  // Float mode: false when some nullity decision fell within a factor
  // kConfidenceMargin of its error bound.
  bool confident = true;
};

// Nilpotent states only: T is matched against the Appendix B blocks.
// ClassificationFailure if the state is not nilpotent, InputError for zero,
// IntegrityError if an in-domain signature has no match (ClassificationFailure
// in float mode, where a mismatch points at a wrong nullity decision).
ClassificationResult classify_nullcone(const State& s, const ClassifyOptions& opt = {});

// L = M = 0 required (ClassificationFailure otherwise). Branches on B and Dxy,
// then on V'' or V'.
ClassificationResult classify_secant3(const State& s, const ClassifyOptions& opt = {});

// As classify_secant3, but B != 0 and Dxy != 0 is refined by Z, then V':
// Z != 0 -> 65257, Z = 0 and V' = 0 -> 59510, otherwise 6014.
ClassificationResult classify_secant3_extended(const State& s, const ClassifyOptions& opt = {});

// Gr_0..Gr_8 from V on the nullcone, Gr''_k from W, Gr'_k from V', or
// "special" for 59777 and 6014.
std::string stratum(const State& s, const ClassifyOptions& opt = {});

// Label of the class of permute_qubits(sigma, normal form of `label`).
int permuted_label(const QubitPermutation& sigma, int label);
// Type id 1..15 for the 47 entangled classes; nullopt for 0 and 65535.
std::optional<int> permutation_type(int label);
// Label -> type id for all 47 entangled classes.
const std::map<int, int>& permutation_types();

}  // namespace entatlas
