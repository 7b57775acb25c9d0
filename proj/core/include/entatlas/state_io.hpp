#pragma once

#include <string>
#include <string_view>

#include "entatlas/state.hpp"

namespace entatlas {

// Accepted documents:
//   {"form": n}
//   {"amplitudes": [[num, den], ...16]}
//   {"amplitudes_c": [[[re_num, re_den], [im_num, im_den]], ...16]}
//   {"amplitudes_f": [x, ...16]} or [[re, im], ...16] for approximate input
// Integers may be JSON numbers or decimal strings; a bare integer stands for
// [n, 1]. Doubles in
// "amplitudes_f" are converted to their exact binary values.
// Throws InputError on malformed input.
State parse_state_json(std::string_view text);

// "amplitudes" for real states, "amplitudes_c" otherwise.
std::string state_to_json(const State& s);

}  // namespace entatlas
