#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "entatlas/state.hpp"

namespace entatlas {

using Factors = std::array<std::array<Scalar, 2>, 4>;

// Projective dimension of the SL2^4 orbit closure through s: rank of the
// tangent images of the 16 one-site matrix units, minus one.
int orbit_dimension(const State& s);

// v1 (x) v2 (x) v3 (x) v4 = s, or nullopt if s is not a product state.
std::optional<Factors> separable_factors(const State& s);

// Projective dimension of the span of the affine tangent spaces to the
// Segre variety at the given product states. InputError for an entangled point.
int terracini_rank(const std::vector<State>& points);

// Reproducible random product states.
std::vector<State> generic_points(int count, std::uint64_t seed);

}  // namespace entatlas
