#include "entatlas/dimension.hpp"

#include "entatlas/errors.hpp"
#include "entatlas/linalg.hpp"

namespace entatlas {

namespace {

using Row = std::vector<Scalar>;

Row as_row(const State& s) { return Row(s.amplitudes().begin(), s.amplitudes().end()); }

// E_ij acting on one site: amplitude at bit j moves to bit i.
Row elementary_image(const State& s, int site, int i, int j) {
  Row out(State::kSize);
  const int mask = 1 << (site - 1);
  for (int b = 0; b < State::kSize; ++b) {
    if (State::bit(b, site) != j) continue;
    int target = i ? (b | mask) : (b & ~mask);
    out[static_cast<std::size_t>(target)] += s[b];
  }
  return out;
}

}  // namespace

int orbit_dimension(const State& s) {
  if (s.is_zero()) throw InputError("the zero state has no orbit");
  Matrix<Scalar> rows;
  for (int site = 1; site <= 4; ++site)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) rows.push_back(elementary_image(s, site, i, j));
  return exact_rank(std::move(rows)) - 1;
}

std::optional<Factors> separable_factors(const State& s) {
  if (s.is_zero()) return std::nullopt;
  int pivot = 0;
  while (s[pivot].is_zero()) ++pivot;
  // Factor k is the line through the pivot along site k.
  Factors f;
  for (int site = 1; site <= 4; ++site) {
    const int mask = 1 << (site - 1);
    f[site - 1][0] = s[pivot & ~mask];
    f[site - 1][1] = s[pivot | mask];
  }
  // Scale the factors so their product reproduces the pivot amplitude.
  Scalar norm = s[pivot];
  for (int site = 1; site <= 3; ++site) {
    const Scalar& c = f[site - 1][State::bit(pivot, site)];
    norm = norm * c.inverse();
  }
  const Scalar& c4 = f[3][State::bit(pivot, 4)];
  Scalar scale4 = norm * c4.inverse();
  f[3][0] = f[3][0] * scale4;
  f[3][1] = f[3][1] * scale4;
  if (product_state(f) != s) return std::nullopt;
  return f;
}

int terracini_rank(const std::vector<State>& points) {
  Matrix<Scalar> rows;
  for (const auto& p : points) {
    auto f = separable_factors(p);
    if (!f) throw InputError("terracini_rank needs separable points, got " + p.str());
    rows.push_back(as_row(p));
    for (int site = 0; site < 4; ++site)
      for (int comp = 0; comp < 2; ++comp) {
        Factors g = *f;
        g[static_cast<std::size_t>(site)] = {Scalar(0), Scalar(0)};
        g[static_cast<std::size_t>(site)][static_cast<std::size_t>(comp)] = Scalar(1);
        rows.push_back(as_row(product_state(g)));
      }
  }
  return exact_rank(std::move(rows)) - 1;
}

std::vector<State> generic_points(int count, std::uint64_t seed) {
  std::vector<State> out;
  for (int i = 0; i < count; ++i) out.push_back(random_product_state(seed + static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace entatlas
