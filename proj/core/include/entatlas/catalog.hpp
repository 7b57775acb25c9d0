#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entatlas/rational.hpp"
#include "entatlas/transvectant.hpp"

namespace entatlas {

// Letter, multidegree and optional variant superscript, e.g. F_2220^1.
struct CovariantId {
  char letter = 'A';
  MultiIndex multidegree{1, 1, 1, 1};
  int variant = 0;

  // Accepts "A", "B_0000", "F_2220^1" and the compact "F2220^1".
  static CovariantId parse(std::string_view text);
  std::string str() const;

  friend auto operator<=>(const CovariantId&, const CovariantId&) = default;
  friend bool operator==(const CovariantId&, const CovariantId&) = default;
};

inline const CovariantId kGroundForm{};

struct TransvectionTerm {
  Rational coefficient;
  CovariantId lhs;
  CovariantId rhs;
  MultiIndex index;
};

struct CovariantDef {
  CovariantId id;
  int degree = 1;  // degree in the state amplitudes
  std::vector<TransvectionTerm> terms;
  std::string correction;  // non-empty where a printed typo was resolved
};

// Validated dependency DAG. Entry 0 is the ground form; every term refers
// to earlier entries only.
class Catalog {
 public:
  // Parses and validates; CatalogError names the offending entry.
  static Catalog parse(std::string_view text);
  static const Catalog& builtin();
  static std::string_view builtin_text();

  const std::vector<CovariantDef>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<std::size_t> index_of(const CovariantId& id) const;
  // Throws InputError for an unknown id.
  std::size_t require(const CovariantId& id) const;
  const CovariantDef& at(const CovariantId& id) const { return entries_[require(id)]; }

  std::vector<CovariantId> ids() const;
  std::map<int, std::size_t> census() const;
  // The entry and everything it depends on, in catalog order.
  std::vector<CovariantId> dependency_chain(const CovariantId& id) const;
  int version() const { return version_; }

 private:
  std::vector<CovariantDef> entries_;
  std::map<CovariantId, std::size_t> index_;
  int version_ = 0;
};

std::uint64_t fnv1a64(std::string_view text);

}  // namespace entatlas
