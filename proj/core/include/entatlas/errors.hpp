#pragma once

#include <stdexcept>
#include <string>

namespace entatlas {

// Malformed user input: bad state files, zero states, unknown ids.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The state lies outside the domain of the requested algorithm.
class ClassificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal inconsistency: catalog defects, unmatched signatures, table mismatches.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHomogeneousError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

class CatalogError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

}  // namespace entatlas
