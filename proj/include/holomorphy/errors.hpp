#pragma once

#include <stdexcept>

namespace holomorphy {

// n does not factor as 2 * p^e with p an odd prime.
struct ShapeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Supplied k is not a unit of maximal order (no valid generator choice).
struct GeneratorError : std::domain_error {
  using std::domain_error::domain_error;
};

// Argument is not invertible modulo m.
struct NotAUnitError : std::domain_error {
  using std::domain_error::domain_error;
};

// A structural invariant failed while building or checking a table.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace holomorphy
