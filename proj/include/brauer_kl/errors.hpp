#pragma once

#include <stdexcept>
#include <string>

namespace brauer_kl {

struct RetryExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosedWorldViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeResidual : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SaturationNotEstablished : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConventionUnpinned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace brauer_kl
