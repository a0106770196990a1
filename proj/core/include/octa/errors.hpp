#pragma once

#include <stdexcept>
#include <string>

namespace octa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// algebra
struct DegenerateBasis : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// cutproject
struct DegenerateWindow : Error { using Error::Error; };
struct SingularOffset : Error { using Error::Error; };
struct SeedNotFound : Error { using Error::Error; };

// tiling
struct EmptyOverlap : Error { using Error::Error; };
struct BranchingRibbon : Error { using Error::Error; };

// analysis
struct DegenerateCloud : Error { using Error::Error; };
struct ZeroReference : Error { using Error::Error; };
struct OptimizerDisagreement : Error { using Error::Error; };

// oracle
struct BudgetExceeded : Error { using Error::Error; };
struct CheckerMismatch : Error { using Error::Error; };

}  // namespace octa
