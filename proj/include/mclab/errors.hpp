#pragma once

#include <stdexcept>
#include <string>

namespace mclab {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pivot fell below the relative singularity threshold.
struct SingularMatrix : Error {
  using Error::Error;
};

// Operands live in different ambient dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

// An iterative solver hit its iteration cap before meeting tolerance.
struct NoConvergence : Error {
  using Error::Error;
};

// The Chebyshev LP optimum radius is not positive.
struct EmptyInterior : Error {
  using Error::Error;
};

// A body asserted bounded is not, or an LP recession direction exists.
struct Unbounded : Error {
  using Error::Error;
};

// The offset point handed to a ball-transport operation lies outside the ball.
struct OutOfBall : Error {
  using Error::Error;
};

// A witness operation re-checked its hypotheses and one of them failed.
// The message names the failing hypothesis.
struct PreconditionFailed : Error {
  using Error::Error;
};

// A sandwich sample from the inner body landed outside the outer body.
struct ContractViolation : Error {
  using Error::Error;
};

// The requested grid would exceed the point-count cap.
struct GridTooLarge : Error {
  using Error::Error;
};

}  // namespace mclab
