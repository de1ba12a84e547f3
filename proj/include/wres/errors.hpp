#pragma once

#include <stdexcept>
#include <string>

namespace wres {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name) : Error("unbound variable: " + name) {}
};

class NonScalarClifford : public Error {
 public:
  NonScalarClifford() : Error("expression has Clifford words and no matrix model was given") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

class NonInvertibleLeadingSymbol : public Error {
 public:
  using Error::Error;
};

class NonScalarB2 : public Error {
 public:
  NonScalarB2() : Error("b_{-2} carries Clifford words; power expansion ordering is ambiguous") {}
};

class ImaginaryResidue : public Error {
 public:
  using Error::Error;
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

class InterpolationResidual : public Error {
 public:
  using Error::Error;
};

/// Raised when a jet context violates curvature symmetries or other constraints.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// A jet of an order the normal-coordinate model does not provide was requested.
class JetOrderExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wres
