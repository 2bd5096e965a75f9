#pragma once

#include <stdexcept>
#include <string>

namespace eph {

class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different algebras, or an operation is undefined
/// for the given sigma.
class ContextError : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// Division by a zero divisor (including zero itself).
class NonInvertible : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// Operation needs k != 0 but the cycle is a straight line.
class IsALine : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// Quadruple with nonzero determinant used where a compactified point is
/// expected.
class NotAPoint : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// Point sits on the pole of a stereographic / polar projection.
class AtPole : public GeometryError {
public:
  using GeometryError::GeometryError;
};

class Unsupported : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// Image of a sheeted point lies on the light cone at infinity, where the
/// sheet is not defined.
class OnLightConeAtInfinity : public GeometryError {
public:
  using GeometryError::GeometryError;
};

}  // namespace eph
