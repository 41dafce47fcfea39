#pragma once

#include <stdexcept>
#include <string>

namespace mrel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Re(x) = ±Im(x), so Re(x²) = 0 and x has no inverse.
class NotInvertible : public Error {
public:
  using Error::Error;
};

/// An 𝕄-event was paired with a Lorentz matrix built for another direction.
class AlphaMismatch : public Error {
public:
  using Error::Error;
};

/// Boosted field tensor lost its antisymmetric E/B layout.
class SkewStructureBroken : public Error {
public:
  using Error::Error;
};

/// A finite-difference stencil hit a NaN or infinity.
class NonFinite : public Error {
public:
  using Error::Error;
};

/// Point is off the slice t_{x_i} = α_i t (or off the radial line).
class NotRestricted : public Error {
public:
  using Error::Error;
};

/// Speed profile reached |s| ≥ 1.
class Superluminal : public Error {
public:
  using Error::Error;
};

/// Velocity is zero, not below light speed, or has a non-unit direction.
class InvalidVelocity : public Error {
public:
  using Error::Error;
};

/// Square root of a rational that is not a perfect square was requested in exact mode.
class InexactSqrt : public Error {
public:
  using Error::Error;
};

/// Bad command-line flag or suite configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace mrel
