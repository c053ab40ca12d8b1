// errors.hpp
//
// Exception hierarchy for the splitcat library.  Every error thrown by the
// library derives from splitcat::Error, so callers that only want a single
// catch site can use that; the concrete types below exist because most of
// them mark mathematically distinct failure modes (a light-like element has
// no inverse, a boost at the speed of light diverges, ...) that tests and
// the CLI want to tell apart.

#pragma once

#include <stdexcept>

namespace splitcat {

// Common base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generic precondition violation: non-finite input, argument outside the
// documented domain, malformed in-memory data.
struct DomainError : Error {
  using Error::Error;
};

// --- split-quaternion algebra -------------------------------------------

// The element has squared norm 0 (within tolerance); no multiplicative
// inverse exists.
struct LightLikeNotInvertible : Error {
  using Error::Error;
};

// Polar decomposition / square roots require a strictly time-like element.
struct NotTimeLike : Error {
  using Error::Error;
};

// Polar decomposition requires a positive scalar part.
struct NegativeScalarPart : Error {
  using Error::Error;
};

// A unit-norm element was required.
struct NotUnit : Error {
  using Error::Error;
};

// --- matrix representations ---------------------------------------------

// An operation defined on symmetric matrices received an asymmetric one.
struct NotSymmetric : Error {
  using Error::Error;
};

// Matrix square root requires a (symmetric) positive semidefinite input.
struct NotPSD : Error {
  using Error::Error;
};

// Lorentz boosts are only defined for velocities strictly inside the unit
// disc; gamma diverges on the boundary.
struct LightLikeVelocity : Error {
  using Error::Error;
};

// --- color pipeline ------------------------------------------------------

// A value that should lie in the cone c <= v (equivalently, in the
// positivity domain of the k-free subalgebra) landed outside it.
struct OutsideCone : Error {
  using Error::Error;
};

// The illuminant sits on (or numerically too close to) the light-like
// boundary c = v, or has no brightness at all; the adaptation transform
// is ill-conditioned or undefined there.
struct DegenerateIlluminant : Error {
  using Error::Error;
};

// --- evaluation harness --------------------------------------------------

// A chart region does not fit inside the image.
struct RegionOutOfBounds : Error {
  using Error::Error;
};

// An average over an empty collection was requested.
struct EmptyDataset : Error {
  using Error::Error;
};

// --- I/O -----------------------------------------------------------------

// File could not be read, written, or parsed.
struct IoError : Error {
  using Error::Error;
};

}  // namespace splitcat
