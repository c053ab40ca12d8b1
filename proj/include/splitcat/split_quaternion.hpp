// split_quaternion.hpp
//
// Arithmetic for the four-dimensional real algebra spanned by {1, i, j, k}
// with
//
//   i^2 = j^2 = +1,   k^2 = -1,   ij = -ji = k,   kj = i,   ik = j.
//
// The natural norm of this algebra is indefinite,
//
//   N^2(q) = q0^2 - q1^2 - q2^2 + q3^2,
//
// and its sign sorts elements into time-like (> 0), light-like (= 0) and
// space-like (< 0) classes, exactly as in a Minkowski space.  Light-like
// elements have no multiplicative inverse.
//
// The k-free elements q = q0 + q1 i + q2 j form a commutative-in-spirit
// subalgebra under the symmetrised (Jordan) product; time-like elements of
// that subalgebra with positive scalar part admit a polar decomposition
//
//   p = N(p) (cosh t + u sinh t),   u = (p1 i + p2 j) / sqrt(p1^2 + p2^2),
//
// and a unique square root obtained by halving the hyperbolic angle t.
// Those square roots drive the conjugation-free sandwich product
// a q a used by the white-balance transform.

#pragma once

#include "splitcat/errors.hpp"

namespace splitcat {

// Sign class of the indefinite squared norm.
enum class Classification { SpaceLike, LightLike, TimeLike };

// General element q0 + q1 i + q2 j + q3 k.  Immutable value type; the
// constructor rejects non-finite coefficients so downstream arithmetic can
// assume clean numbers.
struct SplitQuaternion {
  double q0, q1, q2, q3;
  SplitQuaternion(double a0, double a1, double a2, double a3);
};

// Element of the k-free subalgebra, q0 + q1 i + q2 j.  Kept as its own
// type so the color pipeline cannot accidentally feed a k-component into
// operations whose math presumes there is none.
struct S0Element {
  double q0, q1, q2;
  S0Element(double a0, double a1, double a2);

  // The same element viewed in the full algebra (k-coefficient 0).
  SplitQuaternion embed() const;
};

// Polar decomposition p = n (cosh(theta) + u sinh(theta)) of a time-like
// k-free element with positive scalar part.  When the vector part vanishes
// (theta == 0) the axis u is meaningless; has_axis is false and u1 = u2 = 0.
struct PolarForm {
  double n;        // norm N(p), > 0
  double theta;    // hyperbolic angle, >= 0
  double u1, u2;   // unit axis coefficients (i and j), valid iff has_axis
  bool has_axis;
};

// Scale-aware tolerance used to decide "squared norm equals zero": the
// light-like boundary test for classify(), inverse() and the square roots.
double classification_tolerance(const SplitQuaternion& q);

// Product in the full algebra.  Associative, not commutative.
SplitQuaternion mul(const SplitQuaternion& q, const SplitQuaternion& r);

// Sign flip of the vector part: q0 - q1 i - q2 j - q3 k.
SplitQuaternion conjugate(const SplitQuaternion& q);

// Indefinite squared norm q0^2 - q1^2 - q2^2 + q3^2; equals the scalar
// part of q * conjugate(q).
double norm_sq(const SplitQuaternion& q);
double norm_sq(const S0Element& q);

// Sign class of norm_sq(q), with |norm_sq| <= classification_tolerance(q)
// counting as light-like.
Classification classify(const SplitQuaternion& q);
Classification classify(const S0Element& q);

// Multiplicative inverse conjugate(q) / norm_sq(q).
// Throws LightLikeNotInvertible when the squared norm is zero within
// tolerance.
SplitQuaternion inverse(const SplitQuaternion& q);

// Symmetrised product (qr + rq) / 2 of two k-free elements.  The
// k-components of qr and rq are exact negatives of each other even in
// floating point, so the result is k-free with no rounding caveat.
S0Element jordan_product(const S0Element& q, const S0Element& r);

// Polar decomposition of a time-like k-free element.
// Throws NotTimeLike when classify(p) != TimeLike and NegativeScalarPart
// when p0 <= 0.
PolarForm polar(const S0Element& p);

// Unique square root of a time-like k-free element with positive scalar
// part: sqrt(n) (cosh(theta/2) + u sinh(theta/2)).  The half-angle factors
// are computed directly from cosh(theta) = p0 / n via
// cosh(theta/2) = sqrt((c + 1) / 2) and sinh(theta/2) = sqrt((c - 1) / 2),
// which stays accurate near theta = 0.  Errors as polar().
S0Element sqrt(const S0Element& p);

// Inverse of sqrt(): (1 / sqrt(n)) (cosh(theta/2) - u sinh(theta/2)).
// Requires a strictly time-like input; a light-like one (the degenerate-
// illuminant case) throws NotTimeLike.  Errors otherwise as polar().
S0Element inv_sqrt(const S0Element& p);

// Conjugation-free sandwich a q a.  The k-component of the full product
// cancels to rounding noise; the result is its k-free part.
S0Element sandwich(const S0Element& a, const S0Element& q);

}  // namespace splitcat
