// jordan.hpp
//
// Matrix and spin-vector representations of the k-free subalgebra, and the
// three equivalent ways of computing a chromatic measurement:
//
//   1. the Lüders update  eta^{1/2} rho eta^{1/2}  on 2x2 symmetric
//      density matrices,
//   2. a normalised Lorentz boost acting on (1/2)(1, s1, s2) in the
//      three-dimensional Minkowski space R + R^2,
//   3. the conjugation-free split-quaternion sandwich (split_quaternion.hpp).
//
// The dictionary between the pictures is the algebra isomorphism
//
//   zeta : q0 + q1 i + q2 j  ->  [[q0 + q1, q2], [q2, q0 - q1]]
//
// onto symmetric 2x2 matrices (extended by zeta_full to the whole algebra,
// where the determinant realises the indefinite squared norm), together
// with chi, which reads a symmetric matrix as a point of R + R^2, and
// omega = chi o zeta.  These maps double as independent cross-checks: the
// matrix route exercises none of the split-quaternion code, so agreement
// between the three computations is a meaningful test of all of them.
//
// sandwich_matrix_r4 expresses the linear map q -> a q a as a 4x4 matrix
// in a basis adapted to a's polar axis, where it becomes a hyperbolic
// rotation block H paired with an identity block; the conjugated variant
// a* q a produces the complementary block layout.

#pragma once

#include "splitcat/errors.hpp"
#include "splitcat/split_quaternion.hpp"

namespace splitcat {

// Dense 2x2 real matrix.
struct Matrix2 {
  double m00, m01, m10, m11;

  static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  // Real Pauli matrices: zeta maps i to sigma1 and j to sigma2.
  static Matrix2 sigma1() { return {1.0, 0.0, 0.0, -1.0}; }
  static Matrix2 sigma2() { return {0.0, 1.0, 1.0, 0.0}; }
};

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator-(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(double s, const Matrix2& a);

// Point of the spin factor R + R^2: a time component and two chromatic
// components.  The closed future lightcone is the set with alpha >= 0 and
// alpha^2 - v1^2 - v2^2 >= 0.
struct SpinVector {
  double alpha, v1, v2;
};

// Chromatic part (s1, s2) of a state; the density matrix it stands for is
// (1/2) [[1 + s1, s2], [s2, 1 - s1]].  Requires s1^2 + s2^2 <= 1.
struct ChromaticState {
  double s1, s2;
  ChromaticState(double a1, double a2);
};

// Measurement outcome (e0, e1, e2); the matrix it stands for is
// [[e0 + e1, e2], [e2, e0 - e1]].  Requires 0 <= e0 <= 1 and
// e1^2 + e2^2 <= e0^2, i.e. eigenvalues in [0, 1].
struct Effect {
  double e0, e1, e2;
  Effect(double a0, double a1, double a2);
};

// Dense 3x3 and 4x4 real matrices, just big enough for the boost and the
// adapted-basis sandwich representation.
struct Matrix3 {
  double m[3][3];
  static Matrix3 identity();
};

Matrix3 operator*(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& a);

struct Matrix4 {
  double m[4][4];
  static Matrix4 identity();
};

// Isomorphism of the k-free subalgebra onto symmetric 2x2 matrices.
Matrix2 zeta(const S0Element& q);

// Extension to the full algebra; det(zeta_full(q)) = norm_sq(q) and
// zeta_full is multiplicative, which makes it the matrix oracle for mul().
Matrix2 zeta_full(const SplitQuaternion& q);

// Inverse of zeta on symmetric matrices.  Throws NotSymmetric when
// |m01 - m10| > 1e-12.
S0Element zeta_inv(const Matrix2& m);

// Reads a symmetric matrix as a spin vector:
// ((m00 + m11)/2, (m00 - m11)/2, m01).  Throws NotSymmetric.
SpinVector chi(const Matrix2& m);

// Coefficient map (q0, q1, q2); satisfies chi(zeta(q)) == omega(q).
SpinVector omega(const S0Element& q);

// Density matrix of a chromatic state: trace-1, positive semidefinite.
Matrix2 density_from_state(const ChromaticState& s);

// Effect matrix: symmetric with eigenvalues in [0, 1].
Matrix2 effect_matrix(const Effect& e);

// Square root of a symmetric positive semidefinite 2x2 matrix via its
// closed-form eigendecomposition.  Eigenvalues within -1e-10 of zero are
// clamped to zero; anything more negative (or an asymmetric input) throws
// NotPSD.
Matrix2 matrix_sqrt_psd(const Matrix2& m);

// Post-measurement state update eta^{1/2} rho eta^{1/2} for the effect's
// matrix eta and the state's density matrix rho.
Matrix2 luders(const Effect& e, const ChromaticState& s);

// Relativistic factor 1 / sqrt(1 - v1^2 - v2^2).  Throws LightLikeVelocity
// when ||v|| >= 1.
double gamma(double v1, double v2);

// Lorentz boost of R + R^2 with velocity v:
//   [[ g,            g v^T             ]
//    [ g v,  Id2 + g^2/(1+g) v v^T ]].
// Symmetric, and preserves the Minkowski form diag(1, -1, -1).
// Throws LightLikeVelocity.
Matrix3 boost_matrix(double v1, double v2);

// Measurement in boost form: (e0 / gamma) B(v_e) (1/2)(1, s1, s2)^T with
// v_e = (e1/e0, e2/e0).  Agrees with chi(luders(e, s)).
// Throws LightLikeVelocity when ||v_e|| >= 1 and DomainError when e0 = 0.
SpinVector boost_measure(const Effect& e, const ChromaticState& s);

// Matrix of q -> a q a for a unit time-like k-free a, expressed in the
// basis (1, u, w, k) adapted to a's polar axis u, with w = u2 i - u1 j.
// Equals blockdiag(H, Id2) where H is the hyperbolic rotation by twice
// a's polar angle.  The in-plane orientation of w is chosen so that the
// conjugated variant below boosts by the same signed angle.
// Throws NotTimeLike, NotUnit (tolerance 1e-9 on the squared norm),
// DomainError for a k-component, NegativeScalarPart for a0 <= 0.
Matrix4 sandwich_matrix_r4(const SplitQuaternion& a);

// Matrix of q -> a* q a in the same adapted basis; equals
// blockdiag(Id2, H) with the same H.  Errors as sandwich_matrix_r4.
Matrix4 sandwich_matrix_r4_conjugated(const SplitQuaternion& a);

}  // namespace splitcat
