#include "splitcat/jordan.hpp"

#include <array>
#include <cmath>

namespace splitcat {

namespace {

constexpr double kSymmetryTol = 1e-12;

void require_symmetric(const Matrix2& m, const char* what) {
  if (std::abs(m.m01 - m.m10) > kSymmetryTol) {
    throw NotSymmetric(what);
  }
}

}  // namespace

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

Matrix2 operator*(double s, const Matrix2& a) {
  return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

ChromaticState::ChromaticState(double a1, double a2) : s1(a1), s2(a2) {
  if (!std::isfinite(a1) || !std::isfinite(a2) ||
      a1 * a1 + a2 * a2 > 1.0 + kSymmetryTol) {
    throw DomainError("chromatic state needs s1^2 + s2^2 <= 1");
  }
}

Effect::Effect(double a0, double a1, double a2) : e0(a0), e1(a1), e2(a2) {
  if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(a2) ||
      a0 < -kSymmetryTol || a0 > 1.0 + kSymmetryTol ||
      a1 * a1 + a2 * a2 > a0 * a0 + kSymmetryTol) {
    throw DomainError(
        "effect needs 0 <= e0 <= 1 and e1^2 + e2^2 <= e0^2");
  }
}

Matrix3 Matrix3::identity() {
  Matrix3 r{};
  r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
  return r;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  }
  return r;
}

Matrix3 transpose(const Matrix3& a) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[j][i];
  }
  return r;
}

Matrix4 Matrix4::identity() {
  Matrix4 r{};
  r.m[0][0] = r.m[1][1] = r.m[2][2] = r.m[3][3] = 1.0;
  return r;
}

Matrix2 zeta(const S0Element& q) {
  return {q.q0 + q.q1, q.q2, q.q2, q.q0 - q.q1};
}

Matrix2 zeta_full(const SplitQuaternion& q) {
  return {q.q0 + q.q1, q.q2 + q.q3, q.q2 - q.q3, q.q0 - q.q1};
}

S0Element zeta_inv(const Matrix2& m) {
  require_symmetric(m, "zeta_inv needs a symmetric matrix");
  return {(m.m00 + m.m11) / 2.0, (m.m00 - m.m11) / 2.0,
          (m.m01 + m.m10) / 2.0};
}

SpinVector chi(const Matrix2& m) {
  require_symmetric(m, "chi needs a symmetric matrix");
  return {(m.m00 + m.m11) / 2.0, (m.m00 - m.m11) / 2.0,
          (m.m01 + m.m10) / 2.0};
}

SpinVector omega(const S0Element& q) { return {q.q0, q.q1, q.q2}; }

Matrix2 density_from_state(const ChromaticState& s) {
  return {(1.0 + s.s1) / 2.0, s.s2 / 2.0, s.s2 / 2.0, (1.0 - s.s1) / 2.0};
}

Matrix2 effect_matrix(const Effect& e) {
  return {e.e0 + e.e1, e.e2, e.e2, e.e0 - e.e1};
}

Matrix2 matrix_sqrt_psd(const Matrix2& m) {
  if (std::abs(m.m01 - m.m10) > kSymmetryTol) {
    throw NotPSD("matrix square root needs a symmetric matrix");
  }
  const double a = m.m00;
  const double b = m.m11;
  const double c = (m.m01 + m.m10) / 2.0;

  // Closed-form eigendecomposition of [[a, c], [c, b]].  The discriminant
  // is a sum of squares, so the larger eigenvalue is computed without
  // cancellation; the smaller one comes from the trace.
  const double disc = std::hypot(a - b, 2.0 * c);
  const double lam1 = (a + b + disc) / 2.0;
  double lam2 = (a + b) - lam1;

  const double tol = 1e-10 * std::max(1.0, std::abs(lam1));
  if (lam1 < -tol || lam2 < -tol) {
    throw NotPSD("matrix square root needs a positive semidefinite matrix");
  }
  const double s1 = std::sqrt(std::max(lam1, 0.0));
  const double s2 = std::sqrt(std::max(lam2, 0.0));

  if (disc <= tol) {
    // Numerically a multiple of the identity; any eigenbasis works.
    return {s1, 0.0, 0.0, s1};
  }

  // Eigenvector for lam1, taking the arithmetically larger branch.
  double v0, v1;
  if (std::abs(lam1 - a) >= std::abs(lam1 - b)) {
    v0 = c;
    v1 = lam1 - a;
  } else {
    v0 = lam1 - b;
    v1 = c;
  }
  const double vn = std::hypot(v0, v1);
  v0 /= vn;
  v1 /= vn;

  // sqrt(m) = s1 v v^T + s2 w w^T with w = (-v1, v0); written out so the
  // off-diagonal entries are the same expression and the result is
  // symmetric to the last bit.
  const double off = (s1 - s2) * v0 * v1;
  return {s1 * v0 * v0 + s2 * v1 * v1, off, off,
          s1 * v1 * v1 + s2 * v0 * v0};
}

Matrix2 luders(const Effect& e, const ChromaticState& s) {
  const Matrix2 root = matrix_sqrt_psd(effect_matrix(e));
  return root * density_from_state(s) * root;
}

double gamma(double v1, double v2) {
  const double n2 = v1 * v1 + v2 * v2;
  if (!(n2 < 1.0)) {
    throw LightLikeVelocity("boost velocity must satisfy ||v|| < 1");
  }
  return 1.0 / std::sqrt(1.0 - n2);
}

Matrix3 boost_matrix(double v1, double v2) {
  const double g = gamma(v1, v2);
  const double f = g * g / (1.0 + g);
  Matrix3 r{};
  r.m[0][0] = g;
  r.m[0][1] = r.m[1][0] = g * v1;
  r.m[0][2] = r.m[2][0] = g * v2;
  r.m[1][1] = 1.0 + f * v1 * v1;
  r.m[1][2] = r.m[2][1] = f * v1 * v2;
  r.m[2][2] = 1.0 + f * v2 * v2;
  return r;
}

SpinVector boost_measure(const Effect& e, const ChromaticState& s) {
  if (e.e0 <= 0.0) {
    throw DomainError("boost form needs an effect with e0 > 0");
  }
  const double v1 = e.e1 / e.e0;
  const double v2 = e.e2 / e.e0;
  const double g = gamma(v1, v2);
  const Matrix3 B = boost_matrix(v1, v2);
  const double in[3] = {0.5, 0.5 * s.s1, 0.5 * s.s2};
  double out[3];
  for (int i = 0; i < 3; ++i) {
    out[i] = (e.e0 / g) * (B.m[i][0] * in[0] + B.m[i][1] * in[1] +
                           B.m[i][2] * in[2]);
  }
  return {out[0], out[1], out[2]};
}

namespace {

constexpr double kUnitTol = 1e-9;

// Shared setup and column extraction for the two adapted-basis sandwich
// matrices.  `left` is the factor multiplied from the left (a itself or
// its conjugate).
Matrix4 sandwich_matrix_impl(const SplitQuaternion& a,
                             const SplitQuaternion& left) {
  if (std::abs(a.q3) > kSymmetryTol) {
    throw DomainError("adapted-basis sandwich needs a k-free element");
  }
  if (classify(a) != Classification::TimeLike) {
    throw NotTimeLike("adapted-basis sandwich needs a time-like element");
  }
  if (std::abs(norm_sq(a) - 1.0) > kUnitTol) {
    throw NotUnit("adapted-basis sandwich needs a unit-norm element");
  }
  const PolarForm pf = polar(S0Element{a.q0, a.q1, a.q2});
  if (!pf.has_axis) {
    // a == 1: both sandwiches are the identity map in the basis
    // (1, i, j, k).
    return Matrix4::identity();
  }

  // Adapted orthonormal basis (1, u, w, k); w spans the chromatic
  // direction orthogonal to the polar axis u.  Its orientation u2 i - u1 j
  // makes the conjugated sandwich a boost by the same signed angle as the
  // plain one.
  const std::array<SplitQuaternion, 4> basis = {
      SplitQuaternion{1.0, 0.0, 0.0, 0.0},
      SplitQuaternion{0.0, pf.u1, pf.u2, 0.0},
      SplitQuaternion{0.0, pf.u2, -pf.u1, 0.0},
      SplitQuaternion{0.0, 0.0, 0.0, 1.0}};

  Matrix4 r{};
  for (int col = 0; col < 4; ++col) {
    const SplitQuaternion image = mul(mul(left, basis[col]), a);
    // The basis is orthonormal for the Euclidean dot product on
    // coefficients, so coordinates are plain projections.
    const double coeff[4] = {image.q0, image.q1, image.q2, image.q3};
    for (int row = 0; row < 4; ++row) {
      const double base[4] = {basis[row].q0, basis[row].q1, basis[row].q2,
                              basis[row].q3};
      double dot = 0.0;
      for (int n = 0; n < 4; ++n) dot += coeff[n] * base[n];
      r.m[row][col] = dot;
    }
  }
  return r;
}

}  // namespace

Matrix4 sandwich_matrix_r4(const SplitQuaternion& a) {
  return sandwich_matrix_impl(a, a);
}

Matrix4 sandwich_matrix_r4_conjugated(const SplitQuaternion& a) {
  return sandwich_matrix_impl(a, conjugate(a));
}

}  // namespace splitcat
