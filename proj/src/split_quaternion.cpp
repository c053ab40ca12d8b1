#include "splitcat/split_quaternion.hpp"

#include <cmath>

namespace splitcat {

namespace {

void require_finite(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("split-quaternion coefficients must be finite");
  }
}

// Shared core of sqrt() / inv_sqrt(): norm, half-angle cosh/sinh and unit
// axis of a time-like k-free element with positive scalar part.
struct HalfAngle {
  double root_n;   // sqrt(N(p))
  double hc, hs;   // cosh(theta/2), sinh(theta/2)
  double u1, u2;   // axis (zero when the vector part vanishes)
};

HalfAngle half_angle(const S0Element& p) {
  if (classify(p) != Classification::TimeLike) {
    throw NotTimeLike("square roots need a strictly time-like element");
  }
  if (p.q0 <= 0.0) {
    throw NegativeScalarPart("square roots need a positive scalar part");
  }
  const double n = std::sqrt(norm_sq(p));
  const double c = p.q0 / n;  // cosh(theta) >= 1
  HalfAngle h;
  h.root_n = std::sqrt(n);
  h.hc = std::sqrt((c + 1.0) / 2.0);
  h.hs = std::sqrt(std::max(c - 1.0, 0.0) / 2.0);
  const double vn = std::hypot(p.q1, p.q2);
  if (vn > 0.0) {
    h.u1 = p.q1 / vn;
    h.u2 = p.q2 / vn;
  } else {
    h.u1 = h.u2 = 0.0;
  }
  return h;
}

}  // namespace

SplitQuaternion::SplitQuaternion(double a0, double a1, double a2, double a3)
    : q0(a0), q1(a1), q2(a2), q3(a3) {
  require_finite(a0);
  require_finite(a1);
  require_finite(a2);
  require_finite(a3);
}

S0Element::S0Element(double a0, double a1, double a2)
    : q0(a0), q1(a1), q2(a2) {
  require_finite(a0);
  require_finite(a1);
  require_finite(a2);
}

SplitQuaternion S0Element::embed() const { return {q0, q1, q2, 0.0}; }

double classification_tolerance(const SplitQuaternion& q) {
  const double scale =
      q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
  return 1e-12 * std::max(1.0, scale);
}

SplitQuaternion mul(const SplitQuaternion& q, const SplitQuaternion& r) {
  return {q.q0 * r.q0 + q.q1 * r.q1 + q.q2 * r.q2 - q.q3 * r.q3,
          q.q0 * r.q1 + q.q1 * r.q0 - q.q2 * r.q3 + q.q3 * r.q2,
          q.q0 * r.q2 + q.q2 * r.q0 + q.q1 * r.q3 - q.q3 * r.q1,
          q.q0 * r.q3 + q.q3 * r.q0 + q.q1 * r.q2 - q.q2 * r.q1};
}

SplitQuaternion conjugate(const SplitQuaternion& q) {
  return {q.q0, -q.q1, -q.q2, -q.q3};
}

double norm_sq(const SplitQuaternion& q) {
  return q.q0 * q.q0 - q.q1 * q.q1 - q.q2 * q.q2 + q.q3 * q.q3;
}

double norm_sq(const S0Element& q) {
  return q.q0 * q.q0 - q.q1 * q.q1 - q.q2 * q.q2;
}

Classification classify(const SplitQuaternion& q) {
  const double n2 = norm_sq(q);
  const double eps = classification_tolerance(q);
  if (n2 > eps) return Classification::TimeLike;
  if (n2 < -eps) return Classification::SpaceLike;
  return Classification::LightLike;
}

Classification classify(const S0Element& q) { return classify(q.embed()); }

SplitQuaternion inverse(const SplitQuaternion& q) {
  const double n2 = norm_sq(q);
  if (std::abs(n2) <= classification_tolerance(q)) {
    throw LightLikeNotInvertible(
        "light-like split-quaternion has no inverse");
  }
  return {q.q0 / n2, -q.q1 / n2, -q.q2 / n2, -q.q3 / n2};
}

S0Element jordan_product(const S0Element& q, const S0Element& r) {
  const SplitQuaternion qr = mul(q.embed(), r.embed());
  const SplitQuaternion rq = mul(r.embed(), q.embed());
  // qr.q3 and rq.q3 are the same two products subtracted in opposite
  // order, so their rounded values cancel exactly; only the k-free part
  // is kept.
  return {(qr.q0 + rq.q0) / 2.0, (qr.q1 + rq.q1) / 2.0,
          (qr.q2 + rq.q2) / 2.0};
}

PolarForm polar(const S0Element& p) {
  if (classify(p) != Classification::TimeLike) {
    throw NotTimeLike("polar decomposition needs a time-like element");
  }
  if (p.q0 <= 0.0) {
    throw NegativeScalarPart(
        "polar decomposition needs a positive scalar part");
  }
  PolarForm f;
  f.n = std::sqrt(norm_sq(p));
  const double vn = std::hypot(p.q1, p.q2);
  // sinh(theta) = |v| / n; asinh is well conditioned for theta near 0,
  // where acosh(p0 / n) would lose half the significant digits.
  f.theta = std::asinh(vn / f.n);
  if (vn > 0.0) {
    f.u1 = p.q1 / vn;
    f.u2 = p.q2 / vn;
    f.has_axis = true;
  } else {
    f.u1 = f.u2 = 0.0;
    f.has_axis = false;
  }
  return f;
}

S0Element sqrt(const S0Element& p) {
  const HalfAngle h = half_angle(p);
  return {h.root_n * h.hc, h.root_n * h.u1 * h.hs, h.root_n * h.u2 * h.hs};
}

S0Element inv_sqrt(const S0Element& p) {
  const HalfAngle h = half_angle(p);
  return {h.hc / h.root_n, -h.u1 * h.hs / h.root_n,
          -h.u2 * h.hs / h.root_n};
}

S0Element sandwich(const S0Element& a, const S0Element& q) {
  const SplitQuaternion full =
      mul(mul(a.embed(), q.embed()), a.embed());
  return {full.q0, full.q1, full.q2};
}

}  // namespace splitcat
