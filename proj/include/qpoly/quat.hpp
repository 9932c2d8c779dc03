#pragma once

#include <cmath>
#include <iosfwd>

namespace qpoly {

inline constexpr double kPureTol = 1e-12;
inline constexpr double kUnitTol = 1e-12;
// Two quaternions are the same point when no component differs by more.
inline constexpr double kDedupTol = 1e-9;

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
// Golden ratio and its Galois conjugate: tau + sigma = 1, tau * sigma = -1.
inline const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double kSigma = (1.0 - std::sqrt(5.0)) / 2.0;

/// Real quaternion s + x e1 + y e2 + z e3.
///
/// Pure quaternions (s == 0) are used directly as 3D vectors; there is no
/// separate vector type.
struct Quaternion {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double s_, double x_, double y_, double z_) : s(s_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion real(double s) { return {s, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion pure(double x, double y, double z) { return {0.0, x, y, z}; }

  constexpr Quaternion vector_part() const { return {0.0, x, y, z}; }

  constexpr Quaternion operator-() const { return {-s, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    s += o.s; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    s -= o.s; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double k) {
    s *= k; x *= k; y *= k; z *= k;
    return *this;
  }
  constexpr Quaternion& operator/=(double k) { return *this *= (1.0 / k); }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double k) { return a *= k; }
constexpr Quaternion operator*(double k, Quaternion a) { return a *= k; }
constexpr Quaternion operator/(Quaternion a, double k) { return a /= k; }

// Hamilton product with e_i e_j = -delta_ij + eps_ijk e_k.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.s * q.s - p.x * q.x - p.y * q.y - p.z * q.z,
          p.s * q.x + p.x * q.s + p.y * q.z - p.z * q.y,
          p.s * q.y - p.x * q.z + p.y * q.s + p.z * q.x,
          p.s * q.z + p.x * q.y - p.y * q.x + p.z * q.s};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conjugate(const Quaternion& q) { return {q.s, -q.x, -q.y, -q.z}; }

/// Euclidean scalar product (p, q) = 1/2 (conj(p) q + conj(q) p).
constexpr double dot(const Quaternion& p, const Quaternion& q) {
  return p.s * q.s + p.x * q.x + p.y * q.y + p.z * q.z;
}

// Cross product of the vector parts, returned as a pure quaternion.
constexpr Quaternion cross(const Quaternion& a, const Quaternion& b) {
  return Quaternion::pure(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
}

inline double norm(const Quaternion& q) { return std::sqrt(dot(q, q)); }
inline Quaternion normalized(const Quaternion& q) { return q / norm(q); }

inline bool is_pure(const Quaternion& q, double tol = kPureTol) { return std::abs(q.s) <= tol; }
inline bool is_unit(const Quaternion& q, double tol = kUnitTol) { return std::abs(norm(q) - 1.0) <= tol; }

/// Largest absolute componentwise difference.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kDedupTol) {
  return max_abs_diff(a, b) <= tol;
}

// Angle between the vector parts in radians.
double angle_between(const Quaternion& a, const Quaternion& b);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// O(4) transformation given by a pair of unit quaternions:
///   [p, q]  : r -> p r q
///   [p, q]* : r -> p conj(r) q
struct GroupElement {
  Quaternion p = Quaternion::real(1.0);
  Quaternion q = Quaternion::real(1.0);
  bool starred = false;
};

/// Applies g to r. Throws InvalidElementError when g.p or g.q is not a unit
/// quaternion.
Quaternion apply(const GroupElement& g, const Quaternion& r);

}  // namespace qpoly
