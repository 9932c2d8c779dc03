#pragma once

// Shared fixtures for the unit and acceptance tests: literal point sets,
// oracles that do not go through the library's own algorithms, and seeded
// random generators.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "qpoly/groups.hpp"
#include "qpoly/quat.hpp"

namespace qpoly::testing {

inline const double tau = kTau;
inline const double sigma = kSigma;

inline Quaternion v3(double x, double y, double z) { return Quaternion::pure(x, y, z); }

// All sign choices of the nonzero components of (x, y, z).
inline std::vector<Quaternion> signs(double x, double y, double z) {
  std::vector<Quaternion> out;
  for (int sx : {1, -1}) {
    if (x == 0 && sx < 0) continue;
    for (int sy : {1, -1}) {
      if (y == 0 && sy < 0) continue;
      for (int sz : {1, -1}) {
        if (z == 0 && sz < 0) continue;
        out.push_back(v3(sx * x, sy * y, sz * z));
      }
    }
  }
  return out;
}

// Cyclic permutations (x,y,z), (z,x,y), (y,z,x) with all signs.
inline std::vector<Quaternion> cyclic_signs(double x, double y, double z) {
  std::vector<Quaternion> out;
  for (auto [a, b, c] : std::array<std::array<double, 3>, 3>{{{x, y, z}, {z, x, y}, {y, z, x}}}) {
    auto s = signs(a, b, c);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

// All six permutations with all signs (duplicates are left to the caller).
inline std::vector<Quaternion> all_perm_signs(double x, double y, double z) {
  std::vector<Quaternion> out;
  std::array<double, 3> c{x, y, z};
  std::array<int, 3> idx{0, 1, 2};
  do {
    auto s = signs(c[idx[0]], c[idx[1]], c[idx[2]]);
    out.insert(out.end(), s.begin(), s.end());
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::vector<Quaternion> uniq;
  for (const auto& q : out) {
    bool seen = false;
    for (const auto& u : uniq) seen = seen || approx_equal(u, q, 1e-12);
    if (!seen) uniq.push_back(q);
  }
  return uniq;
}

inline std::vector<Quaternion> scaled(std::vector<Quaternion> v, double k) {
  for (auto& q : v) q = q * k;
  return v;
}

inline std::vector<Quaternion> concat(std::vector<Quaternion> a, const std::vector<Quaternion>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Reference coordinate lists, written out by hand rather than generated.
namespace printed {

// truncated tetrahedron: 1/2(+-1, +-1, +-3) cyclically, even number of minus signs
inline std::vector<Quaternion> a3_110() {
  std::vector<Quaternion> out;
  for (const auto& q : cyclic_signs(0.5, 0.5, 1.5)) {
    int minus = (q.x < 0) + (q.y < 0) + (q.z < 0);
    if (minus % 2 == 0) out.push_back(q);
  }
  return out;
}

inline std::vector<Quaternion> a3_100() {
  return {v3(0.5, 0.5, 0.5), v3(0.5, -0.5, -0.5), v3(-0.5, -0.5, 0.5), v3(-0.5, 0.5, -0.5)};
}

inline std::vector<Quaternion> a3_001() {
  return {v3(-0.5, -0.5, -0.5), v3(-0.5, 0.5, 0.5), v3(0.5, 0.5, -0.5), v3(0.5, -0.5, 0.5)};
}

// rhombic dodecahedron edge midpoints: 1/2(+-1, +-1, +-3) and permutations
inline std::vector<Quaternion> rhombic_dodecahedron_midpoints() { return all_perm_signs(0.5, 0.5, 1.5); }

// truncated octahedron: (+-2, +-1, 0) and permutations
inline std::vector<Quaternion> b3_110() { return all_perm_signs(2, 1, 0); }

inline std::vector<Quaternion> tetrakis_hexahedron() {
  return concat(all_perm_signs(1.5, 0, 0), signs(1, 1, 1));
}

inline std::vector<Quaternion> triakis_octahedron() {
  return concat(scaled(signs(1, 1, 1), kSqrt2 - 1), all_perm_signs(1, 0, 0));
}

inline std::vector<Quaternion> deltoidal_icositetrahedron() {
  auto out = concat(all_perm_signs(1, 0, 0), all_perm_signs(kInvSqrt2, kInvSqrt2, 0));
  return concat(out, scaled(signs(1, 1, 1), (kSqrt2 + 1) / (kSqrt2 + 3)));
}

// dodecahedron
inline std::vector<Quaternion> h3_100() {
  return concat(cyclic_signs(sigma / 2, 0, tau / 2), signs(0.5, 0.5, 0.5));
}

// icosahedron
inline std::vector<Quaternion> h3_001() { return cyclic_signs(0.5, 0, sigma / 2); }

inline std::vector<Quaternion> pentakis_dodecahedron() {
  auto out = concat(cyclic_signs(sigma, 0, tau), signs(1, 1, 1));
  return concat(out, scaled(cyclic_signs(1, 0, sigma), 3 * tau / (sigma + 4)));
}

}  // namespace printed

// Signed permutation matrices, i.e. the full octahedral group.
inline std::vector<Mat3> signed_permutations() {
  std::vector<Mat3> out;
  std::array<int, 3> idx{0, 1, 2};
  do {
    for (int s = 0; s < 8; ++s) {
      Mat3 m;
      for (int r = 0; r < 3; ++r) m.m[3 * r + idx[r]] = (s >> r) & 1 ? -1.0 : 1.0;
      out.push_back(m);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

inline bool maps_set_to_itself(const Mat3& m, const std::vector<Quaternion>& set) {
  for (const auto& v : set) {
    Quaternion w = m(v);
    bool hit = false;
    for (const auto& u : set) hit = hit || approx_equal(u, w, 1e-9);
    if (!hit) return false;
  }
  return true;
}

// Orthogonal maps preserving a point set, found by sending an ordered
// frame (v0, v1, v0 x v1) to every congruent frame (+-).
inline std::vector<Mat3> symmetry_group_of(const std::vector<Quaternion>& set) {
  const Quaternion a = set[0];
  Quaternion b;
  for (const auto& q : set) {
    if (norm(cross(a, q)) > 1e-6) {
      b = q;
      break;
    }
  }
  auto frame = [](const Quaternion& x, const Quaternion& y, double handed) {
    Quaternion z = cross(x, y) * handed;
    return std::array<Quaternion, 3>{x, y, z};
  };
  // Columns of the source frame, inverted by Cramer's rule.
  auto inverse_cols = [](const std::array<Quaternion, 3>& f) {
    std::array<Quaternion, 3> r{cross(f[1], f[2]), cross(f[2], f[0]), cross(f[0], f[1])};
    double det = dot(f[0], r[0]);
    for (auto& q : r) q = q / det;
    return r;  // rows of the inverse
  };
  const auto src = inverse_cols(frame(a, b, 1.0));
  std::vector<Mat3> out;
  for (const auto& a2 : set) {
    if (std::abs(dot(a2, a2) - dot(a, a)) > 1e-9) continue;
    for (const auto& b2 : set) {
      if (std::abs(dot(a2, b2) - dot(a, b)) > 1e-9 || std::abs(dot(b2, b2) - dot(b, b)) > 1e-9) continue;
      for (double handed : {1.0, -1.0}) {
        auto dst = frame(a2, b2, handed);
        Mat3 m;
        const double d[3][3] = {{dst[0].x, dst[1].x, dst[2].x}, {dst[0].y, dst[1].y, dst[2].y},
                                {dst[0].z, dst[1].z, dst[2].z}};
        const double s[3][3] = {{src[0].x, src[0].y, src[0].z}, {src[1].x, src[1].y, src[1].z},
                                {src[2].x, src[2].y, src[2].z}};
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) m.m[3 * r + c] = d[r][0] * s[0][c] + d[r][1] * s[1][c] + d[r][2] * s[2][c];
        if (maps_set_to_itself(m, set)) out.push_back(m);
      }
    }
  }
  return out;
}

inline bool same_matrix_sets(const std::vector<Mat3>& a, const std::vector<Mat3>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& m : a) {
    bool hit = false;
    for (const auto& n : b) hit = hit || m.max_abs_diff(n) <= 1e-9;
    if (!hit) return false;
  }
  return true;
}

// Product from the unit table e_i e_j = -delta_ij + eps_ijk e_k, summed term
// by term.
inline Quaternion table_product(const Quaternion& p, const Quaternion& q) {
  const double a[4] = {p.s, p.x, p.y, p.z};
  const double b[4] = {q.s, q.x, q.y, q.z};
  double r[4] = {0, 0, 0, 0};
  auto eps = [](int i, int j, int k) { return 0.5 * (i - j) * (j - k) * (k - i); };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double c = a[i] * b[j];
      if (i == 0) r[j] += c;
      else if (j == 0) r[i] += c;
      else if (i == j) r[0] -= c;
      else
        for (int k = 1; k <= 3; ++k) r[k] += eps(i, j, k) * c;
    }
  }
  return {r[0], r[1], r[2], r[3]};
}

// Rodrigues rotation of v about a unit axis.
inline Quaternion rotate(const Quaternion& v, const Quaternion& axis, double angle) {
  return v * std::cos(angle) + cross(axis, v) * std::sin(angle) + axis * (dot(axis, v) * (1 - std::cos(angle)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen_); }

  Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }
  Quaternion unit() { return normalized(quaternion()); }
  Quaternion pure() { return Quaternion::pure(normal(), normal(), normal()); }
  Quaternion on_sphere() { return normalized(pure()); }

 private:
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  std::mt19937_64 gen_;
};

inline constexpr int kPropertyCases = 1000;

}  // namespace qpoly::testing
