#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpoly/groups.hpp"
#include "qpoly/quat.hpp"

namespace qpoly {

/// Highest weight (a1 a2 a3) for one of the three diagrams.
struct Weight {
  Diagram diagram = Diagram::A3;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

// "(110)"-style label; coefficients other than 0/1 print with %g.
std::string weight_label(const Weight& w);

/// Fundamental vector for weight index 1..3 (the image of (100), (010), (001)).
Quaternion fundamental_vector(Diagram diagram, int index);

/// Maps a highest weight to its pure quaternion:
///   A3: alpha e1 + beta e2 + gamma e3 with alpha = (a1 - a3)/2,
///       beta = (a1 + a3)/2, gamma = (a1 + 2 a2 + a3)/2
///   B3: alpha = a1 + a2 + a3/sqrt2, beta = a2 + a3/sqrt2, gamma = a3/sqrt2
///   H3: a1 w1 + a2 w2 + a3 w3 with w1 = 1/2(-sigma e1 + tau e3), w2 = e3,
///       w3 = 1/2(-sigma e2 + e3)
/// Throws DomainError for negative or non-finite coefficients.
Quaternion weight_vector(const Weight& w);

struct Orbit {
  std::optional<Weight> source;
  std::vector<Quaternion> vectors;  // in order of first appearance
  int stabilizer_order = 0;
};

Orbit orbit(const WeylGroup& w, const Quaternion& v);
Orbit orbit(const Weight& weight);

enum class SolidKind { Platonic, Archimedean, Catalan };
std::string_view to_string(SolidKind k);

struct NamedSolid {
  std::string name;
  SolidKind kind;
  Weight weight;
  int orbit_size;
};

/// The 17 orbit-defined solids (Platonic and Archimedean plus the dual
/// tetrahedron O(001) of A3).
std::span<const NamedSolid> solid_registry();

/// Throws LookupError listing the valid names.
const NamedSolid& find_solid(std::string_view name);

std::pair<Weight, Orbit> named_solid(std::string_view name);

// True when a and b hold the same points (within tol), in any order.
bool same_point_set(std::span<const Quaternion> a, std::span<const Quaternion> b, double tol = kDedupTol);

// Index of the entry approximately equal to q.
std::optional<std::size_t> find_point(std::span<const Quaternion> set, const Quaternion& q,
                                      double tol = kDedupTol);

}  // namespace qpoly
