#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpoly/groups.hpp"
#include "qpoly/mesh.hpp"
#include "qpoly/orbits.hpp"
#include "qpoly/quat.hpp"

namespace qpoly {

// Fundamental orbit labels by weight index 1..3.
std::string_view orbit_label(int index);

struct FaceCenter {
  int face = -1;
  Quaternion centroid;   // unnormalized vertex centroid
  Quaternion direction;  // fundamental-orbit member parallel to the centroid
  int orbit = 0;         // 1 (100), 2 (010) or 3 (001)
};

/// Faces of arch meeting at vertex q, each classified by the fundamental
/// orbit its centroid points along. Throws LookupError if q is not a vertex
/// and ClassificationError if a centroid matches no fundamental direction.
std::vector<FaceCenter> incident_face_centers(const Polyhedron& arch, Diagram diagram, const Quaternion& q);

/// Scale lambda with lambda * center_dir on the plane through reference
/// orthogonal to q: dot(reference, q) / dot(center_dir, q). Throws
/// SingularConfigurationError when dot(center_dir, q) <= 1e-12.
double solve_scale(const Quaternion& center_dir, const Quaternion& reference, const Quaternion& q);

/// How one Catalan solid is normalized. Each fundamental orbit o enters as
/// multiplier[o] * O(o) times a solved scale; the reference orbit keeps
/// scale 1. lambda_orbit/eta_orbit pick which solved scales are reported
/// under those names.
struct CatalanSpec {
  std::string name;
  std::string archimedean;
  int reference_orbit = 0;
  std::array<double, 3> multiplier{1.0, 1.0, 1.0};
  int lambda_orbit = 0;
  int eta_orbit = 0;  // 0 when the solid has a single named scale
};

std::span<const CatalanSpec> catalan_registry();
const CatalanSpec& find_catalan(std::string_view name);
// Entry whose archimedean field is arch_name.
const CatalanSpec& catalan_for(std::string_view arch_name);

struct OrbitRadius {
  std::string label;
  double radius = 0.0;
  int count = 0;
};

struct DualReport {
  std::string name;
  std::string archimedean;
  Diagram diagram = Diagram::A3;
  std::vector<std::pair<std::string, double>> scale_factors;  // label -> solved scale
  std::optional<double> lambda;
  std::optional<double> eta;
  std::vector<OrbitRadius> radii;
  double dihedral_deg = 0.0;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

struct DualResult {
  Polyhedron catalan;
  DualReport report;
  Polyhedron archimedean;
};

/// Catalan solid dual to a registry Archimedean solid, built from rescaled
/// fundamental orbits. Throws DualConstructionError when a post-condition
/// (planarity, counts, orthogonality) fails.
DualResult dual(std::string_view arch_name);

/// Same construction on a given Archimedean vertex set (e.g. a rescaled
/// orbit). q must be the vertex in the fundamental chamber.
DualResult dual_from_orbit(const CatalanSpec& spec, Diagram diagram, std::span<const Quaternion> arch_vertices,
                           const Quaternion& q);

/// 180 deg minus the angle between the two vertices of each Archimedean edge.
/// Throws DualityViolationError if the edges disagree by more than 0.5
/// arcsecond or if catalan's adjacent face normals give a different value.
double dihedral_angle(const Polyhedron& arch, const Polyhedron& catalan);

std::vector<std::pair<std::string, double>> sphere_radii(const DualReport& report);

struct Dms {
  int degrees = 0;
  int minutes = 0;
  int seconds = 0;
};

// Seconds rounded to the nearest integer, with carry.
Dms to_dms(double degrees);
// "129°31′16″" when unicode, else "129d 31m 16s".
std::string format_dms(double degrees, bool unicode);

}  // namespace qpoly
