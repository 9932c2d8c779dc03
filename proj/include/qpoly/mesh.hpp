#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qpoly/groups.hpp"
#include "qpoly/quat.hpp"

namespace qpoly {

/// Indexed convex polyhedron. Faces are vertex cycles, counter-clockwise seen
/// from outside; face_normals are unit outward normals.
struct Polyhedron {
  std::vector<Quaternion> vertices;
  std::vector<std::array<int, 2>> edges;  // i < j, sorted
  std::vector<std::vector<int>> faces;
  std::vector<Quaternion> face_normals;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  double circumradius() const;
  Quaternion face_centroid(int face) const;
  double edge_length(int edge) const;
};

// Planarity and convexity tolerance, relative to the circumradius.
inline constexpr double kMeshTol = 1e-8;

/// Sorts points lexicographically on coordinates rounded to 1e-9 and drops
/// duplicates. Defines the vertex numbering of every mesh built here.
std::vector<Quaternion> canonical_order(std::span<const Quaternion> points);

/// Orders an unordered set of coplanar vertex indices counter-clockwise
/// about the outward normal, starting from the lowest index.
std::vector<int> order_face(std::span<const Quaternion> vertices, std::vector<int> indices,
                            const Quaternion& outward_normal);

/// Assembles a polyhedron from vertices and ordered faces: derives edges and
/// normals. Throws MeshError if an edge is not shared by exactly two faces.
Polyhedron polyhedron_from_faces(std::vector<Quaternion> vertices, std::vector<std::vector<int>> faces);

/// Convex hull of points that are all extreme, with coplanar triangles merged
/// into polygons. Throws MeshError for fewer than 4 points, coplanar input or
/// points that are not hull vertices.
Polyhedron build_mesh(std::span<const Quaternion> points);

/// Face detection by supporting planes: every candidate direction whose
/// maximizing vertex set has at least 3 members yields a face. Throws
/// MeshError if the result is not a closed convex surface over all points.
Polyhedron build_mesh_from_normals(std::span<const Quaternion> points,
                                   std::span<const Quaternion> candidate_normals);

/// Supporting-plane meshing with the diagram's three fundamental orbits (both
/// signs) as candidate normals; falls back to build_mesh when those do not
/// produce a valid surface.
Polyhedron build_symmetric_mesh(std::span<const Quaternion> points, Diagram diagram);

int euler_characteristic(const Polyhedron& p);

struct MeshCheck {
  bool euler = false;
  bool planar = false;
  bool convex = false;
  bool manifold = false;  // every edge in exactly two faces, consistently oriented
  bool outward = false;
  double max_plane_deviation = 0.0;
  double max_convexity_violation = 0.0;

  bool ok() const { return euler && planar && convex && manifold && outward; }
};

MeshCheck check_mesh(const Polyhedron& p);

/// "equilateral triangle", "isosceles triangle", "scalene triangle",
/// "square", "rhombus", "rectangle", "kite", "quadrilateral",
/// "regular pentagon", "regular hexagon", ... or "<n>-gon".
std::string polygon_type(const Polyhedron& p, int face);

struct FaceClass {
  int size = 0;
  std::string polygon;
};

struct EdgeClass {
  int size = 0;
  double length = 0.0;
};

/// W-orbits of faces / edges / vertices, in order of first member. Throws
/// SymmetryError if the vertex set is not W-invariant.
std::vector<FaceClass> face_classes(const WeylGroup& w, const Polyhedron& p);
std::vector<EdgeClass> edge_classes(const WeylGroup& w, const Polyhedron& p);
std::vector<int> vertex_classes(const WeylGroup& w, const Polyhedron& p);

/// Poles n/d of the face planes n.x = d (polar reciprocation in the unit
/// sphere). Requires the origin strictly inside.
std::vector<Quaternion> polar_dual_vertices(const Polyhedron& p);

/// True when b == k a as point sets for one k > 0 (within tol relative to the
/// largest norm). The fitted k is written to scale if non-null.
bool same_up_to_scale(std::span<const Quaternion> a, std::span<const Quaternion> b, double tol,
                      double* scale = nullptr);

}  // namespace qpoly
