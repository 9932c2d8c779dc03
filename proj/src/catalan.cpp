#include "qpoly/catalan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "qpoly/error.hpp"

namespace qpoly {

std::string_view orbit_label(int index) {
  switch (index) {
    case 1: return "100";
    case 2: return "010";
    case 3: return "001";
  }
  throw DomainError("orbit index must be 1, 2 or 3");
}

std::vector<FaceCenter> incident_face_centers(const Polyhedron& arch, Diagram diagram, const Quaternion& q) {
  const double tol = 1e-8 * std::max(1.0, arch.circumradius());
  const auto qi = find_point(arch.vertices, q.vector_part(), tol);
  if (!qi) throw LookupError("quaternion is not a vertex of the polyhedron");

  const WeylGroup& w = weyl_group(diagram);
  std::array<std::vector<Quaternion>, 3> fundamental;
  for (int i = 1; i <= 3; ++i) fundamental[i - 1] = orbit(w, fundamental_vector(diagram, i)).vectors;

  std::vector<FaceCenter> out;
  for (int f = 0; f < arch.num_faces(); ++f) {
    const auto& face = arch.faces[f];
    if (std::find(face.begin(), face.end(), static_cast<int>(*qi)) == face.end()) continue;
    FaceCenter fc;
    fc.face = f;
    fc.centroid = arch.face_centroid(f);
    const Quaternion dir = normalized(fc.centroid);
    for (int i = 0; i < 3 && fc.orbit == 0; ++i) {
      for (const auto& m : fundamental[i]) {
        if (max_abs_diff(normalized(m), dir) <= 1e-8) {
          fc.direction = m;
          fc.orbit = i + 1;
          break;
        }
      }
    }
    if (fc.orbit == 0) {
      std::ostringstream msg;
      msg << "face centroid " << fc.centroid << " is not along any fundamental orbit of "
          << to_string(diagram);
      throw ClassificationError(msg.str());
    }
    out.push_back(fc);
  }
  return out;
}

double solve_scale(const Quaternion& center_dir, const Quaternion& reference, const Quaternion& q) {
  const double denom = dot(center_dir, q);
  if (denom <= 1e-12) throw SingularConfigurationError("face center direction is orthogonal to (or behind) the vertex");
  return dot(reference, q) / denom;
}

std::span<const CatalanSpec> catalan_registry() {
  const double s2 = kSqrt2;
  const double ico = 2.0 * kTau / 3.0;
  static const std::array<CatalanSpec, 11> registry = {{
      {"triakis-tetrahedron", "truncated-tetrahedron", 3, {1, 1, 1}, 1, 0},
      {"rhombic-dodecahedron", "cuboctahedron", 1, {1, 1, s2}, 3, 0},
      {"tetrakis-hexahedron", "truncated-octahedron", 3, {1, 1, s2}, 1, 0},
      {"triakis-octahedron", "truncated-cube", 1, {1, 1, s2}, 3, 0},
      {"deltoidal-icositetrahedron", "small-rhombicuboctahedron", 1, {1, 1, s2}, 3, 0},
      {"disdyakis-dodecahedron", "great-rhombicuboctahedron", 1, {1, 1, s2}, 2, 3},
      {"rhombic-triacontahedron", "icosidodecahedron", 1, {ico, 1, 2}, 3, 0},
      {"triakis-icosahedron", "truncated-dodecahedron", 3, {2, 1, 2}, 1, 0},
      {"pentakis-dodecahedron", "truncated-icosahedron", 1, {2, 1, 2}, 3, 0},
      {"deltoidal-hexecontahedron", "small-rhombicosidodecahedron", 2, {2, 1, 2}, 3, 1},
      {"disdyakis-triacontahedron", "great-rhombicosidodecahedron", 2, {2, 1, 2}, 3, 1},
  }};
  return registry;
}

const CatalanSpec& find_catalan(std::string_view name) {
  for (const auto& c : catalan_registry()) {
    if (c.name == name) return c;
  }
  std::string msg = "unknown Catalan solid '" + std::string(name) + "'; valid names:";
  for (const auto& c : catalan_registry()) msg += " " + c.name;
  throw LookupError(msg);
}

const CatalanSpec& catalan_for(std::string_view arch_name) {
  for (const auto& c : catalan_registry()) {
    if (c.archimedean == arch_name) return c;
  }
  std::string msg = "'" + std::string(arch_name) + "' is not an Archimedean solid; valid names:";
  for (const auto& c : catalan_registry()) msg += " " + c.archimedean;
  throw LookupError(msg);
}

DualResult dual_from_orbit(const CatalanSpec& spec, Diagram diagram, std::span<const Quaternion> arch_vertices,
                           const Quaternion& q) {
  DualResult out;
  out.archimedean = build_symmetric_mesh(arch_vertices, diagram);
  const Polyhedron& arch = out.archimedean;
  const auto centers = incident_face_centers(arch, diagram, q);

  auto rep = [&](const FaceCenter& c) { return spec.multiplier[c.orbit - 1] * c.direction; };

  const auto ref_it = std::find_if(centers.begin(), centers.end(),
                                   [&](const FaceCenter& c) { return c.orbit == spec.reference_orbit; });
  if (ref_it == centers.end()) {
    throw DualConstructionError(spec.name + ": reference orbit " + std::string(orbit_label(spec.reference_orbit)) +
                                " has no face at the chosen vertex");
  }
  const Quaternion reference = rep(*ref_it);

  std::array<std::optional<double>, 3> scale;
  for (const auto& c : centers) {
    const double s = solve_scale(rep(c), reference, q);
    auto& slot = scale[c.orbit - 1];
    if (slot && std::abs(*slot - s) > 1e-9) {
      throw DualConstructionError(spec.name + ": faces of one orbit demand different scales");
    }
    slot = s;
  }

  const WeylGroup& w = weyl_group(diagram);
  std::vector<Quaternion> verts;
  DualReport& r = out.report;
  r.name = spec.name;
  r.archimedean = spec.archimedean;
  r.diagram = diagram;
  for (int i = 1; i <= 3; ++i) {
    if (!scale[i - 1]) continue;
    const double k = *scale[i - 1] * spec.multiplier[i - 1];
    const auto orb = orbit(w, fundamental_vector(diagram, i)).vectors;
    for (const auto& v : orb) verts.push_back(k * v);
    r.scale_factors.emplace_back(std::string(orbit_label(i)), *scale[i - 1]);
    r.radii.push_back({std::string(orbit_label(i)), k * norm(orb.front()), static_cast<int>(orb.size())});
  }
  if (spec.lambda_orbit) r.lambda = scale[spec.lambda_orbit - 1];
  if (spec.eta_orbit) r.eta = scale[spec.eta_orbit - 1];

  try {
    out.catalan = build_mesh_from_normals(verts, arch.vertices);
  } catch (const MeshError& e) {
    throw DualConstructionError(spec.name + ": " + e.what());
  }
  const Polyhedron& cat = out.catalan;
  if (!check_mesh(cat).ok()) throw DualConstructionError(spec.name + ": mesh invariants fail");
  if (cat.num_vertices() != static_cast<int>(verts.size())) {
    throw DualConstructionError(spec.name + ": coincident or interior orbit points");
  }
  if (cat.num_vertices() != arch.num_faces() || cat.num_faces() != arch.num_vertices() ||
      cat.num_edges() != arch.num_edges()) {
    throw DualConstructionError(spec.name + ": counts are not dual to the Archimedean solid");
  }

  // Each face must be orthogonal to one Archimedean vertex.
  for (int f = 0; f < cat.num_faces(); ++f) {
    const Quaternion n = cat.face_normals[f];
    const auto hit = std::find_if(arch.vertices.begin(), arch.vertices.end(),
                                  [&](const Quaternion& v) { return max_abs_diff(normalized(v), n) <= 1e-8; });
    if (hit == arch.vertices.end()) throw DualConstructionError(spec.name + ": face not orthogonal to any vertex");
    const Quaternion axis = normalized(*hit);
    const double d0 = dot(cat.vertices[cat.faces[f][0]], axis);
    for (int i : cat.faces[f]) {
      if (std::abs(dot(cat.vertices[i], axis) - d0) > 1e-9) {
        throw DualConstructionError(spec.name + ": face vertices off the orthogonal plane");
      }
    }
  }

  r.vertices = cat.num_vertices();
  r.edges = cat.num_edges();
  r.faces = cat.num_faces();
  r.dihedral_deg = dihedral_angle(arch, cat);
  return out;
}

DualResult dual(std::string_view arch_name) {
  const CatalanSpec& spec = catalan_for(arch_name);
  const NamedSolid& solid = find_solid(spec.archimedean);
  const Orbit orb = orbit(solid.weight);
  return dual_from_orbit(spec, solid.weight.diagram, orb.vectors, weight_vector(solid.weight));
}

namespace {

constexpr double kArcsecond = 1.0 / 3600.0;

double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

}  // namespace

double dihedral_angle(const Polyhedron& arch, const Polyhedron& catalan) {
  if (catalan.num_vertices() != arch.num_faces() || catalan.num_faces() != arch.num_vertices() ||
      catalan.num_edges() != arch.num_edges()) {
    throw DualityViolationError("polyhedra are not combinatorially dual");
  }
  if (arch.edges.empty()) throw DualityViolationError("no edges");

  double lo = 360.0, hi = -360.0;
  for (const auto& e : arch.edges) {
    const double theta = 180.0 - degrees(angle_between(arch.vertices[e[0]], arch.vertices[e[1]]));
    lo = std::min(lo, theta);
    hi = std::max(hi, theta);
  }
  if (hi - lo > 0.5 * kArcsecond) throw DualityViolationError("dihedral angle differs across edges");
  const double theta = 0.5 * (lo + hi);

  // Interior angle between adjacent Catalan faces, from their normals.
  std::map<std::pair<int, int>, std::vector<int>> faces_at;
  for (int f = 0; f < catalan.num_faces(); ++f) {
    const auto& face = catalan.faces[f];
    for (std::size_t k = 0; k < face.size(); ++k) {
      const int a = face[k], b = face[(k + 1) % face.size()];
      faces_at[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  for (const auto& [edge, fs] : faces_at) {
    if (fs.size() != 2) throw DualityViolationError("catalan edge not shared by two faces");
    const double phi = 180.0 - degrees(angle_between(catalan.face_normals[fs[0]], catalan.face_normals[fs[1]]));
    if (std::abs(phi - theta) > 0.5 * kArcsecond) {
      throw DualityViolationError("catalan face normals disagree with the Archimedean dihedral angle");
    }
  }
  return theta;
}

std::vector<std::pair<std::string, double>> sphere_radii(const DualReport& report) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& r : report.radii) out.emplace_back(r.label, r.radius);
  return out;
}

Dms to_dms(double deg) {
  const long long total = std::llround(deg * 3600.0);
  return {static_cast<int>(total / 3600), static_cast<int>((total % 3600) / 60), static_cast<int>(total % 60)};
}

std::string format_dms(double deg, bool unicode) {
  const Dms d = to_dms(deg);
  std::ostringstream s;
  if (unicode) {
    s << d.degrees << "°" << d.minutes << "′" << d.seconds << "″";
  } else {
    s << d.degrees << "d " << d.minutes << "m " << d.seconds << "s";
  }
  return s.str();
}

}  // namespace qpoly
