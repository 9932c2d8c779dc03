#include "qpoly/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <utility>

#include "qpoly/error.hpp"
#include "qpoly/orbits.hpp"

namespace qpoly {

double Polyhedron::circumradius() const {
  double r = 0.0;
  for (const auto& v : vertices) r = std::max(r, norm(v));
  return r;
}

Quaternion Polyhedron::face_centroid(int face) const {
  Quaternion c;
  for (int i : faces[face]) c += vertices[i];
  return c / static_cast<double>(faces[face].size());
}

double Polyhedron::edge_length(int edge) const {
  return norm(vertices[edges[edge][0]] - vertices[edges[edge][1]]);
}

std::vector<Quaternion> canonical_order(std::span<const Quaternion> points) {
  std::vector<Quaternion> out;
  for (const auto& p : points) {
    if (!find_point(out, p.vector_part())) out.push_back(p.vector_part());
  }
  auto key = [](const Quaternion& q) {
    return std::array<double, 3>{std::round(q.x * 1e9), std::round(q.y * 1e9), std::round(q.z * 1e9)};
  };
  std::sort(out.begin(), out.end(), [&](const Quaternion& a, const Quaternion& b) { return key(a) < key(b); });
  return out;
}

std::vector<int> order_face(std::span<const Quaternion> vertices, std::vector<int> indices,
                            const Quaternion& outward_normal) {
  std::sort(indices.begin(), indices.end());
  Quaternion c;
  for (int i : indices) c += vertices[i];
  c /= static_cast<double>(indices.size());

  const Quaternion ref = vertices[indices.front()] - c;
  std::vector<std::pair<double, int>> keyed;
  for (int i : indices) {
    const Quaternion w = vertices[i] - c;
    double a = std::atan2(dot(outward_normal, cross(ref, w)), dot(ref, w));
    if (i == indices.front()) a = 0.0;
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    keyed.emplace_back(a, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (const auto& [a, i] : keyed) out.push_back(i);
  return out;
}

namespace {

// Newell's method; robust for any planar polygon.
Quaternion polygon_normal(std::span<const Quaternion> v, const std::vector<int>& face) {
  Quaternion n;
  for (std::size_t k = 0; k < face.size(); ++k) {
    const Quaternion& a = v[face[k]];
    const Quaternion& b = v[face[(k + 1) % face.size()]];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return normalized(n);
}

void reject_collinear_corners(std::span<const Quaternion> v, const std::vector<int>& face, double scale) {
  const std::size_t n = face.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Quaternion& prev = v[face[(k + n - 1) % n]];
    const Quaternion& cur = v[face[k]];
    const Quaternion& next = v[face[(k + 1) % n]];
    if (norm(cross(prev - cur, next - cur)) <= kMeshTol * scale * scale) {
      throw MeshError("point on a face boundary is not extreme (collinear corner)");
    }
  }
}

// Builds faces from coplanar vertex groups, orders them, and assembles.
Polyhedron assemble(std::vector<Quaternion> vertices, const std::vector<std::pair<std::vector<int>, Quaternion>>& groups) {
  double scale = 0.0;
  for (const auto& v : vertices) scale = std::max(scale, norm(v));

  std::vector<std::vector<int>> faces;
  std::vector<bool> covered(vertices.size(), false);
  for (const auto& [idx, n] : groups) {
    auto face = order_face(vertices, idx, n);
    reject_collinear_corners(vertices, face, scale);
    for (int i : face) covered[i] = true;
    faces.push_back(std::move(face));
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw MeshError("input contains points that are not hull vertices");
  }
  // Deterministic face order: by lowest vertex, then by the cycle itself.
  std::sort(faces.begin(), faces.end());
  return polyhedron_from_faces(std::move(vertices), std::move(faces));
}

struct HullTri {
  int a, b, c;
  Quaternion n;
  double d;
};

HullTri make_tri(std::span<const Quaternion> p, int a, int b, int c) {
  Quaternion n = cross(p[b] - p[a], p[c] - p[a]);
  const double len = norm(n);
  if (len > 0.0) n /= len;
  return {a, b, c, n, dot(n, p[a])};
}

std::vector<HullTri> incremental_hull(std::span<const Quaternion> p, double scale) {
  const double eps = 1e-10 * scale;
  const int n = static_cast<int>(p.size());

  // Initial tetrahedron from well-separated extreme points.
  int i0 = 0;
  int i1 = -1, i2 = -1, i3 = -1;
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = norm(p[i] - p[i0]);
    if (d > best) best = d, i1 = i;
  }
  if (i1 < 0 || best <= kMeshTol * scale) throw MeshError("degenerate input: all points coincide");
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = norm(cross(p[i1] - p[i0], p[i] - p[i0]));
    if (d > best) best = d, i2 = i;
  }
  if (i2 < 0 || best <= kMeshTol * scale * scale) throw MeshError("degenerate input: points are collinear");
  const Quaternion base_n = normalized(cross(p[i1] - p[i0], p[i2] - p[i0]));
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(dot(base_n, p[i] - p[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (i3 < 0 || best <= kMeshTol * scale) throw MeshError("degenerate input: points are coplanar");

  std::vector<HullTri> tris;
  auto add_oriented = [&](int a, int b, int c, int opposite) {
    HullTri t = make_tri(p, a, b, c);
    if (dot(t.n, p[opposite]) - t.d > 0.0) t = make_tri(p, a, c, b);
    tris.push_back(t);
  };
  add_oriented(i0, i1, i2, i3);
  add_oriented(i0, i1, i3, i2);
  add_oriented(i0, i2, i3, i1);
  add_oriented(i1, i2, i3, i0);

  for (int k = 0; k < n; ++k) {
    if (k == i0 || k == i1 || k == i2 || k == i3) continue;
    std::vector<bool> visible(tris.size(), false);
    bool any = false;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (dot(tris[t].n, p[k]) - tris[t].d > eps) visible[t] = any = true;
    }
    if (!any) continue;

    std::set<std::pair<int, int>> visible_edges;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (!visible[t]) continue;
      visible_edges.insert({tris[t].a, tris[t].b});
      visible_edges.insert({tris[t].b, tris[t].c});
      visible_edges.insert({tris[t].c, tris[t].a});
    }
    std::vector<HullTri> next;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (!visible[t]) next.push_back(tris[t]);
    }
    for (const auto& [u, v] : visible_edges) {
      if (!visible_edges.count({v, u})) next.push_back(make_tri(p, u, v, k));
    }
    tris = std::move(next);
  }
  return tris;
}

}  // namespace

Polyhedron polyhedron_from_faces(std::vector<Quaternion> vertices, std::vector<std::vector<int>> faces) {
  const int nv = static_cast<int>(vertices.size());
  std::map<std::pair<int, int>, int> uses;
  for (const auto& f : faces) {
    if (f.size() < 3) throw MeshError("face with fewer than 3 vertices");
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int a = f[k];
      const int b = f[(k + 1) % f.size()];
      if (a < 0 || a >= nv || b < 0 || b >= nv) throw MeshError("face index out of range");
      ++uses[{std::min(a, b), std::max(a, b)}];
    }
  }
  Polyhedron out;
  for (const auto& [e, count] : uses) {
    if (count != 2) throw MeshError("edge shared by " + std::to_string(count) + " faces, expected 2");
    out.edges.push_back({e.first, e.second});
  }
  for (const auto& f : faces) out.face_normals.push_back(polygon_normal(vertices, f));
  out.vertices = std::move(vertices);
  out.faces = std::move(faces);
  return out;
}

Polyhedron build_mesh(std::span<const Quaternion> points) {
  std::vector<Quaternion> verts = canonical_order(points);
  if (verts.size() < 4) throw MeshError("convex hull needs at least 4 distinct points");
  double scale = 0.0;
  for (const auto& v : verts) scale = std::max(scale, norm(v));

  const auto tris = incremental_hull(verts, scale);

  // Merge coplanar triangles: same unit normal and offset.
  std::vector<std::pair<Quaternion, double>> planes;
  std::vector<std::set<int>> members;
  for (const auto& t : tris) {
    if (norm(t.n) < 0.5) continue;  // zero-area sliver
    std::size_t slot = planes.size();
    for (std::size_t i = 0; i < planes.size(); ++i) {
      if (max_abs_diff(planes[i].first, t.n) <= kMeshTol &&
          std::abs(planes[i].second - t.d) <= kMeshTol * scale) {
        slot = i;
        break;
      }
    }
    if (slot == planes.size()) {
      planes.push_back({t.n, t.d});
      members.emplace_back();
    }
    members[slot].insert({t.a, t.b, t.c});
  }

  std::vector<std::pair<std::vector<int>, Quaternion>> groups;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    groups.push_back({std::vector<int>(members[i].begin(), members[i].end()), planes[i].first});
  }
  return assemble(std::move(verts), groups);
}

Polyhedron build_mesh_from_normals(std::span<const Quaternion> points,
                                   std::span<const Quaternion> candidate_normals) {
  std::vector<Quaternion> verts = canonical_order(points);
  if (verts.size() < 4) throw MeshError("mesh needs at least 4 distinct points");
  double scale = 0.0;
  for (const auto& v : verts) scale = std::max(scale, norm(v));

  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, Quaternion>> groups;
  for (const auto& cand : candidate_normals) {
    const double len = norm(cand.vector_part());
    if (len <= kDedupTol) continue;
    const Quaternion n = cand.vector_part() / len;
    double h = -1e300;
    for (const auto& v : verts) h = std::max(h, dot(v, n));
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      if (dot(verts[i], n) >= h - kMeshTol * scale) idx.push_back(i);
    }
    if (idx.size() < 3 || !seen.insert(idx).second) continue;
    groups.push_back({idx, n});
  }
  if (groups.size() < 4) throw MeshError("candidate normals yield fewer than 4 faces");
  Polyhedron p = assemble(std::move(verts), groups);
  if (euler_characteristic(p) != 2) throw MeshError("supporting-plane faces do not close the surface");
  return p;
}

Polyhedron build_symmetric_mesh(std::span<const Quaternion> points, Diagram diagram) {
  const WeylGroup& w = weyl_group(diagram);
  std::vector<Quaternion> normals;
  for (int i = 1; i <= 3; ++i) {
    for (const auto& v : orbit(w, fundamental_vector(diagram, i)).vectors) {
      normals.push_back(v);
      normals.push_back(-v);
    }
  }
  try {
    Polyhedron p = build_mesh_from_normals(points, normals);
    if (check_mesh(p).ok()) return p;
  } catch (const MeshError&) {
  }
  return build_mesh(points);
}

int euler_characteristic(const Polyhedron& p) {
  return p.num_vertices() - p.num_edges() + p.num_faces();
}

MeshCheck check_mesh(const Polyhedron& p) {
  MeshCheck c;
  const double r = p.circumradius();
  c.euler = euler_characteristic(p) == 2;

  Quaternion center;
  for (const auto& v : p.vertices) center += v;
  center /= static_cast<double>(std::max<std::size_t>(1, p.vertices.size()));

  c.outward = p.face_normals.size() == p.faces.size();
  for (std::size_t f = 0; f < p.faces.size() && c.outward; ++f) {
    const Quaternion& n = p.face_normals[f];
    const Quaternion& anchor = p.vertices[p.faces[f][0]];
    const double d = dot(n, anchor);
    for (int i : p.faces[f]) {
      c.max_plane_deviation = std::max(c.max_plane_deviation, std::abs(dot(n, p.vertices[i]) - d));
    }
    for (const auto& v : p.vertices) {
      c.max_convexity_violation = std::max(c.max_convexity_violation, dot(n, v) - d);
    }
    if (dot(n, anchor - center) <= 0.0) c.outward = false;
  }
  c.planar = c.max_plane_deviation <= kMeshTol * r;
  c.convex = c.max_convexity_violation <= kMeshTol * r;

  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : p.faces) {
    for (std::size_t k = 0; k < f.size(); ++k) ++directed[{f[k], f[(k + 1) % f.size()]}];
  }
  c.manifold = true;
  for (const auto& [e, count] : directed) {
    if (count != 1 || directed.count({e.second, e.first}) != 1) c.manifold = false;
  }
  c.manifold = c.manifold && directed.size() == 2 * p.edges.size();
  return c;
}

namespace {

bool near(double a, double b, double scale) { return std::abs(a - b) <= 1e-9 * scale; }

std::string ngon_name(std::size_t n) {
  switch (n) {
    case 5: return "pentagon";
    case 6: return "hexagon";
    case 8: return "octagon";
    case 10: return "decagon";
    default: return std::to_string(n) + "-gon";
  }
}

}  // namespace

std::string polygon_type(const Polyhedron& p, int face) {
  const auto& f = p.faces[face];
  const std::size_t n = f.size();
  std::vector<double> side(n);
  double scale = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    side[k] = norm(p.vertices[f[k]] - p.vertices[f[(k + 1) % n]]);
    scale = std::max(scale, side[k]);
  }
  const bool equal_sides =
      std::all_of(side.begin(), side.end(), [&](double s) { return near(s, side[0], scale); });

  if (n == 3) {
    if (equal_sides) return "equilateral triangle";
    if (near(side[0], side[1], scale) || near(side[1], side[2], scale) || near(side[0], side[2], scale)) {
      return "isosceles triangle";
    }
    return "scalene triangle";
  }
  if (n == 4) {
    const double d0 = norm(p.vertices[f[0]] - p.vertices[f[2]]);
    const double d1 = norm(p.vertices[f[1]] - p.vertices[f[3]]);
    const bool equal_diagonals = near(d0, d1, scale);
    if (equal_sides) return equal_diagonals ? "square" : "rhombus";
    if (near(side[0], side[2], scale) && near(side[1], side[3], scale)) {
      return equal_diagonals ? "rectangle" : "parallelogram";
    }
    if ((near(side[0], side[1], scale) && near(side[2], side[3], scale)) ||
        (near(side[1], side[2], scale) && near(side[3], side[0], scale))) {
      return "kite";
    }
    return "quadrilateral";
  }
  const Quaternion c = p.face_centroid(face);
  const double r0 = norm(p.vertices[f[0]] - c);
  const bool equal_radii =
      std::all_of(f.begin(), f.end(), [&](int i) { return near(norm(p.vertices[i] - c), r0, scale); });
  return (equal_sides && equal_radii ? "regular " : "") + ngon_name(n);
}

namespace {

// perms[g][i] = index of g(vertex i).
std::vector<std::vector<int>> vertex_permutations(const WeylGroup& w, const Polyhedron& p) {
  const double tol = 1e-8 * std::max(1.0, p.circumradius());
  std::vector<std::vector<int>> perms(w.size(), std::vector<int>(p.vertices.size()));
  for (std::size_t g = 0; g < w.size(); ++g) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      const auto j = find_point(p.vertices, w.act(g, p.vertices[i]), tol);
      if (!j) throw SymmetryError("vertex set is not invariant under W(" + std::string(to_string(w.diagram())) + ")");
      perms[g][i] = static_cast<int>(*j);
    }
  }
  return perms;
}

// Generic orbit partition of items given as sorted index keys.
std::vector<std::vector<int>> partition(const std::vector<std::vector<int>>& keys,
                                        const std::vector<std::vector<int>>& perms) {
  std::map<std::vector<int>, int> lookup;
  for (std::size_t i = 0; i < keys.size(); ++i) lookup[keys[i]] = static_cast<int>(i);
  std::vector<int> cls(keys.size(), -1);
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.emplace_back();
    for (const auto& perm : perms) {
      std::vector<int> img;
      for (int v : keys[i]) img.push_back(perm[v]);
      std::sort(img.begin(), img.end());
      const auto it = lookup.find(img);
      if (it == lookup.end()) throw SymmetryError("combinatorial structure is not invariant under the group");
      if (cls[it->second] < 0) {
        cls[it->second] = id;
        classes[id].push_back(it->second);
      }
    }
  }
  return classes;
}

}  // namespace

std::vector<FaceClass> face_classes(const WeylGroup& w, const Polyhedron& p) {
  const auto perms = vertex_permutations(w, p);
  std::vector<std::vector<int>> keys;
  for (auto f : p.faces) {
    std::sort(f.begin(), f.end());
    keys.push_back(std::move(f));
  }
  std::vector<FaceClass> out;
  for (const auto& cls : partition(keys, perms)) {
    out.push_back({static_cast<int>(cls.size()), polygon_type(p, *std::min_element(cls.begin(), cls.end()))});
  }
  return out;
}

std::vector<EdgeClass> edge_classes(const WeylGroup& w, const Polyhedron& p) {
  const auto perms = vertex_permutations(w, p);
  std::vector<std::vector<int>> keys;
  for (const auto& e : p.edges) keys.push_back({e[0], e[1]});
  std::vector<EdgeClass> out;
  for (const auto& cls : partition(keys, perms)) {
    out.push_back({static_cast<int>(cls.size()), p.edge_length(*std::min_element(cls.begin(), cls.end()))});
  }
  return out;
}

std::vector<int> vertex_classes(const WeylGroup& w, const Polyhedron& p) {
  const auto perms = vertex_permutations(w, p);
  std::vector<std::vector<int>> keys;
  for (int i = 0; i < p.num_vertices(); ++i) keys.push_back({i});
  std::vector<int> out;
  for (const auto& cls : partition(keys, perms)) out.push_back(static_cast<int>(cls.size()));
  return out;
}

std::vector<Quaternion> polar_dual_vertices(const Polyhedron& p) {
  std::vector<Quaternion> out;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const Quaternion& n = p.face_normals[f];
    const double d = dot(n, p.vertices[p.faces[f][0]]);
    if (d <= kMeshTol * p.circumradius()) throw MeshError("polar reciprocation needs the origin strictly inside");
    out.push_back(n / d);
  }
  return out;
}

bool same_up_to_scale(std::span<const Quaternion> a, std::span<const Quaternion> b, double tol, double* scale) {
  if (a.empty() || a.size() != b.size()) return false;
  double ra = 0.0, rb = 0.0;
  for (const auto& v : a) ra = std::max(ra, norm(v));
  for (const auto& v : b) rb = std::max(rb, norm(v));
  if (ra <= 0.0 || rb <= 0.0) return false;
  const double k = rb / ra;
  if (scale) *scale = k;
  std::vector<Quaternion> scaled;
  for (const auto& v : a) scaled.push_back(v * k);
  return same_point_set(scaled, b, tol * rb);
}

}  // namespace qpoly
