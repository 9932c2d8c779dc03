#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qpoly/catalan.hpp"
#include "qpoly/error.hpp"
#include "qpoly/orbits.hpp"
#include "support.hpp"

namespace qpoly {
namespace {

using testing::sigma;
using testing::tau;
using testing::v3;

Polyhedron orbit_mesh(std::string_view name) { return build_mesh(named_solid(name).second.vectors); }

std::multiset<int> orbits_of(const std::vector<FaceCenter>& fc) {
  std::multiset<int> out;
  for (const auto& f : fc) out.insert(f.orbit);
  return out;
}

TEST(IncidentFaces, Cuboctahedron) {
  const auto fc = incident_face_centers(orbit_mesh("cuboctahedron"), Diagram::B3, v3(1, 1, 0));
  EXPECT_EQ(orbits_of(fc), (std::multiset<int>{1, 1, 3, 3}));
}

TEST(IncidentFaces, GreatRhombicuboctahedron) {
  const Quaternion q = weight_vector({Diagram::B3, 1, 1, 1});
  const auto fc = incident_face_centers(orbit_mesh("great-rhombicuboctahedron"), Diagram::B3, q);
  ASSERT_EQ(fc.size(), 3u);
  EXPECT_EQ(orbits_of(fc), (std::multiset<int>{1, 2, 3}));
  for (const auto& f : fc) {
    EXPECT_LT(angle_between(f.centroid, f.direction), 1e-9);
  }
}

TEST(IncidentFaces, Errors) {
  const auto p = orbit_mesh("cuboctahedron");
  EXPECT_THROW(incident_face_centers(p, Diagram::B3, v3(1, 0, 0)), LookupError);
  // The triakis tetrahedron's face centers are not along fundamental directions.
  const auto tt = dual("truncated-tetrahedron").catalan;
  EXPECT_THROW(incident_face_centers(tt, Diagram::A3, tt.vertices[0]), ClassificationError);
}

TEST(SolveScale, Examples) {
  const Quaternion e1 = v3(1, 0, 0);
  EXPECT_NEAR(solve_scale(v3(1, 1, 1), e1, v3(1, 1, 0)), 0.5, 1e-15);
  EXPECT_NEAR(solve_scale(v3(0.5, 0.5, 0.5), v3(0.5, -0.5, 0.5), v3(0.5, 0.5, 1.5)), 0.6, 1e-15);
  EXPECT_THROW(solve_scale(v3(0, 0, 1), e1, v3(1, 0, 0)), SingularConfigurationError);
  EXPECT_THROW(solve_scale(v3(-1, 0, 0), e1, v3(1, 0, 0)), SingularConfigurationError);
}

TEST(Dual, RhombicDodecahedron) {
  const auto r = dual("cuboctahedron");
  EXPECT_EQ(r.report.name, "rhombic-dodecahedron");
  EXPECT_EQ(r.catalan.num_vertices(), 14);
  EXPECT_EQ(r.catalan.num_edges(), 24);
  EXPECT_EQ(r.catalan.num_faces(), 12);
  ASSERT_TRUE(r.report.lambda);
  EXPECT_NEAR(*r.report.lambda, 0.5, 1e-12);
  EXPECT_NEAR(r.report.dihedral_deg, 120.0, 1e-9);
  EXPECT_TRUE(same_point_set(r.catalan.vertices,
                             testing::concat(testing::all_perm_signs(1, 0, 0), testing::signs(0.5, 0.5, 0.5))));
}

TEST(Dual, TriakisTetrahedronScale) {
  const auto r = dual("truncated-tetrahedron");
  EXPECT_NEAR(*r.report.lambda, 0.6, 1e-12);
  EXPECT_EQ(r.catalan.num_vertices(), 8);
  EXPECT_EQ(r.catalan.num_faces(), 12);
  EXPECT_EQ(to_dms(r.report.dihedral_deg).degrees, 129);
}

TEST(Dual, PentakisDodecahedronVertices) {
  const auto r = dual("truncated-icosahedron");
  EXPECT_NEAR(*r.report.lambda, 3 * tau / (sigma + 4), 1e-12);
  EXPECT_TRUE(same_point_set(r.catalan.vertices, testing::printed::pentakis_dodecahedron()));
}

TEST(Dual, DisdyakisTriacontahedronScales) {
  const auto r = dual("great-rhombicosidodecahedron");
  EXPECT_NEAR(*r.report.lambda, (tau + 3) / 5, 1e-12);
  EXPECT_NEAR(*r.report.eta, (2 * sigma + 3) / 3, 1e-12);
  EXPECT_EQ(r.catalan.num_vertices(), 62);
  EXPECT_EQ(r.catalan.num_edges(), 180);
  EXPECT_EQ(r.catalan.num_faces(), 120);
}

TEST(Dual, FacesOrthogonalToArchimedeanVertices) {
  for (const auto& spec : catalan_registry()) {
    const auto r = dual(spec.archimedean);
    ASSERT_EQ(r.catalan.num_faces(), r.archimedean.num_vertices()) << spec.name;
    std::vector<Quaternion> normals = r.catalan.face_normals;
    std::vector<Quaternion> dirs;
    for (const auto& v : r.archimedean.vertices) dirs.push_back(normalized(v));
    EXPECT_TRUE(same_point_set(normals, dirs, 1e-9)) << spec.name;
  }
}

TEST(Dual, GoldenRhombus) {
  const auto r = dual("icosidodecahedron");
  for (int f = 0; f < r.catalan.num_faces(); ++f) {
    const auto& face = r.catalan.faces[f];
    ASSERT_EQ(face.size(), 4u);
    const double d1 = norm(r.catalan.vertices[face[0]] - r.catalan.vertices[face[2]]);
    const double d2 = norm(r.catalan.vertices[face[1]] - r.catalan.vertices[face[3]]);
    EXPECT_NEAR(std::max(d1, d2) / std::min(d1, d2), tau, 1e-9);
  }
}

TEST(Dual, ScaleInvariance) {
  const auto& spec = find_catalan("disdyakis-dodecahedron");
  const auto arch = named_solid(spec.archimedean);
  const Quaternion q = weight_vector(arch.first);
  const auto base = dual_from_orbit(spec, Diagram::B3, arch.second.vectors, q);
  const auto big = dual_from_orbit(spec, Diagram::B3, testing::scaled(arch.second.vectors, 3.7), q * 3.7);
  EXPECT_NEAR(*base.report.lambda, *big.report.lambda, 1e-12);
  EXPECT_NEAR(*base.report.eta, *big.report.eta, 1e-12);
  EXPECT_NEAR(base.report.dihedral_deg, big.report.dihedral_deg, 1e-9);
}

TEST(Dual, UnknownArchimedean) {
  EXPECT_THROW(dual("snub-cube"), LookupError);
  EXPECT_THROW(dual("cube"), LookupError);
  EXPECT_THROW(find_catalan("pentagonal-icositetrahedron"), LookupError);
}

TEST(Dual, FaceShapeFollowsStabilizer) {
  const std::pair<const char*, const char*> expected[] = {
      {"cuboctahedron", "rhombus"},
      {"truncated-octahedron", "isosceles triangle"},
      {"small-rhombicuboctahedron", "kite"},
      {"great-rhombicuboctahedron", "scalene triangle"},
      {"small-rhombicosidodecahedron", "kite"},
      {"great-rhombicosidodecahedron", "scalene triangle"},
  };
  for (const auto& [arch, polygon] : expected) {
    const auto r = dual(arch);
    for (int f = 0; f < r.catalan.num_faces(); ++f) EXPECT_EQ(polygon_type(r.catalan, f), polygon) << arch;
  }
}

TEST(Dihedral, SupplementOfVertexAngle) {
  const auto r = dual("truncated-octahedron");
  const auto& e = r.archimedean.edges.front();
  const double expect =
      180.0 - angle_between(r.archimedean.vertices[e[0]], r.archimedean.vertices[e[1]]) * 180.0 / M_PI;
  EXPECT_NEAR(dihedral_angle(r.archimedean, r.catalan), expect, 1e-9);
  EXPECT_EQ(format_dms(r.report.dihedral_deg, true), "143°7′48″");
}

TEST(Dihedral, MismatchedPairThrows) {
  const auto a = dual("truncated-octahedron");
  const auto b = dual("truncated-cube");
  EXPECT_THROW(dihedral_angle(a.archimedean, b.catalan), DualityViolationError);
}

TEST(Radii, TriakisOctahedron) {
  const auto r = dual("truncated-cube");
  std::vector<std::pair<int, double>> got;
  for (const auto& o : r.report.radii) got.push_back({o.count, o.radius});
  std::sort(got.begin(), got.end());
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].first, 6);
  EXPECT_NEAR(got[0].second, 1.0, 1e-12);
  EXPECT_EQ(got[1].first, 8);
  EXPECT_NEAR(got[1].second, (kSqrt2 - 1) * std::sqrt(3.0), 1e-12);
}

TEST(Dms, FormattingAndCarry) {
  EXPECT_EQ(format_dms(120.0, true), "120°0′0″");
  EXPECT_EQ(format_dms(120.0, false), "120d 0m 0s");
  const Dms d = to_dms(29.999999);
  EXPECT_EQ(d.degrees, 30);
  EXPECT_EQ(d.minutes, 0);
  EXPECT_EQ(d.seconds, 0);
  EXPECT_EQ(format_dms(10.5 + 30.4 / 3600.0, true), "10°30′30″");
}

}  // namespace
}  // namespace qpoly
