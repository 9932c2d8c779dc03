#include "qpoly/orbits.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "qpoly/error.hpp"

namespace qpoly {

namespace {

std::string coefficient(double a) {
  if (a == 0.0) return "0";
  if (a == 1.0) return "1";
  char buf[32];
  std::snprintf(buf, sizeof buf, "[%g]", a);
  return buf;
}

}  // namespace

std::string weight_label(const Weight& w) {
  return "(" + coefficient(w.a1) + coefficient(w.a2) + coefficient(w.a3) + ")";
}

Quaternion fundamental_vector(Diagram diagram, int index) {
  if (index < 1 || index > 3) throw DomainError("fundamental weight index must be 1, 2 or 3");
  Weight w{diagram, 0, 0, 0};
  (index == 1 ? w.a1 : index == 2 ? w.a2 : w.a3) = 1.0;
  return weight_vector(w);
}

Quaternion weight_vector(const Weight& w) {
  for (double a : {w.a1, w.a2, w.a3}) {
    if (!std::isfinite(a) || a < 0.0) throw DomainError("highest weight coefficients must be non-negative");
  }
  switch (w.diagram) {
    case Diagram::A3:
      return Quaternion::pure(0.5 * (w.a1 - w.a3), 0.5 * (w.a1 + w.a3), 0.5 * (w.a1 + 2 * w.a2 + w.a3));
    case Diagram::B3: {
      const double c = w.a3 * kInvSqrt2;
      return Quaternion::pure(w.a1 + w.a2 + c, w.a2 + c, c);
    }
    case Diagram::H3: {
      const Quaternion w1 = Quaternion::pure(-kSigma / 2, 0, kTau / 2);
      const Quaternion w2 = Quaternion::pure(0, 0, 1);
      const Quaternion w3 = Quaternion::pure(0, -kSigma / 2, 0.5);
      return w.a1 * w1 + w.a2 * w2 + w.a3 * w3;
    }
  }
  throw DomainError("unknown diagram");
}

std::optional<std::size_t> find_point(std::span<const Quaternion> set, const Quaternion& q, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (approx_equal(set[i], q, tol)) return i;
  }
  return std::nullopt;
}

bool same_point_set(std::span<const Quaternion> a, std::span<const Quaternion> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool matched = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!used[i] && approx_equal(p, b[i], tol)) {
        used[i] = matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Orbit orbit(const WeylGroup& w, const Quaternion& v) {
  Orbit out;
  const Quaternion start = v.vector_part();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Quaternion img = w.act(i, start);
    if (!find_point(out.vectors, img)) out.vectors.push_back(img);
    if (approx_equal(img, start)) ++out.stabilizer_order;
  }
  return out;
}

Orbit orbit(const Weight& weight) {
  Orbit out = orbit(weyl_group(weight.diagram), weight_vector(weight));
  out.source = weight;
  return out;
}

std::string_view to_string(SolidKind k) {
  switch (k) {
    case SolidKind::Platonic: return "platonic";
    case SolidKind::Archimedean: return "archimedean";
    case SolidKind::Catalan: return "catalan";
  }
  return "?";
}

std::span<const NamedSolid> solid_registry() {
  using D = Diagram;
  using K = SolidKind;
  static const std::array<NamedSolid, 17> registry = {{
      {"tetrahedron", K::Platonic, {D::A3, 1, 0, 0}, 4},
      {"dual-tetrahedron", K::Platonic, {D::A3, 0, 0, 1}, 4},
      {"truncated-tetrahedron", K::Archimedean, {D::A3, 1, 1, 0}, 12},
      {"octahedron", K::Platonic, {D::B3, 1, 0, 0}, 6},
      {"cube", K::Platonic, {D::B3, 0, 0, 1}, 8},
      {"cuboctahedron", K::Archimedean, {D::B3, 0, 1, 0}, 12},
      {"truncated-octahedron", K::Archimedean, {D::B3, 1, 1, 0}, 24},
      {"truncated-cube", K::Archimedean, {D::B3, 0, 1, 1}, 24},
      {"small-rhombicuboctahedron", K::Archimedean, {D::B3, 1, 0, 1}, 24},
      {"great-rhombicuboctahedron", K::Archimedean, {D::B3, 1, 1, 1}, 48},
      {"dodecahedron", K::Platonic, {D::H3, 1, 0, 0}, 20},
      {"icosahedron", K::Platonic, {D::H3, 0, 0, 1}, 12},
      {"icosidodecahedron", K::Archimedean, {D::H3, 0, 1, 0}, 30},
      {"truncated-dodecahedron", K::Archimedean, {D::H3, 1, 1, 0}, 60},
      {"truncated-icosahedron", K::Archimedean, {D::H3, 0, 1, 1}, 60},
      {"small-rhombicosidodecahedron", K::Archimedean, {D::H3, 1, 0, 1}, 60},
      {"great-rhombicosidodecahedron", K::Archimedean, {D::H3, 1, 1, 1}, 120},
  }};
  return registry;
}

const NamedSolid& find_solid(std::string_view name) {
  for (const auto& s : solid_registry()) {
    if (s.name == name) return s;
  }
  std::string msg = "unknown solid '" + std::string(name) + "'; valid names:";
  for (const auto& s : solid_registry()) msg += " " + s.name;
  throw LookupError(msg);
}

std::pair<Weight, Orbit> named_solid(std::string_view name) {
  const NamedSolid& s = find_solid(name);
  return {s.weight, orbit(s.weight)};
}

}  // namespace qpoly
