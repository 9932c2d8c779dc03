#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpoly/mesh.hpp"

namespace qpoly {

// Coordinates are printed with %.12g; values below 5e-13 print as 0.
std::string format_coordinate(double v);

/// OFF text: "OFF", "V F E", vertex lines, then "n i0 ... i(n-1)" faces.
/// Returns the number of bytes written.
std::size_t export_off(const Polyhedron& p, std::ostream& out);
std::size_t export_off(const Polyhedron& p, const std::filesystem::path& destination);

/// Wavefront OBJ: "v x y z" lines then "f" lines with 1-based indices.
std::size_t export_obj(const Polyhedron& p, std::ostream& out);
std::size_t export_obj(const Polyhedron& p, const std::filesystem::path& destination);

/// Parses OFF text (with optional '#' comments). Throws IoError on malformed
/// input and MeshError if the faces do not form a closed surface.
Polyhedron read_off(std::istream& in);

struct RadiusEntry {
  std::string label;
  double radius = 0.0;
  int count = 0;
  bool operator==(const RadiusEntry&) const = default;
};

struct FaceClassEntry {
  int size = 0;
  std::string polygon;
  bool operator==(const FaceClassEntry&) const = default;
};

struct EdgeClassEntry {
  int size = 0;
  double length = 0.0;
  bool operator==(const EdgeClassEntry&) const = default;
};

/// Machine-readable summary of one solid. Real values are held at 12
/// significant digits so the JSON form round-trips exactly.
struct ReportDocument {
  std::string name;
  std::string kind;
  std::string diagram;
  std::optional<std::string> weight;
  std::optional<std::string> archimedean;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  std::vector<RadiusEntry> radii;
  std::map<std::string, double> scale_factors;
  std::optional<double> lambda;
  std::optional<double> eta;
  std::optional<double> dihedral_deg;
  std::optional<std::string> dihedral_dms;
  std::vector<FaceClassEntry> face_classes;
  std::vector<EdgeClassEntry> edge_classes;
  std::vector<int> vertex_classes;
  std::map<std::string, bool> checks;

  bool passed() const;
  bool operator==(const ReportDocument&) const = default;
};

double round_significant(double v, int digits = 12);

// Rounds every real field to 12 significant digits.
ReportDocument normalized(ReportDocument doc);

// Key-sorted, 2-space indented JSON.
std::string to_json(const ReportDocument& doc);
ReportDocument report_from_json(const std::string& text);

// {"faces": [...], "name": ..., "report": {...}, "vertices": [[x, y, z], ...]}
std::string mesh_to_json(const Polyhedron& p, const ReportDocument& doc);

}  // namespace qpoly
