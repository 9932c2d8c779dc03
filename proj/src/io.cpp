#include "qpoly/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qpoly/error.hpp"

namespace qpoly {

using nlohmann::json;

std::string format_coordinate(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

void write_vertex(std::ostream& out, const char* prefix, const Quaternion& v) {
  out << prefix << format_coordinate(v.x) << ' ' << format_coordinate(v.y) << ' ' << format_coordinate(v.z)
      << '\n';
}

std::string off_text(const Polyhedron& p) {
  std::ostringstream s;
  s << "OFF\n" << p.num_vertices() << ' ' << p.num_faces() << ' ' << p.num_edges() << '\n';
  for (const auto& v : p.vertices) write_vertex(s, "", v);
  for (const auto& f : p.faces) {
    s << f.size();
    for (int i : f) s << ' ' << i;
    s << '\n';
  }
  return s.str();
}

std::string obj_text(const Polyhedron& p) {
  std::ostringstream s;
  for (const auto& v : p.vertices) write_vertex(s, "v ", v);
  for (const auto& f : p.faces) {
    s << 'f';
    for (int i : f) s << ' ' << i + 1;
    s << '\n';
  }
  return s.str();
}

std::size_t write_stream(std::ostream& out, const std::string& text) {
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed");
  return text.size();
}

std::size_t write_file(const std::filesystem::path& destination, const std::string& text) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + destination.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("write failed for " + destination.string());
  return text.size();
}

}  // namespace

std::size_t export_off(const Polyhedron& p, std::ostream& out) { return write_stream(out, off_text(p)); }
std::size_t export_off(const Polyhedron& p, const std::filesystem::path& destination) {
  return write_file(destination, off_text(p));
}
std::size_t export_obj(const Polyhedron& p, std::ostream& out) { return write_stream(out, obj_text(p)); }
std::size_t export_obj(const Polyhedron& p, const std::filesystem::path& destination) {
  return write_file(destination, obj_text(p));
}

Polyhedron read_off(std::istream& in) {
  // Strip comments, then read whitespace-separated tokens.
  std::string line, body;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    body += line + '\n';
  }
  std::istringstream tok(body);
  std::string magic;
  if (!(tok >> magic) || magic != "OFF") throw IoError("missing OFF header");
  long nv = 0, nf = 0, ne = 0;
  if (!(tok >> nv >> nf >> ne) || nv < 0 || nf < 0) throw IoError("bad OFF count line");

  std::vector<Quaternion> verts(static_cast<std::size_t>(nv));
  for (auto& v : verts) {
    if (!(tok >> v.x >> v.y >> v.z)) throw IoError("truncated OFF vertex list");
  }
  std::vector<std::vector<int>> faces(static_cast<std::size_t>(nf));
  for (auto& f : faces) {
    long n = 0;
    if (!(tok >> n) || n < 3) throw IoError("bad OFF face");
    f.resize(static_cast<std::size_t>(n));
    for (auto& i : f) {
      if (!(tok >> i)) throw IoError("truncated OFF face");
    }
  }
  Polyhedron p = polyhedron_from_faces(std::move(verts), std::move(faces));
  if (ne != 0 && ne != p.num_edges()) throw IoError("OFF edge count does not match faces");
  return p;
}

bool ReportDocument::passed() const {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

double round_significant(double v, int digits) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

ReportDocument normalized(ReportDocument doc) {
  for (auto& r : doc.radii) r.radius = round_significant(r.radius);
  for (auto& [k, v] : doc.scale_factors) v = round_significant(v);
  for (auto& e : doc.edge_classes) e.length = round_significant(e.length);
  if (doc.lambda) doc.lambda = round_significant(*doc.lambda);
  if (doc.eta) doc.eta = round_significant(*doc.eta);
  if (doc.dihedral_deg) doc.dihedral_deg = round_significant(*doc.dihedral_deg);
  return doc;
}

namespace {

json to_json_value(const ReportDocument& raw) {
  const ReportDocument d = normalized(raw);
  json j;
  j["name"] = d.name;
  j["kind"] = d.kind;
  j["diagram"] = d.diagram;
  if (d.weight) j["weight"] = *d.weight;
  if (d.archimedean) j["archimedean"] = *d.archimedean;
  j["counts"] = {{"V", d.vertices}, {"E", d.edges}, {"F", d.faces}};
  j["radii"] = json::array();
  for (const auto& r : d.radii) j["radii"].push_back({{"orbit", r.label}, {"radius", r.radius}, {"count", r.count}});
  j["scale_factors"] = d.scale_factors;
  if (d.lambda) j["lambda"] = *d.lambda;
  if (d.eta) j["eta"] = *d.eta;
  if (d.dihedral_deg) j["dihedral_deg"] = *d.dihedral_deg;
  if (d.dihedral_dms) j["dihedral_dms"] = *d.dihedral_dms;
  j["face_classes"] = json::array();
  for (const auto& f : d.face_classes) j["face_classes"].push_back({{"size", f.size}, {"polygon", f.polygon}});
  j["edge_classes"] = json::array();
  for (const auto& e : d.edge_classes) j["edge_classes"].push_back({{"size", e.size}, {"length", e.length}});
  j["vertex_classes"] = d.vertex_classes;
  j["checks"] = d.checks;
  return j;
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string to_json(const ReportDocument& doc) { return to_json_value(doc).dump(2) + "\n"; }

ReportDocument report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    ReportDocument d;
    d.name = j.at("name").get<std::string>();
    d.kind = j.at("kind").get<std::string>();
    d.diagram = j.at("diagram").get<std::string>();
    d.weight = optional_field<std::string>(j, "weight");
    d.archimedean = optional_field<std::string>(j, "archimedean");
    d.vertices = j.at("counts").at("V").get<int>();
    d.edges = j.at("counts").at("E").get<int>();
    d.faces = j.at("counts").at("F").get<int>();
    for (const auto& r : j.at("radii")) {
      d.radii.push_back({r.at("orbit").get<std::string>(), r.at("radius").get<double>(), r.at("count").get<int>()});
    }
    d.scale_factors = j.at("scale_factors").get<std::map<std::string, double>>();
    d.lambda = optional_field<double>(j, "lambda");
    d.eta = optional_field<double>(j, "eta");
    d.dihedral_deg = optional_field<double>(j, "dihedral_deg");
    d.dihedral_dms = optional_field<std::string>(j, "dihedral_dms");
    for (const auto& f : j.at("face_classes")) {
      d.face_classes.push_back({f.at("size").get<int>(), f.at("polygon").get<std::string>()});
    }
    for (const auto& e : j.at("edge_classes")) {
      d.edge_classes.push_back({e.at("size").get<int>(), e.at("length").get<double>()});
    }
    d.vertex_classes = j.at("vertex_classes").get<std::vector<int>>();
    d.checks = j.at("checks").get<std::map<std::string, bool>>();
    return d;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string mesh_to_json(const Polyhedron& p, const ReportDocument& doc) {
  json j;
  j["name"] = doc.name;
  j["vertices"] = json::array();
  for (const auto& v : p.vertices) {
    auto clean = [](double c) { return std::abs(c) < 5e-13 ? 0.0 : round_significant(c); };
    j["vertices"].push_back({clean(v.x), clean(v.y), clean(v.z)});
  }
  j["faces"] = p.faces;
  j["report"] = to_json_value(doc);
  return j.dump(2) + "\n";
}

}  // namespace qpoly
