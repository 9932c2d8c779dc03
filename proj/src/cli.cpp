#include "qpoly/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpoly/catalan.hpp"
#include "qpoly/error.hpp"
#include "qpoly/orbits.hpp"

namespace qpoly {

namespace {

std::vector<std::string> all_known_names() {
  std::vector<std::string> names;
  for (const auto& s : solid_registry()) names.push_back(s.name);
  for (const auto& c : catalan_registry()) names.push_back(c.name);
  return names;
}

const CatalanSpec* catalan_by_name(std::string_view name) {
  for (const auto& c : catalan_registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

bool lengths_equal(const std::vector<EdgeClass>& classes) {
  return std::all_of(classes.begin(), classes.end(), [&](const EdgeClass& e) {
    return std::abs(e.length - classes.front().length) <= 1e-9;
  });
}

void record_mesh(ReportDocument& doc, const Polyhedron& p, const WeylGroup& w) {
  doc.vertices = p.num_vertices();
  doc.edges = p.num_edges();
  doc.faces = p.num_faces();
  const MeshCheck mc = check_mesh(p);
  doc.checks["euler"] = mc.euler;
  doc.checks["planar"] = mc.planar;
  doc.checks["convex"] = mc.convex;
  doc.checks["manifold"] = mc.manifold;
  doc.checks["outward"] = mc.outward;
  for (const auto& f : face_classes(w, p)) doc.face_classes.push_back({f.size, f.polygon});
  for (const auto& e : edge_classes(w, p)) doc.edge_classes.push_back({e.size, e.length});
  doc.vertex_classes = vertex_classes(w, p);
}

bool same_faces(const Polyhedron& a, const Polyhedron& b) {
  return same_point_set(a.vertices, b.vertices) && a.faces == b.faces;
}

ReportDocument verify_orbit_solid(const NamedSolid& s) {
  ReportDocument doc;
  doc.name = s.name;
  doc.kind = std::string(to_string(s.kind));
  doc.diagram = std::string(to_string(s.weight.diagram));
  doc.weight = weight_label(s.weight);

  const WeylGroup& w = weyl_group(s.weight.diagram);
  const Orbit orb = orbit(s.weight);
  doc.checks["orbit_size"] = static_cast<int>(orb.vectors.size()) == s.orbit_size;
  doc.checks["orbit_stabilizer"] = orb.vectors.size() * static_cast<std::size_t>(orb.stabilizer_order) == w.size();
  const double r0 = norm(orb.vectors.front());
  doc.checks["orbit_norm_constant"] = std::all_of(orb.vectors.begin(), orb.vectors.end(),
                                                  [&](const Quaternion& v) { return std::abs(norm(v) - r0) <= 1e-9; });
  doc.radii.push_back({*doc.weight, r0, static_cast<int>(orb.vectors.size())});

  const Polyhedron p = build_symmetric_mesh(orb.vectors, s.weight.diagram);
  record_mesh(doc, p, w);
  std::vector<EdgeClass> ec;
  for (const auto& e : doc.edge_classes) ec.push_back({e.size, e.length});
  doc.checks["uniform_edges"] = lengths_equal(ec);
  doc.checks["vertex_transitive"] = doc.vertex_classes.size() == 1;
  doc.checks["hull_agrees"] = same_faces(p, build_mesh(orb.vectors));
  return doc;
}

ReportDocument verify_catalan(const CatalanSpec& spec) {
  ReportDocument doc;
  doc.name = spec.name;
  doc.kind = std::string(to_string(SolidKind::Catalan));
  doc.archimedean = spec.archimedean;
  const Diagram diagram = find_solid(spec.archimedean).weight.diagram;
  doc.diagram = std::string(to_string(diagram));

  DualResult res;
  try {
    res = dual(spec.archimedean);
  } catch (const Error& e) {
    doc.checks["construction"] = false;
    return doc;
  }
  doc.checks["construction"] = true;
  const DualReport& r = res.report;
  for (const auto& o : r.radii) doc.radii.push_back({o.label, o.radius, o.count});
  for (const auto& [label, v] : r.scale_factors) doc.scale_factors[label] = v;
  doc.lambda = r.lambda;
  doc.eta = r.eta;
  doc.dihedral_deg = r.dihedral_deg;
  doc.dihedral_dms = format_dms(r.dihedral_deg, false);

  const WeylGroup& w = weyl_group(diagram);
  record_mesh(doc, res.catalan, w);
  const Polyhedron& a = res.archimedean;
  doc.checks["counts_dual"] = r.vertices == a.num_faces() && r.faces == a.num_vertices() && r.edges == a.num_edges();
  doc.checks["face_transitive"] = doc.face_classes.size() == 1;

  bool oracle = false;
  try {
    const Polyhedron hull = build_mesh(a.vertices);
    oracle = same_up_to_scale(polar_dual_vertices(hull), res.catalan.vertices, 1e-8);
  } catch (const Error&) {
  }
  doc.checks["polar_oracle"] = oracle;
  return doc;
}

std::string describe(const Polyhedron& p, const ReportDocument& doc, const std::string& format) {
  std::ostringstream s;
  if (format == "off") {
    export_off(p, s);
  } else if (format == "obj") {
    export_obj(p, s);
  } else {
    s << mesh_to_json(p, doc);
  }
  return s.str();
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::string text_report(const ReportDocument& d) {
  std::ostringstream s;
  s << "name: " << d.name << '\n';
  if (d.archimedean) s << "dual of: " << *d.archimedean << " (" << d.diagram << ")\n";
  s << "counts: V=" << d.vertices << " E=" << d.edges << " F=" << d.faces << '\n';
  s << "scale factors:";
  for (const auto& [label, v] : d.scale_factors) s << ' ' << label << '=' << fmt(v);
  s << '\n';
  if (d.lambda) s << "lambda: " << fmt(*d.lambda) << '\n';
  if (d.eta) s << "eta: " << fmt(*d.eta) << '\n';
  s << "radii:";
  for (const auto& r : d.radii) s << ' ' << r.label << ": " << fmt(r.radius) << " (" << r.count << " vertices);";
  s << '\n';
  if (d.dihedral_deg) {
    s << "dihedral: " << format_dms(*d.dihedral_deg, true) << " (" << fmt(*d.dihedral_deg) << " deg)\n";
  }
  s << "face classes:";
  for (const auto& f : d.face_classes) s << ' ' << f.size << " x " << f.polygon << ';';
  s << "\nedge classes:";
  for (const auto& e : d.edge_classes) s << ' ' << e.size << " x " << fmt(e.length) << ';';
  s << "\nvertex classes:";
  for (int v : d.vertex_classes) s << ' ' << v;
  s << '\n';
  return s.str();
}

int unknown_solid(std::string_view name, std::ostream& err) {
  err << "error: unknown solid '" << name << "'";
  const auto near = suggest_names(name);
  if (!near.empty()) {
    err << "; did you mean:";
    for (const auto& n : near) err << ' ' << n;
  }
  err << "\n(run 'qpoly list' for all names)\n";
  return 2;
}

int emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw IoError("cannot write " + out_path);
  return 0;
}

}  // namespace

std::vector<std::string> verified_solid_names() {
  std::vector<std::string> names;
  for (const auto& s : solid_registry()) {
    if (s.name != "dual-tetrahedron") names.push_back(s.name);
  }
  for (const auto& c : catalan_registry()) names.push_back(c.name);
  return names;
}

bool is_known_solid(std::string_view name) {
  const auto names = all_known_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> suggest_names(std::string_view name) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& n : all_known_names()) {
    const std::size_t d = n.find(name) != std::string::npos && !name.empty() ? 0 : edit_distance(name, n);
    scored.emplace_back(d, n);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (const auto& [d, n] : scored) {
    if (out.size() == 3 || d > std::max<std::size_t>(4, name.size() / 2)) break;
    out.push_back(n);
  }
  return out;
}

Polyhedron solid_mesh(std::string_view name) {
  if (const CatalanSpec* c = catalan_by_name(name)) return dual(c->archimedean).catalan;
  const NamedSolid& s = find_solid(name);
  return build_symmetric_mesh(orbit(s.weight).vectors, s.weight.diagram);
}

ReportDocument verify_solid(std::string_view name) {
  if (const CatalanSpec* c = catalan_by_name(name)) return verify_catalan(*c);
  return verify_orbit_solid(find_solid(name));
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Platonic, Archimedean and Catalan solids from quaternionic Weyl-group orbits", "qpoly"};
  app.require_subcommand(1);

  std::string solid, format = "off", out_path;
  auto* gen = app.add_subcommand("generate", "Mesh of a named solid");
  gen->add_option("solid", solid, "Solid name (see 'list')")->required();
  gen->add_option("--format", format, "off | obj | json")->check(CLI::IsMember({"off", "obj", "json"}));
  gen->add_option("--out", out_path, "Write to PATH instead of stdout");

  std::string arch;
  auto* dual_cmd = app.add_subcommand("dual", "Catalan dual of an Archimedean solid");
  dual_cmd->add_option("archimedean", arch, "Archimedean solid name")->required();
  dual_cmd->add_option("--format", format, "off | obj | json")->check(CLI::IsMember({"off", "obj", "json"}));
  dual_cmd->add_option("--out", out_path, "Write to PATH instead of stdout");

  std::string verify_name;
  bool verify_all = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("solid", verify_name, "Single solid to verify");
  verify->add_flag("--all", verify_all, "Verify all 27 solids");

  std::string report_name, report_format = "text";
  auto* report = app.add_subcommand("report", "Scale factors, radii and dihedral angle of a Catalan solid");
  report->add_option("catalan", report_name, "Catalan solid name")->required();
  report->add_option("--format", report_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* list = app.add_subcommand("list", "Known solids with diagram and weight");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& s : solid_registry()) {
        out << std::left << std::setw(30) << s.name << std::setw(13) << to_string(s.kind)
            << to_string(s.weight.diagram) << ' ' << weight_label(s.weight) << '\n';
      }
      for (const auto& c : catalan_registry()) {
        out << std::left << std::setw(30) << c.name << std::setw(13) << "catalan"
            << to_string(find_solid(c.archimedean).weight.diagram) << " dual of " << c.archimedean << '\n';
      }
      return 0;
    }

    if (*gen || *dual_cmd) {
      std::string name = *gen ? solid : arch;
      if (*dual_cmd) {
        const auto& archs = catalan_registry();
        const auto it = std::find_if(archs.begin(), archs.end(), [&](const CatalanSpec& c) { return c.archimedean == arch; });
        if (it == archs.end()) return unknown_solid(arch, err);
        name = it->name;
      }
      if (!is_known_solid(name)) return unknown_solid(name, err);
      const Polyhedron p = solid_mesh(name);
      const ReportDocument doc = format == "json" ? verify_solid(name) : ReportDocument{};
      return emit(describe(p, doc, format), out_path, out);
    }

    if (*report) {
      if (!catalan_by_name(report_name)) return unknown_solid(report_name, err);
      const ReportDocument doc = verify_solid(report_name);
      out << (report_format == "json" ? to_json(doc) : text_report(doc));
      return doc.passed() ? 0 : 1;
    }

    if (*verify) {
      std::vector<std::string> names;
      if (verify_all) {
        names = verified_solid_names();
      } else if (!verify_name.empty()) {
        if (!is_known_solid(verify_name)) return unknown_solid(verify_name, err);
        names.push_back(verify_name);
      } else {
        err << "verify: give a solid name or --all\n";
        return 2;
      }
      std::sort(names.begin(), names.end());

      std::vector<std::future<ReportDocument>> jobs;
      for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [n] { return verify_solid(n); }));

      int passed = 0;
      out << std::left << std::setw(30) << "solid" << std::setw(13) << "kind" << std::right << std::setw(4) << "V"
          << std::setw(5) << "E" << std::setw(5) << "F" << "  result\n";
      for (auto& job : jobs) {
        const ReportDocument d = job.get();
        std::string failed;
        for (const auto& [check, ok] : d.checks) {
          if (!ok) failed += (failed.empty() ? "" : ",") + check;
        }
        if (failed.empty()) ++passed;
        out << std::left << std::setw(30) << d.name << std::setw(13) << d.kind << std::right << std::setw(4)
            << d.vertices << std::setw(5) << d.edges << std::setw(5) << d.faces << "  "
            << (failed.empty() ? "PASS" : "FAIL (" + failed + ")") << '\n';
      }
      out << names.size() << " solids checked, " << passed << " passed\n";
      return passed == static_cast<int>(names.size()) ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qpoly
