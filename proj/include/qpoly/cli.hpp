#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpoly/io.hpp"
#include "qpoly/mesh.hpp"

namespace qpoly {

/// The 27 solids covered by `verify --all`: Platonic, Archimedean, Catalan.
std::vector<std::string> verified_solid_names();

// True for any of the 17 orbit solids or 11 Catalan names.
bool is_known_solid(std::string_view name);

// Up to three known names closest to name by edit distance.
std::vector<std::string> suggest_names(std::string_view name);

/// Mesh of an orbit solid or a Catalan solid. Throws LookupError for unknown
/// names.
Polyhedron solid_mesh(std::string_view name);

/// Runs every invariant for one solid and records it as pass/fail checks.
/// Construction failures become a failed "construction" check, not a throw.
ReportDocument verify_solid(std::string_view name);

/// Entry point behind the qpoly executable. args excludes the program name.
/// Returns 0 on success, 1 on verification or runtime failure, 2 on usage
/// errors (including unknown solid names).
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qpoly
