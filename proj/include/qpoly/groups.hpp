#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qpoly/quat.hpp"

namespace qpoly {

enum class Diagram { A3, B3, H3 };

std::string_view to_string(Diagram d);
// Accepts "A3", "B3", "H3" (case-insensitive). Throws LookupError otherwise.
Diagram parse_diagram(std::string_view name);

/// Row-major 3x3 matrix; the action of a group element on (e1, e2, e3).
struct Mat3 {
  std::array<double, 9> m{};

  static Mat3 identity();
  Quaternion operator()(const Quaternion& v) const;
  // (a * b)(v) == a(b(v))
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  double max_abs_diff(const Mat3& o) const;
};

/// Matrix of r -> apply(g, r) restricted to pure quaternions.
Mat3 action_matrix(const GroupElement& g);

/// The 24 unit quaternions {+-1, +-e_i, 1/2(+-1 +-e1 +-e2 +-e3)}.
std::vector<Quaternion> binary_tetrahedral();

/// The 24 quaternions (1/sqrt2)(+-a +-b) over the six unordered pairs of
/// {1, e1, e2, e3}; T together with this coset is the binary octahedral group.
std::vector<Quaternion> t_prime();

/// Multiplicative closure of T and 1/2(tau + sigma e1 + e2). Throws
/// ConstructionError unless exactly 120 elements result.
std::vector<Quaternion> binary_icosahedral();

/// Finite reflection group realized as quaternion pairs acting on pure
/// quaternions. One entry per distinct 3D operation: [p, conj p] and
/// [-p, -conj p] collapse to a single element.
class WeylGroup {
 public:
  WeylGroup(Diagram diagram, std::vector<GroupElement> elements);

  Diagram diagram() const { return diagram_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<Mat3>& actions() const { return actions_; }

  Quaternion act(std::size_t i, const Quaternion& v) const { return actions_[i](v); }

  // Index of the element whose action equals m within tol, if any.
  std::optional<std::size_t> find_action(const Mat3& m, double tol = kDedupTol) const;

  bool contains_inversion() const;

 private:
  Diagram diagram_;
  std::vector<GroupElement> elements_;
  std::vector<Mat3> actions_;
};

/// Builds W(A3), W(B3) or W(H3) from the quaternion-pair formulas and checks
/// order, identity, closure, inverses and purity preservation. Throws
/// ConstructionError on any failure.
WeylGroup make_weyl_group(Diagram diagram);

// Process-wide immutable instance of make_weyl_group(diagram).
const WeylGroup& weyl_group(Diagram diagram);

/// Number of elements fixing v. Throws DomainError for v == 0.
int stabilizer_order(const WeylGroup& w, const Quaternion& v);

}  // namespace qpoly
