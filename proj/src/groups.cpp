#include "qpoly/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qpoly/error.hpp"

namespace qpoly {

std::string_view to_string(Diagram d) {
  switch (d) {
    case Diagram::A3: return "A3";
    case Diagram::B3: return "B3";
    case Diagram::H3: return "H3";
  }
  return "?";
}

Diagram parse_diagram(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  if (up == "A3") return Diagram::A3;
  if (up == "B3") return Diagram::B3;
  if (up == "H3") return Diagram::H3;
  throw LookupError("unknown diagram '" + std::string(name) + "' (expected A3, B3 or H3)");
}

Mat3 Mat3::identity() {
  Mat3 r;
  r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  return r;
}

Quaternion Mat3::operator()(const Quaternion& v) const {
  return Quaternion::pure(m[0] * v.x + m[1] * v.y + m[2] * v.z,
                          m[3] * v.x + m[4] * v.y + m[5] * v.z,
                          m[6] * v.x + m[7] * v.y + m[8] * v.z);
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a.m[3 * i + k] * b.m[3 * k + j];
      r.m[3 * i + j] = acc;
    }
  }
  return r;
}

double Mat3::max_abs_diff(const Mat3& o) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 9; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
  return d;
}

Mat3 action_matrix(const GroupElement& g) {
  const Quaternion basis[3] = {Quaternion::pure(1, 0, 0), Quaternion::pure(0, 1, 0),
                               Quaternion::pure(0, 0, 1)};
  Mat3 r;
  for (int j = 0; j < 3; ++j) {
    const Quaternion img = apply(g, basis[j]);
    r.m[0 + j] = img.x;
    r.m[3 + j] = img.y;
    r.m[6 + j] = img.z;
  }
  return r;
}

namespace {

bool contains(const std::vector<Quaternion>& set, const Quaternion& q) {
  return std::any_of(set.begin(), set.end(), [&](const Quaternion& e) { return approx_equal(e, q); });
}

}  // namespace

std::vector<Quaternion> binary_tetrahedral() {
  std::vector<Quaternion> out;
  for (double sign : {1.0, -1.0}) {
    out.push_back({sign, 0, 0, 0});
    out.push_back({0, sign, 0, 0});
    out.push_back({0, 0, sign, 0});
    out.push_back({0, 0, 0, sign});
  }
  for (int bits = 0; bits < 16; ++bits) {
    auto sg = [&](int b) { return (bits >> b) & 1 ? -0.5 : 0.5; };
    out.push_back({sg(0), sg(1), sg(2), sg(3)});
  }
  return out;
}

std::vector<Quaternion> t_prime() {
  std::vector<Quaternion> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (double sa : {1.0, -1.0}) {
        for (double sb : {1.0, -1.0}) {
          double c[4] = {0, 0, 0, 0};
          c[a] = sa * kInvSqrt2;
          c[b] = sb * kInvSqrt2;
          out.push_back({c[0], c[1], c[2], c[3]});
        }
      }
    }
  }
  return out;
}

std::vector<Quaternion> binary_icosahedral() {
  constexpr std::size_t kExpected = 120;
  constexpr std::size_t kHardLimit = 200;

  std::vector<Quaternion> group = binary_tetrahedral();
  group.push_back({kTau / 2, kSigma / 2, 0.5, 0.0});

  // Products are formed from stored doubles so rounding error never compounds
  // through repeated re-keying.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = group.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Quaternion prod = group[i] * group[j];
        if (!contains(group, prod)) {
          group.push_back(prod);
          grew = true;
          if (group.size() > kHardLimit) {
            throw ConstructionError("binary icosahedral closure exceeded 200 elements");
          }
        }
      }
    }
  }
  if (group.size() != kExpected) {
    throw ConstructionError("binary icosahedral closure produced " + std::to_string(group.size()) +
                            " elements, expected 120");
  }
  return group;
}

WeylGroup::WeylGroup(Diagram diagram, std::vector<GroupElement> elements)
    : diagram_(diagram), elements_(std::move(elements)) {
  actions_.reserve(elements_.size());
  for (const auto& g : elements_) actions_.push_back(action_matrix(g));
}

std::optional<std::size_t> WeylGroup::find_action(const Mat3& m, double tol) const {
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].max_abs_diff(m) <= tol) return i;
  }
  return std::nullopt;
}

bool WeylGroup::contains_inversion() const {
  Mat3 inv;
  inv.m = {-1, 0, 0, 0, -1, 0, 0, 0, -1};
  return find_action(inv).has_value();
}

namespace {

std::size_t expected_order(Diagram d) {
  switch (d) {
    case Diagram::A3: return 24;
    case Diagram::B3: return 48;
    case Diagram::H3: return 120;
  }
  return 0;
}

void add_family(std::vector<GroupElement>& out, const std::vector<Quaternion>& units, bool starred) {
  for (const auto& p : units) out.push_back({p, conjugate(p), starred});
}

void verify_group(const WeylGroup& w) {
  const std::string name(to_string(w.diagram()));
  if (w.size() != expected_order(w.diagram())) {
    throw ConstructionError("W(" + name + ") has " + std::to_string(w.size()) + " elements, expected " +
                            std::to_string(expected_order(w.diagram())));
  }
  if (!w.find_action(Mat3::identity())) throw ConstructionError("W(" + name + ") lacks the identity");

  for (const auto& g : w.elements()) {
    for (const Quaternion& r : {Quaternion::pure(1, 0, 0), Quaternion::pure(0, 1, 0),
                                Quaternion::pure(0, 0, 1), Quaternion::pure(0.3, -1.7, 2.9)}) {
      if (!is_pure(apply(g, r), 1e-12 * (1.0 + norm(r)))) {
        throw ConstructionError("W(" + name + ") element does not preserve pure quaternions");
      }
    }
  }

  // Closure and inverses, checked on actions rather than pair formulas.
  const auto& acts = w.actions();
  for (const auto& a : acts) {
    bool has_inverse = false;
    for (const auto& b : acts) {
      if (!w.find_action(a * b)) throw ConstructionError("W(" + name + ") is not closed");
      if ((a * b).max_abs_diff(Mat3::identity()) <= kDedupTol) has_inverse = true;
    }
    if (!has_inverse) throw ConstructionError("W(" + name + ") element without inverse");
  }
}

}  // namespace

WeylGroup make_weyl_group(Diagram diagram) {
  std::vector<GroupElement> raw;
  switch (diagram) {
    case Diagram::A3:
      add_family(raw, binary_tetrahedral(), false);
      add_family(raw, t_prime(), true);
      break;
    case Diagram::B3:
      add_family(raw, binary_tetrahedral(), false);
      add_family(raw, t_prime(), false);
      add_family(raw, binary_tetrahedral(), true);
      add_family(raw, t_prime(), true);
      break;
    case Diagram::H3: {
      const auto ico = binary_icosahedral();
      add_family(raw, ico, false);
      add_family(raw, ico, true);
      break;
    }
  }

  std::vector<GroupElement> distinct;
  std::vector<Mat3> seen;
  for (const auto& g : raw) {
    const Mat3 m = action_matrix(g);
    const bool dup = std::any_of(seen.begin(), seen.end(),
                                 [&](const Mat3& s) { return s.max_abs_diff(m) <= kDedupTol; });
    if (!dup) {
      seen.push_back(m);
      distinct.push_back(g);
    }
  }

  WeylGroup w(diagram, std::move(distinct));
  verify_group(w);
  return w;
}

const WeylGroup& weyl_group(Diagram diagram) {
  static const WeylGroup a3 = make_weyl_group(Diagram::A3);
  static const WeylGroup b3 = make_weyl_group(Diagram::B3);
  static const WeylGroup h3 = make_weyl_group(Diagram::H3);
  switch (diagram) {
    case Diagram::A3: return a3;
    case Diagram::B3: return b3;
    case Diagram::H3: return h3;
  }
  throw LookupError("unknown diagram");
}

int stabilizer_order(const WeylGroup& w, const Quaternion& v) {
  if (norm(v.vector_part()) <= kDedupTol) throw DomainError("stabilizer of the zero vector is the whole group");
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (approx_equal(w.act(i, v), v.vector_part())) ++count;
  }
  return count;
}

}  // namespace qpoly
