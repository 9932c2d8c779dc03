#include "qpoly/quat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "qpoly/error.hpp"

namespace qpoly {

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.s - b.s), std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

double angle_between(const Quaternion& a, const Quaternion& b) {
  const Quaternion u = a.vector_part();
  const Quaternion v = b.vector_part();
  // atan2 form stays accurate near 0 and pi where acos loses digits.
  return std::atan2(norm(cross(u, v)), dot(u, v));
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  std::ostringstream ss;
  ss.precision(12);
  ss << "(" << q.s << ", " << q.x << ", " << q.y << ", " << q.z << ")";
  return os << ss.str();
}

Quaternion apply(const GroupElement& g, const Quaternion& r) {
  if (!is_unit(g.p) || !is_unit(g.q)) {
    std::ostringstream msg;
    msg << "group element components must be unit quaternions, got p=" << g.p << " q=" << g.q;
    throw InvalidElementError(msg.str());
  }
  return g.starred ? g.p * conjugate(r) * g.q : g.p * r * g.q;
}

}  // namespace qpoly
