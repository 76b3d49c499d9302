#include "hstab/projective.hpp"

#include <sstream>
#include <stdexcept>

namespace hstab {

ProjectivePoint ProjectivePoint::of(std::vector<Rational> raw) {
  int first = -1;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    if (!raw[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first < 0) throw std::invalid_argument("projective point: all coordinates are zero");
  Rational lead = raw[first];
  for (auto& c : raw) c /= lead;
  ProjectivePoint p;
  p.coords = std::move(raw);
  return p;
}

int ProjectivePoint::coordinate_axis() const {
  int axis = -1;
  for (int i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    if (axis >= 0) return -1;
    axis = i;
  }
  return axis;
}

std::string ProjectivePoint::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < dim(); ++i) {
    if (i) out << ':';
    out << coords[i].str();
  }
  out << ']';
  return out.str();
}

}  // namespace hstab
