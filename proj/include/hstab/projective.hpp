#pragma once

#include <string>
#include <vector>

#include "hstab/rational.hpp"

namespace hstab {

/// Point of projective space with exact rational homogeneous coordinates,
/// normalized so the first nonzero coordinate is 1. Equality is structural
/// on the normalized representative.
struct ProjectivePoint {
  std::vector<Rational> coords;

  static ProjectivePoint of(std::vector<Rational> raw);

  int dim() const { return static_cast<int>(coords.size()); }
  /// Index of the unique nonzero coordinate, or -1 if several are nonzero.
  int coordinate_axis() const;
  bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
  std::string str() const;
};

}  // namespace hstab
