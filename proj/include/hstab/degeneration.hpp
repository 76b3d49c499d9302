#pragma once

#include <map>
#include <string>
#include <vector>

#include "hstab/catalog.hpp"
#include "hstab/stability.hpp"

namespace hstab {

/// Plücker coordinates of a k-dimensional quadric system, indexed by ascending
/// k-subsets of basis monomial indices and scaled so the first nonzero
/// coordinate equals 1. Only nonzero coordinates are stored.
struct PluckerVector {
  int k = 0;
  std::map<std::vector<int>, Rational> coords;

  /// Coordinate at a subset, zero when absent.
  Rational at(const std::vector<int>& subset) const;

  bool operator==(const PluckerVector& other) const;
  bool operator!=(const PluckerVector& other) const;
};

PluckerVector plucker(const QuadricSystem& s);

/// Flat limit as t -> infinity of the scaling u_i -> t^{w_i} u_i in the frame
/// coordinates of rho: the span of the maximal-weight graded parts of a
/// weight-adapted echelon basis, reported in the frame. Pass rho.inverse()
/// for the limit as t -> 0.
QuadricSystem limit_max(const QuadricSystem& s, const OnePS& rho);

/// Limit of a marked system: the system limit together with the point keeping
/// only its maximal-weight nonzero coordinates.
HPoint limit_max(const HPoint& h, const OnePS& rho);

/// The same limit computed directly on Plücker coordinates: keep the
/// coordinates whose subsets have maximal total weight.
PluckerVector plucker_limit(const QuadricSystem& s, const OnePS& rho);

/// True iff the system equals its own limit under rho and under rho.inverse()
/// (compared in the frame of rho when one is present).
bool is_fixed(const QuadricSystem& s, const OnePS& rho);

/// k x 15 coefficient matrix over Q[t]: entry (r, c) is the univariate
/// polynomial multiplying basis monomial c in generator r.
using PathMatrix = std::vector<std::vector<Poly>>;

/// Parses generator strings in z0..z4 and the reserved path parameter t into
/// a path matrix. Every term must have degree exactly 2 in z0..z4.
PathMatrix path_family(const std::vector<std::string>& generators);

/// Limit at t = 0 of the family of spans: the polynomial Plücker vector is
/// divided by its minimal t-power, evaluated at t = 0, and the resulting
/// Grassmannian point is reconstructed from a chart with nonzero coordinate.
/// Throws std::invalid_argument when the Plücker vector vanishes identically.
QuadricSystem path_limit(const PathMatrix& family);

}  // namespace hstab
