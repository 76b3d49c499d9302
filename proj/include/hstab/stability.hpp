#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hstab/catalog.hpp"
#include "hstab/linprog.hpp"
#include "hstab/matrix.hpp"
#include "hstab/poly.hpp"

namespace hstab {

/// One-parameter subgroup of SL(5): integer weights acting diagonally on the
/// coordinates, optionally preceded by a change of frame. The frame matrix
/// rows express the new coordinates in terms of z0..z4; all weight data then
/// refers to the new coordinates.
struct OnePS {
  WeightVector weights;
  std::optional<Matrix> frame;

  static OnePS diagonal(std::vector<long> w);
  /// rows: invertible 5x5 matrix whose i-th row gives the i-th new coordinate.
  static OnePS framed(std::vector<long> w, Matrix rows);
  OnePS inverse() const;
  bool sl_normalized() const { return weights.sl_normalized(); }
};

/// Rewrites systems and points in the frame of rho (identity when diagonal).
QuadricSystem in_frame(const QuadricSystem& s, const OnePS& rho);
ProjectivePoint in_frame(const ProjectivePoint& p, const OnePS& rho);
HPoint in_frame(const HPoint& h, const OnePS& rho);

/// Weight of the marked point: max of -w_i over its nonzero coordinates in
/// the frame of rho.
long mu_point(const ProjectivePoint& p, const OnePS& rho);

/// Weight of the system: the largest total rho-weight of a nonzero maximal
/// minor of its coefficient matrix, i.e. the support function of the state
/// polytope evaluated at the weights.
long mu_system(const QuadricSystem& s, const OnePS& rho);

/// The index of a marked system is the affine function
///   system_weight + beta * point_weight
/// of the polarization parameter beta.
struct IndexLine {
  long system_weight = 0;
  long point_weight = 0;
};
IndexLine hm_index_line(const HPoint& h, const OnePS& rho);
Rational hm_index(const HPoint& h, const OnePS& rho, const Rational& beta);

/// Exponent-sum vectors of the monomial supports of the nonzero maximal
/// minors, deduplicated and sorted; their convex hull is the state polytope.
/// Every vector sums to twice the system dimension.
std::vector<std::vector<long>> state_polytope_points(const QuadricSystem& s);

enum class TorusVerdict { unstable, strictly_semistable, stable };

/// Semistability test for the diagonal torus in the presented coordinates:
/// decides by one exact feasibility program whether the shifted barycenter
/// t(beta) = ((8-beta)/5)(1,..,1) lies in P + beta*Q, where P is the state
/// polytope and Q the simplex spanned by -e_i over nonzero point coordinates,
/// and by eight more programs whether it is relatively interior (interior:
/// stable; boundary: strictly semistable). Requires beta > 0.
TorusVerdict torus_check(const HPoint& h, const Rational& beta);

/// The closed interval of beta >= 0 on which torus_check does not report
/// unstable, computed exactly by minimizing and maximizing beta over the
/// joint feasibility program. empty when no beta is feasible; upper_finite
/// is false when arbitrarily large beta stays feasible.
struct BetaInterval {
  bool empty = true;
  Rational lower;
  bool upper_finite = true;
  Rational upper;
};
BetaInterval beta_interval(const HPoint& h);

/// Destabilization certificate: a 1-PS, the claimed index line, and the
/// claimed open range of beta on which the index is negative.
struct Certificate {
  HPoint target;
  OnePS rho;
  long claimed_system_weight = 0;
  long claimed_point_weight = 0;
  Rational range_lower;  // ignored when lower_infinite
  bool lower_infinite = false;
  Rational range_upper;  // ignored when upper_infinite
  bool upper_infinite = false;
};

struct CertificateReport {
  bool pass = false;
  long system_weight = 0;
  long point_weight = 0;
  std::string detail;
};

/// Recomputes the index line and checks both the claimed coefficients and
/// strict negativity of the index on the claimed open beta range.
CertificateReport verify_certificate(const Certificate& cert);

/// The 15 degree-2 monomials; those in the ideal generated by the listed
/// variables; those involving only the listed variables.
std::vector<Monomial> quadric_monomials();
std::vector<Monomial> quadric_monomials_in_ideal(const std::vector<int>& vars);
std::vector<Monomial> quadric_monomials_in(const std::vector<int>& vars);

/// Upper bound for mu_system of any system spanned by the net together with
/// one extra quadric drawn from the span of the candidate monomials:
/// mu_system(net) plus the largest candidate weight. Sound because a nonzero
/// maximal minor expands along the extra row. Throws when candidates is
/// empty.
long mu_upper_bound(const QuadricSystem& net,
                    const std::vector<Monomial>& candidates, const OnePS& rho);

/// Exact minimum of lambda . w over the primitive extreme rays of the cone
/// of ordered sum-zero weight vectors w1 >= ... >= w5, sum w = 0. valid
/// reports the strict partial-sum inequalities 5*(l1+...+lk) > k*(l1+...+l5)
/// for k = 1..4, which hold iff the minimum is positive. Entries must be
/// nonnegative.
struct OrderedWeightMin {
  bool valid = false;
  Rational minimum;
  std::vector<long> tight_ray;
};
OrderedWeightMin ordered_weight_min(const std::vector<Rational>& lambda);

/// Checks whether rho fixes the marked system: every canonical generator
/// weight-homogeneous in the frame of rho and the marked point on a
/// coordinate axis. generator_weights lists the generator weights sorted
/// descending (empty when some generator is inhomogeneous).
struct FixedPointReport {
  bool fixed = false;
  std::vector<long> generator_weights;
};
FixedPointReport stabilizer_weight_check(const HPoint& h, const OnePS& rho);

/// Randomized search for a destabilizing 1-PS at the given beta: runs the
/// torus membership program in the identity frame and in random triangular
/// frames, converts each infeasibility certificate into an integer weight
/// vector, and keeps it only if the recomputed index is negative at beta.
/// Deterministic for fixed seed; empty when the budget is exhausted.
std::optional<Certificate> destabilizer_search(const HPoint& h,
                                               const Rational& beta,
                                               int budget = 64,
                                               std::uint64_t seed = 0);

}  // namespace hstab
