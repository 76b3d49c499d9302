#pragma once

#include <string>
#include <vector>

#include "hstab/matrix.hpp"
#include "hstab/poly.hpp"
#include "hstab/projective.hpp"
#include "hstab/rational.hpp"

namespace hstab {

/// The ambient space: quadratic forms in z0..z4, coordinatized by the 15
/// degree-2 monomials listed in descending graded lexicographic order
/// (z0^2, z0*z1, ..., z0*z4, z1^2, ..., z4^2).
class Ambient {
 public:
  static const Ambient& get();

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  int basis_size() const { return static_cast<int>(basis_.size()); }

  /// Column index of a degree-2 monomial; throws if not degree 2 in 5 vars.
  int index_of(const Monomial& m) const;
  Form form_of_row(const std::vector<Rational>& row) const;
  std::vector<Rational> row_of_form(const Form& f) const;
  Form parse(const std::string& text) const;

 private:
  Ambient();
  std::vector<std::string> vars_;
  std::vector<Monomial> basis_;
};

/// Linear system of quadrics in z0..z4, stored as the canonical reduced row
/// echelon coefficient matrix over the ambient monomial basis. Two systems
/// are equal iff they are the same subspace.
class QuadricSystem {
 public:
  explicit QuadricSystem(const std::vector<Form>& generators);
  static QuadricSystem from_rows(const Matrix& rows);

  int dimension() const { return dim_; }
  const Matrix& coefficients() const { return coeffs_; }
  std::vector<Form> generators() const;
  bool contains(const Form& q) const;
  bool contains(const QuadricSystem& sub) const;
  bool operator==(const QuadricSystem& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QuadricSystem& o) const { return !(*this == o); }

 private:
  QuadricSystem() : dim_(0) {}
  Matrix coeffs_;
  int dim_;
};

/// A 4-dimensional system of quadrics together with a marked point of P^4.
struct HPoint {
  QuadricSystem system;
  ProjectivePoint point;

  HPoint(QuadricSystem s, ProjectivePoint p);
  bool operator==(const HPoint& o) const {
    return system == o.system && point == o.point;
  }
};

/// Catalog of named systems: the five nets N1..N5 and the three marked
/// curves C_R, A5_CURVE, A4_CURVE (whose 4-dimensional systems are also
/// available by name). Throws std::invalid_argument for unknown names.
QuadricSystem named_system(const std::string& name);
HPoint named_hpoint(const std::string& name);
bool has_named_hpoint(const std::string& name);
std::vector<std::string> named_system_names();
std::vector<std::string> named_hpoint_names();

/// Coefficients of f(x) = x^5 + c3 x^3 + c2 x^2 + c1 x + c0.
struct WeierstrassParams {
  Rational c3, c2, c1, c0;
};

/// The marked quadric system of the genus-2 curve y^2 = f(x) embedded by the
/// bi-log-canonical basis, marked at the point over x = infinity.
HPoint weierstrass_hpoint(const WeierstrassParams& c);

/// Checks that every generator of h vanishes under the parametrization
/// (z0,...,z4) -> (x^3, y, x^2, x, 1) modulo y^2 = f(x). On failure, detail
/// carries the first nonvanishing residue.
struct ParametrizationReport {
  bool pass = false;
  std::string detail;
};
ParametrizationReport verify_parametrization(const HPoint& h,
                                             const WeierstrassParams& c);

/// Pullback of a quadric along (z0,...,z4) -> (x*z, y*z, x^2, x*y, y^2):
/// a quartic plane curve in x, y, z.
Form scroll_pullback(const Form& q);

/// Inverse of scroll_pullback up to its kernel: given a plane quartic with a
/// point of multiplicity >= 2 at [0:0:1], returns the marked quadric system
/// (kernel net + particular lift, marked at [1:0:0:0:0]). Throws
/// std::invalid_argument when the quartic is zero or the multiplicity
/// condition fails.
HPoint quartic_lift(const Form& quartic);

/// Weights of (c3, c2, c1, c0) under (x, y) -> (t^2 x, t^5 y), obtained by
/// substituting into y^2 = x^5 + sum c_j x^j and renormalizing.
std::vector<long> family_coefficient_weights();

/// JSON round-trip for marked systems:
/// {"generators": ["z0*z3 - z2^2", ...], "point": ["1","0","0","0","0"]}.
std::string hpoint_json(const HPoint& h);
HPoint hpoint_from_json(const std::string& text);

}  // namespace hstab
