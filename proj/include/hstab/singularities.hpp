#pragma once

#include <set>
#include <string>
#include <vector>

#include "hstab/poly.hpp"
#include "hstab/projective.hpp"

namespace hstab {

/// Plane curve in P^2: a nonzero homogeneous form in x, y, z of degree <= 6.
class PlaneCurve {
 public:
  explicit PlaneCurve(Form f);
  static PlaneCurve parse(const std::string& text);

  const Form& form() const { return form_; }
  int degree() const;

 private:
  Form form_;
};

/// Local analytic type of a curve point: smooth, A_k (k = Milnor number when
/// the Hessian corank is at most 1), or outside the A series.
enum class SingKind { smooth, type_a, not_type_a };

struct SingularityRecord {
  ProjectivePoint point;
  int multiplicity = 0;
  bool isolated = true;
  long milnor = 0;
  int hessian_corank = 0;
  SingKind kind = SingKind::smooth;

  /// "Smooth", "A1".."A5".. by Milnor number, or "NotTypeA".
  std::string label() const;
};

struct MilnorResult {
  bool isolated = true;
  long value = 0;
};

/// Rational points of the singular locus. residual is a degree count of
/// elimination-polynomial roots not explained by the enumerated rational
/// points: zero certifies that every singular point is listed, a positive
/// value bounds how many non-rational singular solutions may remain. For a
/// non-reduced curve the locus of its squarefree reduction is reported and
/// the flag is set.
struct SingularLocus {
  std::vector<ProjectivePoint> points;
  int residual = 0;
  bool non_reduced = false;
};

SingularLocus rational_singular_points(const PlaneCurve& c);

/// Milnor number of a bivariate polynomial at the origin: the dimension of
/// the truncated local Jacobian quotient, stabilized over two consecutive
/// truncation orders. Reports isolated = false when the dimension has not
/// stabilized by the maximal order.
MilnorResult milnor_local(const Poly& g);

/// Milnor number of the curve at a rational point on it.
MilnorResult milnor_number(const PlaneCurve& c, const ProjectivePoint& p);

/// Minimal total degree of the local equation at p.
int multiplicity(const PlaneCurve& c, const ProjectivePoint& p);

/// Classifies the point: A_k iff the Hessian corank of the local equation is
/// at most 1 and the Milnor number is k; Smooth iff the Milnor number is 0.
/// Computed on every coordinate chart containing p and cross-checked.
SingularityRecord classify_Ak(const PlaneCurve& c, const ProjectivePoint& p);

enum class QuarticClass { stable, strictly_semistable, unstable, undetermined };

/// "stable", "strictly-semistable", "unstable", "undetermined (reducibility)".
std::string label(QuarticClass c);

struct QuarticReport {
  QuarticClass verdict = QuarticClass::undetermined;
  std::string reason;
  std::vector<SingularityRecord> records;
  bool non_reduced = false;
  int residual = 0;
};

/// GIT class of a plane quartic: unstable iff some point has multiplicity at
/// least 3 or the curve is a union of a cubic and an inflectional line;
/// otherwise strictly semistable iff some singularity has Milnor number at
/// least 3 or the quartic is a double smooth conic; otherwise stable.
/// Non-rational singular configurations that could change the verdict are
/// reported as undetermined rather than guessed.
QuarticReport quartic_git_class(const PlaneCurve& c);

/// Caller-supplied facts about a pointed genus-2 curve; detection of tails,
/// bridges, and Weierstrass points is out of scope.
struct CurveSummary {
  std::vector<int> singularities;       // k values of the A_k types present
  bool weierstrass_marked = false;      // marked point is a Weierstrass point
  bool nodal_elliptic_tail = false;     // A1-attached elliptic tail
  bool tacnodal_elliptic_tail = false;  // A3-attached elliptic tail
  bool nodal_elliptic_bridge = false;   // A1-attached elliptic bridge
};

enum class StabilityNotion {
  a2,
  a3,
  a4,
  a4_non_weierstrass,
  a5,
  weierstrass_curve
};

/// "A2-stable".."A5-stable", "A4-nonW-stable", "Weierstrass curve".
std::string label(StabilityNotion n);

/// Evaluates the Boolean stability notions on the supplied summary.
std::set<StabilityNotion> stability_class(const CurveSummary& s);

}  // namespace hstab
