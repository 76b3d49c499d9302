#pragma once

#include <optional>
#include <set>
#include <string>

#include "hstab/rational.hpp"

namespace hstab {

/// Divisor class on the moduli stack of pointed genus-2 curves, written in
/// the basis (lambda, delta_irr, delta_{1,1}, psi); delta means the total
/// boundary delta_irr + delta_{1,1}.
struct DivClass {
  Rational lambda;
  Rational delta_irr;
  Rational delta_11;
  Rational psi;

  static DivClass lambda_class();
  static DivClass delta_irr_class();
  static DivClass delta_11_class();
  static DivClass psi_class();
  /// Total boundary delta_irr + delta_{1,1}.
  static DivClass delta_class();
  /// kappa = 12 lambda - delta_irr - delta_{1,1}.
  static DivClass kappa_class();
  /// Canonical class 13 lambda - 2 delta + psi.
  static DivClass canonical_class();
  /// Weierstrass divisor 3 psi - lambda - delta_{1,1}. The boundary term is
  /// the elliptic-tail class: that is the only reading under which setting
  /// the class to zero on the no-tails quotient yields lambda = 3 psi.
  static DivClass weierstrass_class();

  DivClass operator+(const DivClass& o) const;
  DivClass operator-(const DivClass& o) const;
  DivClass scaled(const Rational& c) const;
  bool operator==(const DivClass& o) const;
  bool is_zero() const;

  /// "a λ + b δ_irr + c δ_1,1 + d ψ" with exact rational coefficients.
  std::string str() const;
};

/// GIT polarization class (1/5)(-lambda + 8 psi) - (beta/5)(3 lambda + psi).
/// Throws std::invalid_argument unless beta > 0.
DivClass l_beta(const Rational& beta);

enum class Relation { no_elliptic_tails, weierstrass_contracted };

/// Substitutes the selected relations in a fixed order: first the no-tails
/// relations delta_{1,1} -> 0 and delta_irr -> 10 lambda, then the
/// Weierstrass contraction lambda -> 3 psi.
DivClass reduce(const DivClass& c, const std::set<Relation>& relations);

/// Relations holding after restricting away elliptic tails.
const std::set<Relation>& no_tails_relations();
/// Relations holding on the quotient that also contracts the Weierstrass
/// divisor.
const std::set<Relation>& weierstrass_quotient_relations();

/// reduce(l_beta(beta)) = factor * reduce(K + alpha delta + (1-alpha) psi),
/// both sides reduced by the no-tails relations, with factor > 0.
struct AlphaResult {
  Rational alpha;
  Rational factor;
};

/// Solves the proportionality above for alpha; empty when the reduced
/// polarization is zero, the linear solve is degenerate, or the factor
/// fails to be positive. Throws std::invalid_argument unless beta > 0.
std::optional<AlphaResult> alpha_of_beta(const Rational& beta);

}  // namespace hstab
