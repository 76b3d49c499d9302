#include "hstab/picard.hpp"

#include <stdexcept>

namespace hstab {

DivClass DivClass::lambda_class() { return {Rational(1), {}, {}, {}}; }
DivClass DivClass::delta_irr_class() { return {{}, Rational(1), {}, {}}; }
DivClass DivClass::delta_11_class() { return {{}, {}, Rational(1), {}}; }
DivClass DivClass::psi_class() { return {{}, {}, {}, Rational(1)}; }
DivClass DivClass::delta_class() { return {{}, Rational(1), Rational(1), {}}; }

DivClass DivClass::kappa_class() {
  return {Rational(12), Rational(-1), Rational(-1), {}};
}

DivClass DivClass::canonical_class() {
  return {Rational(13), Rational(-2), Rational(-2), Rational(1)};
}

DivClass DivClass::weierstrass_class() {
  return {Rational(-1), {}, Rational(-1), Rational(3)};
}

DivClass DivClass::operator+(const DivClass& o) const {
  return {lambda + o.lambda, delta_irr + o.delta_irr, delta_11 + o.delta_11,
          psi + o.psi};
}

DivClass DivClass::operator-(const DivClass& o) const {
  return {lambda - o.lambda, delta_irr - o.delta_irr, delta_11 - o.delta_11,
          psi - o.psi};
}

DivClass DivClass::scaled(const Rational& c) const {
  return {lambda * c, delta_irr * c, delta_11 * c, psi * c};
}

bool DivClass::operator==(const DivClass& o) const {
  return lambda == o.lambda && delta_irr == o.delta_irr &&
         delta_11 == o.delta_11 && psi == o.psi;
}

bool DivClass::is_zero() const {
  return lambda.is_zero() && delta_irr.is_zero() && delta_11.is_zero() &&
         psi.is_zero();
}

std::string DivClass::str() const {
  return lambda.str() + " λ + " + delta_irr.str() + " δ_irr + " +
         delta_11.str() + " δ_1,1 + " + psi.str() + " ψ";
}

DivClass l_beta(const Rational& beta) {
  if (beta.sign() <= 0)
    throw std::invalid_argument("polarization requires beta > 0");
  Rational fifth(1, 5);
  DivClass base = DivClass::lambda_class().scaled(Rational(-1)) +
                  DivClass::psi_class().scaled(Rational(8));
  DivClass tilt = DivClass::lambda_class().scaled(Rational(3)) +
                  DivClass::psi_class();
  return base.scaled(fifth) - tilt.scaled(beta * fifth);
}

DivClass reduce(const DivClass& c, const std::set<Relation>& relations) {
  DivClass r = c;
  if (relations.count(Relation::no_elliptic_tails)) {
    r.delta_11 = Rational(0);
    r.lambda += r.delta_irr * Rational(10);
    r.delta_irr = Rational(0);
  }
  if (relations.count(Relation::weierstrass_contracted)) {
    r.psi += r.lambda * Rational(3);
    r.lambda = Rational(0);
  }
  return r;
}

const std::set<Relation>& no_tails_relations() {
  static const std::set<Relation> r = {Relation::no_elliptic_tails};
  return r;
}

const std::set<Relation>& weierstrass_quotient_relations() {
  static const std::set<Relation> r = {Relation::no_elliptic_tails,
                                       Relation::weierstrass_contracted};
  return r;
}

std::optional<AlphaResult> alpha_of_beta(const Rational& beta) {
  DivClass pol = reduce(l_beta(beta), no_tails_relations());
  if (pol.is_zero()) return std::nullopt;
  // Target: K + alpha delta + (1 - alpha) psi reduces to
  // (10 alpha - 7) lambda + (2 - alpha) psi; cross-multiplying the
  // proportionality gives a linear equation for alpha.
  Rational denom = pol.lambda + pol.psi * Rational(10);
  if (denom.is_zero()) return std::nullopt;
  Rational alpha = (pol.lambda * Rational(2) + pol.psi * Rational(7)) / denom;

  DivClass target = reduce(DivClass::canonical_class() +
                               DivClass::delta_class().scaled(alpha) +
                               DivClass::psi_class().scaled(Rational(1) - alpha),
                           no_tails_relations());
  if (target.is_zero()) return std::nullopt;
  Rational factor = target.psi.is_zero() ? pol.lambda / target.lambda
                                         : pol.psi / target.psi;
  if (!(target.scaled(factor) == pol)) return std::nullopt;
  if (factor.sign() <= 0) return std::nullopt;
  return AlphaResult{alpha, factor};
}

}  // namespace hstab
