#include "hstab/catalog.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace hstab {
namespace {

const std::vector<std::string> kZ = {"z0", "z1", "z2", "z3", "z4"};
const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

std::vector<Form> named_generators(const std::string& name) {
  const Ambient& amb = Ambient::get();
  auto F = [&](const char* s) { return amb.parse(s); };
  if (name == "N1")
    return {F("z0*z3 - z1*z2"), F("z0*z4 - z1*z3"), F("z2*z4 - z3^2")};
  if (name == "N2")
    return {F("z0*z3 - z2^2"), F("z0*z4 - z2*z3"), F("z2*z4 - z3^2")};
  if (name == "N3") return {F("z0*z3"), F("z0*z4"), F("z2*z4 - z3^2")};
  if (name == "N4") return {F("z0^2"), F("z0*z3"), F("z0*z4")};
  if (name == "N5") return {F("z0*z4 - z1*z3"), F("z1*z2"), F("z2*z4")};
  if (name == "C_R") {
    auto gens = named_generators("N2");
    gens.push_back(F("z1^2 - z0*z2"));
    return gens;
  }
  if (name == "A5_CURVE")
    return {F("z0*z3 - z1*z2"), F("z2*z4 - z3^2"), F("z0*z4 - z1*z3"),
            F("z1^2 - z0*z2")};
  if (name == "A4_CURVE") {
    auto gens = named_generators("N1");
    Form l = Form::parse("z1 - z2", kZ);
    gens.push_back(l * l - F("z0*z2"));
    return gens;
  }
  throw std::invalid_argument("unknown named system: " + name);
}

ProjectivePoint infinity_point() {
  std::vector<Rational> e0(5);
  e0[0] = Rational(1);
  return ProjectivePoint::of(std::move(e0));
}

/// Degree-4 monomials in x, y, z, in descending graded-lex order.
const std::vector<Monomial>& quartic_basis() {
  static const std::vector<Monomial> basis = [] {
    std::vector<Monomial> b;
    for (int a = 4; a >= 0; --a)
      for (int bb = 4 - a; bb >= 0; --bb)
        b.push_back(Monomial{{a, bb, 4 - a - bb}});
    return b;
  }();
  return basis;
}

std::vector<Rational> quartic_row(const Form& f) {
  const auto& basis = quartic_basis();
  std::vector<Rational> row(basis.size());
  for (const auto& [m, c] : f.poly().terms()) {
    int idx = -1;
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == m) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) throw std::invalid_argument("not a quartic monomial: " + f.str());
    row[idx] = c;
  }
  return row;
}

}  // namespace

const Ambient& Ambient::get() {
  static const Ambient amb;
  return amb;
}

Ambient::Ambient() : vars_(kZ) {
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      Monomial m{std::vector<int>(5, 0)};
      m.exps[i] += 1;
      m.exps[j] += 1;
      basis_.push_back(m);
    }
}

int Ambient::index_of(const Monomial& m) const {
  for (int i = 0; i < basis_size(); ++i)
    if (basis_[i] == m) return i;
  throw std::invalid_argument("not a degree-2 monomial in z0..z4");
}

Form Ambient::form_of_row(const std::vector<Rational>& row) const {
  if (static_cast<int>(row.size()) != basis_size())
    throw std::invalid_argument("coefficient row must have 15 entries");
  Poly p(vars_);
  for (int i = 0; i < basis_size(); ++i) p.add_term(basis_[i], row[i]);
  return Form(p);
}

std::vector<Rational> Ambient::row_of_form(const Form& f) const {
  if (f.vars() != vars_)
    throw std::invalid_argument("quadric must use variables z0..z4");
  if (!f.is_zero() && f.degree() != 2)
    throw std::invalid_argument("quadric must have degree 2");
  std::vector<Rational> row(basis_size());
  for (const auto& [m, c] : f.poly().terms()) row[index_of(m)] = c;
  return row;
}

Form Ambient::parse(const std::string& text) const {
  Form f = Form::parse(text, vars_);
  if (f.is_zero() || f.degree() != 2)
    throw std::invalid_argument("expected a nonzero quadric: " + text);
  return f;
}

QuadricSystem::QuadricSystem(const std::vector<Form>& generators) {
  const Ambient& amb = Ambient::get();
  std::vector<std::vector<Rational>> rows;
  for (const Form& g : generators) {
    if (g.is_zero()) continue;
    rows.push_back(amb.row_of_form(g));
  }
  if (rows.empty())
    throw std::invalid_argument("quadric system needs a nonzero generator");
  Matrix m(static_cast<int>(rows.size()), amb.basis_size());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  RrefResult rr = rref(m);
  dim_ = rr.rank;
  coeffs_ = Matrix(dim_, amb.basis_size());
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < m.cols(); ++c) coeffs_.at(r, c) = rr.echelon.at(r, c);
}

QuadricSystem QuadricSystem::from_rows(const Matrix& rows) {
  if (rows.cols() != Ambient::get().basis_size())
    throw std::invalid_argument("coefficient matrix must have 15 columns");
  std::vector<Form> gens;
  for (int r = 0; r < rows.rows(); ++r) {
    std::vector<Rational> row(rows.cols());
    for (int c = 0; c < rows.cols(); ++c) row[c] = rows.at(r, c);
    gens.push_back(Ambient::get().form_of_row(row));
  }
  return QuadricSystem(gens);
}

std::vector<Form> QuadricSystem::generators() const {
  std::vector<Form> gens;
  for (int r = 0; r < dim_; ++r) {
    std::vector<Rational> row(coeffs_.cols());
    for (int c = 0; c < coeffs_.cols(); ++c) row[c] = coeffs_.at(r, c);
    gens.push_back(Ambient::get().form_of_row(row));
  }
  return gens;
}

bool QuadricSystem::contains(const Form& q) const {
  if (q.is_zero()) return true;
  std::vector<Rational> row = Ambient::get().row_of_form(q);
  Matrix stacked(dim_ + 1, coeffs_.cols());
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < coeffs_.cols(); ++c) stacked.at(r, c) = coeffs_.at(r, c);
  for (int c = 0; c < coeffs_.cols(); ++c) stacked.at(dim_, c) = row[c];
  return rref(stacked).rank == dim_;
}

bool QuadricSystem::contains(const QuadricSystem& sub) const {
  for (const Form& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

HPoint::HPoint(QuadricSystem s, ProjectivePoint p)
    : system(std::move(s)), point(std::move(p)) {
  if (system.dimension() != 4)
    throw std::invalid_argument("marked system must have dimension 4");
  if (point.dim() != 5)
    throw std::invalid_argument("marked point must lie in P^4");
}

QuadricSystem named_system(const std::string& name) {
  return QuadricSystem(named_generators(name));
}

HPoint named_hpoint(const std::string& name) {
  if (!has_named_hpoint(name))
    throw std::invalid_argument("no marked point for system: " + name);
  return HPoint(named_system(name), infinity_point());
}

bool has_named_hpoint(const std::string& name) {
  return name == "C_R" || name == "A5_CURVE" || name == "A4_CURVE";
}

std::vector<std::string> named_system_names() {
  return {"N1", "N2", "N3", "N4", "N5", "C_R", "A5_CURVE", "A4_CURVE"};
}

std::vector<std::string> named_hpoint_names() {
  return {"C_R", "A5_CURVE", "A4_CURVE"};
}

HPoint weierstrass_hpoint(const WeierstrassParams& c) {
  const Ambient& amb = Ambient::get();
  auto F = [&](const char* s) { return amb.parse(s); };
  std::vector<Form> gens = named_generators("N2");
  gens.push_back(F("z1^2 - z0*z2") - F("z2*z3").scaled(c.c3) -
                 F("z2*z4").scaled(c.c2) - F("z3*z4").scaled(c.c1) -
                 F("z4^2").scaled(c.c0));
  return HPoint(QuadricSystem(gens), infinity_point());
}

ParametrizationReport verify_parametrization(const HPoint& h,
                                             const WeierstrassParams& c) {
  Poly x = Poly::variable(kXY, 0);
  Poly y = Poly::variable(kXY, 1);
  std::vector<Poly> images = {x.pow(3), y, x.pow(2), x,
                              Poly::constant(kXY, Rational(1))};
  Poly f = x.pow(5) + x.pow(3).scaled(c.c3) + x.pow(2).scaled(c.c2) +
           x.scaled(c.c1) + Poly::constant(kXY, c.c0);
  for (const Form& g : h.system.generators()) {
    Poly residue = reduce_hyperelliptic(g.poly().substitute(images), f);
    if (!residue.is_zero()) {
      ParametrizationReport rep;
      rep.pass = false;
      rep.detail = "generator " + g.str() + " leaves residue " + residue.str();
      return rep;
    }
  }
  ParametrizationReport rep;
  rep.pass = true;
  rep.detail = "all generators vanish along (x^3, y, x^2, x, 1)";
  return rep;
}

Form scroll_pullback(const Form& q) {
  if (q.vars() != kZ)
    throw std::invalid_argument("quadric must use variables z0..z4");
  if (q.is_zero()) return Form(Poly(kXYZ));
  if (q.degree() != 2) throw std::invalid_argument("quadric must have degree 2");
  std::vector<Form> images = {
      Form::parse("x*z", kXYZ), Form::parse("y*z", kXYZ),
      Form::parse("x^2", kXYZ), Form::parse("x*y", kXYZ),
      Form::parse("y^2", kXYZ)};
  return substitute_form(q, images);
}

HPoint quartic_lift(const Form& quartic) {
  if (quartic.vars() != kXYZ)
    throw std::invalid_argument("quartic must use variables x, y, z");
  if (quartic.is_zero()) throw std::invalid_argument("quartic must be nonzero");
  if (quartic.degree() != 4)
    throw std::invalid_argument("quartic must have degree 4");
  for (const auto& [m, coeff] : quartic.poly().terms()) {
    if (m.exps[0] + m.exps[1] < 2)
      throw std::invalid_argument(
          "quartic must vanish to order 2 at [0:0:1]; offending monomial in " +
          quartic.str());
  }

  const Ambient& amb = Ambient::get();
  int n = amb.basis_size();
  Matrix aug(n, n + 1);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> unit(n);
    unit[j] = Rational(1);
    std::vector<Rational> col = quartic_row(scroll_pullback(amb.form_of_row(unit)));
    for (int i = 0; i < n; ++i) aug.at(i, j) = col[i];
  }
  std::vector<Rational> target = quartic_row(quartic);
  for (int i = 0; i < n; ++i) aug.at(i, n) = target[i];

  RrefResult rr = rref(aug);
  std::vector<Rational> lift(n);
  for (int r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] == n)
      throw std::logic_error("quartic is not a pullback of a quadric");
    lift[rr.pivots[r]] = rr.echelon.at(r, n);
  }
  Form q = amb.form_of_row(lift);
  if (!(scroll_pullback(q) == quartic))
    throw std::logic_error("lift does not pull back to the given quartic");

  std::vector<Form> gens = named_generators("N1");
  gens.push_back(q);
  return HPoint(QuadricSystem(gens), infinity_point());
}

std::vector<long> family_coefficient_weights() {
  const std::vector<std::string> vars = {"x", "y", "t"};
  Poly x = Poly::variable(vars, 0);
  Poly y = Poly::variable(vars, 1);
  Poly t = Poly::variable(vars, 2);
  std::vector<Poly> images = {t.pow(2) * x, t.pow(5) * y, t};
  auto t_degree = [](const Poly& p) {
    if (p.terms().size() != 1)
      throw std::logic_error("expected a single scaled monomial");
    return static_cast<long>(p.terms().begin()->first.exps[2]);
  };
  long lead = t_degree(y.pow(2).substitute(images));
  if (t_degree(x.pow(5).substitute(images)) != lead)
    throw std::logic_error("leading relation does not rescale consistently");
  std::vector<long> weights;
  for (int j : {3, 2, 1, 0})
    weights.push_back(t_degree(x.pow(j).substitute(images)) - lead);
  return weights;
}

std::string hpoint_json(const HPoint& h) {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (const Form& g : h.system.generators()) j["generators"].push_back(g.str());
  j["point"] = nlohmann::json::array();
  for (const Rational& c : h.point.coords) j["point"].push_back(c.str());
  return j.dump();
}

HPoint hpoint_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("generators") || !j.contains("point"))
    throw std::invalid_argument("marked system JSON needs generators and point");
  std::vector<Form> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(Ambient::get().parse(s.get<std::string>()));
  std::vector<Rational> coords;
  for (const auto& s : j.at("point"))
    coords.push_back(Rational::parse(s.get<std::string>()));
  return HPoint(QuadricSystem(gens), ProjectivePoint::of(std::move(coords)));
}

}  // namespace hstab
