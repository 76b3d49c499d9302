#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hstab/rational.hpp"

namespace hstab {

/// Exponent vector of a monomial; the variable names live in the owning Poly.
struct Monomial {
  std::vector<int> exps;

  int degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial m = *this;
    for (size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
    return m;
  }
  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded lexicographic order with earlier variables dominant: compare total
/// degree first, then the first differing exponent (larger exponent on an
/// earlier variable means a larger monomial). This order fixes the canonical
/// column layout and print order everywhere.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
    return false;
  }
};

enum class PolyErrorKind { malformed, unknown_variable, non_homogeneous };

class PolyError : public std::runtime_error {
 public:
  PolyError(PolyErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  PolyErrorKind kind() const { return kind_; }

 private:
  PolyErrorKind kind_;
};

/// Sparse multivariate polynomial over Rational with a fixed named variable
/// list. Terms are kept in ascending graded-lex order and never store a zero
/// coefficient.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonoLess>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly constant(std::vector<std::string> vars, const Rational& c);
  static Poly variable(std::vector<std::string> vars, int index);

  /// Expression parser: '+'/'-' separated terms, '*' between variables, '^'
  /// for exponents, parenthesized subexpressions with optional '^', implicit
  /// '*' only between a leading coefficient and what follows it.
  static Poly parse(const std::string& text, std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest term degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly pow(int e) const;
  bool operator==(const Poly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  Poly derivative(int var) const;
  /// Ring map sending variable i to images[i]; the images share one variable
  /// list, which becomes the result's.
  Poly substitute(const std::vector<Poly>& images) const;
  Rational eval(const std::vector<Rational>& point) const;
  /// Drops all terms of total degree > bound.
  Poly truncated(int bound) const;

  /// Canonical print: descending graded-lex, "z0^2" exponents, unit
  /// coefficients suppressed. parse(str()) round-trips.
  std::string str() const;

 private:
  void check_same_vars(const Poly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Homogeneous polynomial. The zero form is allowed and is homogeneous of
/// indeterminate degree.
class Form {
 public:
  Form() = default;
  explicit Form(Poly p);
  static Form parse(const std::string& text, std::vector<std::string> vars);

  const Poly& poly() const { return p_; }
  const std::vector<std::string>& vars() const { return p_.vars(); }
  bool is_zero() const { return p_.is_zero(); }
  int degree() const { return p_.total_degree(); }
  std::string str() const { return p_.str(); }

  Form operator-() const { return Form(-p_); }
  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const { return Form(p_ * o.p_); }
  Form scaled(const Rational& c) const { return Form(p_.scaled(c)); }
  bool operator==(const Form& o) const { return p_ == o.p_; }

 private:
  Poly p_;
};

/// Integer weight vector on the ambient variables.
struct WeightVector {
  std::vector<long> w;

  long sum() const {
    long s = 0;
    for (long x : w) s += x;
    return s;
  }
  bool sl_normalized() const { return sum() == 0; }
  long weight_of(const Monomial& m) const {
    long s = 0;
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * m.exps[i];
    return s;
  }
  WeightVector negated() const {
    WeightVector n = *this;
    for (long& x : n.w) x = -x;
    return n;
  }
  bool operator==(const WeightVector& o) const { return w == o.w; }
};

/// Splits a form into its weight-homogeneous parts; keys are the occurring
/// weights, values sum back to f.
std::map<long, Form> graded_parts(const Form& f, const WeightVector& rho);

/// Substitution for forms: every image must be homogeneous of one common
/// degree (PolyError otherwise).
Form substitute_form(const Form& f, const std::vector<Form>& images);

/// Canonical residue of p modulo y^2 - f(x): y-degree at most 1. p lives in
/// variables (x, y), f in (x) or (x, y) with y absent.
Poly reduce_hyperelliptic(const Poly& p, const Poly& f);

}  // namespace hstab
