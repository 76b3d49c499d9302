#include "hstab/poly.hpp"

#include <cctype>
#include <sstream>

namespace hstab {

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
  Poly p(std::move(vars));
  p.add_term(Monomial{std::vector<int>(p.nvars(), 0)}, c);
  return p;
}

Poly Poly::variable(std::vector<std::string> vars, int index) {
  Poly p(std::move(vars));
  if (index < 0 || index >= p.nvars())
    throw std::invalid_argument("Poly::variable: index out of range");
  Monomial m{std::vector<int>(p.nvars(), 0)};
  m.exps[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.exps.size()) != nvars())
    throw std::invalid_argument("Poly: monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same_vars(const Poly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("Poly: mixed variable sets");
}

Poly Poly::operator-() const {
  Poly out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_vars(o);
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  check_same_vars(o);
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_vars(o);
  Poly out(vars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly acc = Poly::constant(vars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative(int var) const {
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[var] == 0) continue;
    Monomial d = m;
    --d.exps[var];
    out.add_term(d, c * Rational(m.exps[var]));
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw std::invalid_argument("Poly::substitute: image count mismatch");
  for (const Poly& im : images)
    if (im.vars() != images[0].vars())
      throw std::invalid_argument("Poly::substitute: images disagree on variables");
  Poly out(images.empty() ? vars_ : images[0].vars());
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(out.vars(), c);
    for (int i = 0; i < nvars(); ++i)
      if (m.exps[i] > 0) t = t * images[i].pow(m.exps[i]);
    out = out + t;
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw std::invalid_argument("Poly::eval: point arity mismatch");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars(); ++i)
      for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

Poly Poly::truncated(int bound) const {
  Poly out(vars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= bound) out.terms_.emplace(m, c);
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1));
    bool wrote_factor = false;
    if (!unit || m.degree() == 0) {
      os << a.str();
      wrote_factor = true;
    }
    for (int i = 0; i < nvars(); ++i) {
      if (m.exps[i] == 0) continue;
      if (wrote_factor) os << "*";
      os << vars_[i];
      if (m.exps[i] > 1) os << "^" << m.exps[i];
      wrote_factor = true;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) { ++i; return true; }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    return s.substr(start, i - start);
  }
};

}  // namespace

namespace {

/// Recursive-descent parser: sums of terms, each term a '*'-chain of
/// coefficients, variable powers, and parenthesized subexpressions.
struct PolyParser {
  Lexer& lx;
  const std::vector<std::string>& vars;

  PolyError malformed(const std::string& why) const {
    return PolyError(PolyErrorKind::malformed,
                     "parse error at offset " + std::to_string(lx.i) + ": " + why);
  }
  int var_index(const std::string& name) const {
    for (size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == name) return static_cast<int>(k);
    throw PolyError(PolyErrorKind::unknown_variable, "unknown variable '" + name + "'");
  }
  std::string parse_nat() {
    std::string n = lx.number();
    if (n.empty()) throw malformed("expected a number");
    return n;
  }
  int exponent() {
    if (!lx.accept('^')) return 1;
    std::string nat = parse_nat();
    try {
      return std::stoi(nat);
    } catch (...) {
      throw malformed("exponent out of range");
    }
  }

  Poly term(int sign, int depth) {
    Poly acc = Poly::constant(vars, Rational(sign));
    bool saw_factor = false;
    bool expect_factor = true;  // after a '*' or at term start
    while (true) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (!expect_factor && saw_factor)
          throw malformed("missing '*' before a number");
        std::string num = parse_nat();
        std::string den = "1";
        if (lx.accept('/')) den = parse_nat();
        acc = acc.scaled(Rational::parse(num + "/" + den));
        saw_factor = true;
        // Implicit '*' is tolerated between a coefficient and a variable or
        // parenthesized group.
        char after = lx.peek();
        expect_factor = std::isalpha(static_cast<unsigned char>(after)) ||
                        after == '_' || after == '(';
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        if (!expect_factor)
          throw malformed("missing '*' between variables");
        int vi = var_index(lx.ident());
        Monomial mono{std::vector<int>(vars.size(), 0)};
        mono.exps[vi] = exponent();
        Poly factor(vars);
        factor.add_term(mono, Rational(1));
        acc = acc * factor;
        saw_factor = true;
        expect_factor = false;
      } else if (c == '(') {
        if (!expect_factor && saw_factor)
          throw malformed("missing '*' before '('");
        lx.accept('(');
        Poly inner = expr(depth + 1);
        if (!lx.accept(')')) throw malformed("unmatched '('");
        acc = acc * inner.pow(exponent());
        saw_factor = true;
        expect_factor = false;
      } else {
        break;
      }
      if (lx.accept('*')) expect_factor = true;
    }
    if (!saw_factor) throw malformed("empty term");
    if (expect_factor) throw malformed("dangling '*'");
    return acc;
  }

  Poly expr(int depth) {
    Poly sum(vars);
    bool first_term = true;
    while (true) {
      if (lx.eof()) {
        if (depth > 0) throw malformed("unmatched '('");
        if (first_term) throw malformed("empty input");
        break;
      }
      if (lx.peek() == ')') {
        if (depth == 0) throw malformed("unmatched ')'");
        if (first_term) throw malformed("empty parentheses");
        break;  // the caller consumes the ')'
      }
      int sign = 1;
      if (lx.accept('+')) {
        sign = 1;
      } else if (lx.accept('-')) {
        sign = -1;
      } else if (!first_term) {
        throw malformed("expected '+' or '-' between terms");
      }
      first_term = false;
      if (lx.eof()) throw malformed("dangling sign");
      sum = sum + term(sign, depth);
    }
    return sum;
  }
};

}  // namespace

Poly Poly::parse(const std::string& text, std::vector<std::string> vars) {
  Lexer lx{text};
  PolyParser parser{lx, vars};
  return parser.expr(0);
}

Form::Form(Poly p) : p_(std::move(p)) {
  if (!p_.is_homogeneous())
    throw PolyError(PolyErrorKind::non_homogeneous,
                    "form is not homogeneous: " + p_.str());
}

Form Form::parse(const std::string& text, std::vector<std::string> vars) {
  return Form(Poly::parse(text, std::move(vars)));
}

Form Form::operator+(const Form& o) const {
  Poly s = p_ + o.p_;
  if (!s.is_homogeneous())
    throw PolyError(PolyErrorKind::non_homogeneous, "sum of unequal degrees");
  return Form(std::move(s));
}

Form Form::operator-(const Form& o) const {
  Poly s = p_ - o.p_;
  if (!s.is_homogeneous())
    throw PolyError(PolyErrorKind::non_homogeneous, "difference of unequal degrees");
  return Form(std::move(s));
}

std::map<long, Form> graded_parts(const Form& f, const WeightVector& rho) {
  if (static_cast<int>(rho.w.size()) != f.poly().nvars())
    throw std::invalid_argument("graded_parts: weight arity mismatch");
  std::map<long, Poly> buckets;
  for (const auto& [m, c] : f.poly().terms()) {
    auto [it, fresh] = buckets.emplace(rho.weight_of(m), Poly(f.poly().vars()));
    it->second.add_term(m, c);
  }
  std::map<long, Form> parts;
  for (auto& [w, p] : buckets) parts.emplace(w, Form(std::move(p)));
  return parts;
}

Form substitute_form(const Form& f, const std::vector<Form>& images) {
  if (images.empty()) throw std::invalid_argument("substitute_form: no images");
  int d = -1;
  const std::vector<std::string>* shared = nullptr;
  for (const Form& im : images) {
    if (im.is_zero()) continue;
    if (d == -1) d = im.degree();
    if (im.degree() != d)
      throw PolyError(PolyErrorKind::non_homogeneous,
                      "substitute_form: mixed image degrees");
    if (!shared) shared = &im.poly().vars();
  }
  std::vector<Poly> ps;
  ps.reserve(images.size());
  // A zero image may carry an empty variable list; give it the shared one.
  for (const Form& im : images)
    ps.push_back(im.is_zero() && shared ? Poly(*shared) : im.poly());
  return Form(f.poly().substitute(ps));
}

Poly reduce_hyperelliptic(const Poly& p, const Poly& f) {
  if (p.nvars() != 2)
    throw std::invalid_argument("reduce_hyperelliptic: p must live in (x, y)");
  if (f.nvars() != 1 && f.nvars() != 2)
    throw std::invalid_argument("reduce_hyperelliptic: f must live in (x) or (x, y)");
  Poly fx(p.vars());
  for (const auto& [m, c] : f.terms()) {
    if (f.nvars() == 2 && m.exps[1] != 0)
      throw std::invalid_argument("reduce_hyperelliptic: f must not involve y");
    Monomial lifted{std::vector<int>{m.exps[0], 0}};
    fx.add_term(lifted, c);
  }
  Poly out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Monomial base{std::vector<int>{m.exps[0], m.exps[1] % 2}};
    Poly t(p.vars());
    t.add_term(base, c);
    out = out + t * fx.pow(m.exps[1] / 2);
  }
  return out;
}

}  // namespace hstab
