#include "hstab/singularities.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "hstab/matrix.hpp"

namespace hstab {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Rational: empty vector = zero, back() != 0.

using UPoly = std::vector<Rational>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

bool uzero(const UPoly& p) { return p.empty(); }

UPoly uscale(UPoly p, const Rational& c) {
  if (c.is_zero()) return {};
  for (auto& v : p) v *= c;
  return p;
}

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  utrim(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (uzero(a) || uzero(b)) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

/// Division with remainder over the rational field.
std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b) {
  if (uzero(b)) throw std::logic_error("univariate division by zero");
  UPoly rem = a, quot;
  int db = udeg(b);
  if (udeg(a) >= db) quot.assign(a.size() - b.size() + 1, Rational(0));
  while (udeg(rem) >= db) {
    Rational c = rem.back() / b.back();
    int shift = udeg(rem) - db;
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    utrim(rem);
  }
  return {quot, rem};
}

UPoly udiv_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = udivmod(a, b);
  if (!uzero(r)) throw std::logic_error("inexact univariate division");
  return q;
}

UPoly umonic(UPoly p) {
  if (uzero(p)) return p;
  Rational lead = p.back();
  for (auto& v : p) v /= lead;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!uzero(b)) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a);
}

UPoly uderiv(const UPoly& p) {
  UPoly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  utrim(r);
  return r;
}

UPoly usquarefree(const UPoly& p) {
  if (udeg(p) <= 1) return p;
  return udiv_exact(p, ugcd(p, uderiv(p)));
}

Rational ueval(const UPoly& p, const Rational& x) {
  Rational v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly upow(UPoly base, int e) {
  UPoly r = {Rational(1)};
  for (int i = 0; i < e; ++i) r = umul(r, base);
  return r;
}

// ---------------------------------------------------------------------------
// Bounded integer factorization and rational root extraction.

constexpr unsigned long kTrialBound = 2'000'000;

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) throw std::logic_error("divisors of zero requested");
  std::vector<std::pair<mpz_class, int>> factors;
  for (unsigned long p = 2; mpz_class(p) * p <= n && p <= kTrialBound;
       p += (p == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= static_cast<long>(p);
      ++e;
    }
    factors.push_back({mpz_class(p), e});
  }
  if (n > 1) {
    // Trial division passed kTrialBound, so a remainder below its square is prime.
    if (n >= mpz_class(kTrialBound) * kTrialBound)
      throw std::overflow_error("rational root extraction exceeded factorization budget");
    factors.push_back({n, 1});
  }
  std::vector<mpz_class> divisors = {1};
  for (const auto& [prime, count] : factors) {
    size_t before = divisors.size();
    mpz_class power = 1;
    for (int e = 1; e <= count; ++e) {
      power *= prime;
      for (size_t i = 0; i < before; ++i) divisors.push_back(divisors[i] * power);
    }
    if (divisors.size() > 4096)
      throw std::overflow_error("rational root extraction exceeded divisor budget");
  }
  return divisors;
}

/// All rational roots with multiplicities; exact and complete.
std::vector<std::pair<Rational, int>> urational_roots(UPoly p) {
  std::vector<std::pair<Rational, int>> roots;
  utrim(p);
  if (udeg(p) <= 0) return roots;

  int zero_mult = 0;
  while (!p.empty() && p.front().is_zero()) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
  if (udeg(p) <= 0) return roots;

  mpz_class denom_lcm = 1;
  for (const auto& c : p) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> zp;
  for (const auto& c : p) zp.push_back(c.num() * (denom_lcm / c.den()));
  mpz_class content = 0;
  for (const auto& c : zp) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : zp) c /= content;

  std::set<Rational> candidates;
  for (const mpz_class& num : positive_divisors(zp.front()))
    for (const mpz_class& den : positive_divisors(zp.back())) {
      candidates.insert(Rational(num, den));
      candidates.insert(-Rational(num, den));
    }

  UPoly current = p;
  for (const Rational& r : candidates) {
    int mult = 0;
    while (udeg(current) >= 1 && ueval(current, r).is_zero()) {
      // Synthetic division by (x - r).
      UPoly quot(current.size() - 1);
      Rational carry;
      for (int i = udeg(current); i >= 1; --i) {
        carry = current[i] + r * carry;
        quot[i - 1] = carry;
      }
      current = std::move(quot);
      utrim(current);
      ++mult;
    }
    if (mult > 0) roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials as y-coefficient vectors over Q[x].

using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && uzero(p.back())) p.pop_back();
}

bool bzero(const BPoly& p) { return p.empty(); }

int bydeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

bool bconstant(const BPoly& p) {
  return bzero(p) || (p.size() == 1 && udeg(p[0]) <= 0);
}

BPoly bsub(const BPoly& a, const BPoly& b) {
  BPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = uadd(r[i], a[i]);
  for (size_t i = 0; i < b.size(); ++i) r[i] = uadd(r[i], uscale(b[i], Rational(-1)));
  btrim(r);
  return r;
}

BPoly bscale_upoly(const BPoly& a, const UPoly& c) {
  BPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = umul(a[i], c);
  btrim(r);
  return r;
}

UPoly bcontent(const BPoly& p) {
  UPoly c;
  for (const auto& coeff : p) c = ugcd(c, coeff);
  return c;
}

BPoly bprimitive(const BPoly& p) {
  if (bzero(p)) return p;
  UPoly c = bcontent(p);
  BPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    r[i] = uzero(p[i]) ? UPoly{} : udiv_exact(p[i], c);
  return r;
}

/// Pseudo-remainder of a by b in y.
BPoly bprem(BPoly a, const BPoly& b) {
  int db = bydeg(b);
  const UPoly& lb = b.back();
  while (!bzero(a) && bydeg(a) >= db) {
    UPoly la = a.back();
    int shift = bydeg(a) - db;
    BPoly shifted(shift);
    shifted.insert(shifted.end(), b.begin(), b.end());
    a = bsub(bscale_upoly(a, lb), bscale_upoly(shifted, la));
  }
  return a;
}

/// Normalizes so the leading y-coefficient is monic in x.
BPoly bnormalize(BPoly p) {
  btrim(p);
  if (bzero(p)) return p;
  Rational lead = p.back().back();
  for (auto& c : p) c = uscale(std::move(c), Rational(1) / lead);
  return p;
}

BPoly bgcd(BPoly a, BPoly b) {
  btrim(a);
  btrim(b);
  if (bzero(a)) return bnormalize(b);
  if (bzero(b)) return bnormalize(a);
  UPoly cont = ugcd(bcontent(a), bcontent(b));
  a = bprimitive(a);
  b = bprimitive(b);
  if (bydeg(a) < bydeg(b)) std::swap(a, b);
  while (!bzero(b)) {
    BPoly r = bprem(a, b);
    a = std::move(b);
    b = bzero(r) ? BPoly{} : bprimitive(r);
  }
  return bnormalize(bscale_upoly(a, cont));
}

/// Exact division; valid whenever d divides a.
BPoly bdiv_exact(const BPoly& a, const BPoly& d) {
  if (bzero(d)) throw std::logic_error("bivariate division by zero");
  BPoly rem = a, quot(a.size());
  btrim(rem);
  int dd = bydeg(d);
  while (!bzero(rem) && bydeg(rem) >= dd) {
    UPoly c = udiv_exact(rem.back(), d.back());
    int shift = bydeg(rem) - dd;
    quot[shift] = c;
    BPoly shifted(shift);
    shifted.insert(shifted.end(), d.begin(), d.end());
    rem = bsub(rem, bscale_upoly(shifted, c));
  }
  if (!bzero(rem)) throw std::logic_error("inexact bivariate division");
  btrim(quot);
  return quot;
}

UPoly beval_x(const BPoly& p, const Rational& x0) {
  UPoly r(p.size());
  for (size_t j = 0; j < p.size(); ++j) r[j] = ueval(p[j], x0);
  utrim(r);
  return r;
}

Rational beval(const BPoly& p, const Rational& x0, const Rational& y0) {
  return ueval(beval_x(p, x0), y0);
}

int bmax_xdeg(const BPoly& p) {
  int best = 0;
  for (const auto& c : p) best = std::max(best, udeg(c));
  return best;
}

/// Lagrange interpolation through (i, values[i]).
UPoly uinterpolate(const std::vector<Rational>& values) {
  int n = static_cast<int>(values.size());
  UPoly full = {Rational(1)};
  for (int j = 0; j < n; ++j) full = umul(full, {Rational(-j), Rational(1)});
  UPoly result;
  for (int i = 0; i < n; ++i) {
    if (values[i].is_zero()) continue;
    // full / (x - i) by synthetic division.
    UPoly li(full.size() - 1);
    Rational carry;
    for (int k = udeg(full); k >= 1; --k) {
      carry = full[k] + Rational(i) * carry;
      li[k - 1] = carry;
    }
    Rational denom(1);
    for (int j = 0; j < n; ++j)
      if (j != i) denom *= Rational(i - j);
    result = uadd(result, uscale(li, values[i] / denom));
  }
  return result;
}

/// Resultant with respect to y, an element of Q[x], via evaluation of the
/// Sylvester determinant at interpolation nodes.
UPoly bresultant_y(const BPoly& p, const BPoly& q) {
  if (bzero(p) || bzero(q)) return {};
  int m = bydeg(p), n = bydeg(q);
  if (m == 0 && n == 0) return {Rational(1)};
  if (m == 0) return upow(p[0], n);
  if (n == 0) return upow(q[0], m);
  int bound = m * bmax_xdeg(q) + n * bmax_xdeg(p) + 1;
  std::vector<Rational> values(bound);
  for (int t = 0; t < bound; ++t) {
    Rational x0(t);
    Matrix syl(m + n, m + n);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s <= m; ++s) syl.at(r, r + s) = ueval(p[m - s], x0);
    for (int r = 0; r < m; ++r)
      for (int s = 0; s <= n; ++s) syl.at(n + r, r + s) = ueval(q[n - s], x0);
    values[t] = det(syl);
  }
  UPoly res = uinterpolate(values);
  utrim(res);
  return res;
}

// ---------------------------------------------------------------------------
// Conversions between Poly (in x,y[,z]) and the dense forms.

const std::vector<std::string> kPlaneVars = {"x", "y", "z"};
const std::vector<std::string> kLocalVars = {"x", "y"};

BPoly to_bpoly(const Poly& p) {
  BPoly r;
  for (const auto& [mono, coeff] : p.terms()) {
    int i = mono.exps[0], j = mono.exps[1];
    if (static_cast<int>(r.size()) <= j) r.resize(j + 1);
    if (static_cast<int>(r[j].size()) <= i) r[j].resize(i + 1);
    r[j][i] += coeff;
  }
  for (auto& c : r) utrim(c);
  btrim(r);
  return r;
}

Poly from_bpoly(const BPoly& p) {
  Poly r(kLocalVars);
  for (size_t j = 0; j < p.size(); ++j)
    for (size_t i = 0; i < p[j].size(); ++i)
      if (!p[j][i].is_zero())
        r.add_term(Monomial{{static_cast<int>(i), static_cast<int>(j)}}, p[j][i]);
  return r;
}

UPoly to_upoly(const Poly& p) {
  UPoly r;
  for (const auto& [mono, coeff] : p.terms()) {
    int i = mono.exps[0];
    if (static_cast<int>(r.size()) <= i) r.resize(i + 1);
    r[i] += coeff;
  }
  utrim(r);
  return r;
}

int min_total_degree(const Poly& p) {
  int best = -1;
  for (const auto& [mono, coeff] : p.terms()) {
    (void)coeff;
    if (best < 0 || mono.degree() < best) best = mono.degree();
  }
  return best;
}

Rational eval3(const Poly& p, const Rational& a, const Rational& b, const Rational& c) {
  return p.eval({a, b, c});
}

/// F restricted to the line z = 0, y = 1, as a univariate polynomial in x.
UPoly on_infinity_line(const Poly& p) {
  std::vector<Poly> images = {Poly::variable({"x"}, 0),
                              Poly::constant({"x"}, Rational(1)),
                              Poly::constant({"x"}, Rational(0))};
  return to_upoly(p.substitute(images));
}

/// Homogenizes a bivariate polynomial with z to its total degree.
Poly rehomogenize(const Poly& u) {
  int d = u.total_degree();
  Poly r(kPlaneVars);
  for (const auto& [mono, coeff] : u.terms())
    r.add_term(Monomial{{mono.exps[0], mono.exps[1], d - mono.degree()}}, coeff);
  return r;
}

/// Splits off the z-adic valuation: F = z^e * G with z not dividing G.
std::pair<int, Poly> split_z(const Poly& f) {
  int e = -1;
  for (const auto& [mono, coeff] : f.terms()) {
    (void)coeff;
    if (e < 0 || mono.exps[2] < e) e = mono.exps[2];
  }
  Poly g(kPlaneVars);
  for (const auto& [mono, coeff] : f.terms())
    g.add_term(Monomial{{mono.exps[0], mono.exps[1], mono.exps[2] - e}}, coeff);
  return {e, g};
}

Poly dehomogenize_z(const Poly& f) {
  std::vector<Poly> images = {Poly::variable(kLocalVars, 0),
                              Poly::variable(kLocalVars, 1),
                              Poly::constant(kLocalVars, Rational(1))};
  return f.substitute(images);
}

/// Squarefree reduction of the curve; also reports whether reduction occurred.
std::pair<Poly, bool> squarefree_curve(const Poly& f) {
  auto [e, g] = split_z(f);
  BPoly u = to_bpoly(dehomogenize_z(g));
  BPoly ux = to_bpoly(dehomogenize_z(g).derivative(0));
  BPoly uy = to_bpoly(dehomogenize_z(g).derivative(1));
  BPoly common = bgcd(bgcd(u, ux), uy);
  bool reduced_g = !bconstant(common);
  BPoly usf = reduced_g ? bdiv_exact(u, common) : u;
  bool non_reduced = e >= 2 || reduced_g;
  if (!non_reduced) return {f, false};
  Poly result = rehomogenize(from_bpoly(usf));
  if (e >= 1) {
    Poly z = Poly::variable(kPlaneVars, 2);
    result = result * z;
  }
  return {result, true};
}

// ---------------------------------------------------------------------------
// Affine solving of the singular system.

struct AffineSolutions {
  std::vector<std::pair<Rational, Rational>> points;
  int residual = 0;
};

void merge_solutions(AffineSolutions& into, const AffineSolutions& from) {
  for (const auto& p : from.points)
    if (std::find(into.points.begin(), into.points.end(), p) == into.points.end())
      into.points.push_back(p);
  into.residual += from.residual;
}

/// Common zeros of a list of nonzero pairwise-coprime-enough polynomials,
/// via x-elimination; the residual is a degree bound on unenumerated
/// non-rational solutions.
AffineSolutions solve_by_elimination(const std::vector<BPoly>& polys) {
  AffineSolutions out;
  std::vector<UPoly> resultants;
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = i + 1; j < polys.size(); ++j) {
      UPoly r = bresultant_y(polys[i], polys[j]);
      if (!uzero(r)) resultants.push_back(std::move(r));
    }
  if (resultants.empty())
    throw std::logic_error("elimination found no usable resultant");
  UPoly s;
  for (const auto& r : resultants) s = uzero(s) ? r : ugcd(s, r);
  UPoly sf = usquarefree(s);
  if (udeg(sf) <= 0) return out;

  auto xroots = urational_roots(sf);
  out.residual += udeg(sf) - static_cast<int>(xroots.size());
  for (const auto& [x0, mult] : xroots) {
    (void)mult;
    UPoly fiber;
    for (const auto& p : polys) fiber = ugcd(fiber, beval_x(p, x0));
    if (uzero(fiber)) throw std::logic_error("elimination fiber vanished identically");
    if (udeg(fiber) <= 0) continue;  // spurious elimination root
    UPoly fiber_sf = usquarefree(fiber);
    auto yroots = urational_roots(fiber_sf);
    for (const auto& [y0, ymult] : yroots) {
      (void)ymult;
      out.points.push_back({x0, y0});
    }
    out.residual += udeg(fiber_sf) - static_cast<int>(yroots.size());
  }
  return out;
}

/// Zeros of g = a = b = 0 for a squarefree curve g with partials a, b;
/// handles a common factor of the partials by splitting the system.
AffineSolutions solve_singular_system(const BPoly& g, const BPoly& a, const BPoly& b) {
  AffineSolutions out;
  if (bconstant(g)) return out;
  bool a_zero = bzero(a), b_zero = bzero(b);
  if (a_zero && b_zero) return out;
  if (a_zero || b_zero) {
    const BPoly& other = a_zero ? b : a;
    if (bconstant(other)) return out;
    if (!bconstant(bgcd(g, other)))
      throw std::logic_error("curve shares a component with its partial");
    return solve_by_elimination({g, other});
  }
  if (bconstant(a) || bconstant(b)) return out;

  BPoly f = bgcd(a, b);
  if (!bconstant(f)) {
    if (!bconstant(bgcd(f, g)))
      throw std::logic_error("squarefree curve with non-finite singular locus");
    AffineSolutions on_f = solve_by_elimination({g, f});
    for (auto it = on_f.points.begin(); it != on_f.points.end();)
      if (!beval(a, it->first, it->second).is_zero() ||
          !beval(b, it->first, it->second).is_zero())
        it = on_f.points.erase(it);
      else
        ++it;
    merge_solutions(out, on_f);
    AffineSolutions rest = solve_singular_system(g, bdiv_exact(a, f), bdiv_exact(b, f));
    merge_solutions(out, rest);
    return out;
  }
  merge_solutions(out, solve_by_elimination({g, a, b}));
  return out;
}

// ---------------------------------------------------------------------------
// Local equations and charts.

std::vector<int> charts_of(const ProjectivePoint& p) {
  std::vector<int> charts;
  for (int i = 0; i < 3; ++i)
    if (!p.coords[i].is_zero()) charts.push_back(i);
  return charts;
}

/// Local equation in the affine chart coordinate i = 1, translated so p sits
/// at the origin; variables are x (lower remaining index) and y (higher).
Poly local_equation(const PlaneCurve& c, const ProjectivePoint& p, int chart) {
  std::vector<int> others;
  for (int j = 0; j < 3; ++j)
    if (j != chart) others.push_back(j);
  std::vector<Poly> images(3, Poly(kLocalVars));
  images[chart] = Poly::constant(kLocalVars, Rational(1));
  for (int k = 0; k < 2; ++k) {
    Rational offset = p.coords[others[k]] / p.coords[chart];
    images[others[k]] =
        Poly::variable(kLocalVars, k) + Poly::constant(kLocalVars, offset);
  }
  return c.form().poly().substitute(images);
}

struct LocalData {
  int multiplicity;
  MilnorResult milnor;
  int hessian_corank;
};

int hessian_corank_of(const Poly& g) {
  Rational a = g.coeff(Monomial{{2, 0}});
  Rational b = g.coeff(Monomial{{1, 1}});
  Rational c = g.coeff(Monomial{{0, 2}});
  if (a.is_zero() && b.is_zero() && c.is_zero()) return 2;
  Rational disc = Rational(4) * a * c - b * b;
  return disc.is_zero() ? 1 : 0;
}

LocalData analyze_local(const Poly& g) {
  LocalData d;
  d.multiplicity = min_total_degree(g);
  d.milnor = milnor_local(g);
  // The quadratic part is only intrinsic once the linear part vanishes.
  d.hessian_corank = d.multiplicity <= 1 ? 0 : hessian_corank_of(g);
  return d;
}

void require_on_curve(const PlaneCurve& c, const ProjectivePoint& p) {
  if (p.dim() != 3) throw std::invalid_argument("point must lie in the plane");
  if (!eval3(c.form().poly(), p.coords[0], p.coords[1], p.coords[2]).is_zero())
    throw std::invalid_argument("point does not lie on the curve");
}

}  // namespace

// ---------------------------------------------------------------------------

PlaneCurve::PlaneCurve(Form f) : form_(std::move(f)) {
  if (form_.vars() != kPlaneVars)
    throw std::invalid_argument("plane curves use variables x, y, z");
  if (form_.is_zero()) throw std::invalid_argument("plane curve form is zero");
  if (form_.degree() > 6)
    throw std::invalid_argument("plane curve degree exceeds 6");
}

PlaneCurve PlaneCurve::parse(const std::string& text) {
  return PlaneCurve(Form::parse(text, kPlaneVars));
}

int PlaneCurve::degree() const { return form_.degree(); }

std::string SingularityRecord::label() const {
  switch (kind) {
    case SingKind::smooth:
      return "Smooth";
    case SingKind::type_a:
      return "A" + std::to_string(milnor);
    case SingKind::not_type_a:
      return "NotTypeA";
  }
  return "NotTypeA";
}

MilnorResult milnor_local(const Poly& g) {
  if (g.nvars() != 2)
    throw std::invalid_argument("local equation must be bivariate");
  if (g.is_zero()) throw std::invalid_argument("local equation is zero");
  if (!g.coeff(Monomial{{0, 0}}).is_zero())
    throw std::invalid_argument("origin does not lie on the local curve");
  if (min_total_degree(g) == 1) return {true, 0};

  Poly gu = g.derivative(0);
  Poly gv = g.derivative(1);
  constexpr int kFirst = 8, kLast = 14;
  long prev = -1;
  for (int d = kFirst; d <= kLast; ++d) {
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j)
        index[{i, j}] = static_cast<int>(index.size());
    int cols = static_cast<int>(index.size());

    std::vector<std::vector<Rational>> rows;
    for (const Poly* h : {&gu, &gv}) {
      if (h->is_zero()) continue;
      int ord = min_total_degree(*h);
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j + ord <= d; ++j) {
          std::vector<Rational> row(cols);
          bool any = false;
          for (const auto& [mono, coeff] : h->terms()) {
            int ii = i + mono.exps[0], jj = j + mono.exps[1];
            if (ii + jj > d) continue;
            row[index[{ii, jj}]] += coeff;
            any = true;
          }
          if (any) rows.push_back(std::move(row));
        }
    }
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    long q = cols - rref(m).rank;
    if (q == prev) return {true, q};
    prev = q;
  }
  return {false, prev};
}

MilnorResult milnor_number(const PlaneCurve& c, const ProjectivePoint& p) {
  require_on_curve(c, p);
  return milnor_local(local_equation(c, p, charts_of(p).back()));
}

int multiplicity(const PlaneCurve& c, const ProjectivePoint& p) {
  require_on_curve(c, p);
  return min_total_degree(local_equation(c, p, charts_of(p).back()));
}

SingularityRecord classify_Ak(const PlaneCurve& c, const ProjectivePoint& p) {
  require_on_curve(c, p);
  std::vector<int> charts = charts_of(p);
  LocalData data = analyze_local(local_equation(c, p, charts[0]));
  for (size_t i = 1; i < charts.size(); ++i) {
    LocalData other = analyze_local(local_equation(c, p, charts[i]));
    if (other.multiplicity != data.multiplicity ||
        other.milnor.isolated != data.milnor.isolated ||
        other.milnor.value != data.milnor.value ||
        other.hessian_corank != data.hessian_corank)
      throw std::logic_error("chart-dependent local classification");
  }
  SingularityRecord rec{p,
                        data.multiplicity,
                        data.milnor.isolated,
                        data.milnor.value,
                        data.hessian_corank,
                        SingKind::not_type_a};
  if (data.milnor.isolated && data.milnor.value == 0)
    rec.kind = SingKind::smooth;
  else if (data.milnor.isolated && data.hessian_corank <= 1)
    rec.kind = SingKind::type_a;
  return rec;
}

SingularLocus rational_singular_points(const PlaneCurve& c) {
  auto [reduced, was_reduced] = squarefree_curve(c.form().poly());
  if (was_reduced) {
    SingularLocus locus = rational_singular_points(PlaneCurve(Form(reduced)));
    locus.non_reduced = true;
    return locus;
  }

  const Poly& f = c.form().poly();
  SingularLocus locus;

  // Affine chart z = 1.
  Poly g = dehomogenize_z(f);
  BPoly bg = to_bpoly(g);
  BPoly ba = to_bpoly(g.derivative(0));
  BPoly bb = to_bpoly(g.derivative(1));
  if (!bconstant(bgcd(bgcd(bg, ba), bb)))
    throw std::logic_error("reduced curve with a singular component");
  AffineSolutions affine = solve_singular_system(bg, ba, bb);
  locus.residual += affine.residual;
  for (const auto& [x0, y0] : affine.points)
    locus.points.push_back(ProjectivePoint::of({x0, y0, Rational(1)}));

  // Line z = 0 with y = 1: a point is singular iff all partials vanish.
  UPoly px = on_infinity_line(f.derivative(0));
  UPoly py = on_infinity_line(f.derivative(1));
  UPoly pz = on_infinity_line(f.derivative(2));
  UPoly common;
  for (const UPoly* q : {&px, &py, &pz}) common = ugcd(common, *q);
  if (uzero(common))
    throw std::logic_error("reduced curve singular along the infinity line");
  if (udeg(common) >= 1) {
    UPoly sf = usquarefree(common);
    auto roots = urational_roots(sf);
    for (const auto& [x0, mult] : roots) {
      (void)mult;
      locus.points.push_back(ProjectivePoint::of({x0, Rational(1), Rational(0)}));
    }
    locus.residual += udeg(sf) - static_cast<int>(roots.size());
  }

  // Remaining point [1:0:0].
  bool corner_singular = true;
  for (int v = 0; v < 3 && corner_singular; ++v)
    if (!eval3(f.derivative(v), Rational(1), Rational(0), Rational(0)).is_zero())
      corner_singular = false;
  if (corner_singular)
    locus.points.push_back(
        ProjectivePoint::of({Rational(1), Rational(0), Rational(0)}));

  std::sort(locus.points.begin(), locus.points.end(),
            [](const ProjectivePoint& a, const ProjectivePoint& b) {
              return a.coords < b.coords;
            });
  return locus;
}

std::string label(QuarticClass c) {
  switch (c) {
    case QuarticClass::stable:
      return "stable";
    case QuarticClass::strictly_semistable:
      return "strictly-semistable";
    case QuarticClass::unstable:
      return "unstable";
    case QuarticClass::undetermined:
      return "undetermined (reducibility)";
  }
  return "undetermined (reducibility)";
}

namespace {

/// Rational linear factors of the degree-2 part of a local equation,
/// expressed as global lines through the singular point.
std::vector<Poly> tangent_cone_lines(const PlaneCurve& c, const ProjectivePoint& p) {
  int chart = charts_of(p).back();
  Poly g = local_equation(c, p, chart);
  Rational a = g.coeff(Monomial{{2, 0}});
  Rational b = g.coeff(Monomial{{1, 1}});
  Rational cc = g.coeff(Monomial{{0, 2}});

  std::vector<std::pair<Rational, Rational>> factors;  // alpha*u + beta*v
  if (a.is_zero() && cc.is_zero()) {
    if (b.is_zero()) return {};
    factors = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  } else if (a.is_zero()) {
    factors = {{Rational(0), Rational(1)}, {b, cc}};
  } else {
    // a*u^2 + b*uv + c*v^2 = a * (u - r1 v)(u - r2 v) for rational roots r.
    Rational disc = b * b - Rational(4) * a * cc;
    if (disc.sign() < 0) return {};
    mpz_class sn = sqrt(disc.num()), sd = sqrt(disc.den());
    if (sn * sn != disc.num() || sd * sd != disc.den()) return {};
    Rational root(sn, sd);
    Rational r1 = (-b + root) / (Rational(2) * a);
    Rational r2 = (-b - root) / (Rational(2) * a);
    factors = {{Rational(1), -r1}, {Rational(1), -r2}};
  }

  std::vector<int> others;
  for (int j = 0; j < 3; ++j)
    if (j != chart) others.push_back(j);
  std::vector<Poly> lines;
  for (const auto& [alpha, beta] : factors) {
    Poly line(kPlaneVars);
    Poly xi = Poly::variable(kPlaneVars, chart);
    Poly lu = Poly::variable(kPlaneVars, others[0]) -
              xi.scaled(p.coords[others[0]] / p.coords[chart]);
    Poly lv = Poly::variable(kPlaneVars, others[1]) -
              xi.scaled(p.coords[others[1]] / p.coords[chart]);
    line = lu.scaled(alpha) + lv.scaled(beta);
    if (!line.is_zero()) lines.push_back(line);
  }
  return lines;
}

Poly line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  // Cross product of the coordinate vectors.
  Rational a = p.coords[1] * q.coords[2] - p.coords[2] * q.coords[1];
  Rational b = p.coords[2] * q.coords[0] - p.coords[0] * q.coords[2];
  Rational c = p.coords[0] * q.coords[1] - p.coords[1] * q.coords[0];
  Poly line(kPlaneVars);
  line = Poly::variable(kPlaneVars, 0).scaled(a) +
         Poly::variable(kPlaneVars, 1).scaled(b) +
         Poly::variable(kPlaneVars, 2).scaled(c);
  return line;
}

std::vector<Rational> line_coeffs(const Poly& line) {
  return {line.coeff(Monomial{{1, 0, 0}}), line.coeff(Monomial{{0, 1, 0}}),
          line.coeff(Monomial{{0, 0, 1}})};
}

std::vector<Rational> normalized_coeffs(std::vector<Rational> v) {
  for (const auto& c : v)
    if (!c.is_zero()) {
      std::vector<Rational> r;
      for (const auto& x : v) r.push_back(x / c);
      return r;
    }
  return v;
}

/// Quotient F / line when the line divides F; empty optional otherwise.
std::optional<Poly> divide_by_line(const Poly& f, const std::vector<Rational>& l) {
  int pivot = -1;
  for (int i = 0; i < 3; ++i)
    if (!l[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) return std::nullopt;
  // Substitute x_pivot = (w - sum other coefficients) / l[pivot]; then the
  // line divides f iff every term of the image has positive w-exponent.
  std::vector<Poly> images(3, Poly(kPlaneVars));
  for (int i = 0; i < 3; ++i)
    if (i != pivot) images[i] = Poly::variable(kPlaneVars, i);
  Poly w = Poly::variable(kPlaneVars, pivot);
  Poly expr = w;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) expr = expr - Poly::variable(kPlaneVars, i).scaled(l[i]);
  images[pivot] = expr.scaled(Rational(1) / l[pivot]);
  Poly shifted = f.substitute(images);
  Poly quotient(kPlaneVars);
  for (const auto& [mono, coeff] : shifted.terms()) {
    if (mono.exps[pivot] == 0) return std::nullopt;
    Monomial m = mono;
    m.exps[pivot] -= 1;
    quotient.add_term(m, coeff);
  }
  // Substitute w = line back to return to the original coordinates.
  std::vector<Poly> back(3, Poly(kPlaneVars));
  for (int i = 0; i < 3; ++i)
    back[i] = i == pivot ? Poly::variable(kPlaneVars, 0).scaled(l[0]) +
                               Poly::variable(kPlaneVars, 1).scaled(l[1]) +
                               Poly::variable(kPlaneVars, 2).scaled(l[2])
                         : Poly::variable(kPlaneVars, i);
  return quotient.substitute(back);
}

/// True when the cubic meets the line with contact order 3 at a single point.
bool inflectional_contact(const Poly& cubic, const std::vector<Rational>& l) {
  Matrix row(1, 3);
  for (int i = 0; i < 3; ++i) row.at(0, i) = l[i];
  auto basis = kernel_basis(row);
  if (basis.size() != 2) throw std::logic_error("line parametrization failed");
  std::vector<std::string> st = {"s", "t"};
  std::vector<Poly> images(3, Poly(st));
  for (int i = 0; i < 3; ++i)
    images[i] = Poly::variable(st, 0).scaled(basis[0][i]) +
                Poly::variable(st, 1).scaled(basis[1][i]);
  Poly r = cubic.substitute(images);
  if (r.is_zero()) throw std::logic_error("line divides the residual cubic");
  Poly hess = r.derivative(0).derivative(0) * r.derivative(1).derivative(1) -
              r.derivative(0).derivative(1) * r.derivative(0).derivative(1);
  return hess.is_zero();
}

QuarticReport classify_non_reduced_quartic(const PlaneCurve& c) {
  QuarticReport rep;
  rep.non_reduced = true;
  auto [reduced, was_reduced] = squarefree_curve(c.form().poly());
  if (!was_reduced) throw std::logic_error("non-reduced quartic reported reduced");
  if (reduced.total_degree() == 2) {
    Poly square = reduced * reduced;
    Rational ratio;
    for (const auto& [mono, coeff] : square.terms()) {
      ratio = c.form().poly().coeff(mono) / coeff;
      break;
    }
    if (c.form().poly() == square.scaled(ratio)) {
      Rational a = reduced.coeff(Monomial{{2, 0, 0}});
      Rational b = reduced.coeff(Monomial{{1, 1, 0}});
      Rational cc = reduced.coeff(Monomial{{0, 2, 0}});
      Rational d = reduced.coeff(Monomial{{1, 0, 1}});
      Rational e = reduced.coeff(Monomial{{0, 1, 1}});
      Rational f = reduced.coeff(Monomial{{0, 0, 2}});
      Matrix m{{a, b / Rational(2), d / Rational(2)},
               {b / Rational(2), cc, e / Rational(2)},
               {d / Rational(2), e / Rational(2), f}};
      if (!det(m).is_zero()) {
        rep.verdict = QuarticClass::strictly_semistable;
        rep.reason = "double smooth conic";
        return rep;
      }
      auto vertex = kernel_basis(m);
      rep.verdict = QuarticClass::unstable;
      rep.reason = "multiplicity 4 at " + ProjectivePoint::of(vertex.front()).str();
      return rep;
    }
  }
  rep.verdict = QuarticClass::unstable;
  rep.reason = "repeated line component";
  return rep;
}

}  // namespace

QuarticReport quartic_git_class(const PlaneCurve& c) {
  if (c.degree() != 4)
    throw std::invalid_argument("quartic classification needs degree 4");

  SingularLocus locus = rational_singular_points(c);
  if (locus.non_reduced) return classify_non_reduced_quartic(c);

  QuarticReport rep;
  rep.residual = locus.residual;
  for (const ProjectivePoint& p : locus.points)
    rep.records.push_back(classify_Ak(c, p));

  for (const SingularityRecord& rec : rep.records)
    if (!rec.isolated)
      throw std::logic_error("non-isolated singularity on a reduced quartic");

  for (const SingularityRecord& rec : rep.records)
    if (rec.multiplicity >= 3) {
      rep.verdict = QuarticClass::unstable;
      rep.reason = "multiplicity " + std::to_string(rec.multiplicity) + " at " +
                   rec.point.str();
      return rep;
    }

  // Candidate lines: rational tangent-cone factors at singular points and
  // lines through pairs of singular points.
  std::set<std::vector<Rational>> candidates;
  for (const SingularityRecord& rec : rep.records)
    for (const Poly& line : tangent_cone_lines(c, rec.point))
      candidates.insert(normalized_coeffs(line_coeffs(line)));
  for (size_t i = 0; i < rep.records.size(); ++i)
    for (size_t j = i + 1; j < rep.records.size(); ++j) {
      Poly line = line_through(rep.records[i].point, rep.records[j].point);
      if (!line.is_zero()) candidates.insert(normalized_coeffs(line_coeffs(line)));
    }
  for (const auto& l : candidates) {
    auto cubic = divide_by_line(c.form().poly(), l);
    if (!cubic) continue;
    if (inflectional_contact(*cubic, l)) {
      rep.verdict = QuarticClass::unstable;
      rep.reason = "union of a cubic and an inflectional line";
      return rep;
    }
  }

  for (const SingularityRecord& rec : rep.records)
    if (rec.isolated && rec.milnor >= 3) {
      rep.verdict = QuarticClass::strictly_semistable;
      rep.reason = "singularity " + rec.label() + " at " + rec.point.str();
      return rep;
    }

  if (locus.residual > 0) {
    rep.verdict = QuarticClass::undetermined;
    rep.reason = "non-rational singular points unresolved";
    return rep;
  }

  rep.verdict = QuarticClass::stable;
  rep.reason = "only nodes and cusps";
  return rep;
}

std::string label(StabilityNotion n) {
  switch (n) {
    case StabilityNotion::a2:
      return "A2-stable";
    case StabilityNotion::a3:
      return "A3-stable";
    case StabilityNotion::a4:
      return "A4-stable";
    case StabilityNotion::a4_non_weierstrass:
      return "A4-nonW-stable";
    case StabilityNotion::a5:
      return "A5-stable";
    case StabilityNotion::weierstrass_curve:
      return "Weierstrass curve";
  }
  return "";
}

std::set<StabilityNotion> stability_class(const CurveSummary& s) {
  for (int k : s.singularities)
    if (k < 1) throw std::invalid_argument("singularity type index must be >= 1");
  auto only_up_to = [&s](int bound) {
    for (int k : s.singularities)
      if (k > bound) return false;
    return true;
  };
  std::set<StabilityNotion> classes;
  bool a2 = only_up_to(2) && !s.nodal_elliptic_tail;
  bool a3 = only_up_to(3) && !s.nodal_elliptic_tail && !s.tacnodal_elliptic_tail &&
            !s.nodal_elliptic_bridge;
  bool a4 = only_up_to(4) && !s.nodal_elliptic_tail && !s.tacnodal_elliptic_tail &&
            !s.nodal_elliptic_bridge;
  bool a5 = only_up_to(5) && !s.nodal_elliptic_tail && !s.tacnodal_elliptic_tail &&
            !s.nodal_elliptic_bridge && !s.weierstrass_marked;
  if (a2) classes.insert(StabilityNotion::a2);
  if (a3) classes.insert(StabilityNotion::a3);
  if (a4) classes.insert(StabilityNotion::a4);
  if (a4 && !s.weierstrass_marked) classes.insert(StabilityNotion::a4_non_weierstrass);
  if (a5) classes.insert(StabilityNotion::a5);
  if (a4 && s.weierstrass_marked) classes.insert(StabilityNotion::weierstrass_curve);
  return classes;
}

}  // namespace hstab
