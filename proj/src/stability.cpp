#include "hstab/stability.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace hstab {
namespace {

const std::vector<std::string>& zvars() { return Ambient::get().vars(); }

void check_weights(const std::vector<long>& w) {
  if (w.size() != 5)
    throw std::invalid_argument("weight vector must have 5 entries");
}

/// State points of the system and the nonzero coordinate axes of the point,
/// the combinatorial data every torus program is built from.
struct TorusProblem {
  std::vector<std::vector<long>> states;
  std::vector<int> axes;
};

TorusProblem torus_problem(const HPoint& h) {
  TorusProblem tp;
  tp.states = state_polytope_points(h.system);
  for (int i = 0; i < 5; ++i)
    if (!h.point.coords[i].is_zero()) tp.axes.push_back(i);
  return tp;
}

/// Feasibility program for t(beta) in P + beta*Q; an optional direction d
/// appends a variable eps with t(beta) + eps*d on the left, maximized.
LinearProgram torus_membership_lp(const TorusProblem& tp, const Rational& beta,
                                  const std::vector<long>* direction) {
  int m_states = static_cast<int>(tp.states.size());
  int m_axes = static_cast<int>(tp.axes.size());
  int cols = m_states + m_axes + (direction ? 1 : 0);
  LinearProgram lp;
  lp.constraints = Matrix(7, cols);
  lp.rhs.assign(7, Rational());
  lp.objective.assign(cols, Rational());
  lp.nonneg.assign(cols, true);
  lp.sense = LpSense::maximize;

  Rational target = (Rational(8) - beta) / Rational(5);
  for (int i = 0; i < 5; ++i) {
    for (int s = 0; s < m_states; ++s)
      lp.constraints.at(i, s) = Rational(tp.states[s][i]);
    for (int j = 0; j < m_axes; ++j)
      if (tp.axes[j] == i) lp.constraints.at(i, m_states + j) = -beta;
    if (direction)
      lp.constraints.at(i, cols - 1) = Rational(-(*direction)[i]);
    lp.rhs[i] = target;
  }
  for (int s = 0; s < m_states; ++s) lp.constraints.at(5, s) = Rational(1);
  lp.rhs[5] = Rational(1);
  for (int j = 0; j < m_axes; ++j)
    lp.constraints.at(6, m_states + j) = Rational(1);
  lp.rhs[6] = Rational(1);
  if (direction) lp.objective[cols - 1] = Rational(1);
  return lp;
}

/// Joint program over (lambda, nu) with beta = sum nu left free, so that the
/// feasible betas form the exact semistable interval.
LinearProgram beta_range_lp(const TorusProblem& tp, LpSense sense) {
  int m_states = static_cast<int>(tp.states.size());
  int m_axes = static_cast<int>(tp.axes.size());
  int cols = m_states + m_axes;
  LinearProgram lp;
  lp.constraints = Matrix(6, cols);
  lp.rhs.assign(6, Rational());
  lp.objective.assign(cols, Rational());
  lp.nonneg.assign(cols, true);
  lp.sense = sense;

  const Rational fifth(1, 5);
  for (int i = 0; i < 5; ++i) {
    for (int s = 0; s < m_states; ++s)
      lp.constraints.at(i, s) = Rational(tp.states[s][i]);
    for (int j = 0; j < m_axes; ++j)
      lp.constraints.at(i, m_states + j) =
          fifth + (tp.axes[j] == i ? Rational(-1) : Rational(0));
    lp.rhs[i] = Rational(8, 5);
  }
  for (int s = 0; s < m_states; ++s) lp.constraints.at(5, s) = Rational(1);
  lp.rhs[5] = Rational(1);
  for (int j = 0; j < m_axes; ++j) lp.objective[m_states + j] = Rational(1);
  return lp;
}

/// Negativity range of a + b*beta intersected with beta > 0, as an open
/// interval written into the certificate.
void fill_negativity_range(Certificate& cert, long a, long b) {
  cert.range_lower = Rational(0);
  cert.lower_infinite = false;
  if (b > 0) {
    cert.upper_infinite = false;
    cert.range_upper = Rational(-a) / Rational(b);
  } else if (b < 0) {
    cert.upper_infinite = true;
    if (a > 0) cert.range_lower = Rational(-a) / Rational(b);
  } else {
    cert.upper_infinite = true;
  }
}

std::vector<long> integerize(const std::vector<Rational>& v) {
  mpz_class common(1);
  for (const Rational& x : v)
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> nums;
  mpz_class g(0);
  for (const Rational& x : v) {
    Rational scaled = x * Rational(common, mpz_class(1));
    nums.push_back(scaled.num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums.back().get_mpz_t());
  }
  std::vector<long> out(v.size(), 0);
  if (g == 0) return out;
  for (size_t i = 0; i < nums.size(); ++i) {
    mpz_class reduced = nums[i] / g;
    if (!reduced.fits_slong_p())
      throw std::overflow_error("weight vector exceeds machine integers");
    out[i] = reduced.get_si();
  }
  return out;
}

}  // namespace

OnePS OnePS::diagonal(std::vector<long> w) {
  check_weights(w);
  OnePS rho;
  rho.weights = WeightVector{std::move(w)};
  return rho;
}

OnePS OnePS::framed(std::vector<long> w, Matrix rows) {
  check_weights(w);
  if (rows.rows() != 5 || rows.cols() != 5)
    throw std::invalid_argument("frame must be a 5x5 matrix");
  try {
    hstab::inverse(rows);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("frame must be invertible");
  }
  OnePS rho;
  rho.weights = WeightVector{std::move(w)};
  rho.frame = std::move(rows);
  return rho;
}

OnePS OnePS::inverse() const {
  OnePS neg = *this;
  neg.weights = weights.negated();
  return neg;
}

QuadricSystem in_frame(const QuadricSystem& s, const OnePS& rho) {
  if (!rho.frame) return s;
  Matrix cinv = hstab::inverse(*rho.frame);
  std::vector<Form> images;
  for (int j = 0; j < 5; ++j) {
    Poly lin(zvars());
    for (int m = 0; m < 5; ++m) {
      Monomial mono{std::vector<int>(5, 0)};
      mono.exps[m] = 1;
      lin.add_term(mono, cinv.at(j, m));
    }
    images.push_back(Form(lin));
  }
  std::vector<Form> gens;
  for (const Form& g : s.generators())
    gens.push_back(substitute_form(g, images));
  return QuadricSystem(gens);
}

ProjectivePoint in_frame(const ProjectivePoint& p, const OnePS& rho) {
  if (!rho.frame) return p;
  return ProjectivePoint::of(rho.frame->apply(p.coords));
}

HPoint in_frame(const HPoint& h, const OnePS& rho) {
  return HPoint(in_frame(h.system, rho), in_frame(h.point, rho));
}

long mu_point(const ProjectivePoint& p, const OnePS& rho) {
  ProjectivePoint q = in_frame(p, rho);
  bool found = false;
  long best = 0;
  for (int i = 0; i < 5; ++i) {
    if (q.coords[i].is_zero()) continue;
    long w = -rho.weights.w[i];
    if (!found || w > best) best = w;
    found = true;
  }
  if (!found) throw std::logic_error("projective point has no nonzero coordinate");
  return best;
}

long mu_system(const QuadricSystem& s, const OnePS& rho) {
  QuadricSystem t = in_frame(s, rho);
  const Ambient& amb = Ambient::get();
  bool found = false;
  long best = 0;
  for (const auto& support : minor_support(t.coefficients())) {
    long w = 0;
    for (int col : support) w += rho.weights.weight_of(amb.basis()[col]);
    if (!found || w > best) best = w;
    found = true;
  }
  if (!found) throw std::logic_error("system has no nonzero maximal minor");
  return best;
}

IndexLine hm_index_line(const HPoint& h, const OnePS& rho) {
  return IndexLine{mu_system(h.system, rho), mu_point(h.point, rho)};
}

Rational hm_index(const HPoint& h, const OnePS& rho, const Rational& beta) {
  IndexLine line = hm_index_line(h, rho);
  return Rational(line.system_weight) + beta * Rational(line.point_weight);
}

std::vector<std::vector<long>> state_polytope_points(const QuadricSystem& s) {
  const Ambient& amb = Ambient::get();
  std::set<std::vector<long>> points;
  for (const auto& support : minor_support(s.coefficients())) {
    std::vector<long> v(5, 0);
    for (int col : support)
      for (int var = 0; var < 5; ++var) v[var] += amb.basis()[col].exps[var];
    points.insert(v);
  }
  return {points.begin(), points.end()};
}

TorusVerdict torus_check(const HPoint& h, const Rational& beta) {
  if (beta <= Rational(0))
    throw std::invalid_argument("polarization parameter beta must be positive");
  TorusProblem tp = torus_problem(h);
  LpResult membership = lp_solve(torus_membership_lp(tp, beta, nullptr));
  if (membership.status == LpStatus::infeasible) return TorusVerdict::unstable;
  if (membership.status != LpStatus::optimal)
    throw std::logic_error("membership program must be bounded");

  for (int i = 0; i < 4; ++i) {
    for (int sign : {1, -1}) {
      std::vector<long> d(5, 0);
      d[i] = sign;
      d[4] = -sign;
      LpResult r = lp_solve(torus_membership_lp(tp, beta, &d));
      if (r.status != LpStatus::optimal)
        throw std::logic_error("interiority program must be bounded");
      if (r.optimum.is_zero()) return TorusVerdict::strictly_semistable;
    }
  }
  return TorusVerdict::stable;
}

BetaInterval beta_interval(const HPoint& h) {
  TorusProblem tp = torus_problem(h);
  BetaInterval interval;
  LpResult lo = lp_solve(beta_range_lp(tp, LpSense::minimize));
  if (lo.status == LpStatus::infeasible) return interval;
  if (lo.status != LpStatus::optimal)
    throw std::logic_error("beta minimization must be bounded");
  interval.empty = false;
  interval.lower = lo.optimum;
  LpResult hi = lp_solve(beta_range_lp(tp, LpSense::maximize));
  if (hi.status == LpStatus::unbounded) {
    interval.upper_finite = false;
  } else if (hi.status == LpStatus::optimal) {
    interval.upper_finite = true;
    interval.upper = hi.optimum;
  } else {
    throw std::logic_error("beta maximization cannot be infeasible here");
  }
  return interval;
}

CertificateReport verify_certificate(const Certificate& cert) {
  CertificateReport report;
  IndexLine line = hm_index_line(cert.target, cert.rho);
  report.system_weight = line.system_weight;
  report.point_weight = line.point_weight;
  if (line.system_weight != cert.claimed_system_weight ||
      line.point_weight != cert.claimed_point_weight) {
    report.detail = "claimed index line does not match the recomputed one";
    return report;
  }

  Rational a(line.system_weight), b(line.point_weight);
  auto value = [&](const Rational& beta) { return a + b * beta; };
  bool negative = false;
  if (!cert.lower_infinite && !cert.upper_infinite) {
    if (cert.range_lower < cert.range_upper) {
      Rational mid = (cert.range_lower + cert.range_upper) / Rational(2);
      negative = value(cert.range_lower) <= Rational(0) &&
                 value(cert.range_upper) <= Rational(0) &&
                 value(mid) < Rational(0);
    }
  } else if (!cert.lower_infinite && cert.upper_infinite) {
    negative = (b < Rational(0) && value(cert.range_lower) <= Rational(0)) ||
               (b == Rational(0) && a < Rational(0));
  } else if (cert.lower_infinite && !cert.upper_infinite) {
    negative = (b > Rational(0) && value(cert.range_upper) <= Rational(0)) ||
               (b == Rational(0) && a < Rational(0));
  } else {
    negative = b == Rational(0) && a < Rational(0);
  }
  if (!negative) {
    report.detail = "index is not negative on the claimed range";
    return report;
  }
  report.pass = true;
  report.detail = "index line verified and negative on the claimed range";
  return report;
}

std::vector<Monomial> quadric_monomials() { return Ambient::get().basis(); }

std::vector<Monomial> quadric_monomials_in_ideal(const std::vector<int>& vars) {
  std::vector<Monomial> out;
  for (const Monomial& m : Ambient::get().basis())
    for (int v : vars)
      if (m.exps.at(v) > 0) {
        out.push_back(m);
        break;
      }
  return out;
}

std::vector<Monomial> quadric_monomials_in(const std::vector<int>& vars) {
  std::vector<Monomial> out;
  for (const Monomial& m : Ambient::get().basis()) {
    bool ok = true;
    for (int v = 0; v < 5; ++v) {
      if (m.exps[v] == 0) continue;
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) ok = false;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

long mu_upper_bound(const QuadricSystem& net,
                    const std::vector<Monomial>& candidates, const OnePS& rho) {
  if (candidates.empty())
    throw std::invalid_argument("candidate monomial set must be nonempty");
  long best = 0;
  bool found = false;
  for (const Monomial& m : candidates) {
    Ambient::get().index_of(m);
    long w = rho.weights.weight_of(m);
    if (!found || w > best) best = w;
    found = true;
  }
  return mu_system(net, rho) + best;
}

OrderedWeightMin ordered_weight_min(const std::vector<Rational>& lambda) {
  if (lambda.size() != 5)
    throw std::invalid_argument("coefficient vector must have 5 entries");
  for (const Rational& l : lambda)
    if (l < Rational(0))
      throw std::invalid_argument("coefficient vector must be nonnegative");
  static const std::vector<std::vector<long>> rays = {
      {4, -1, -1, -1, -1}, {3, 3, -2, -2, -2}, {2, 2, 2, -3, -3},
      {1, 1, 1, 1, -4}};
  OrderedWeightMin result;
  bool first = true;
  for (const auto& ray : rays) {
    Rational v;
    for (int i = 0; i < 5; ++i) v += lambda[i] * Rational(ray[i]);
    if (first || v < result.minimum) {
      result.minimum = v;
      result.tight_ray = ray;
    }
    first = false;
  }
  result.valid = result.minimum > Rational(0);
  return result;
}

FixedPointReport stabilizer_weight_check(const HPoint& h, const OnePS& rho) {
  HPoint hf = in_frame(h, rho);
  FixedPointReport report;
  std::vector<long> weights;
  for (const Form& g : hf.system.generators()) {
    auto parts = graded_parts(g, rho.weights);
    if (parts.size() != 1) return report;
    weights.push_back(parts.begin()->first);
  }
  std::sort(weights.rbegin(), weights.rend());
  report.generator_weights = std::move(weights);
  report.fixed = hf.point.coordinate_axis() >= 0;
  return report;
}

std::optional<Certificate> destabilizer_search(const HPoint& h,
                                               const Rational& beta,
                                               int budget, std::uint64_t seed) {
  if (beta <= Rational(0))
    throw std::invalid_argument("polarization parameter beta must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);

  for (int iter = 0; iter < budget; ++iter) {
    Matrix frame = Matrix::identity(5);
    if (iter > 0) {
      std::vector<int> perm = {0, 1, 2, 3, 4};
      std::shuffle(perm.begin(), perm.end(), rng);
      Matrix up = Matrix::identity(5);
      for (int r = 0; r < 5; ++r)
        for (int c = r + 1; c < 5; ++c) up.at(r, c) = Rational(entry(rng));
      Matrix p(5, 5);
      for (int r = 0; r < 5; ++r) p.at(r, perm[r]) = Rational(1);
      frame = up * p;
    }
    OnePS transport = OnePS::framed(std::vector<long>(5, 0), frame);
    HPoint moved = in_frame(h, transport);
    TorusProblem tp = torus_problem(moved);
    LpResult r = lp_solve(torus_membership_lp(tp, beta, nullptr));
    if (r.status != LpStatus::infeasible) continue;

    Rational shift;
    for (int i = 0; i < 5; ++i) shift += r.dual[i];
    shift /= Rational(5);
    std::vector<Rational> direction(5);
    for (int i = 0; i < 5; ++i) direction[i] = r.dual[i] - shift;
    std::vector<long> w = integerize(direction);
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) continue;

    OnePS rho = iter == 0 ? OnePS::diagonal(w) : OnePS::framed(w, frame);
    IndexLine line = hm_index_line(h, rho);
    Rational index =
        Rational(line.system_weight) + beta * Rational(line.point_weight);
    if (!(index < Rational(0))) continue;

    Certificate cert{h, rho, line.system_weight, line.point_weight,
                     Rational(0), false, Rational(0), false};
    fill_negativity_range(cert, line.system_weight, line.point_weight);
    return cert;
  }
  return std::nullopt;
}

}  // namespace hstab
