/// Acceptance suite: one [PASS]/[FAIL] line per criterion with timings.
/// Exit code 0 when every criterion passes or fails exactly the way the
/// README's "Known failure" section documents; 1 on any unexpected outcome.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hstab/catalog.hpp"
#include "hstab/degeneration.hpp"
#include "hstab/picard.hpp"
#include "hstab/registry.hpp"
#include "hstab/singularities.hpp"
#include "hstab/stability.hpp"

using namespace hstab;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

OnePS diag(std::vector<long> w) { return OnePS::diagonal(std::move(w)); }

Matrix a4_frame() {
  return Matrix{{rat(1), rat(0), rat(0), rat(0), rat(0)},
                {rat(0), rat(1), rat(-1), rat(0), rat(0)},
                {rat(0), rat(0), rat(1), rat(0), rat(0)},
                {rat(0), rat(0), rat(0), rat(1), rat(0)},
                {rat(0), rat(0), rat(0), rat(0), rat(1)}};
}

WeierstrassParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den(1, 5);
  return {rat(num(rng), den(rng)), rat(num(rng), den(rng)),
          rat(num(rng), den(rng)), rat(num(rng), den(rng))};
}

QuadricSystem random_system(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<long> entry(-2, 2);
  while (true) {
    std::vector<Form> gens;
    for (int g = 0; g < dim; ++g) {
      std::vector<Rational> row(15);
      for (auto& v : row) v = rat(entry(rng));
      Form f = Ambient::get().form_of_row(row);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    QuadricSystem s(gens);
    if (s.dimension() == dim) return s;
  }
}

std::vector<long> random_weights(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-5, 5);
  std::vector<long> w(5);
  for (int i = 0; i < 4; ++i) w[i] = entry(rng);
  w[4] = -(w[0] + w[1] + w[2] + w[3]);
  return w;
}

/// Random system supported on a few monomial columns; keeps state polytopes
/// small enough for LP-based checks to run in bulk.
QuadricSystem random_sparse_system(std::mt19937_64& rng, int dim, int ncols) {
  std::uniform_int_distribution<long> entry(-2, 2);
  std::vector<int> cols(15);
  for (int i = 0; i < 15; ++i) cols[i] = i;
  while (true) {
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<Form> gens;
    for (int g = 0; g < dim; ++g) {
      std::vector<Rational> row(15);
      for (int j = 0; j < ncols; ++j) row[cols[j]] = rat(entry(rng));
      Form f = Ambient::get().form_of_row(row);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    QuadricSystem s(gens);
    if (s.dimension() == dim) return s;
  }
}

ProjectivePoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-2, 2);
  while (true) {
    std::vector<Rational> coords(5);
    bool nonzero = false;
    for (auto& c : coords) {
      c = rat(entry(rng));
      nonzero = nonzero || c != rat(0);
    }
    if (nonzero) return ProjectivePoint::of(coords);
  }
}

HPoint random_tangent_section(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-3, 3);
  const std::vector<std::string> tangent_monos = {
      "z1*z2", "z1*z3", "z1*z4", "z2^2", "z2*z3",
      "z2*z4", "z3^2",  "z3*z4", "z4^2"};
  Form extra = Ambient::get().parse("z1^2 - z0*z2");
  for (const std::string& mono : tangent_monos) {
    long c = entry(rng);
    if (c != 0) extra = extra + Ambient::get().parse(mono).scaled(rat(c));
  }
  std::vector<Form> gens = named_system("N1").generators();
  gens.push_back(extra);
  return {QuadricSystem(gens),
          ProjectivePoint::of({rat(1), rat(0), rat(0), rat(0), rat(0)})};
}

Form permute_form(const Form& f, const std::array<int, 5>& sigma) {
  Poly out(f.poly().vars());
  for (const auto& [m, c] : f.poly().terms()) {
    Monomial pm{std::vector<int>(5, 0)};
    for (int i = 0; i < 5; ++i) pm.exps[sigma[i]] = m.exps[i];
    out.add_term(pm, c);
  }
  return Form(out);
}

QuadricSystem permute_system(const QuadricSystem& s,
                             const std::array<int, 5>& sigma) {
  std::vector<Form> gens;
  for (const Form& g : s.generators()) gens.push_back(permute_form(g, sigma));
  return QuadricSystem(gens);
}

ProjectivePoint permute_point(const ProjectivePoint& p,
                              const std::array<int, 5>& sigma) {
  std::vector<Rational> coords(5);
  for (int i = 0; i < 5; ++i) coords[sigma[i]] = p.coords[i];
  return ProjectivePoint::of(coords);
}

std::vector<long> permute_weights(const std::vector<long>& w,
                                  const std::array<int, 5>& sigma) {
  std::vector<long> out(5);
  for (int i = 0; i < 5; ++i) out[sigma[i]] = w[i];
  return out;
}

/// Random 4-dimensional marked system fixed by diag(w): generators are
/// weight-homogeneous combinations drawn bucket by bucket, marked at a
/// coordinate axis.
HPoint random_fixed_hpoint(std::mt19937_64& rng, const std::vector<long>& w) {
  WeightVector wv{w};
  std::map<long, std::vector<Monomial>> buckets;
  for (const Monomial& m : quadric_monomials())
    buckets[wv.weight_of(m)].push_back(m);
  std::vector<long> keys;
  for (const auto& [k, v] : buckets) keys.push_back(k);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<int> axis(0, 4);
  while (true) {
    std::shuffle(keys.begin(), keys.end(), rng);
    std::vector<Form> gens;
    for (long key : keys) {
      for (int draw = 0; draw < 2 && static_cast<int>(gens.size()) < 4;
           ++draw) {
        std::vector<Rational> row(15);
        bool nonzero = false;
        for (const Monomial& m : buckets[key]) {
          long c = entry(rng);
          row[Ambient::get().index_of(m)] = rat(c);
          nonzero = nonzero || c != 0;
        }
        if (nonzero) gens.push_back(Ambient::get().form_of_row(row));
      }
      if (static_cast<int>(gens.size()) == 4) break;
    }
    if (gens.size() < 4) continue;
    QuadricSystem s(gens);
    if (s.dimension() != 4) continue;
    std::vector<Rational> coords(5);
    coords[axis(rng)] = rat(1);
    return {s, ProjectivePoint::of(coords)};
  }
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ")";
  return os.str();
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

struct Check {
  std::vector<std::string> notes;
  bool ok = true;

  bool expect(bool cond, const std::string& what) {
    if (!cond) {
      notes.push_back("failed: " + what);
      ok = false;
    }
    return cond;
  }
};

// ---------------------------------------------------------------------------

bool crit1_atom_stabilizer(Check& c) {
  HPoint h = named_hpoint("C_R");
  OnePS rho = diag({13, 8, 3, -7, -17});
  FixedPointReport rep = stabilizer_weight_check(h, rho);
  c.expect(rep.fixed, "atom fixed under (13,8,3,-7,-17)");
  std::multiset<long> got(rep.generator_weights.begin(),
                          rep.generator_weights.end());
  c.expect(got == std::multiset<long>{6, -4, -14, 16},
           "generator weight multiset {6,-4,-14,16}");
  IndexLine line = hm_index_line(h, rho);
  c.expect(line.system_weight == 4 && line.point_weight == -13,
           "index line 4 - 13*beta");
  return c.ok;
}

bool crit2_atom_wall(Check& c) {
  HPoint h = named_hpoint("C_R");
  c.expect(torus_check(h, rat(4, 13)) == TorusVerdict::strictly_semistable,
           "torus check strictly semistable at 4/13");
  BetaInterval iv = beta_interval(h);
  c.expect(!iv.empty && iv.lower == rat(4, 13) && iv.upper_finite &&
               iv.upper == rat(4, 13),
           "semistability interval [4/13, 4/13]");
  return c.ok;
}

bool crit3_a5_wall(Check& c) {
  HPoint h = named_hpoint("A5_CURVE");
  BetaInterval iv = beta_interval(h);
  c.expect(!iv.empty && iv.lower == rat(1, 2) && iv.upper_finite &&
               iv.upper == rat(1, 2),
           "semistability interval [1/2, 1/2]");
  IndexLine line = hm_index_line(h, diag({-2, -1, 0, 1, 2}));
  c.expect(line.system_weight == -1 && line.point_weight == 2,
           "index line -1 + 2*beta");
  return c.ok;
}

bool crit4_certificates(Check& c) {
  c.expect(mu_upper_bound(named_system("N3"), quadric_monomials(),
                          diag({-1, 1, 1, 0, -1})) == -1,
           "N3 bound -1 under (-1,1,1,0,-1)");
  c.expect(mu_upper_bound(named_system("N4"), quadric_monomials(),
                          diag({-1, 1, 0, 0, 0})) == -2,
           "N4 bound -2 under (-1,1,0,0,0)");
  c.expect(mu_upper_bound(named_system("N5"), quadric_monomials(),
                          diag({3, -1, -4, 3, -1})) == -2,
           "N5 bound -2 under (3,-1,-4,3,-1)");
  c.expect(mu_upper_bound(named_system("N2"),
                          quadric_monomials_in_ideal({0, 2, 3, 4}),
                          diag({-1, 4, -1, -1, -1})) == -3,
           "N2 bound -3 with extra from (z0,z2,z3,z4) under (-1,4,-1,-1,-1)");
  OnePS rho = diag({7, 2, 2, -3, -8});
  c.expect(mu_upper_bound(named_system("N1"),
                          quadric_monomials_in({1, 2, 3, 4}), rho) == 1,
           "N1 bound 1 with extra in the variables z1..z4 under (7,2,2,-3,-8)");
  ProjectivePoint p =
      ProjectivePoint::of({rat(1), rat(0), rat(0), rat(0), rat(0)});
  c.expect(mu_point(p, rho) == -7, "mu(p) = -7 under (7,2,2,-3,-8)");
  return c.ok;
}

bool crit5_limits(Check& c) {
  std::mt19937_64 rng(50125);
  HPoint atom = named_hpoint("C_R");
  OnePS rho_r = diag({13, 8, 3, -7, -17});
  int hits = 0;
  for (int trial = 0; trial < 25; ++trial)
    if (limit_max(weierstrass_hpoint(random_params(rng)), rho_r) == atom)
      ++hits;
  c.expect(hits == 25, "25/25 random Weierstrass members limit to the atom");

  OnePS framed = OnePS::framed({-13, -8, -3, 7, 17}, a4_frame());
  c.expect(limit_max(named_hpoint("A4_CURVE"), framed) == atom,
           "conjugated limit of the A4 curve is the atom");

  c.expect(path_limit(path_family({"z0*z3 - t*z1*z2 - z2^2 + t*z2^2",
                                   "z0*z4 - t*z1*z3 - z2*z3 + t*z2*z3",
                                   "z2*z4 - z3^2"})) == named_system("N2"),
           "path limit reproduces N2");
  c.expect(path_limit(path_family({"z0*z3 - t*z1*z2", "z0*z4 - t*z1*z3",
                                   "z2*z4 - z3^2"})) == named_system("N3"),
           "path limit reproduces N3");
  c.expect(path_limit(path_family({"t*z2*z3 - z0*z4", "z0*z3 - t*z1*z4",
                                   "z0^2 - t^2*z1*z2"})) == named_system("N4"),
           "path limit reproduces N4");
  c.expect(path_limit(path_family({"t*z0*z3 - z1*z2", "z0*z4 - z1*z3",
                                   "z2*z4 - t*z3^2"})) == named_system("N5"),
           "path limit reproduces N5");

  HPoint a5 = named_hpoint("A5_CURVE");
  OnePS rho_t = diag({2, 1, 0, -1, -2});
  int tangent_hits = 0;
  for (int trial = 0; trial < 20; ++trial)
    if (limit_max(random_tangent_section(rng), rho_t) == a5) ++tangent_hits;
  c.expect(tangent_hits == 20,
           "20/20 random tangent sections limit to the A5 curve");
  return c.ok;
}

bool crit6_weierstrass_instability(Check& c) {
  std::mt19937_64 rng(60126);
  OnePS rho_r = diag({13, 8, 3, -7, -17});
  for (const Rational& beta : {rat(1, 3), rat(1, 2)}) {
    Rational want = rat(4) - rat(13) * beta;
    int hits = 0;
    for (int trial = 0; trial < 25; ++trial) {
      Rational v = hm_index(weierstrass_hpoint(random_params(rng)), rho_r, beta);
      if (v == want && v < rat(0)) ++hits;
    }
    c.expect(hits == 25,
             "25/25 members have index 4 - 13*beta < 0 at beta = " + beta.str());
  }
  return c.ok;
}

bool crit7_ordered_minimum(Check& c, bool& documented_pattern) {
  const std::vector<std::vector<Rational>> lambdas = {
      {rat(11, 3), rat(0), rat(1), rat(2), rat(1)},
      {rat(7, 2), rat(0), rat(3, 2), rat(3, 2), rat(3, 2)},
      {rat(8, 3), rat(0), rat(5, 3), rat(5, 3), rat(5, 3)},
      {rat(5, 3), rat(2), rat(4, 3), rat(4, 3), rat(4, 3)}};
  const int samples = 10000;
  std::vector<bool> vec_pass;
  for (size_t k = 0; k < lambdas.size(); ++k) {
    const auto& lambda = lambdas[k];
    OrderedWeightMin m = ordered_weight_min(lambda);
    std::mt19937_64 rng(7700 + k);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    int nonneg = 0;
    for (int s = 0; s < samples; ++s) {
      std::vector<Rational> w(5);
      for (auto& x : w) x = rat(num(rng), den(rng));
      std::sort(w.begin(), w.end(), [](const Rational& a, const Rational& b) {
        return b < a;
      });
      Rational mean(0);
      for (const auto& x : w) mean += x;
      mean = mean / rat(5);
      Rational dot(0);
      for (int i = 0; i < 5; ++i) dot += lambda[i] * (w[i] - mean);
      if (!(dot < rat(0))) ++nonneg;
    }
    bool ok = m.valid && !(m.minimum < rat(0)) && nonneg == samples;
    vec_pass.push_back(ok);
    std::ostringstream os;
    os << (ok ? "[PASS]" : "[FAIL]") << " lambda = " << join_rationals(lambda)
       << ": " << (m.valid ? "valid" : "invalid (strict partial sums fail)")
       << ", ray minimum " << m.minimum.str() << " at "
       << join_longs(m.tight_ray) << ", samples " << nonneg << "/" << samples
       << " nonnegative";
    c.notes.push_back(os.str());
    c.ok = c.ok && ok;
  }
  documented_pattern =
      vec_pass == std::vector<bool>{true, true, false, true};
  return c.ok;
}

bool crit8_quartics(Check& c) {
  auto has_record = [](const QuarticReport& rep, const std::string& label,
                       const std::string& point) {
    for (const auto& r : rep.records)
      if (r.label() == label && r.point.str() == point) return true;
    return false;
  };
  QuarticReport a4 = quartic_git_class(
      PlaneCurve::parse("(y*z - x^2)^2 - x^3*z"));
  c.expect(a4.records.size() == 2 && has_record(a4, "A2", "[0:0:1]") &&
               has_record(a4, "A4", "[0:1:0]"),
           "A2 at [0:0:1] and A4 at [0:1:0] on (yz - x^2)^2 - x^3 z");
  c.expect(a4.verdict == QuarticClass::strictly_semistable,
           "(yz - x^2)^2 - x^3 z strictly semistable");
  QuarticReport a5 = quartic_git_class(PlaneCurve::parse("z*(z*y^2 - x^3)"));
  c.expect(a5.records.size() == 2 && has_record(a5, "A2", "[0:0:1]") &&
               has_record(a5, "A5", "[0:1:0]"),
           "A2 and A5 on z(zy^2 - x^3)");
  c.expect(a5.verdict == QuarticClass::unstable, "z(zy^2 - x^3) unstable");
  QuarticReport dc = quartic_git_class(PlaneCurve::parse("(y*z - x^2)^2"));
  c.expect(dc.verdict == QuarticClass::strictly_semistable,
           "(yz - x^2)^2 strictly semistable");
  for (long k = 1; k <= 5; ++k) {
    std::ostringstream germ;
    germ << "y^2 - x^" << (k + 1);
    MilnorResult m = milnor_local(Poly::parse(germ.str(), {"x", "y"}));
    c.expect(m.isolated && m.value == k,
             "milnor(y^2 - x^" + std::to_string(k + 1) + ") = " +
                 std::to_string(k));
  }
  return c.ok;
}

bool crit9_lifts(Check& c) {
  c.expect(quartic_lift(Form::parse("(y*z - x^2)^2 - x^3*z",
                                    {"x", "y", "z"})).system ==
               named_system("A4_CURVE"),
           "quartic lift of (yz - x^2)^2 - x^3 z is the A4 curve system");
  c.expect(quartic_lift(Form::parse("z*(z*y^2 - x^3)", {"x", "y", "z"}))
                   .system == named_system("A5_CURVE"),
           "quartic lift of z(zy^2 - x^3) is the A5 curve system");
  std::mt19937_64 rng(90129);
  int hits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    WeierstrassParams p = random_params(rng);
    if (verify_parametrization(weierstrass_hpoint(p), p).pass) ++hits;
  }
  c.expect(hits == 100, "100/100 random parametrization checks pass");
  return c.ok;
}

bool crit10_picard(Check& c) {
  auto a413 = alpha_of_beta(rat(4, 13));
  c.expect(a413 && a413->alpha == rat(2, 3) && a413->factor > rat(0),
           "alpha(4/13) = 2/3");
  auto a12 = alpha_of_beta(rat(1, 2));
  c.expect(a12 && a12->alpha == rat(19, 29) && a12->factor > rat(0),
           "alpha(1/2) = 19/29");
  DivClass zero;
  c.expect(reduce(l_beta(rat(1, 2)), weierstrass_quotient_relations()) == zero,
           "L_{1/2} reduces to zero under both relations");
  c.expect(reduce(DivClass::weierstrass_class(),
                  weierstrass_quotient_relations()) == zero,
           "3*psi - lambda - delta_{1,1} reduces to zero under both relations");
  c.expect(family_coefficient_weights() ==
               std::vector<long>{-4, -6, -8, -10},
           "family coefficient weights (-4,-6,-8,-10)");
  return c.ok;
}

bool crit11_invariants(Check& c) {
  const int trials = 1000;
  std::mt19937_64 rng(110131);
  std::uniform_int_distribution<int> dim(3, 4);
  std::uniform_int_distribution<long> beta_num(1, 9);
  std::uniform_int_distribution<long> beta_den(1, 9);

  int width_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadricSystem s = random_system(rng, dim(rng));
    OnePS rho = diag(random_weights(rng));
    if (mu_system(s, rho) + mu_system(s, rho.inverse()) < 0) ++width_bad;
  }
  c.expect(width_bad == 0, "support-function width >= 0 (" +
                               std::to_string(trials) + " trials)");

  int antisym_bad = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<long> w = random_weights(rng);
    HPoint h = random_fixed_hpoint(rng, w);
    OnePS rho = diag(w);
    if (!stabilizer_weight_check(h, rho).fixed) {
      ++antisym_bad;
      continue;
    }
    Rational beta = rat(beta_num(rng), beta_den(rng));
    if (hm_index(h, rho, beta) != -hm_index(h, rho.inverse(), beta))
      ++antisym_bad;
  }
  c.expect(antisym_bad == 0, "stabilizer antisymmetry (" +
                                 std::to_string(trials) + " trials)");

  int perm_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadricSystem s = random_system(rng, dim(rng));
    std::vector<long> w = random_weights(rng);
    std::array<int, 5> sigma = {0, 1, 2, 3, 4};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    if (mu_system(permute_system(s, sigma), diag(permute_weights(w, sigma))) !=
        mu_system(s, diag(w)))
      ++perm_bad;
    if (t % 10 == 0) {
      HPoint h{random_sparse_system(rng, 4, 7), random_point(rng)};
      HPoint ph{permute_system(h.system, sigma),
                permute_point(h.point, sigma)};
      Rational beta = rat(beta_num(rng), beta_den(rng));
      if (torus_check(h, beta) != torus_check(ph, beta)) ++perm_bad;
    }
  }
  c.expect(perm_bad == 0, "permutation equivariance (" +
                              std::to_string(trials) + " trials)");

  int hyperplane_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadricSystem s = random_system(rng, dim(rng));
    for (const auto& v : state_polytope_points(s)) {
      long sum = 0;
      for (long x : v) sum += x;
      if (sum != 2L * s.dimension()) ++hyperplane_bad;
    }
  }
  c.expect(hyperplane_bad == 0, "state-polytope points sum to 2k (" +
                                    std::to_string(trials) + " trials)");

  int limit_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadricSystem s = random_system(rng, dim(rng));
    OnePS rho = diag(random_weights(rng));
    QuadricSystem lim = limit_max(s, rho);
    if (limit_max(lim, rho) != lim) ++limit_bad;
    if (lim.dimension() != s.dimension()) ++limit_bad;
    if (!is_fixed(lim, rho)) ++limit_bad;
  }
  c.expect(limit_bad == 0, "limit idempotence, dimension, fixedness (" +
                               std::to_string(trials) + " trials)");

  int mu_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadricSystem s = random_system(rng, dim(rng));
    OnePS rho = diag(random_weights(rng));
    if (mu_system(limit_max(s, rho), rho) != mu_system(s, rho)) ++mu_bad;
  }
  c.expect(mu_bad == 0, "mu_system equals mu_system of the limit (" +
                            std::to_string(trials) + " trials)");
  return c.ok;
}

bool crit12_registry(Check& c) {
  auto checks = run_registry({});
  c.expect(checks.size() == 28, "registry runs 28 checks");
  int failing = 0;
  for (const auto& r : checks)
    if (!r.passed()) {
      ++failing;
      c.notes.push_back("unexpected registry failure: " + r.id);
    }
  c.expect(failing == 0, "every registry check passes");

  RegistryOptions tampered;
  tampered.tamper = true;
  std::vector<std::string> flipped;
  for (const auto& r : run_registry(tampered))
    if (!r.passed()) flipped.push_back(r.id);
  c.expect(flipped == std::vector<std::string>{"L:Gm-action", "S:atom",
                                               "T:maintheorem-E"},
           "tampering flips exactly the targeted checks");
  return c.ok;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<bool(Check&)> run;
    double budget_seconds;  // 0 = no budget
  };

  bool crit7_documented = false;
  const std::vector<Criterion> criteria = {
      {1, "stabilizer and index of the ramphoid-cuspidal atom",
       crit1_atom_stabilizer, 1.0},
      {2, "omitted torus calculation: wall of the atom", crit2_atom_wall, 5.0},
      {3, "A5 wall and index line", crit3_a5_wall, 0},
      {4, "destabilization certificates", crit4_certificates, 0},
      {5, "flat limits and degeneration paths", crit5_limits, 0},
      {6, "Weierstrass instability beyond the wall",
       crit6_weierstrass_instability, 0},
      {7, "ordered-minimum property suite",
       [&](Check& c) { return crit7_ordered_minimum(c, crit7_documented); },
       0},
      {8, "quartic singularity catalog and GIT classes", crit8_quartics, 0},
      {9, "lift round-trips and parametrization checks", crit9_lifts, 0},
      {10, "divisor-class identities", crit10_picard, 0},
      {11, "randomized invariant suites", crit11_invariants, 0},
      {12, "end-to-end claim registry with negative control", crit12_registry,
       60.0},
  };

  int unexpected = 0;
  int passed = 0;
  for (const auto& crit : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    bool ok = crit.run(check);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = crit.budget_seconds == 0 || seconds < crit.budget_seconds;
    std::string tag;
    if (ok && in_budget) {
      tag = "[PASS]";
      ++passed;
    } else if (crit.number == 7 && !ok && in_budget && crit7_documented) {
      tag = "[FAIL]";
    } else {
      tag = "[FAIL]";
      ++unexpected;
    }
    std::printf("%s criterion %2d: %s (%.3f s)%s\n", tag.c_str(), crit.number,
                crit.title, seconds,
                !in_budget ? " OVER TIME BUDGET"
                : (crit.number == 7 && !ok && crit7_documented)
                    ? " expected failure, see README \"Known failure\""
                    : "");
    for (const auto& note : check.notes)
      std::printf("        %s\n", note.c_str());
  }
  std::printf("%d/%zu criteria passed", passed, criteria.size());
  if (passed < static_cast<int>(criteria.size()) && unexpected == 0)
    std::printf("; all failures are documented expected failures");
  std::printf("\n");
  return unexpected == 0 ? 0 : 1;
}
