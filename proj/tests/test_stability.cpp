#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hstab/catalog.hpp"
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

Rational leibniz_det(const Matrix& m, const std::vector<int>& cols) {
  int k = m.rows();
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  Rational total;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational prod(1);
    for (int i = 0; i < k; ++i) prod *= m.at(i, cols[perm[i]]);
    total += inversions % 2 == 0 ? prod : -prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Brute-force mu_system: maximal weight over all nonzero maximal minors.
long brute_mu(const QuadricSystem& s, const std::vector<long>& w) {
  const Matrix& m = s.coefficients();
  const auto& basis = Ambient::get().basis();
  int k = m.rows(), n = m.cols();
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  bool found = false;
  long best = 0;
  while (true) {
    if (!leibniz_det(m, cols).is_zero()) {
      long weight = 0;
      for (int col : cols)
        for (int v = 0; v < 5; ++v) weight += w[v] * basis[col].exps[v];
      if (!found || weight > best) best = weight;
      found = true;
    }
    int i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  REQUIRE(found);
  return best;
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

WeierstrassParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den(1, 5);
  return {rat(num(rng), den(rng)), rat(num(rng), den(rng)),
          rat(num(rng), den(rng)), rat(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("index line and stabilizer of the ramphoid cuspidal atom") {
  HPoint cr = named_hpoint("C_R");
  OnePS rho = diag({13, 8, 3, -7, -17});

  IndexLine line = hm_index_line(cr, rho);
  CHECK(line.system_weight == 4);
  CHECK(line.point_weight == -13);
  CHECK(hm_index(cr, rho, rat(4, 13)) == rat(0));
  CHECK(hm_index(cr, rho, rat(1, 2)) == rat(-5, 2));
  CHECK(hm_index(cr, rho, rat(1, 4)) == rat(3, 4));

  FixedPointReport fix = stabilizer_weight_check(cr, rho);
  CHECK(fix.fixed);
  CHECK(fix.generator_weights == std::vector<long>{16, 6, -4, -14});

  FixedPointReport broken = stabilizer_weight_check(cr, diag({1, 1, 1, 1, -4}));
  CHECK_FALSE(broken.fixed);
  CHECK(broken.generator_weights.empty());
}

TEST_CASE("index line and stabilizer of the A5 curve") {
  HPoint a5 = named_hpoint("A5_CURVE");
  OnePS rho = diag({-2, -1, 0, 1, 2});

  IndexLine line = hm_index_line(a5, rho);
  CHECK(line.system_weight == -1);
  CHECK(line.point_weight == 2);
  CHECK(hm_index(a5, rho, rat(1, 2)) == rat(0));
  CHECK(hm_index(a5, rho, rat(1, 3)) == rat(-1, 3));

  FixedPointReport fix = stabilizer_weight_check(a5, rho);
  CHECK(fix.fixed);
  CHECK(fix.generator_weights == std::vector<long>{2, 0, -1, -2});
}

TEST_CASE("framed subgroup destabilizes the A4 curve below the wall") {
  HPoint a4 = named_hpoint("A4_CURVE");
  OnePS rho = OnePS::framed({-13, -8, -3, 7, 17}, a4_frame());

  CHECK(in_frame(a4.point, rho).str() == "[1:0:0:0:0]");
  IndexLine line = hm_index_line(a4, rho);
  CHECK(line.system_weight == -4);
  CHECK(line.point_weight == 13);

  CHECK_FALSE(stabilizer_weight_check(a4, rho).fixed);

  Certificate cert{a4, rho, -4, 13, rat(0), false, rat(4, 13), false};
  CertificateReport rep = verify_certificate(cert);
  CHECK(rep.pass);
  CHECK(rep.system_weight == -4);

  Certificate wrong_line{a4, rho, 4, -13, rat(0), false, rat(4, 13), false};
  CHECK_FALSE(verify_certificate(wrong_line).pass);

  Certificate wrong_range{a4, rho, -4, 13, rat(4, 13), false, rat(1), false};
  CHECK_FALSE(verify_certificate(wrong_range).pass);

  Certificate empty_range{a4, rho, -4, 13, rat(1, 4), false, rat(1, 8), false};
  CHECK_FALSE(verify_certificate(empty_range).pass);
}

TEST_CASE("certificates with infinite range ends") {
  HPoint cr = named_hpoint("C_R");
  OnePS rho = diag({13, 8, 3, -7, -17});
  Certificate above{cr, rho, 4, -13, rat(4, 13), false, rat(0), true};
  CHECK(verify_certificate(above).pass);

  Certificate below{cr, rho, 4, -13, rat(0), false, rat(4, 13), false};
  CHECK_FALSE(verify_certificate(below).pass);
}

TEST_CASE("frame changes transform systems and points consistently") {
  HPoint a4 = named_hpoint("A4_CURVE");
  OnePS move = OnePS::framed({0, 0, 0, 0, 0}, a4_frame());
  HPoint moved = in_frame(a4, move);
  CHECK(moved.system.contains(Ambient::get().parse("z1^2 - z0*z2")));
  CHECK(moved.system != a4.system);

  OnePS back = OnePS::framed({0, 0, 0, 0, 0}, inverse(a4_frame()));
  CHECK(in_frame(moved, back) == a4);

  CHECK_THROWS_AS(OnePS::framed({1, 2, 3}, a4_frame()), std::invalid_argument);
  Matrix singular(5, 5);
  CHECK_THROWS_AS(OnePS::framed({0, 0, 0, 0, 0}, singular), std::invalid_argument);
}

TEST_CASE("mu_point picks the heaviest nonzero coordinate") {
  OnePS rho = diag({5, 4, 3, 2, 1});
  CHECK(mu_point(ProjectivePoint::of({rat(1), rat(0), rat(0), rat(0), rat(0)}), rho) == -5);
  CHECK(mu_point(ProjectivePoint::of({rat(0), rat(1), rat(0), rat(0), rat(-3)}), rho) == -1);
  CHECK(mu_point(ProjectivePoint::of({rat(1), rat(1), rat(1), rat(1), rat(1)}), rho) == -1);
}

TEST_CASE("mu_system agrees with the brute-force support maximum") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 12; ++trial) {
    QuadricSystem s = random_system(rng, trial % 2 == 0 ? 3 : 4);
    std::vector<long> w = random_weights(rng);
    CHECK(mu_system(s, diag(w)) == brute_mu(s, w));
  }
}

TEST_CASE("mu_system is equivariant under coordinate permutations") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 10; ++trial) {
    QuadricSystem s = random_system(rng, 4);
    std::vector<long> w = random_weights(rng);
    std::vector<int> perm = {0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix p(5, 5);
    std::vector<long> moved(5);
    for (int r = 0; r < 5; ++r) {
      p.at(r, perm[r]) = rat(1);
      moved[r] = w[perm[r]];
    }
    CHECK(mu_system(s, OnePS::framed(moved, p)) == mu_system(s, diag(w)));
  }
}

TEST_CASE("support function width is nonnegative and zero for fixed points") {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 10; ++trial) {
    QuadricSystem s = random_system(rng, 4);
    std::vector<long> w = random_weights(rng);
    CHECK(mu_system(s, diag(w)) + mu_system(s, diag(w).inverse()) >= 0);
  }
  QuadricSystem cr = named_system("C_R");
  OnePS rho = diag({13, 8, 3, -7, -17});
  CHECK(mu_system(cr, rho) == 4);
  CHECK(mu_system(cr, rho.inverse()) == -4);
}

TEST_CASE("state polytope of C_R") {
  auto points = state_polytope_points(named_system("C_R"));
  // 16 supports, but two exponent-sum coincidences leave 14 distinct points.
  REQUIRE(points.size() == 14);
  std::set<std::vector<long>> seen(points.begin(), points.end());
  CHECK(seen.count({3, 0, 2, 1, 2}) == 1);
  CHECK(seen.count({2, 2, 1, 1, 2}) == 1);
  CHECK(seen.count({0, 8, 0, 0, 0}) == 0);
  for (const auto& v : points) {
    long total = 0;
    for (long x : v) total += x;
    CHECK(total == 8);
  }
  for (const auto& v : state_polytope_points(named_system("N1"))) {
    long total = 0;
    for (long x : v) total += x;
    CHECK(total == 6);
  }
}

TEST_CASE("torus verdicts at the ramphoid cusp wall") {
  HPoint cr = named_hpoint("C_R");
  CHECK(torus_check(cr, rat(4, 13)) == TorusVerdict::strictly_semistable);
  CHECK(torus_check(cr, rat(1, 4)) == TorusVerdict::unstable);
  CHECK(torus_check(cr, rat(1, 2)) == TorusVerdict::unstable);
  CHECK_THROWS_AS(torus_check(cr, rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(torus_check(cr, rat(-1, 3)), std::invalid_argument);

  BetaInterval interval = beta_interval(cr);
  REQUIRE_FALSE(interval.empty);
  REQUIRE(interval.upper_finite);
  CHECK(interval.lower == rat(4, 13));
  CHECK(interval.upper == rat(4, 13));
}

TEST_CASE("torus verdicts at the A5 wall") {
  HPoint a5 = named_hpoint("A5_CURVE");
  CHECK(torus_check(a5, rat(1, 2)) == TorusVerdict::strictly_semistable);
  CHECK(torus_check(a5, rat(1, 3)) == TorusVerdict::unstable);
  CHECK(torus_check(a5, rat(2, 3)) == TorusVerdict::unstable);

  BetaInterval interval = beta_interval(a5);
  REQUIRE_FALSE(interval.empty);
  REQUIRE(interval.upper_finite);
  CHECK(interval.lower == rat(1, 2));
  CHECK(interval.upper == rat(1, 2));
}

TEST_CASE("weierstrass pairs keep the atom's index line and wall") {
  std::mt19937_64 rng(401);
  OnePS rho = diag({13, 8, 3, -7, -17});
  for (int trial = 0; trial < 8; ++trial) {
    HPoint h = weierstrass_hpoint(random_params(rng));
    IndexLine line = hm_index_line(h, rho);
    CHECK(line.system_weight == 4);
    CHECK(line.point_weight == -13);
    CHECK(hm_index(h, rho, rat(1, 3)) == rat(-1, 3));
    CHECK(hm_index(h, rho, rat(1, 2)) == rat(-5, 2));

    BetaInterval interval = beta_interval(h);
    REQUIRE_FALSE(interval.empty);
    REQUIRE(interval.upper_finite);
    CHECK(interval.upper == rat(4, 13));
    CHECK(interval.lower <= interval.upper);
    CHECK(torus_check(h, rat(4, 13)) != TorusVerdict::unstable);
    CHECK(torus_check(h, rat(1, 2)) == TorusVerdict::unstable);
  }
}

TEST_CASE("torus_check matches the beta interval pointwise") {
  std::mt19937_64 rng(503);
  std::vector<HPoint> targets = {named_hpoint("C_R"), named_hpoint("A5_CURVE"),
                                 named_hpoint("A4_CURVE"),
                                 weierstrass_hpoint(random_params(rng))};
  std::vector<Rational> betas = {rat(1, 5),  rat(4, 13), rat(1, 3), rat(2, 5),
                                 rat(1, 2),  rat(3, 5),  rat(1),    rat(2),
                                 rat(13, 4), rat(8)};
  for (const HPoint& h : targets) {
    BetaInterval interval = beta_interval(h);
    for (const Rational& beta : betas) {
      bool inside = !interval.empty && interval.lower <= beta &&
                    (!interval.upper_finite || beta <= interval.upper);
      CHECK((torus_check(h, beta) != TorusVerdict::unstable) == inside);
    }
  }
}

TEST_CASE("instability bounds for degenerate nets") {
  auto all = quadric_monomials();
  CHECK(all.size() == 15);

  OnePS rho3 = diag({-1, 1, 1, 0, -1});
  CHECK(mu_system(named_system("N3"), rho3) == -3);
  CHECK(mu_upper_bound(named_system("N3"), all, rho3) == -1);

  OnePS rho4 = diag({-1, 1, 0, 0, 0});
  CHECK(mu_system(named_system("N4"), rho4) == -4);
  CHECK(mu_upper_bound(named_system("N4"), all, rho4) == -2);

  OnePS rho5 = diag({3, -1, -4, 3, -1});
  CHECK(mu_system(named_system("N5"), rho5) == -8);
  CHECK(mu_upper_bound(named_system("N5"), all, rho5) == -2);

  OnePS rho_vertex = diag({-1, 4, -1, -1, -1});
  auto through_vertex = quadric_monomials_in_ideal({0, 2, 3, 4});
  CHECK(through_vertex.size() == 14);
  CHECK(mu_system(named_system("N2"), rho_vertex) == -6);
  CHECK(mu_upper_bound(named_system("N2"), through_vertex, rho_vertex) == -3);

  OnePS rho_sing = diag({7, 2, 2, -3, -8});
  auto tangent = quadric_monomials_in({1, 2, 3, 4});
  CHECK(tangent.size() == 10);
  CHECK(mu_system(named_system("N1"), rho_sing) == -3);
  CHECK(mu_upper_bound(named_system("N1"), tangent, rho_sing) == 1);
  CHECK(mu_point(named_hpoint("C_R").point, rho_sing) == -7);

  CHECK_THROWS_AS(mu_upper_bound(named_system("N1"), {}, rho3),
                  std::invalid_argument);
}

TEST_CASE("ordered weight minimization on the extreme rays") {
  auto lam = [](std::vector<Rational> v) { return v; };

  OrderedWeightMin a = ordered_weight_min(lam({rat(11, 3), rat(0), rat(1), rat(2), rat(1)}));
  CHECK(a.valid);
  CHECK(a.minimum == rat(1, 3));
  CHECK(a.tight_ray == std::vector<long>{2, 2, 2, -3, -3});

  OrderedWeightMin b = ordered_weight_min(
      lam({rat(7, 2), rat(0), rat(3, 2), rat(3, 2), rat(3, 2)}));
  CHECK(b.valid);
  CHECK(b.minimum == rat(1, 2));

  OrderedWeightMin c = ordered_weight_min(
      lam({rat(19, 6), rat(0), rat(3, 2), rat(3, 2), rat(3, 2)}));
  CHECK(c.valid);
  CHECK(c.minimum == rat(1, 6));

  OrderedWeightMin d = ordered_weight_min(
      lam({rat(8, 3), rat(0), rat(5, 3), rat(5, 3), rat(5, 3)}));
  CHECK_FALSE(d.valid);
  CHECK(d.minimum == rat(-2));
  CHECK(d.tight_ray == std::vector<long>{3, 3, -2, -2, -2});

  OrderedWeightMin e = ordered_weight_min(
      lam({rat(5, 3), rat(2), rat(4, 3), rat(4, 3), rat(4, 3)}));
  CHECK(e.valid);
  CHECK(e.minimum == rat(2, 3));

  CHECK_THROWS_AS(ordered_weight_min({rat(1), rat(-1), rat(0), rat(0), rat(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ordered_weight_min({rat(1), rat(1)}), std::invalid_argument);

  std::mt19937_64 rng(601);
  std::uniform_int_distribution<long> coeff(0, 6);
  static const std::vector<std::vector<long>> rays = {
      {4, -1, -1, -1, -1}, {3, 3, -2, -2, -2}, {2, 2, 2, -3, -3},
      {1, 1, 1, 1, -4}};
  std::vector<Rational> valid = {rat(11, 3), rat(0), rat(1), rat(2), rat(1)};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> w(5, 0);
    bool zero = true;
    for (const auto& ray : rays) {
      long ck = coeff(rng);
      if (ck != 0) zero = false;
      for (int i = 0; i < 5; ++i) w[i] += ck * ray[i];
    }
    Rational pairing;
    for (int i = 0; i < 5; ++i) pairing += valid[i] * rat(w[i]);
    if (zero)
      CHECK(pairing == rat(0));
    else
      CHECK(pairing > rat(0));
  }
}

TEST_CASE("destabilizer search finds certified subgroups off the wall") {
  HPoint cr = named_hpoint("C_R");
  auto above = destabilizer_search(cr, rat(1, 2));
  REQUIRE(above.has_value());
  CHECK(verify_certificate(*above).pass);
  CHECK(hm_index(cr, above->rho, rat(1, 2)) < rat(0));

  auto below = destabilizer_search(cr, rat(1, 4));
  REQUIRE(below.has_value());
  CHECK(verify_certificate(*below).pass);
  CHECK(hm_index(cr, below->rho, rat(1, 4)) < rat(0));

  CHECK_FALSE(destabilizer_search(cr, rat(4, 13), 16).has_value());

  HPoint a5 = named_hpoint("A5_CURVE");
  auto a5_low = destabilizer_search(a5, rat(1, 3));
  REQUIRE(a5_low.has_value());
  CHECK(verify_certificate(*a5_low).pass);
  CHECK_FALSE(destabilizer_search(a5, rat(1, 2), 16).has_value());

  std::mt19937_64 rng(701);
  HPoint w = weierstrass_hpoint(random_params(rng));
  auto wcert = destabilizer_search(w, rat(1, 2));
  REQUIRE(wcert.has_value());
  CHECK(verify_certificate(*wcert).pass);

  CHECK_THROWS_AS(destabilizer_search(cr, rat(0)), std::invalid_argument);
}
