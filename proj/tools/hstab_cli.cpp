#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hstab/catalog.hpp"
#include "hstab/degeneration.hpp"
#include "hstab/picard.hpp"
#include "hstab/registry.hpp"
#include "hstab/singularities.hpp"
#include "hstab/stability.hpp"

namespace {

using namespace hstab;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> w;
  for (const std::string& part : split(text, ','))
    w.push_back(std::stol(part));
  if (w.size() != 5)
    throw std::invalid_argument("expected 5 comma-separated weights");
  return w;
}

Matrix parse_frame(const std::string& text) {
  std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 25)
    throw std::invalid_argument("expected 25 comma-separated frame entries");
  Matrix rows(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      rows.at(i, j) = Rational::parse(parts[5 * i + j]);
  return rows;
}

/// Where a command reads its marked system from: a catalog name, a JSON
/// file, or the Weierstrass family.
struct Source {
  std::string named;
  std::string file;
  std::string family;
  std::string params;

  void attach(CLI::App* cmd) {
    cmd->add_option("--named", named,
                    "catalog name (C_R, A5_CURVE, A4_CURVE, N1..N5)");
    cmd->add_option("--file", file,
                    "path to JSON with \"generators\" and \"point\"");
    cmd->add_option("--family", family, "parametric family: weierstrass");
    cmd->add_option("--params", params,
                    "family parameters c3,c2,c1,c0 (exact rationals)");
  }

  int sources() const {
    return (named.empty() ? 0 : 1) + (file.empty() ? 0 : 1) +
           (family.empty() ? 0 : 1);
  }

  HPoint resolve() const {
    if (sources() != 1)
      throw std::invalid_argument(
          "pass exactly one of --named, --file, --family");
    if (!named.empty()) return named_hpoint(named);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return hpoint_from_json(buffer.str());
    }
    if (family != "weierstrass")
      throw std::invalid_argument("unknown family: " + family);
    std::vector<std::string> parts = split(params, ',');
    if (parts.size() != 4)
      throw std::invalid_argument("--params needs c3,c2,c1,c0");
    return weierstrass_hpoint({Rational::parse(parts[0]),
                               Rational::parse(parts[1]),
                               Rational::parse(parts[2]),
                               Rational::parse(parts[3])});
  }

  /// Like resolve(), but accepts the marked-point-free catalog nets too.
  QuadricSystem resolve_system() const {
    if (!named.empty() && !has_named_hpoint(named)) return named_system(named);
    return resolve().system;
  }
};

OnePS build_ops(const std::string& weights, const std::string& frame,
                bool tzero) {
  OnePS rho = frame.empty()
                  ? OnePS::diagonal(parse_weights(weights))
                  : OnePS::framed(parse_weights(weights), parse_frame(frame));
  return tzero ? rho.inverse() : rho;
}

std::string interval_str(const BetaInterval& iv) {
  if (iv.empty) return "empty";
  std::string out = "[" + iv.lower.str() + ", ";
  return out + (iv.upper_finite ? iv.upper.str() + "]" : "+infinity)");
}

std::string verdict_str(TorusVerdict v) {
  switch (v) {
    case TorusVerdict::unstable:
      return "unstable";
    case TorusVerdict::strictly_semistable:
      return "strictly semistable";
    case TorusVerdict::stable:
      return "stable";
  }
  return "?";
}

void print_system(const QuadricSystem& s) {
  std::cout << "dimension: " << s.dimension() << "\n";
  for (const Form& g : s.generators())
    std::cout << "  " << g.str() << "\n";
}

void print_hpoint(const HPoint& h) {
  print_system(h.system);
  std::cout << "point: " << h.point.str() << "\n";
  std::cout << "json: " << hpoint_json(h) << "\n";
}

int cmd_mu(const Source& src, const std::string& weights,
           const std::string& frame, const std::string& beta) {
  HPoint h = src.resolve();
  OnePS rho = build_ops(weights, frame, false);
  HPoint framed = in_frame(h, rho);
  std::cout << "generator weights (largest monomial weight per generator):\n";
  for (const Form& g : framed.system.generators()) {
    bool first = true;
    long best = 0;
    for (const auto& [mono, coeff] : g.poly().terms()) {
      if (coeff.is_zero()) continue;
      long w = rho.weights.weight_of(mono);
      if (first || w > best) best = w;
      first = false;
    }
    std::cout << "  " << best << "  " << g.str() << "\n";
  }
  IndexLine line = hm_index_line(h, rho);
  std::cout << "mu(system) = " << line.system_weight << "\n";
  std::cout << "mu(point) = " << line.point_weight << "\n";
  std::cout << "index = " << line.system_weight
            << (line.point_weight < 0 ? " - " : " + ")
            << (line.point_weight < 0 ? -line.point_weight
                                      : line.point_weight)
            << "*beta\n";
  if (!beta.empty()) {
    Rational b = Rational::parse(beta);
    std::cout << "index at beta = " << b.str() << ": "
              << hm_index(h, rho, b).str() << "\n";
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, int samples, bool tamper,
               const std::string& filter, const std::string& format) {
  RegistryOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  opts.tamper = tamper;
  std::vector<CheckResult> checks = run_registry(opts);
  if (!filter.empty()) checks = filter_checks(checks, filter);
  bool any_fail = false;
  for (const CheckResult& c : checks)
    any_fail = any_fail || c.status != CheckStatus::pass;
  if (format == "json") {
    std::cout << report_json(seed, checks) << "\n";
  } else {
    int passed = 0;
    for (const CheckResult& c : checks) {
      std::cout << "[" << (c.passed() ? "PASS" : "FAIL") << "] " << c.id
                << "\n";
      if (!c.passed()) {
        std::cout << "  claimed:  " << c.claimed << "\n";
        std::cout << "  computed: " << c.computed << "\n";
      }
      passed += c.passed() ? 1 : 0;
    }
    std::cout << passed << "/" << checks.size() << " checks passed (seed "
              << seed << ")\n";
    if (checks.empty()) std::cout << "no checks match the filter\n";
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact GIT stability workbench for marked quadric systems"};
  app.require_subcommand(1);
  int exit_code = 0;

  Source hp_src;
  auto* hp_cmd = app.add_subcommand("hpoint", "print a marked quadric system");
  hp_src.attach(hp_cmd);
  hp_cmd->callback([&] { print_hpoint(hp_src.resolve()); });

  Source mu_src;
  std::string mu_weights, mu_frame, mu_beta;
  auto* mu_cmd =
      app.add_subcommand("mu", "Hilbert-Mumford index along a 1-PS");
  mu_src.attach(mu_cmd);
  mu_cmd->add_option("--weights", mu_weights, "1-PS weights w0,...,w4")
      ->required();
  mu_cmd->add_option("--frame", mu_frame,
                     "optional frame: 25 rationals, row-major, each row one "
                     "new coordinate");
  mu_cmd->add_option("--beta", mu_beta, "evaluate the index at this beta");
  mu_cmd->callback(
      [&] { exit_code = cmd_mu(mu_src, mu_weights, mu_frame, mu_beta); });

  Source sp_src;
  auto* sp_cmd = app.add_subcommand(
      "state-polytope", "exponent-sum vectors of the nonzero Pluecker "
                        "coordinates");
  sp_src.attach(sp_cmd);
  sp_cmd->callback([&] {
    for (const std::vector<long>& point :
         state_polytope_points(sp_src.resolve_system())) {
      std::string out;
      for (size_t i = 0; i < point.size(); ++i)
        out += (i ? " " : "") + std::to_string(point[i]);
      std::cout << out << "\n";
    }
  });

  Source tc_src;
  std::string tc_beta;
  auto* tc_cmd = app.add_subcommand(
      "torus-check", "diagonal torus verdict in the presented coordinates");
  tc_src.attach(tc_cmd);
  tc_cmd->add_option("--beta", tc_beta, "polarization parameter")->required();
  tc_cmd->callback([&] {
    std::cout << verdict_str(
                     torus_check(tc_src.resolve(), Rational::parse(tc_beta)))
              << "\n";
  });

  Source wall_src;
  auto* wall_cmd = app.add_subcommand(
      "wall", "beta interval on which the diagonal torus program is feasible");
  wall_src.attach(wall_cmd);
  wall_cmd->callback([&] {
    std::cout << interval_str(beta_interval(wall_src.resolve())) << "\n";
  });

  Source lim_src;
  std::string lim_weights, lim_frame;
  bool lim_tzero = false;
  auto* lim_cmd =
      app.add_subcommand("limit", "flat limit under a 1-PS as t -> infinity");
  lim_src.attach(lim_cmd);
  lim_cmd->add_option("--weights", lim_weights, "1-PS weights w0,...,w4")
      ->required();
  lim_cmd->add_option("--frame", lim_frame,
                      "optional frame: 25 rationals, row-major");
  lim_cmd->add_flag("--tzero", lim_tzero, "take the limit as t -> 0 instead");
  lim_cmd->callback([&] {
    print_hpoint(limit_max(lim_src.resolve(),
                           build_ops(lim_weights, lim_frame, lim_tzero)));
  });

  std::vector<std::string> path_gens;
  auto* path_cmd = app.add_subcommand(
      "path-limit", "limit at t = 0 of a polynomial family of spans");
  path_cmd
      ->add_option("--gen", path_gens,
                   "generator in z0..z4 and the path parameter t (repeat per "
                   "generator)")
      ->required();
  path_cmd->callback(
      [&] { print_system(path_limit(path_family(path_gens))); });

  std::string sing_curve;
  auto* sing_cmd = app.add_subcommand(
      "singularities", "rational singular points of a plane curve");
  sing_cmd->add_option("--curve", sing_curve, "homogeneous form in x, y, z")
      ->required();
  sing_cmd->callback([&] {
    PlaneCurve curve{Form::parse(sing_curve, {"x", "y", "z"})};
    SingularLocus locus = rational_singular_points(curve);
    if (locus.non_reduced)
      std::cout << "non-reduced: classified points are on the reduction\n";
    for (const ProjectivePoint& p : locus.points) {
      SingularityRecord r = classify_Ak(curve, p);
      std::cout << r.label() << " at " << r.point.str() << " (multiplicity "
                << r.multiplicity << ", milnor "
                << (r.isolated ? std::to_string(r.milnor) : "infinite")
                << ")\n";
    }
    std::cout << "rational singular points: " << locus.points.size() << "\n";
    std::cout << "unresolved non-rational solutions: at most "
              << locus.residual << "\n";
  });

  std::string quartic_curve;
  auto* quartic_cmd =
      app.add_subcommand("classify-quartic", "GIT class of a plane quartic");
  quartic_cmd
      ->add_option("--curve", quartic_curve, "homogeneous quartic in x, y, z")
      ->required();
  quartic_cmd->callback([&] {
    QuarticReport report =
        quartic_git_class(PlaneCurve{Form::parse(quartic_curve,
                                                 {"x", "y", "z"})});
    std::cout << "verdict: " << label(report.verdict) << "\n";
    std::cout << "reason: " << report.reason << "\n";
    for (const SingularityRecord& r : report.records)
      std::cout << "  " << r.label() << " at " << r.point.str() << "\n";
    if (report.residual > 0)
      std::cout << "unresolved non-rational solutions: at most "
                << report.residual << "\n";
  });

  std::string pic_beta;
  auto* pic_cmd = app.add_subcommand(
      "picard", "polarization class and log-canonical parameter at beta");
  pic_cmd->add_option("--beta", pic_beta, "polarization parameter")
      ->required();
  pic_cmd->callback([&] {
    Rational b = Rational::parse(pic_beta);
    DivClass l = l_beta(b);
    std::cout << "L_beta = " << l.str() << "\n";
    std::cout << "modulo delta = 10*lambda: "
              << reduce(l, no_tails_relations()).str() << "\n";
    std::cout << "modulo both relations: "
              << reduce(l, weierstrass_quotient_relations()).str() << "\n";
    if (auto a = alpha_of_beta(b))
      std::cout << "alpha = " << a->alpha.str() << " (factor "
                << a->factor.str() << ")\n";
    else
      std::cout << "alpha: degenerate\n";
  });

  std::uint64_t seed = 0;
  int samples = 10000;
  bool tamper = false;
  std::string filter, format = "text";
  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "run the registry of certified checks");
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");
  verify_cmd->add_option("--samples", samples,
                         "sample count for randomized checks");
  verify_cmd->add_option("--filter", filter, "glob on check ids");
  verify_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--tamper", tamper)->group("");
  verify_cmd->callback(
      [&] { exit_code = cmd_verify(seed, samples, tamper, filter, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
