// qm: exact arithmetic and asymptotic verification for the nine principal
// imaginary quadratic rings.

#include "qm/congruence.hpp"
#include "qm/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

namespace {

using namespace qm;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitConfigError = 2;

ordered_json element_json(const Element& e) {
  ordered_json j;
  j["text"] = format_element(e);
  j["u"] = e.u;
  j["v"] = e.v;
  j["norm"] = norm(e);
  return j;
}

int cmd_field(const RunConfig& cfg) {
  const Field& f = lookup_field(cfg.field_disc);
  ordered_json j;
  j["d"] = f.d;
  j["discriminant"] = f.disc;
  j["unit_count"] = f.unit_count;
  j["norm_form"] = {{"A", 1}, {"B", f.B}, {"C", f.C}};
  j["covolume"] = f.covolume_value();
  j["rho"] = f.rho_value();
  j["rho_exact"] = "2*pi/" + std::to_string(f.unit_count) + "/sqrt(" +
                   std::to_string(f.abs_disc()) + ")";
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_factor(const RunConfig& cfg, const std::string& elem) {
  const Field& f = lookup_field(cfg.field_disc);
  Element x = parse_element(elem, f);
  Factorization fa = factor(x);
  ordered_json j;
  j["element"] = element_json(x);
  j["unit"] = format_element(fa.unit);
  ordered_json factors = ordered_json::array();
  for (const auto& [pe, e] : fa.factors) {
    ordered_json fj;
    fj["prime"] = format_element(pe.generator);
    fj["norm"] = pe.nrm;
    fj["residue_char"] = pe.residue_char;
    fj["splitting"] = pe.splitting == Splitting::split   ? "split"
                      : pe.splitting == Splitting::inert ? "inert"
                                                         : "ramified";
    fj["exponent"] = e;
    factors.push_back(fj);
  }
  j["factors"] = factors;
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_gcd(const RunConfig& cfg, const std::string& a_text, const std::string& b_text) {
  const Field& f = lookup_field(cfg.field_disc);
  Element a = parse_element(a_text, f), b = parse_element(b_text, f);
  ordered_json j;
  j["a"] = format_element(a);
  j["b"] = format_element(b);
  j["gcd"] = format_element(gcd(a, b));
  j["lcm"] = format_element(lcm(a, b));
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_ideal_fn(const RunConfig& cfg, const std::string& which, const std::string& elem) {
  const Field& f = lookup_field(cfg.field_disc);
  Ideal a = make_ideal(parse_element(elem, f));
  ordered_json j;
  j["ideal"] = format_element(a.gen);
  j["norm"] = a.nrm;
  if (which == "phi") {
    j["phi"] = euler_phi(a);
  } else if (which == "mu") {
    j["mu"] = moebius(a);
  } else if (which == "cm") {
    j["cm"] = congruence_factor(a).str();
    j["cm_value"] = congruence_factor(a).to_double();
  } else {  // divisors
    ordered_json d = ordered_json::array();
    for (const Ideal& b : divisors(a)) d.push_back(format_element(b.gen));
    j["divisors"] = d;
    j["count"] = d.size();
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_zeta(const RunConfig& cfg) {
  const Field& f = lookup_field(cfg.field_disc);
  ordered_json j;
  j["s"] = cfg.s_value;
  j["tolerance"] = cfg.tolerance;
  j["zeta"] = dedekind_zeta(f, cfg.s_value, cfg.tolerance);
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_constant(const RunConfig& cfg, const std::string& mode) {
  const Field& f = lookup_field(cfg.field_disc);
  Ideal m = make_ideal(parse_element(cfg.m_text, f));
  Element k = parse_element(cfg.k_text, f);
  ConstantOptions opts;
  opts.tolerance = cfg.tolerance;
  ConstantReport rep = mirsky_constant(m, k, opts);
  ordered_json j;
  ordered_json config = config_json(cfg);
  config["mode"] = mode;
  j["config"] = config;
  ordered_json r;
  if (mode != "product") r["value_series"] = rep.value_series;
  if (mode != "series") r["value_product"] = rep.value_product;
  if (!std::isnan(rep.value_closed)) r["value_closed_form"] = rep.value_closed;
  r["cutoff_series"] = rep.cutoff_series;
  r["cutoff_product"] = rep.cutoff_product;
  r["tail_series"] = rep.tail_series;
  r["tail_product"] = rep.tail_product;
  r["shift_zero"] = rep.shift_zero;
  j["results"] = r;
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_sector_count(const RunConfig& cfg, double radius) {
  const Field& f = lookup_field(cfg.field_disc);
  Sector s = make_sector(f, parse_anchor(cfg.z_text, f), parse_theta(cfg.theta_text), radius);
  ordered_json j;
  i64 count = count_points(s);
  double est = gauss_estimate(s);
  j["count"] = count;
  j["gauss_estimate"] = est;
  j["ratio"] = est != 0 ? double(count) / est : 0.0;
  j["sum_norms"] = to_string_i128(sum_norms_sector(s));
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(RunConfig& cfg) {
  const Field& f = lookup_field(cfg.field_disc);
  SumKind kind = sum_kind_from_name(cfg.target);
  SumParams params;
  params.fld = &f;
  params.m = make_ideal(parse_element(cfg.m_text, f));
  params.k = parse_element(cfg.k_text, f);
  params.z = parse_anchor(cfg.z_text, f);
  params.theta = parse_theta(cfg.theta_text);
  params.ratio_tolerance = cfg.ratio_tolerance;
  std::vector<double> grid = parse_grid(cfg.grid_text);

  SumReport rep = convergence_report(kind, params, grid);
  if (!cfg.out_path.empty()) write_csv(cfg.out_path, rep);
  ordered_json j = report_json(cfg, rep);
  if (!cfg.json_path.empty()) write_json(cfg.json_path, j);

  std::printf("[%s] %s ratio@x=%g: %.6f (tolerance %.3g)\n",
              rep.pass ? "PASS" : "FAIL", cfg.target.c_str(), rep.points.back().x,
              rep.points.back().ratio, cfg.ratio_tolerance);
  std::printf("[info] fitted error exponent %.3f (+/- %.3f, %d points)\n", rep.fit.slope,
              rep.fit.half_width, rep.fit.points_used);
  if (rep.shifted_zero_term)
    std::printf("[info] a + k = 0 occurred inside the sector; that term counts 0\n");
  if (!rep.pass) {
    ordered_json failure;
    failure["failures"] =
        ordered_json::array({{{"target", cfg.target},
                              {"ratio", rep.points.back().ratio},
                              {"tolerance", cfg.ratio_tolerance}}});
    std::cout << failure.dump(2) << '\n';
    return kExitAssertionFailure;
  }
  return kExitOk;
}

int cmd_selftest(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  int failures = 0;
  auto check = [&](bool ok, const std::string& label) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", label.c_str());
    if (!ok) ++failures;
  };

  for (const Field& f : all_fields()) {
    bool divisor_ok = true, inversion_ok = true;
    SpfTable spf(400);
    PrimeCache cache(f, 400);
    PrimeIdealTable table(f, 400);
    CanonicalList canon(f, 400, spf, cache, table);
    for (const auto& entry : canon.entries) {
      Ideal a = make_ideal(Element(entry.u, entry.v, f));
      i128 sum = 0, msum = 0;
      for (const Ideal& b : divisors(a)) {
        sum += euler_phi(b);
        msum += i128(moebius(b)) * (a.nrm / b.nrm);
      }
      if (sum != a.nrm) divisor_ok = false;
      if (msum != euler_phi(a)) inversion_ok = false;
    }
    check(divisor_ok, "divisor-sum identity (norms <= 400), field " + std::to_string(f.disc));
    check(inversion_ok, "inversion identity (norms <= 400), field " + std::to_string(f.disc));

    bool roundtrip_ok = true;
    std::uniform_int_distribution<i64> coord(-300, 300);
    for (int i = 0; i < 200; ++i) {
      Element x(coord(rng), coord(rng), f);
      if (x.is_zero()) continue;
      if (!(factorization_value(factor(x)) == x)) roundtrip_ok = false;
    }
    check(roundtrip_ok, "factor round-trip (200 random), field " + std::to_string(f.disc));
  }

  const Field& g = lookup_field(-4);
  Ideal oK = make_ideal(one(g));
  Sector full = make_sector(g, Element(1, 2, g), angle_pi(2, 1), 40.0);
  check(sectorial_mertens_sum(oK, full) == i128(g.unit_count) * mertens_sum(oK, 1600.0),
        "full-circle sector sum = omega_K * ideal sum");

  ConstantOptions copts;
  copts.series_cutoff = 2000;
  copts.product_cutoff = 50000;
  ConstantReport rep = mirsky_constant(oK, one(g), copts);
  check(std::fabs(rep.value_series - rep.value_product) <=
            rep.tail_series + rep.tail_product,
        "correlation constant: series/product within certified tails");

  std::printf("%s\n", failures == 0 ? "selftest: all checks passed" : "selftest: FAILURES");
  return failures == 0 ? kExitOk : kExitAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic and asymptotic verification over the nine principal "
               "imaginary quadratic rings"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string elem_arg, a_arg, b_arg, mode = "both";
  double radius = 100.0;

  auto add_field_opt = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field_disc, "field discriminant, e.g. -4");
  };

  CLI::App* field = app.add_subcommand("field", "print a field descriptor");
  add_field_opt(field);

  CLI::App* factor_cmd = app.add_subcommand("factor", "factor an element");
  add_field_opt(factor_cmd);
  factor_cmd->add_option("element", elem_arg, "element, e.g. \"3+2*w\"")->required();

  CLI::App* gcd_cmd = app.add_subcommand("gcd", "gcd and lcm of two elements");
  add_field_opt(gcd_cmd);
  gcd_cmd->add_option("a", a_arg)->required();
  gcd_cmd->add_option("b", b_arg)->required();

  std::vector<std::string> fn_names = {"phi", "mu", "divisors", "cm"};
  std::vector<CLI::App*> fn_subs;
  for (const std::string& name : fn_names) {
    CLI::App* sub = app.add_subcommand(
        name, name == "phi"  ? "ideal Euler function"
              : name == "mu" ? "ideal Moebius function"
              : name == "cm" ? "congruence factor N(m) prod (1 + 1/N(p))"
                             : "divisor ideals");
    add_field_opt(sub);
    sub->add_option("element", elem_arg)->required();
    fn_subs.push_back(sub);
  }

  CLI::App* zeta_cmd = app.add_subcommand("zeta", "Dedekind zeta value");
  add_field_opt(zeta_cmd);
  zeta_cmd->add_option("--s", cfg.s_value, "s > 1");
  zeta_cmd->add_option("--tol", cfg.tolerance, "absolute tolerance");

  CLI::App* constant_cmd =
      app.add_subcommand("constant", "shifted-correlation constant c_{m,k}");
  add_field_opt(constant_cmd);
  constant_cmd->add_option("--m", cfg.m_text, "congruence ideal generator");
  constant_cmd->add_option("--k", cfg.k_text, "shift element");
  constant_cmd->add_option("--tol", cfg.tolerance, "target tolerance (cutoffs capped)");
  constant_cmd->add_option("--mode", mode, "series | product | both")
      ->check(CLI::IsMember({"series", "product", "both"}));

  CLI::App* sector_cmd = app.add_subcommand("sector-count", "lattice count in a sector");
  add_field_opt(sector_cmd);
  sector_cmd->add_option("--z", cfg.z_text, "anchor coordinates u,v");
  sector_cmd->add_option("--theta", cfg.theta_text, "angle: 2pi, pi/3, or radians");
  sector_cmd->add_option("--radius", radius, "truncation radius");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "compare an exact sum against its predicted leading term");
  verify_cmd->add_option("target", cfg.target, "thm1.1 | thm1.2 | thm4.1 | lemma4.5")
      ->required();
  add_field_opt(verify_cmd);
  verify_cmd->add_option("--m", cfg.m_text);
  verify_cmd->add_option("--k", cfg.k_text);
  verify_cmd->add_option("--z", cfg.z_text);
  verify_cmd->add_option("--theta", cfg.theta_text);
  verify_cmd->add_option("--grid", cfg.grid_text, "a:b:n:log or a:b:n:lin")->required();
  verify_cmd->add_option("--tol", cfg.ratio_tolerance, "ratio tolerance at largest x");
  verify_cmd->add_option("--out", cfg.out_path, "CSV output path");
  verify_cmd->add_option("--json", cfg.json_path, "JSON report path");
  verify_cmd->add_option("--seed", cfg.seed);

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run built-in checks");
  selftest_cmd->add_option("--seed", cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (field->parsed()) {
      cfg.subcommand = "field";
      return cmd_field(cfg);
    }
    if (factor_cmd->parsed()) {
      cfg.subcommand = "factor";
      return cmd_factor(cfg, elem_arg);
    }
    if (gcd_cmd->parsed()) {
      cfg.subcommand = "gcd";
      return cmd_gcd(cfg, a_arg, b_arg);
    }
    for (std::size_t i = 0; i < fn_subs.size(); ++i)
      if (fn_subs[i]->parsed()) {
        cfg.subcommand = fn_names[i];
        return cmd_ideal_fn(cfg, fn_names[i], elem_arg);
      }
    if (zeta_cmd->parsed()) {
      cfg.subcommand = "zeta";
      return cmd_zeta(cfg);
    }
    if (constant_cmd->parsed()) {
      cfg.subcommand = "constant";
      return cmd_constant(cfg, mode);
    }
    if (sector_cmd->parsed()) {
      cfg.subcommand = "sector-count";
      return cmd_sector_count(cfg, radius);
    }
    if (verify_cmd->parsed()) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg);
    }
    if (selftest_cmd->parsed()) {
      cfg.subcommand = "selftest";
      return cmd_selftest(cfg);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NotPrincipalImaginaryQuadratic& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAssertionFailure;
  }
  return kExitConfigError;
}
