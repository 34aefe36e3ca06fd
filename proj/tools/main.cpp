#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hirota/certify.hpp"
#include "hirota/errors.hpp"
#include "hirota/expsum.hpp"
#include "hirota/generators.hpp"
#include "hirota/io.hpp"
#include "hirota/main_component.hpp"
#include "hirota/numeric.hpp"
#include "hirota/parallel.hpp"
#include "hirota/rng.hpp"
#include "hirota/soliton.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    hirota::write_text_file(out_path, text);
  }
}

void emit(const json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

std::vector<hirota::Rational> parse_rational_list(const std::string& text) {
  std::vector<hirota::Rational> out;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    out.push_back(hirota::Rational::from_string(token));
  }
  return out;
}

int cmd_generators(int genus, const std::string& mode_name,
                   const std::string& out_path) {
  const hirota::GenMode mode = hirota::gen_mode_from_string(mode_name);
  const hirota::GeneratorSet set = hirota::all_generators(genus, mode);
  emit(hirota::generators_to_json(set), out_path);
  std::cerr << "generators: wrote " << set.size() << " generators (genus "
            << genus << ", " << mode_name << ")\n";
  return 0;
}

int cmd_param(const std::string& params_path, const std::string& point_path,
              bool invert, int genus, std::uint64_t seed,
              const std::string& out_path) {
  const int modes = (params_path.empty() ? 0 : 1) +
                    (point_path.empty() ? 0 : 1) + (genus > 0 ? 1 : 0);
  if (modes != 1) {
    throw hirota::InputError(
        "param needs exactly one of --params, --point --invert, --genus");
  }
  if (!point_path.empty() && !invert) {
    throw hirota::InputError("param --point requires --invert");
  }
  if (!params_path.empty()) {
    const hirota::MainParams params = hirota::read_params(params_path);
    emit(hirota::point_to_json(hirota::phi(params)), out_path);
    std::cerr << "param: parameterized point (genus " << params.genus()
              << ")\n";
  } else if (!point_path.empty()) {
    const hirota::HirotaPoint p = hirota::read_point(point_path);
    const hirota::MainParams params = hirota::invert_point(p);
    emit(hirota::params_to_json(params), out_path);
    std::cerr << "param: inverted point (genus " << p.genus << ")\n";
  } else {
    hirota::SeededRng rng(seed);
    const hirota::MainParams params = hirota::sample_main_params(genus, rng);
    emit(hirota::params_to_json(params), out_path);
    std::cerr << "param: sampled parameters (genus " << genus << ", seed "
              << seed << ")\n";
  }
  return 0;
}

int cmd_verify(const std::string& point_path, const std::string& mode_name,
               int expect_genus, const std::string& out_path) {
  const hirota::HirotaPoint p = hirota::read_point(point_path);
  if (expect_genus > 0 && expect_genus != p.genus) {
    throw hirota::InputError("--genus disagrees with the point file");
  }
  const hirota::GenMode mode = hirota::gen_mode_from_string(mode_name);
  const hirota::GeneratorSet set = hirota::all_generators(p.genus, mode);
  const std::vector<hirota::Rational> values =
      hirota::evaluate_generators(set, p);

  json nonzero = json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) continue;
    json entry;
    entry["point"] = set.generators()[i].label().coords();
    entry["value"] = values[i].to_string();
    nonzero.push_back(entry);
  }

  json j;
  j["schema"] = kSchemaVersion;
  j["genus"] = p.genus;
  j["mode"] = mode_name;
  j["generator_count"] = set.size();
  j["all_vanish"] = nonzero.empty();
  j["nonvanishing"] = nonzero;
  emit(j, out_path);
  std::cerr << "verify: " << nonzero.size() << " of " << set.size()
            << " generators nonzero (genus " << p.genus << ", " << mode_name
            << ")\n";
  return nonzero.empty() ? 0 : 1;
}

int cmd_certify(int genus, const std::string& mode_name, std::uint64_t seed,
                int threads, bool timings, const std::string& out_path) {
  const hirota::CertMode mode = hirota::cert_mode_from_string(mode_name);
  const hirota::CertReport report = hirota::certify_main_component(
      genus, seed, mode, hirota::resolve_threads(threads));
  emit(hirota::report_to_json(report, timings), out_path);
  std::cerr << "certify: genus " << genus << " " << mode_name << ": rank "
            << report.jacobian_rank << "/" << report.expected_rank
            << ", verdict " << (report.verdict ? "PASS" : "FAIL")
            << " (attempts " << report.attempts << ")\n";
  return report.verdict ? 0 : 1;
}

int cmd_soliton_check(const std::string& soliton_path,
                      const std::string& params_path,
                      const std::string& out_path) {
  if (soliton_path.empty() == params_path.empty()) {
    throw hirota::InputError(
        "soliton-check needs exactly one of --soliton, --params");
  }
  json j;
  j["schema"] = kSchemaVersion;
  bool ok = false;
  if (!soliton_path.empty()) {
    const hirota::SolitonData data = hirota::read_soliton(soliton_path);
    const hirota::NumericExpSum tau = hirota::soliton_tau(data);
    ok = hirota::hirota_form_pairwise(tau).is_zero();
    j["k"] = data.k;
    j["n"] = data.n;
    j["tau_terms"] = tau.size();
    j["hirota_zero"] = ok;
    std::cerr << "soliton-check: (" << data.k << "," << data.n
              << ") tau with " << tau.size() << " terms, bilinear form "
              << (ok ? "vanishes" : "does not vanish") << "\n";
  } else {
    const hirota::MainParams params = hirota::read_params(params_path);
    ok = hirota::theta_soliton_equivalence(params);
    j["genus"] = params.genus();
    j["equivalent"] = ok;
    std::cerr << "soliton-check: theta/soliton equivalence "
              << (ok ? "holds" : "fails") << " (genus " << params.genus()
              << ")\n";
  }
  emit(j, out_path);
  return ok ? 0 : 1;
}

hirota::NumericExpSum tau_from_flags(const std::string& soliton_path,
                                     const std::string& point_path,
                                     const std::string& params_path) {
  const int modes = (soliton_path.empty() ? 0 : 1) +
                    (point_path.empty() ? 0 : 1) +
                    (params_path.empty() ? 0 : 1);
  if (modes != 1) {
    throw hirota::InputError(
        "kp-check needs exactly one of --soliton, --point, --params");
  }
  if (!soliton_path.empty()) {
    return hirota::soliton_tau(hirota::read_soliton(soliton_path));
  }
  if (!point_path.empty()) {
    return hirota::theta_tau(hirota::read_point(point_path));
  }
  return hirota::theta_tau(hirota::phi(hirota::read_params(params_path)));
}

int cmd_kp_check(const std::string& soliton_path, const std::string& point_path,
                 const std::string& params_path, int samples,
                 std::uint64_t seed, double step, double tol,
                 const std::string& csv_path, const std::string& out_path) {
  if (samples < 1) throw hirota::InputError("--samples must be positive");
  const hirota::NumericExpSum tau =
      tau_from_flags(soliton_path, point_path, params_path);
  const hirota::EvalContext ctx(tau, step);

  hirota::SeededRng rng(seed);
  json rows = json::array();
  std::ostringstream csv;
  csv << "x,y,t,p,residual\n";
  csv << std::setprecision(17);
  double max_rel = 0;
  int attempts = 0;
  while (static_cast<int>(rows.size()) < samples) {
    if (++attempts > 100 * samples) {
      throw hirota::InputError("tau is singular at almost every probe point");
    }
    const double x = rng.unit() - 0.5;
    const double y = rng.unit() - 0.5;
    const double t = rng.unit() - 0.5;
    hirota::KpResidual r;
    try {
      r = hirota::kp_residual_detail(ctx, x, y, t);
    } catch (const hirota::SingularPointError&) {
      continue;
    }
    const double rel = std::abs(r.residual) / (1.0 + r.scale);
    max_rel = std::max(max_rel, rel);
    json row;
    row["x"] = x;
    row["y"] = y;
    row["t"] = t;
    row["p"] = r.p;
    row["residual"] = r.residual;
    row["scale"] = r.scale;
    rows.push_back(row);
    csv << x << "," << y << "," << t << "," << r.p << "," << r.residual
        << "\n";
  }
  const bool pass = max_rel <= tol;

  if (!csv_path.empty()) {
    if (csv_path == "-") {
      std::cout << csv.str();
    } else {
      hirota::write_text_file(csv_path, csv.str());
    }
  }
  json j;
  j["schema"] = kSchemaVersion;
  j["samples"] = rows;
  j["step"] = step;
  j["tol"] = tol;
  j["max_relative_residual"] = max_rel;
  j["pass"] = pass;
  if (csv_path != "-") emit(j, out_path);
  std::cerr << "kp-check: max relative residual " << max_rel << " over "
            << samples << " samples (tol " << tol << ", step " << step
            << ")\n";
  return pass ? 0 : 1;
}

int cmd_relations(int genus, std::size_t budget, const std::string& point_path,
                  const std::string& out_path) {
  const auto relations = hirota::enumerate_a_relations(genus, budget);
  json rel_array = json::array();
  for (const hirota::ARelation& r : relations) {
    json entry;
    entry["left"] = r.left;
    entry["right"] = r.right;
    rel_array.push_back(entry);
  }
  json j;
  j["schema"] = kSchemaVersion;
  j["genus"] = genus;
  j["budget"] = budget;
  j["count"] = relations.size();
  j["relations"] = rel_array;

  bool all_hold = true;
  if (!point_path.empty()) {
    const hirota::HirotaPoint p = hirota::read_point(point_path);
    if (p.genus != genus) {
      throw hirota::InputError("--genus disagrees with the point file");
    }
    json violations = json::array();
    for (std::size_t i = 0; i < relations.size(); ++i) {
      const hirota::Rational value = hirota::check_a_relation(p.a, relations[i]);
      if (value.is_zero()) continue;
      json entry;
      entry["index"] = i;
      entry["value"] = value.to_string();
      violations.push_back(entry);
    }
    all_hold = violations.empty();
    j["violations"] = violations;
    j["all_hold"] = all_hold;
  }
  emit(j, out_path);
  std::cerr << "relations: " << relations.size() << " relation(s) (genus "
            << genus << ", budget " << budget << ")";
  if (!point_path.empty()) {
    std::cerr << ", " << (all_hold ? "all hold" : "violations found");
  }
  std::cerr << "\n";
  return all_hold ? 0 : 1;
}

int cmd_abel(const std::string& kappa_text, const std::string& ys_text,
             const std::string& out_path) {
  const std::vector<hirota::Rational> kappa = parse_rational_list(kappa_text);
  const std::vector<hirota::Rational> ys = parse_rational_list(ys_text);
  const std::vector<hirota::Rational> values = hirota::abel_eval(kappa, ys);
  json vals = json::array();
  for (const hirota::Rational& v : values) vals.push_back(v.to_string());
  json j;
  j["schema"] = kSchemaVersion;
  j["genus"] = values.size();
  j["values"] = vals;
  emit(j, out_path);
  std::cerr << "abel: evaluated " << values.size() << " factors\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tools for the Hirota variety of the cube: ideal generators, the "
      "main-component parameterization and its certificate, soliton tau "
      "functions, and numeric KP checks."};
  app.require_subcommand(1);

  int rc = 0;

  // generators
  int gen_genus = 0;
  std::string gen_mode = "reduced";
  std::string gen_out;
  auto* gen = app.add_subcommand("generators", "List ideal generators as JSON");
  gen->add_option("--genus", gen_genus, "Cube dimension")->required();
  gen->add_option("--mode", gen_mode, "per-point, deduped, or reduced");
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  gen->callback([&] { rc = cmd_generators(gen_genus, gen_mode, gen_out); });

  // param
  std::string par_params, par_point, par_out;
  bool par_invert = false;
  int par_genus = 0;
  std::uint64_t par_seed = 0;
  auto* par = app.add_subcommand(
      "param", "Sample parameters, apply the parameterization, or invert it");
  par->add_option("--params", par_params, "Parameter JSON: emit the point");
  par->add_option("--point", par_point, "Point JSON: emit parameters (with --invert)");
  par->add_flag("--invert", par_invert, "Invert the given point");
  par->add_option("--genus", par_genus, "Sample random parameters");
  par->add_option("--seed", par_seed, "Sampling seed");
  par->add_option("--out", par_out, "Output path (default stdout)");
  par->callback([&] {
    rc = cmd_param(par_params, par_point, par_invert, par_genus, par_seed,
                   par_out);
  });

  // verify
  std::string ver_point, ver_mode = "reduced", ver_out;
  int ver_genus = 0;
  auto* ver = app.add_subcommand(
      "verify", "Evaluate all generators at a point; exit 1 if any is nonzero");
  ver->add_option("--point", ver_point, "Point JSON")->required();
  ver->add_option("--mode", ver_mode, "per-point, deduped, or reduced");
  ver->add_option("--genus", ver_genus, "Cross-check the point's genus");
  ver->add_option("--out", ver_out, "Output path (default stdout)");
  ver->callback([&] { rc = cmd_verify(ver_point, ver_mode, ver_genus, ver_out); });

  // certify
  int cert_genus = 0, cert_threads = 0;
  std::string cert_mode = "modular", cert_out;
  std::uint64_t cert_seed = 0;
  bool cert_timings = false;
  auto* cert = app.add_subcommand(
      "certify", "Tangency certificate for the main component");
  cert->add_option("--genus", cert_genus, "Cube dimension")->required();
  cert->add_option("--mode", cert_mode, "exact (genus <= 6) or modular (<= 9)");
  cert->add_option("--seed", cert_seed, "Parameter draw seed");
  cert->add_option("--threads", cert_threads,
                   "Worker cap (default: HIROTA_THREADS, then 1)");
  cert->add_flag("--timings", cert_timings,
                 "Include wall-clock timings in the report");
  cert->add_option("--out", cert_out, "Output path (default stdout)");
  cert->callback([&] {
    rc = cmd_certify(cert_genus, cert_mode, cert_seed, cert_threads,
                     cert_timings, cert_out);
  });

  // soliton-check
  std::string sol_soliton, sol_params, sol_out;
  auto* sol = app.add_subcommand(
      "soliton-check",
      "Exact bilinear check of a soliton tau, or theta/soliton equivalence");
  sol->add_option("--soliton", sol_soliton, "Soliton JSON (pluecker or matrix)");
  sol->add_option("--params", sol_params, "Parameter JSON for the equivalence");
  sol->add_option("--out", sol_out, "Output path (default stdout)");
  sol->callback([&] { rc = cmd_soliton_check(sol_soliton, sol_params, sol_out); });

  // kp-check
  std::string kp_soliton, kp_point, kp_params, kp_csv, kp_out;
  int kp_samples = 5;
  std::uint64_t kp_seed = 0;
  double kp_step = 1e-3, kp_tol = 1e-4;
  auto* kp = app.add_subcommand(
      "kp-check", "Numeric KP residual of a tau function at random probes");
  kp->add_option("--soliton", kp_soliton, "Soliton JSON");
  kp->add_option("--point", kp_point, "Point JSON");
  kp->add_option("--params", kp_params, "Parameter JSON");
  kp->add_option("--samples", kp_samples, "Probe count (default 5)");
  kp->add_option("--seed", kp_seed, "Probe seed");
  kp->add_option("--step", kp_step, "Finite difference step (default 1e-3)");
  kp->add_option("--tol", kp_tol, "Relative residual tolerance (default 1e-4)");
  kp->add_option("--csv", kp_csv, "CSV dump path ('-' replaces the JSON output)");
  kp->add_option("--out", kp_out, "Output path (default stdout)");
  kp->callback([&] {
    rc = cmd_kp_check(kp_soliton, kp_point, kp_params, kp_samples, kp_seed,
                      kp_step, kp_tol, kp_csv, kp_out);
  });

  // relations
  int rel_genus = 0;
  std::size_t rel_budget = 1000;
  std::string rel_point, rel_out;
  auto* rel = app.add_subcommand(
      "relations", "Enumerate quartic coefficient relations; optionally check a point");
  rel->add_option("--genus", rel_genus, "Cube dimension (<= 5)")->required();
  rel->add_option("--budget", rel_budget, "Maximum number of relations");
  rel->add_option("--point", rel_point, "Point JSON to check");
  rel->add_option("--out", rel_out, "Output path (default stdout)");
  rel->callback([&] { rc = cmd_relations(rel_genus, rel_budget, rel_point, rel_out); });

  // abel
  std::string abel_kappa, abel_ys, abel_out;
  auto* ab = app.add_subcommand(
      "abel", "Evaluate the degenerate abelian factors at rational points");
  ab->add_option("--kappa", abel_kappa, "2g comma-separated rationals")->required();
  ab->add_option("--ys", abel_ys, "g-1 comma-separated rationals");
  ab->add_option("--out", abel_out, "Output path (default stdout)");
  ab->callback([&] { rc = cmd_abel(abel_kappa, abel_ys, abel_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hirota::NotInImageError& e) {
    std::cerr << "not in image: " << e.what() << "\n";
    return 1;
  } catch (const hirota::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
