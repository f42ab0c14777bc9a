// Command-line front end: state construction, entanglement measures,
// parameter sweeps, and the verification suite.

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "bent/convex_roof.hpp"
#include "bent/distill.hpp"
#include "bent/geom_measure.hpp"
#include "bent/ineq.hpp"
#include "bent/io.hpp"
#include "bent/spectral.hpp"
#include "bent/state_zoo.hpp"
#include "bent/tensor_core.hpp"
#include "bent/verify.hpp"

using nlohmann::json;
using namespace bent;

namespace {

PartySplit parse_partition(const std::string& spec, int n_parties) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("partition spec must look like 0:1,2,3");
  auto parse_side = [](const std::string& side) {
    std::set<int> out;
    std::stringstream ss(side);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.insert(std::stoi(tok));
    return out;
  };
  PartySplit split{parse_side(spec.substr(0, colon)),
                   parse_side(spec.substr(colon + 1))};
  validate_split(split, n_parties);
  return split;
}

DensityMatrix as_density(const AnyState& s) {
  if (std::holds_alternative<DensityMatrix>(s))
    return std::get<DensityMatrix>(s);
  return projector(std::get<PureState>(s));
}

int run_verify_cmd(const std::string& profile, std::uint64_t seed,
                   const std::string& json_out) {
  const TolProfile p =
      profile == "strict" ? TolProfile::strict : TolProfile::defaults;
  const auto rows = run_verify(p, seed);
  std::printf("%-28s %-14s %-14s %-9s %-5s %8s\n", "id", "expected",
              "computed", "tol", "pass", "ms");
  for (const auto& r : rows)
    std::printf("%-28s %-14s %-14s %-9s %-5s %8.1f\n", r.id.c_str(),
                format_float(r.expected, 12).c_str(),
                format_float(r.computed, 12).c_str(),
                format_float(r.tolerance, 3).c_str(),
                r.pass ? "ok" : "FAIL", r.wall_ms);
  if (!json_out.empty()) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"id", r.id},
                   {"claim", r.claim},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass},
                   {"wall_ms", r.wall_ms}});
    std::ofstream out(json_out);
    out << j.dump(2) << "\n";
  }
  const size_t passed =
      std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.pass; });
  std::printf("%zu/%zu checks passed\n", passed, rows.size());
  return all_pass(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound-entanglement toolkit"};
  app.require_subcommand(1);

  // state
  auto* cmd_state = app.add_subcommand("state", "emit a named state as JSON");
  std::string state_spec, state_out;
  cmd_state->add_option("name", state_spec, "state spec, e.g. smolin, ghz:4, dur:5:0.2")
      ->required();
  cmd_state->add_option("-o,--out", state_out, "output path")->required();

  // gme
  auto* cmd_gme = app.add_subcommand("gme", "geometric measure of a state file");
  std::string gme_in, gme_measure = "sin2";
  bool gme_mixed = false;
  int gme_restarts = 32, gme_ensemble = 0;
  std::uint64_t gme_seed = 0;
  double gme_tol = 1e-12;
  cmd_gme->add_option("input", gme_in)->required();
  cmd_gme->add_flag("--mixed", gme_mixed, "treat input as mixed (required for density)");
  cmd_gme->add_option("--measure", gme_measure)->check(CLI::IsMember({"sin2", "log2"}));
  cmd_gme->add_option("--restarts", gme_restarts);
  cmd_gme->add_option("--ensemble-size", gme_ensemble);
  cmd_gme->add_option("--seed", gme_seed);
  cmd_gme->add_option("--tol", gme_tol);

  // negativity
  auto* cmd_neg = app.add_subcommand("negativity", "partial-transpose negativity");
  std::string neg_in, neg_partition;
  cmd_neg->add_option("input", neg_in)->required();
  cmd_neg->add_option("--partition", neg_partition, "e.g. 0:1,2,3")->required();

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "family sweep to CSV");
  std::string sweep_family = "dur", sweep_x = "0:1:11", sweep_out;
  std::vector<std::string> sweep_measures;
  int sweep_n = 4;
  std::uint64_t sweep_seed = 0;
  cmd_sweep->add_option("--family", sweep_family)->check(CLI::IsMember({"dur"}));
  cmd_sweep->add_option("--N", sweep_n);
  cmd_sweep->add_option("--x", sweep_x, "from:to:steps");
  cmd_sweep->add_option("--measures", sweep_measures,
                        "subset of {neg,cert,opt,relent}; default all but opt");
  cmd_sweep->add_option("--out", sweep_out)->required();
  cmd_sweep->add_option("--seed", sweep_seed);

  // relent
  auto* cmd_rel = app.add_subcommand("relent", "relative entropy S(rho||sigma)");
  std::string rel_rho, rel_sigma, rel_conj;
  cmd_rel->add_option("rho", rel_rho)->required();
  cmd_rel->add_option("sigma_file", rel_sigma);
  cmd_rel->add_option("--sigma", rel_conj)->check(CLI::IsMember({"conjectured"}));

  // distill
  auto* cmd_dist = app.add_subcommand("distill", "depolarization witness report");
  std::string dist_range, dist_in;
  cmd_dist->add_option("--N-range", dist_range, "a:b consistency table as CSV");
  cmd_dist->add_option("--in", dist_in, "state file: coefficients + predicates");

  // ineq
  auto* cmd_ineq = app.add_subcommand("ineq", "inequality sweep: min/max slack JSON");
  int ineq_samples = 10000;
  std::uint64_t ineq_seed = 0;
  cmd_ineq->add_option("--samples", ineq_samples);
  cmd_ineq->add_option("--seed", ineq_seed);

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "run the verification suite");
  std::string ver_profile = "default", ver_json;
  std::uint64_t ver_seed = 0;
  cmd_ver->add_option("--tol-profile", ver_profile)
      ->check(CLI::IsMember({"default", "strict"}));
  cmd_ver->add_option("--seed", ver_seed);
  cmd_ver->add_option("--json", ver_json, "also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_state) {
      save_state(parse_state_spec(state_spec), state_out);
      return 0;
    }

    if (*cmd_gme) {
      const AnyState s = load_state(gme_in);
      const RoofKind kind =
          gme_measure == "sin2" ? RoofKind::sin2 : RoofKind::log2;
      GmeOptions opts;
      opts.restarts = gme_restarts;
      opts.seed = gme_seed;
      opts.tol = gme_tol;
      json out;
      out["measure"] = gme_measure;
      out["options"] = {{"restarts", gme_restarts},
                        {"seed", gme_seed},
                        {"tol", gme_tol}};
      if (std::holds_alternative<PureState>(s) && !gme_mixed) {
        const PureState& psi = std::get<PureState>(s);
        const LambdaResult r = lambda_max(psi, opts);
        out["lambda"] = r.lambda_max;
        out["residual"] = r.residual;
        out["value"] = kind == RoofKind::sin2
                           ? 1.0 - r.lambda_max * r.lambda_max
                           : -2.0 * std::log2(r.lambda_max);
      } else {
        if (std::holds_alternative<DensityMatrix>(s) && !gme_mixed) {
          std::cerr << "density input requires --mixed\n";
          return 2;
        }
        RoofOptions ro;
        ro.ensemble_size = gme_ensemble;
        ro.seed = gme_seed;
        ro.inner = opts;
        const RoofResult r = optimize_roof(as_density(s), kind, ro);
        out["value"] = r.value;
        out["options"]["ensemble_size"] = gme_ensemble;
        out["decomposition"] = json::parse(decomposition_to_json(r.best));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_neg) {
      const DensityMatrix rho = as_density(load_state(neg_in));
      const PartySplit split = parse_partition(neg_partition, rho.n_parties);
      std::cout << format_float(negativity(rho, split), 12) << "\n";
      return 0;
    }

    if (*cmd_sweep) {
      if (sweep_n < 4) throw std::invalid_argument("sweep: need N >= 4");
      const auto tok1 = sweep_x.find(':'), tok2 = sweep_x.rfind(':');
      if (tok1 == std::string::npos || tok2 == tok1)
        throw std::invalid_argument("x range must be from:to:steps");
      const double x0 = std::stod(sweep_x.substr(0, tok1));
      const double x1 = std::stod(sweep_x.substr(tok1 + 1, tok2 - tok1 - 1));
      const int steps = std::stoi(sweep_x.substr(tok2 + 1));
      if (steps < 1 || x0 < 0 || x1 > 1 || x1 < x0)
        throw std::invalid_argument("bad x range");
      std::set<std::string> measures(sweep_measures.begin(), sweep_measures.end());
      if (measures.empty()) measures = {"neg", "cert", "relent"};
      const bool with_opt = measures.count("opt") > 0;

      std::ofstream out(sweep_out);
      if (!out) throw std::runtime_error("cannot open " + sweep_out);
      out << "x,neg_1_rest,neg_12_rest,e_sin2_cert,e_log2_cert";
      if (with_opt) out << ",e_sin2_opt";
      out << ",relent_upper\n";
      GmeOptions gopts;
      gopts.seed = sweep_seed;
      for (int i = 0; i < steps; ++i) {
        const double x = steps == 1 ? x0 : x0 + (x1 - x0) * i / (steps - 1);
        const DensityMatrix rho = dur(sweep_n, x);
        PartySplit one{{0}, {}}, two{{0, 1}, {}};
        for (int p = 1; p < sweep_n; ++p) one.side_b.insert(p);
        for (int p = 2; p < sweep_n; ++p) two.side_b.insert(p);
        out << format_float(x);
        out << "," << format_float(negativity(rho, one));
        out << "," << format_float(negativity(rho, two));
        out << "," << format_float(x / 2.0);
        out << "," << format_float(std::log2(2.0 / (2.0 - x)));
        if (with_opt) {
          RoofOptions ro;
          ro.seed = sweep_seed;
          ro.outer_restarts = 2;
          ro.max_evals = 2000;
          out << ","
              << format_float(optimize_roof(rho, RoofKind::sin2, ro).value);
        }
        out << "," << format_float(relative_entropy(rho, sigma_dur(sweep_n, x)));
        out << "\n";
      }
      return 0;
    }

    if (*cmd_rel) {
      const DensityMatrix rho = as_density(load_state(rel_rho));
      DensityMatrix sigma{0, {}};
      if (!rel_sigma.empty()) {
        sigma = as_density(load_state(rel_sigma));
      } else if (rel_conj == "conjectured") {
        // recognize the family: Smolin, or dur(N, x) with x read off the state
        if (rho.n_parties == 4 &&
            (rho.mat - smolin().mat).cwiseAbs().maxCoeff() < 1e-8) {
          sigma = sigma_smolin();
        } else {
          const PureState g = ghz(rho.n_parties, 0.0);
          const double x = (g.amps.adjoint() * rho.mat * g.amps)(0).real();
          if ((rho.mat - dur(rho.n_parties, x).mat).cwiseAbs().maxCoeff() > 1e-8)
            throw std::invalid_argument(
                "conjectured sigma is only defined for the Smolin and Dur states");
          sigma = sigma_dur(rho.n_parties, x);
        }
      } else {
        throw std::invalid_argument("provide a sigma file or --sigma conjectured");
      }
      const double s = relative_entropy(rho, sigma);
      if (std::isinf(s))
        std::cout << "inf\n";
      else
        std::cout << format_float(s, 12) << "\n";
      return 0;
    }

    if (*cmd_dist) {
      if (!dist_range.empty()) {
        const auto colon = dist_range.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("N range must be a:b");
        const int lo = std::stoi(dist_range.substr(0, colon));
        const int hi = std::stoi(dist_range.substr(colon + 1));
        std::cout << "N,kind,threshold,bound,exceeds\n";
        for (const auto& row : consistency_report(lo, hi))
          std::cout << row.n_parties << "," << bell_kind_name(row.kind) << ","
                    << format_float(row.threshold) << ","
                    << format_float(row.bound) << ","
                    << (row.threshold_exceeds_bound ? "true" : "false") << "\n";
        return 0;
      }
      if (dist_in.empty())
        throw std::invalid_argument("distill needs --N-range or --in");
      const DensityMatrix rho = as_density(load_state(dist_in));
      const DepolarizedCoeffs c = depolarize(rho);
      const auto nd = nondistillable_all_partitions(c);
      json out;
      out["lambda0_plus"] = c.lambda0_plus;
      out["lambda0_minus"] = c.lambda0_minus;
      out["delta"] = delta(c);
      out["normalization"] = c.normalization();
      out["nondistillable_all_partitions"] = nd.holds;
      if (nd.violating_j) out["violating_j"] = *nd.violating_j;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_ineq) {
      auto rng = std::mt19937_64(ineq_seed);
      std::uniform_real_distribution<double> u(0.0, M_PI / 2);
      double min_slack4 = 1e300, max_norm = 0.0, min_fslack = 1e300;
      for (int i = 0; i < ineq_samples; ++i) {
        std::array<double, 4> t{u(rng), u(rng), u(rng), u(rng)};
        const double v = smolin_overlap_norm_sq(t);
        max_norm = std::max(max_norm, v);
        min_slack4 = std::min(min_slack4, 1.0 - v);
        std::vector<double> t10;
        for (int n = 0; n < 10; ++n) t10.push_back(u(rng));
        std::vector<double> t4(t10.begin(), t10.begin() + 4);
        min_fslack = std::min(min_fslack, 1.0 - f_n(t4));
      }
      json out;
      out["samples"] = ineq_samples;
      out["overlap_norm_sq"] = {{"max", max_norm}, {"min_slack", min_slack4}};
      out["f4"] = {{"min_slack", min_fslack}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_ver)
      return run_verify_cmd(ver_profile, ver_seed, ver_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
