#include "bent/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "bent/convex_roof.hpp"
#include "bent/distill.hpp"
#include "bent/geom_measure.hpp"
#include "bent/ineq.hpp"
#include "bent/spectral.hpp"
#include "bent/state_zoo.hpp"
#include "bent/tensor_core.hpp"

namespace bent {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLog2E = 1.4426950408889634074;

struct Harness {
  std::vector<VerifyRow> rows;

  void check(const std::string& id, const std::string& claim, double expected,
             double tol, const std::function<double()>& compute) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyRow row;
    row.id = id;
    row.claim = claim;
    row.expected = expected;
    row.tolerance = tol;
    try {
      row.computed = compute();
      row.pass = std::abs(row.expected - row.computed) <= tol;
    } catch (const std::exception&) {
      row.computed = std::numeric_limits<double>::quiet_NaN();
      row.pass = false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rows.push_back(std::move(row));
  }
};

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

DensityMatrix dur_direct(int n) {
  // rho_N at x = 1/(N+1), built from its own mixture weights.
  const long d = dim_of(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const PureState g = ghz(n, 0.0);
  m += (1.0 / (n + 1.0)) * (g.amps * g.amps.adjoint());
  for (int k = 1; k <= n; ++k) {
    const PureState u = u_state(n, k), v = v_state(n, k);
    m += (0.5 / (n + 1.0)) * (u.amps * u.amps.adjoint());
    m += (0.5 / (n + 1.0)) * (v.amps * v.amps.adjoint());
  }
  return {n, std::move(m)};
}

}  // namespace

bool all_pass(const std::vector<VerifyRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::vector<VerifyRow> run_verify(TolProfile profile, std::uint64_t seed) {
  Harness h;
  const bool strict = profile == TolProfile::strict;
  const int support_samples = strict ? 2000 : 1000;
  const int tuple_samples = strict ? 100000 : 20000;

  GmeOptions gme;
  gme.seed = seed;

  // --- tensor core ---------------------------------------------------
  h.check("overlap-0000-ghz4", "overlap of |0000> with the 4-party GHZ state",
          kInvSqrt2, 1e-12, [&] {
            PureState zero{4, Eigen::VectorXcd::Zero(16)};
            zero.amps(0) = 1.0;
            return std::abs(overlap(zero, ghz(4, 0.0)));
          });
  h.check("ptrace-ghz4-single", "single-party reduction of GHZ4 is I/2",
          0.0, 1e-12, [&] {
            const DensityMatrix red = partial_trace(projector(ghz(4, 0.0)), {0});
            return max_abs_diff(red.mat, 0.5 * Eigen::MatrixXcd::Identity(2, 2));
          });
  h.check("pt-smolin-2v2-psd", "Smolin partial transpose over CD stays PSD",
          0.0, 1e-10, [&] {
            const double m = min_pt_eigenvalue(smolin(), {{0, 1}, {2, 3}});
            return std::max(0.0, -m);
          });

  // --- state zoo ------------------------------------------------------
  h.check("ghz4-is-x0", "ghz(4,0) equals the X0 state", 0.0, 1e-15, [&] {
    return (ghz(4, 0.0).amps - x_state(0).amps).cwiseAbs().maxCoeff();
  });
  h.check("xbar3-grouping", "X3 under the 1:3 grouping is (|0,6>+|1,1>)/sqrt2",
          0.0, 1e-15, [&] {
            return (xbar_view(3).amps - x_state(3).amps).cwiseAbs().maxCoeff();
          });
  h.check("smolin-two-forms", "Bell-pair and X-state forms of Smolin agree",
          0.0, 1e-14, [&] {
            return max_abs_diff(smolin(SmolinForm::pairs).mat,
                                smolin(SmolinForm::xform).mat);
          });
  h.check("smolin-x-weights", "each X state carries weight 1/4 in Smolin",
          0.25, 1e-12, [&] {
            const DensityMatrix rho = smolin();
            double worst = 0.25;
            for (int i = 0; i < 4; ++i) {
              const Eigen::VectorXcd xi = x_state(i).amps;
              const double w = (xi.adjoint() * rho.mat * xi)(0).real();
              if (std::abs(w - 0.25) > std::abs(worst - 0.25)) worst = w;
            }
            return worst;
          });
  h.check("dur-matches-fixed-mixture",
          "dur(N,1/(N+1)) equals the direct mixture build, N=4..6", 0.0, 1e-14,
          [&] {
            double worst = 0.0;
            for (int n = 4; n <= 6; ++n)
              worst = std::max(worst, max_abs_diff(dur(n, 1.0 / (n + 1)).mat,
                                                   dur_direct(n).mat));
            return worst;
          });
  h.check("dur-uk-weight", "<u_k|dur(5,0.3)|u_k> = (1-x)/(2N)", 0.07, 1e-12,
          [&] {
            const DensityMatrix rho = dur(5, 0.3);
            const Eigen::VectorXcd u = u_state(5, 2).amps;
            return (u.adjoint() * rho.mat * u)(0).real();
          });
  h.check("bell-like-x0", "bell_like(4,0,+) reproduces X0", 0.0, 1e-15, [&] {
    return (bell_like(4, 0, PsiSign::plus) - x_state(0).amps)
        .cwiseAbs()
        .maxCoeff();
  });
  h.check("sigma-smolin-diagonal",
          "conjectured Smolin sigma has diagonal entries 0 or 1/8", 0.0, 1e-15,
          [&] {
            const DensityMatrix s = sigma_smolin();
            double worst = 0.0;
            for (long i = 0; i < 16; ++i) {
              const double v = s.mat(i, i).real();
              worst = std::max(worst, std::min(std::abs(v), std::abs(v - 0.125)));
            }
            return worst;
          });

  // --- entanglement eigenvalues ----------------------------------------
  for (int n = 3; n <= 8; ++n)
    h.check("lambda-ghz-" + std::to_string(n),
            "GHZ entanglement eigenvalue is 1/sqrt2 (N=" + std::to_string(n) + ")",
            kInvSqrt2, 1e-9,
            [&, n] { return lambda_max(ghz(n, 0.0), gme).lambda_max; });
  h.check("lambda-psi-y", "psi(5, y=0.4) has eigenvalue sqrt(0.8)",
          std::sqrt(0.8), 1e-9, [&] {
            return lambda_max(psi_y(5, 0.4, PsiSign::plus, PsiType::u, 2), gme)
                .lambda_max;
          });

  // --- certificate and optimized roofs ---------------------------------
  h.check("smolin-e-sin2-cert", "certificate average E_sin2 for Smolin",
          0.5, 1e-9,
          [&] { return average_entanglement(certificate_smolin(), RoofKind::sin2, gme); });
  h.check("smolin-e-log2-cert", "certificate average E_log2 for Smolin",
          1.0, 1e-9,
          [&] { return average_entanglement(certificate_smolin(), RoofKind::log2, gme); });
  for (int n = 4; n <= 5; ++n)
    for (double x : {0.2, 0.5}) {
      const std::string suffix =
          " (N=" + std::to_string(n) + ", x=" + std::to_string(x) + ")";
      h.check("dur-e-sin2-cert-" + std::to_string(n) + "-" + std::to_string(x),
              "certificate average E_sin2 for the Dur family" + suffix, x / 2,
              1e-9, [&, n, x] {
                return average_entanglement(certificate_dur(n, x),
                                            RoofKind::sin2, gme);
              });
      h.check("dur-e-log2-cert-" + std::to_string(n) + "-" + std::to_string(x),
              "certificate average E_log2 for the Dur family" + suffix,
              std::log2(2.0 / (2.0 - x)), 1e-9, [&, n, x] {
                return average_entanglement(certificate_dur(n, x),
                                            RoofKind::log2, gme);
              });
    }

  h.check("smolin-e-sin2-opt",
          "roof optimizer lands within 1e-3 of 1/2 on Smolin", 0.5, 1e-3, [&] {
            RoofOptions ro;
            ro.ensemble_size = 8;
            ro.outer_restarts = strict ? 8 : 4;
            ro.seed = 42;
            ro.inner.seed = seed;
            return optimize_roof(smolin(), RoofKind::sin2, ro).value;
          });

  h.check("smolin-support-lambda",
          "no Smolin-support state exceeds eigenvalue 1/sqrt2", 0.0, 1e-6, [&] {
            GmeOptions fast = gme;
            fast.restarts = 8;
            const auto profile_rows =
                support_lambda_profile(smolin(), support_samples, fast);
            double excess = 0.0;
            for (const auto& s : profile_rows)
              excess = std::max(excess, s.lambda - kInvSqrt2);
            return std::max(0.0, excess);
          });
  h.check("dur-support-bound",
          "every Dur-support sample satisfies E_sin2 >= y/2", 0.0, 1e-6, [&] {
            GmeOptions fast = gme;
            fast.restarts = 8;
            const PureState g = ghz(5, 0.0);
            const auto profile_rows =
                support_lambda_profile(dur(5, 0.3), support_samples, fast, &g);
            double viol = 0.0;
            for (const auto& s : profile_rows)
              viol = std::max(viol, *s.y / 2.0 - s.e_sin2);
            return std::max(0.0, viol);
          });

  // --- negativity -------------------------------------------------------
  h.check("neg-smolin-1v3", "Smolin negativity across A:BCD", 1.0, 1e-9,
          [&] { return negativity(smolin(), {{0}, {1, 2, 3}}); });
  h.check("neg-smolin-2v2", "Smolin negativity across AB:CD", 0.0, 1e-9,
          [&] { return negativity(smolin(), {{0, 1}, {2, 3}}); });
  h.check("neg-dur-n6-x03", "Dur negativity 1:rest at N=6, x=0.3",
          (7 * 0.3 - 1) / 6.0, 1e-9, [&] {
            return negativity(dur(6, 0.3), {{0}, {1, 2, 3, 4, 5}});
          });
  h.check("neg-dur-closed-forms",
          "numerical negativities match both closed forms, N=4..8", 0.0, 1e-9,
          [&] {
            double worst = 0.0;
            for (int n = 4; n <= 8; ++n)
              for (int xi = 0; xi <= 10; ++xi) {
                const double x = xi / 10.0;
                const DensityMatrix rho = dur(n, x);
                PartySplit one{{0}, {}};
                PartySplit two{{0, 1}, {}};
                for (int p = 1; p < n; ++p) one.side_b.insert(p);
                for (int p = 2; p < n; ++p) two.side_b.insert(p);
                worst = std::max(
                    worst,
                    std::abs(negativity(rho, one) -
                             dur_negativity_closed(n, x, DurPartition::one_vs_rest)));
                worst = std::max(
                    worst,
                    std::abs(negativity(rho, two) -
                             dur_negativity_closed(n, x, DurPartition::two_vs_rest)));
              }
            return worst;
          });
  h.check("dur-ppt-boundary",
          "dur is PPT across 1:rest up to x=1/(N+1) and NPT just above", 0.0,
          1e-10, [&] {
            double worst = 0.0;
            for (int n = 4; n <= 8; ++n) {
              PartySplit one{{0}, {}};
              for (int p = 1; p < n; ++p) one.side_b.insert(p);
              const double xc = 1.0 / (n + 1);
              worst = std::max(worst,
                               -min_pt_eigenvalue(dur(n, xc), one));
              if (negativity(dur(n, xc + 0.01), one) <= 1e-4) worst = 1.0;
            }
            return std::max(0.0, worst);
          });

  // --- relative entropy ---------------------------------------------------
  h.check("relent-smolin", "relative entropy of Smolin to its sigma", 1.0,
          1e-9, [&] { return relative_entropy(smolin(), sigma_smolin()); });
  h.check("relent-dur", "relative entropy of dur(N,x) to its sigma equals x",
          0.0, 1e-9, [&] {
            double worst = 0.0;
            for (int n = 4; n <= 6; ++n)
              for (double x : {0.1, 0.2, 0.5, 1.0 / (n + 1)})
                worst = std::max(
                    worst, std::abs(relative_entropy(dur(n, x), sigma_dur(n, x)) - x));
            return worst;
          });

  // --- inequality suite -----------------------------------------------------
  h.check("overlap-bound", "four-term product-overlap bound stays below 1",
          0.0, 1e-12, [&] {
            auto rng = std::mt19937_64(seed + 11);
            std::uniform_real_distribution<double> u(0.0, M_PI / 2);
            double excess = 0.0;
            for (int i = 0; i < tuple_samples; ++i) {
              std::array<double, 4> t{u(rng), u(rng), u(rng), u(rng)};
              excess = std::max(excess, smolin_overlap_norm_sq(t) - 1.0);
            }
            return std::max(0.0, excess);
          });
  h.check("f-n-monotone", "f_N is bounded by 1 and nonincreasing in N", 0.0,
          1e-12, [&] {
            auto rng = std::mt19937_64(seed + 13);
            std::uniform_real_distribution<double> u(0.0, M_PI / 2);
            double viol = 0.0;
            for (int i = 0; i < tuple_samples / 10; ++i) {
              std::vector<double> t;
              for (int n = 1; n <= 10; ++n) {
                t.push_back(u(rng));
                if (n == 4) viol = std::max(viol, f_n(t) - 1.0);
                if (n >= 4) {
                  std::vector<double> ext = t;
                  ext.push_back(u(rng));
                  viol = std::max(viol, f_n(ext) - f_n(t));
                }
              }
            }
            return std::max(0.0, viol);
          });
  h.check("psi-y-closed-vs-iterative",
          "iterative eigenvalue matches sqrt((2-y)/2) on the y grid", 0.0,
          1e-9, [&] {
            double worst = 0.0;
            for (int yi = 0; yi <= 10; ++yi) {
              const double y = yi / 10.0;
              const PureState psi = psi_y(4, y, PsiSign::plus, PsiType::u, 1);
              worst = std::max(worst, std::abs(lambda_max(psi, gme).lambda_max -
                                               psi_y_lambda_closed(y)));
            }
            return worst;
          });
  h.check("measure-chain", "(log2 e) E_sin2 <= E_log2 pointwise", 0.0, 1e-9,
          [&] {
            double viol = 0.0;
            for (int i = 1; i <= 1000; ++i) {
              const double x = i / 1000.0;
              viol = std::max(viol,
                              (1.0 - x * x) * kLog2E - (-2.0 * std::log2(x)));
            }
            return std::max(0.0, viol);
          });

  // --- depolarization witness -------------------------------------------
  h.check("ghz-basis-x1", "GHZ basis element (j=3,+) at N=4 equals X1", 0.0,
          1e-15, [&] {
            return (ghz_basis(4)[2 * 3].amps - x_state(1).amps)
                .cwiseAbs()
                .maxCoeff();
          });
  h.check("delta-dur", "Delta of the depolarized dur(5,0.3) equals x", 0.3,
          1e-12, [&] { return delta(depolarize(dur(5, 0.3))); });
  h.check("threshold-two-setting-n8", "two-setting threshold at N=8",
          std::pow(2.0, -3.5), 1e-12, [&] {
            return bell_violation_threshold(8, BellInequalityKind::two_setting);
          });
  h.check("threshold-three-setting-n7", "three-setting threshold at N=7",
          std::sqrt(3.0) * std::pow(2.0 / 3.0, 7), 1e-12, [&] {
            return bell_violation_threshold(7, BellInequalityKind::three_setting);
          });
  h.check("threshold-functional-n6", "functional threshold at N=6",
          2.0 * std::pow(2.0 / M_PI, 6), 1e-12, [&] {
            return bell_violation_threshold(6, BellInequalityKind::functional);
          });
  h.check("bell-vs-nodistill",
          "every Bell threshold exceeds the nondistillability bound, N=4..12",
          1.0, 0.0, [&] {
            const auto rows = consistency_report(4, 12);
            for (const auto& r : rows)
              if (!r.threshold_exceeds_bound) return 0.0;
            return 1.0;
          });
  h.check("nodistill-boundary",
          "uniform coefficients at Delta = 2^{-(N-1)} sit on the boundary",
          1.0, 0.0, [&] {
            for (int n = 4; n <= 8; ++n) {
              DepolarizedCoeffs c;
              c.n_parties = n;
              const double d = max_delta_nondistillable(n);
              c.lambda0_plus = d;
              c.lambda0_minus = 0.0;
              const long count = (1L << (n - 1)) - 1;
              c.lambdas = Eigen::VectorXd::Constant(count, (1.0 - d) / (2.0 * count));
              if (!nondistillable_all_partitions(c).holds) return 0.0;
            }
            return 1.0;
          });

  return h.rows;
}

}  // namespace bent
