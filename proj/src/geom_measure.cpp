#include "bent/geom_measure.hpp"

#include <cmath>
#include <random>

#include "bent/tensor_core.hpp"

namespace bent {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Eigen::Vector2cd haar_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Vector2cd v(cxd(g(rng), g(rng)), cxd(g(rng), g(rng)));
  return v / v.norm();
}

// Environment vector of party i: contraction of psi against the conjugated
// factors of every other party. At a stationary point env = Lambda * c_i.
Eigen::Vector2cd environment(const PureState& psi,
                             const std::vector<Eigen::Vector2cd>& factors,
                             int i) {
  const int n = psi.n_parties;
  const long d = dim_of(n);
  Eigen::Vector2cd env = Eigen::Vector2cd::Zero();
  for (long idx = 0; idx < d; ++idx) {
    const cxd a = psi.amps(idx);
    if (a == cxd(0.0, 0.0)) continue;
    cxd prod = a;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      prod *= std::conj(factors[j]((idx >> (n - 1 - j)) & 1));
    }
    env(((idx >> (n - 1 - i)) & 1)) += prod;
  }
  return env;
}

ProductState dominant_reduced_init(const PureState& psi) {
  const DensityMatrix rho = projector(psi);
  ProductState phi;
  phi.factors.reserve(psi.n_parties);
  for (int p = 0; p < psi.n_parties; ++p) {
    const DensityMatrix red = partial_trace(rho, {p});
    const HermitianSpectrum sp = eig_hermitian(red.mat);
    phi.factors.push_back(sp.eigenvectors.col(1));  // largest eigenvalue
  }
  return phi;
}

}  // namespace

PureState product_to_pure(const ProductState& phi) {
  const int n = static_cast<int>(phi.factors.size());
  if (n < 1) throw std::invalid_argument("empty product");
  PureState out{n, Eigen::VectorXcd(dim_of(n))};
  for (long idx = 0; idx < dim_of(n); ++idx) {
    cxd prod = 1.0;
    for (int j = 0; j < n; ++j)
      prod *= phi.factors[j]((idx >> (n - 1 - j)) & 1);
    out.amps(idx) = prod;
  }
  return out;
}

LambdaResult lambda_max_from(const PureState& psi, const ProductState& init,
                             int max_iters, double tol) {
  const int n = psi.n_parties;
  LambdaResult res;
  res.closest_product = init;
  auto& factors = res.closest_product.factors;
  if (static_cast<int>(factors.size()) != n)
    throw std::invalid_argument("lambda_max_from: factor count mismatch");

  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    double sweep_lambda = lambda;
    for (int i = 0; i < n; ++i) {
      Eigen::Vector2cd env = environment(psi, factors, i);
      const double norm = env.norm();
      if (norm > 1e-300) factors[i] = env / norm;
      sweep_lambda = norm;
    }
    if (std::abs(sweep_lambda - lambda) < tol) {
      lambda = sweep_lambda;
      res.converged = true;
      break;
    }
    lambda = sweep_lambda;
  }
  auto [lam, residual] = stationarity_residual(psi, res.closest_product);
  res.lambda_max = lam;
  res.residual = residual;
  res.restarts_used = 1;
  return res;
}

LambdaResult lambda_max(const PureState& psi, const GmeOptions& opts) {
  require_state_shape(psi);
  require_normalized(psi);
  if (opts.restarts < 1 || opts.tol <= 0)
    throw std::invalid_argument("lambda_max: bad options");

  LambdaResult best;
  best.lambda_max = -1.0;
  for (int r = 0; r < opts.restarts; ++r) {
    ProductState init;
    if (r == 0) {
      init = dominant_reduced_init(psi);
    } else {
      auto rng = make_rng(opts.seed, static_cast<std::uint64_t>(r));
      for (int p = 0; p < psi.n_parties; ++p)
        init.factors.push_back(haar_qubit(rng));
    }
    LambdaResult run = lambda_max_from(psi, init, opts.max_iters, opts.tol);
    if (r == 0 || run.lambda_max > best.lambda_max + 1e-15) best = run;
  }
  best.restarts_used = opts.restarts;
  return best;
}

std::pair<double, double> stationarity_residual(const PureState& psi,
                                                const ProductState& phi) {
  const int n = psi.n_parties;
  if (static_cast<int>(phi.factors.size()) != n)
    throw std::invalid_argument("stationarity_residual: factor count mismatch");
  double lambda = 0.0;
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2cd env = environment(psi, phi.factors, i);
    const cxd proj = phi.factors[i].dot(env);  // <c_i|env>
    const Eigen::Vector2cd orth = env - proj * phi.factors[i];
    residual = std::max(residual, orth.norm());
    lambda = std::abs(proj);
  }
  return {lambda, residual};
}

double e_sin2_pure(const PureState& psi, const GmeOptions& opts) {
  const double lam = lambda_max(psi, opts).lambda_max;
  return std::max(0.0, 1.0 - lam * lam);
}

double e_log2_pure(const PureState& psi, const GmeOptions& opts) {
  const double lam = lambda_max(psi, opts).lambda_max;
  return std::max(0.0, -2.0 * std::log2(std::min(1.0, lam)));
}

std::vector<SupportSample> support_lambda_profile(const DensityMatrix& rho,
                                                  int samples,
                                                  const GmeOptions& opts,
                                                  const PureState* ref) {
  if (samples < 1) throw std::invalid_argument("support_lambda_profile: samples must be >= 1");
  const HermitianSpectrum sp = eig_hermitian(rho.mat);
  std::vector<long> support;
  for (long i = 0; i < sp.eigenvalues.size(); ++i)
    if (sp.eigenvalues(i) > 1e-10) support.push_back(i);
  if (support.empty())
    throw std::invalid_argument("support_lambda_profile: rank-0 input");

  std::vector<SupportSample> out;
  out.reserve(samples);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    auto rng = make_rng(opts.seed, 0x5a5a5a5aULL + s);
    Eigen::VectorXcd coeff(support.size());
    for (long i = 0; i < coeff.size(); ++i) coeff(i) = cxd(g(rng), g(rng));
    coeff /= coeff.norm();
    PureState psi{rho.n_parties, Eigen::VectorXcd::Zero(rho.mat.rows())};
    for (long i = 0; i < coeff.size(); ++i)
      psi.amps += coeff(i) * sp.eigenvectors.col(support[i]);
    psi.amps /= psi.amps.norm();

    SupportSample sample;
    sample.index = s;
    if (ref) {
      const cxd ov = overlap(*ref, psi);
      sample.y = std::norm(ov);
    }
    sample.lambda = lambda_max(psi, opts).lambda_max;
    sample.e_sin2 = std::max(0.0, 1.0 - sample.lambda * sample.lambda);
    out.push_back(sample);
  }
  return out;
}

}  // namespace bent
