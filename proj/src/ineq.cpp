#include "bent/ineq.hpp"

#include <cmath>

namespace bent {

namespace {

// Kahan summation keeps the 1e-12 slack in the inequality suites meaningful.
struct Accum {
  double sum = 0.0, carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

struct Angles4 {
  double c[4], s[4];
  explicit Angles4(const std::array<double, 4>& t) {
    for (int i = 0; i < 4; ++i) {
      c[i] = std::cos(t[i]);
      s[i] = std::sin(t[i]);
    }
  }
};

}  // namespace

double smolin_overlap_norm_sq(const std::array<double, 4>& thetas) {
  const Angles4 a(thetas);
  const double* c = a.c;
  const double* s = a.s;
  Accum acc;
  acc.add(std::pow(c[0] * c[1] * c[2] * c[3] + s[0] * s[1] * s[2] * s[3], 2));
  acc.add(std::pow(c[0] * c[1] * s[2] * s[3] + s[0] * s[1] * c[2] * c[3], 2));
  acc.add(std::pow(c[0] * s[1] * c[2] * s[3] + s[0] * c[1] * s[2] * c[3], 2));
  acc.add(std::pow(c[0] * s[1] * s[2] * c[3] + s[0] * c[1] * c[2] * s[3], 2));
  return acc.sum;
}

double smolin_remainder_printed(const std::array<double, 4>& thetas) {
  const Angles4 a(thetas);
  const double* c = a.c;
  const double* s = a.s;
  Accum acc;
  acc.add(std::pow(c[0] * c[1] * c[2] * s[3] - s[0] * s[1] * s[2] * c[3], 2));
  acc.add(std::pow(c[0] * c[1] * s[2] * s[3] - s[0] * s[1] * c[2] * s[3], 2));
  acc.add(std::pow(c[0] * s[1] * c[2] * c[3] - s[0] * c[1] * s[2] * s[3], 2));
  acc.add(std::pow(s[0] * c[1] * c[2] * c[3] - c[0] * s[1] * s[2] * s[3], 2));
  return acc.sum;
}

double smolin_remainder_symmetric(const std::array<double, 4>& thetas) {
  const Angles4 a(thetas);
  const double* c = a.c;
  const double* s = a.s;
  Accum acc;
  acc.add(std::pow(c[0] * c[1] * c[2] * s[3] - s[0] * s[1] * s[2] * c[3], 2));
  acc.add(std::pow(c[0] * c[1] * s[2] * c[3] - s[0] * s[1] * c[2] * s[3], 2));
  acc.add(std::pow(c[0] * s[1] * c[2] * c[3] - s[0] * c[1] * s[2] * s[3], 2));
  acc.add(std::pow(s[0] * c[1] * c[2] * c[3] - c[0] * s[1] * s[2] * s[3], 2));
  return acc.sum;
}

double f_n(const std::vector<double>& thetas) {
  const int n = static_cast<int>(thetas.size());
  if (n < 1) throw std::invalid_argument("f_n: need at least one angle");
  std::vector<double> c(n), s(n);
  for (int i = 0; i < n; ++i) {
    c[i] = std::cos(thetas[i]);
    s[i] = std::sin(thetas[i]);
  }
  double call = 1.0, sall = 1.0;
  for (int i = 0; i < n; ++i) {
    call *= c[i];
    sall *= s[i];
  }
  Accum acc;
  acc.add((call + sall) * (call + sall));
  for (int k = 0; k < n; ++k) {
    double a = 1.0, b = 1.0;
    for (int i = 0; i < n; ++i) {
      a *= (i == k) ? s[i] : c[i];
      b *= (i == k) ? c[i] : s[i];
    }
    acc.add(a * a);
    acc.add(b * b);
  }
  return acc.sum;
}

double psi_y_lambda_closed(double y) {
  if (y < 0.0 || y > 1.0)
    throw std::invalid_argument("psi_y_lambda_closed: y must be in [0,1]");
  return std::sqrt((2.0 - y) / 2.0);
}

ProductState psi_y_closest_product(double y, int n_parties) {
  if (y < 0.0 || y > 1.0)
    throw std::invalid_argument("psi_y_closest_product: y must be in [0,1]");
  if (n_parties < 2)
    throw std::invalid_argument("psi_y_closest_product: need N >= 2");
  const double p = y / (2.0 - y);
  ProductState phi;
  phi.factors.emplace_back(std::sqrt(p), std::sqrt(1.0 - p));
  for (int i = 1; i < n_parties; ++i)
    phi.factors.emplace_back(1.0, 0.0);
  return phi;
}

}  // namespace bent
