#include "bent/tensor_core.hpp"

#include <cmath>

namespace bent {

void validate_density(const DensityMatrix& rho, double herm_tol,
                      double trace_tol, double psd_tol) {
  const long d = dim_of(rho.n_parties);
  if (rho.n_parties < 1 || rho.mat.rows() != d || rho.mat.cols() != d)
    throw std::invalid_argument("density matrix has inconsistent shape");
  if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.mat.trace().real() - 1.0) > trace_tol ||
      std::abs(rho.mat.trace().imag()) > trace_tol)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -psd_tol)
    throw std::invalid_argument("density matrix is not PSD");
}

void validate_split(const PartySplit& split, int n_parties) {
  if (split.side_a.empty() || split.side_b.empty())
    throw std::invalid_argument("both sides of a split must be non-empty");
  std::set<int> all;
  for (int p : split.side_a) all.insert(p);
  for (int p : split.side_b) {
    if (split.side_a.count(p))
      throw std::invalid_argument("split sides overlap");
    all.insert(p);
  }
  if (static_cast<int>(all.size()) != n_parties || *all.begin() != 0 ||
      *all.rbegin() != n_parties - 1)
    throw std::invalid_argument("split does not cover all parties");
}

PureState tensor_product(const std::vector<PureState>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  PureState out = factors.front();
  require_state_shape(out);
  for (size_t f = 1; f < factors.size(); ++f) {
    const PureState& b = factors[f];
    require_state_shape(b);
    Eigen::VectorXcd combined(out.amps.size() * b.amps.size());
    for (long i = 0; i < out.amps.size(); ++i)
      combined.segment(i * b.amps.size(), b.amps.size()) = out.amps(i) * b.amps;
    out.amps = std::move(combined);
    out.n_parties += b.n_parties;
  }
  return out;
}

cxd overlap(const PureState& a, const PureState& b) {
  if (a.n_parties != b.n_parties)
    throw std::invalid_argument("overlap: party count mismatch");
  return a.amps.dot(b.amps);  // Eigen conjugates the left operand
}

DensityMatrix projector(const PureState& psi) {
  return {psi.n_parties, psi.amps * psi.amps.adjoint()};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<int>& keep) {
  const int n = rho.n_parties;
  if (keep.empty() || static_cast<int>(keep.size()) >= n)
    throw std::invalid_argument("partial_trace: keep must be a non-empty proper subset");
  for (int p : keep)
    if (p < 0 || p >= n) throw std::invalid_argument("partial_trace: bad party index");

  std::vector<int> kept(keep.begin(), keep.end());
  std::vector<int> traced;
  for (int p = 0; p < n; ++p)
    if (!keep.count(p)) traced.push_back(p);

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const long dk = 1L << nk, dt = 1L << nt;

  // Assemble a full index from the kept sub-index and the traced sub-index.
  auto full_index = [&](long ik, long it) {
    long idx = 0;
    for (int b = 0; b < nk; ++b)
      if ((ik >> (nk - 1 - b)) & 1) idx |= 1L << (n - 1 - kept[b]);
    for (int b = 0; b < nt; ++b)
      if ((it >> (nt - 1 - b)) & 1) idx |= 1L << (n - 1 - traced[b]);
    return idx;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      cxd sum = 0.0;
      for (long t = 0; t < dt; ++t)
        sum += rho.mat(full_index(r, t), full_index(c, t));
      out(r, c) = sum;
    }
  return {nk, std::move(out)};
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& m, int n_parties,
                                   const std::set<int>& subset) {
  const long d = dim_of(n_parties);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("partial_transpose: shape mismatch");
  if (subset.empty())
    throw std::invalid_argument("partial_transpose: empty subset");
  long mask = 0;
  for (int p : subset) {
    if (p < 0 || p >= n_parties)
      throw std::invalid_argument("partial_transpose: bad party index");
    mask |= 1L << (n_parties - 1 - p);
  }
  Eigen::MatrixXcd out(d, d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) {
      const long rp = (r & ~mask) | (c & mask);
      const long cp = (c & ~mask) | (r & mask);
      out(rp, cp) = m(r, c);
    }
  return out;
}

HermitianSpectrum eig_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eig_hermitian: matrix not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("eig_hermitian: matrix not Hermitian within 1e-10");
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

MatrixLog2 matrix_log2_on_support(const DensityMatrix& rho, double eps) {
  if (eps <= 0) throw std::invalid_argument("matrix_log2_on_support: eps must be > 0");
  const HermitianSpectrum sp = eig_hermitian(rho.mat);
  const long d = rho.mat.rows();
  MatrixLog2 out;
  out.log2_matrix = Eigen::MatrixXcd::Zero(d, d);
  out.support_projector = Eigen::MatrixXcd::Zero(d, d);
  for (long i = 0; i < d; ++i) {
    const double ev = sp.eigenvalues(i);
    if (ev > eps) {
      const Eigen::VectorXcd v = sp.eigenvectors.col(i);
      out.log2_matrix += std::log2(ev) * (v * v.adjoint());
      out.support_projector += v * v.adjoint();
      ++out.support_rank;
    }
  }
  return out;
}

}  // namespace bent
