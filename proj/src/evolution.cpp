#include "dcalc/evolution.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "dcalc/error.hpp"

namespace dcalc {

SpectralDecomposition sym_eigen(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix is not square");
  SpectralDecomposition s;
  if (m.rows() == 0) {
    s.values.resize(0);
    s.vectors.resize(0, 0);
    return s;
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DomainError("matrix is not symmetric");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw DomainError("eigendecomposition did not converge");
  s.values = solver.eigenvalues();
  s.vectors = solver.eigenvectors();
  for (Eigen::Index j = 0; j < s.vectors.cols(); ++j) {
    for (Eigen::Index i = 0; i < s.vectors.rows(); ++i) {
      if (std::abs(s.vectors(i, j)) > 1e-12) {
        if (s.vectors(i, j) < 0) s.vectors.col(j) *= -1.0;
        break;
      }
    }
  }
  return s;
}

double SpectralDecomposition::cutoff() const {
  return values.size() == 0 ? 0.0 : 1e-9 * values.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd SpectralDecomposition::apply(const std::function<double(double)>& g) const {
  Eigen::VectorXd gv(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) gv(i) = g(values(i));
  return vectors * gv.asDiagonal() * vectors.transpose();
}

Eigen::MatrixXd SpectralDecomposition::pseudoinverse() const {
  const double cut = cutoff();
  return apply([cut](double l) { return std::abs(l) <= cut ? 0.0 : 1.0 / l; });
}

Eigen::MatrixXd SpectralDecomposition::kernel_projector() const {
  const double cut = cutoff();
  return apply([cut](double l) { return std::abs(l) <= cut ? 1.0 : 0.0; });
}

namespace {

Eigen::VectorXd heat_block(const ComplexOfGraph& c, int k, const Eigen::VectorXd& f0, double t) {
  if (t < 0) throw DomainError("heat flow needs t >= 0");
  if (f0.size() == 0) return f0;
  const SpectralDecomposition s = sym_eigen(laplacian_block(c, k));
  return s.apply([t](double l) { return std::exp(-l * t); }) * f0;
}

}  // namespace

Form<double> heat_flow(const ComplexOfGraph& c, const Form<double>& f0, double t) {
  if (f0.values.size() != c.count(f0.degree)) throw DomainError("form length does not match its degree");
  const Eigen::Map<const Eigen::VectorXd> v(f0.values.data(), static_cast<Eigen::Index>(f0.values.size()));
  const Eigen::VectorXd r = heat_block(c, f0.degree, v, t);
  return {f0.degree, std::vector<double>(r.data(), r.data() + r.size())};
}

std::vector<double> heat_flow(const ComplexOfGraph& c, std::span<const double> f0, double t) {
  if (f0.size() != c.total()) throw DomainError("vector length does not match the form space");
  std::vector<double> out(f0.begin(), f0.end());
  for (int k = 0; k <= c.top_degree(); ++k) {
    const auto off = c.offset(k);
    const auto n = c.count(k);
    Eigen::VectorXd block = Eigen::Map<const Eigen::VectorXd>(f0.data() + off, static_cast<Eigen::Index>(n));
    if (block.isZero(0.0)) continue;  // keeps untouched degrees exactly zero
    block = heat_block(c, k, block, t);
    std::copy(block.data(), block.data() + n, out.begin() + static_cast<long>(off));
  }
  return out;
}

std::vector<std::complex<double>> schrodinger_flow(const ComplexOfGraph& c, std::span<const std::complex<double>> f0,
                                                   double t) {
  if (f0.size() != c.total()) throw DomainError("vector length does not match the form space");
  if (f0.empty()) return {};
  const SpectralDecomposition s = sym_eigen(dirac(c));
  const Eigen::Map<const Eigen::VectorXcd> v(f0.data(), static_cast<Eigen::Index>(f0.size()));
  const Eigen::VectorXcd coeffs = s.vectors.transpose().cast<std::complex<double>>() * v;
  Eigen::VectorXcd phased(coeffs.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) phased(i) = std::polar(1.0, s.values(i) * t) * coeffs(i);
  const Eigen::VectorXcd r = s.vectors.cast<std::complex<double>>() * phased;
  return {r.data(), r.data() + r.size()};
}

WaveFlow::WaveFlow(const ComplexOfGraph& c, std::span<const double> f0, std::span<const double> g0) {
  if (f0.size() != c.total() || g0.size() != c.total()) throw DomainError("vector length does not match the form space");
  spec_ = sym_eigen(dirac(c));
  const Eigen::Map<const Eigen::VectorXd> f(f0.data(), static_cast<Eigen::Index>(f0.size()));
  const Eigen::Map<const Eigen::VectorXd> g(g0.data(), static_cast<Eigen::Index>(g0.size()));
  a_ = spec_.vectors.transpose() * f;
  const Eigen::VectorXd gc = spec_.vectors.transpose() * g;
  b_ = Eigen::VectorXd::Zero(gc.size());
  const double cut = spec_.cutoff();
  double harmonic = 0;
  for (Eigen::Index i = 0; i < gc.size(); ++i) {
    if (std::abs(spec_.values(i)) <= cut) {
      harmonic += gc(i) * gc(i);
    } else {
      b_(i) = gc(i) / spec_.values(i);
    }
  }
  if (std::sqrt(harmonic) > 1e-9) throw HarmonicComponent("initial velocity has a harmonic component", std::sqrt(harmonic));
}

std::vector<double> WaveFlow::position(double t) const {
  Eigen::VectorXd m(a_.size());
  for (Eigen::Index i = 0; i < a_.size(); ++i) {
    const double w = spec_.values(i);
    m(i) = std::cos(w * t) * a_(i) + std::sin(w * t) * b_(i);
  }
  const Eigen::VectorXd r = spec_.vectors * m;
  return {r.data(), r.data() + r.size()};
}

std::vector<double> WaveFlow::velocity(double t) const {
  Eigen::VectorXd m(a_.size());
  for (Eigen::Index i = 0; i < a_.size(); ++i) {
    const double w = spec_.values(i);
    m(i) = -w * std::sin(w * t) * a_(i) + w * std::cos(w * t) * b_(i);
  }
  const Eigen::VectorXd r = spec_.vectors * m;
  return {r.data(), r.data() + r.size()};
}

double WaveFlow::energy(double t) const {
  // In the eigenbasis L = D^2 is diagonal with entries w^2.
  double e = 0;
  for (Eigen::Index i = 0; i < a_.size(); ++i) {
    const double w = spec_.values(i);
    const double p = std::cos(w * t) * a_(i) + std::sin(w * t) * b_(i);
    const double v = -w * std::sin(w * t) * a_(i) + w * std::cos(w * t) * b_(i);
    e += v * v + w * w * p * p;
  }
  return e;
}

std::vector<double> wave_flow(const ComplexOfGraph& c, std::span<const double> f0, std::span<const double> g0, double t) {
  return WaveFlow(c, f0, g0).position(t);
}

Integer feynman_path_sum(const OperatorMatrix& m, int from, int to, int n) {
  const auto dim = m.entries.rows();
  if (m.entries.cols() != dim) throw DomainError("matrix is not square");
  if (n < 0 || n > 8) throw DomainError("path length must be in 0..8");
  if (dim > 40) throw DomainError("matrix dimension exceeds 40");
  if (from < 0 || to < 0 || from >= dim || to >= dim) throw DomainError("index out of range");

  std::vector<std::vector<std::pair<int, long long>>> out(static_cast<std::size_t>(dim));
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i)
      if (m.entries(i, j) != 0) out[j].emplace_back(static_cast<int>(i), m.entries(i, j));

  Integer total = 0;
  auto walk = [&](auto&& self, int at, int left, const Integer& weight) -> void {
    if (left == 0) {
      if (at == to) total += weight;
      return;
    }
    for (const auto& [next, w] : out[at]) self(self, next, left - 1, Integer(weight * static_cast<long>(w)));
  };
  walk(walk, from, n, Integer(1));
  return total;
}

}  // namespace dcalc
