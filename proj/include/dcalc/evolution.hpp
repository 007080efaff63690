#pragma once

// Heat, Schroedinger and wave flows solved through eigendecompositions of
// the Dirac and Laplace operators, and the walk-sum expansion of matrix powers.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dcalc/complex.hpp"
#include "dcalc/forms.hpp"
#include "dcalc/numcore.hpp"

namespace dcalc {

struct SpectralDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, first nonzero entry positive

  // Eigenvalues with |lambda| <= cutoff() count as zero.
  double cutoff() const;
  Eigen::MatrixXd apply(const std::function<double(double)>& g) const;
  Eigen::MatrixXd pseudoinverse() const;
  // Orthogonal projection onto the kernel.
  Eigen::MatrixXd kernel_projector() const;
};

// Throws DomainError if m is not symmetric to 1e-12.
SpectralDecomposition sym_eigen(const Eigen::MatrixXd& m);
inline SpectralDecomposition sym_eigen(const OperatorMatrix& m) { return sym_eigen(m.to_double()); }

// e^{-L_k t} f0, computed inside the degree of f0.
Form<double> heat_flow(const ComplexOfGraph& c, const Form<double>& f0, double t);
// The same on a vector over all degrees, block by block.
std::vector<double> heat_flow(const ComplexOfGraph& c, std::span<const double> f0, double t);

// e^{itD} f0 on the full form space.
std::vector<std::complex<double>> schrodinger_flow(const ComplexOfGraph& c, std::span<const std::complex<double>> f0,
                                                   double t);

class WaveFlow {
 public:
  // Throws HarmonicComponent when g0 has a part in the kernel of D.
  WaveFlow(const ComplexOfGraph& c, std::span<const double> f0, std::span<const double> g0);

  // cos(Dt) f0 + sin(Dt) D^+ g0
  std::vector<double> position(double t) const;
  std::vector<double> velocity(double t) const;
  // |f'(t)|^2 + <f(t), L f(t)>
  double energy(double t) const;

 private:
  SpectralDecomposition spec_;
  Eigen::VectorXd a_;  // f0 in the eigenbasis
  Eigen::VectorXd b_;  // D^+ g0 in the eigenbasis
};

std::vector<double> wave_flow(const ComplexOfGraph& c, std::span<const double> f0, std::span<const double> g0, double t);

// Sum over all index walks from -> ... -> to with n steps of the product of
// entries m(next, current); equals (m^n)(to, from). Limited to n <= 8 and
// dimension <= 40.
Integer feynman_path_sum(const OperatorMatrix& m, int from, int to, int n);

}  // namespace dcalc
