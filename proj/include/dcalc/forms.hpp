#pragma once

// k-forms on a graph complex and the operators between them. A k-form stores
// one value per k-simplex, measured in the ascending reference orientation.

#include <Eigen/Dense>
#include <cmath>
#include <span>
#include <vector>

#include "dcalc/complex.hpp"
#include "dcalc/error.hpp"
#include "dcalc/numcore.hpp"

namespace dcalc {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Degree tags are -1 when the matrix acts on all degrees at once.
struct OperatorMatrix {
  IntMatrix entries;
  int row_degree = -1;
  int col_degree = -1;

  Eigen::MatrixXd to_double() const { return entries.cast<double>(); }
  bool operator==(const OperatorMatrix& o) const {
    return row_degree == o.row_degree && col_degree == o.col_degree && entries.rows() == o.entries.rows() &&
           entries.cols() == o.entries.cols() && entries == o.entries;
  }
};

template <class T>
struct Form {
  int degree = 0;
  std::vector<T> values;
};

// d_k : Omega_k -> Omega_{k+1}, shape v_{k+1} x v_k.
OperatorMatrix exterior_derivative(const ComplexOfGraph& c, int k);
// d_k^T : Omega_{k+1} -> Omega_k.
OperatorMatrix codifferential(const ComplexOfGraph& c, int k);
// Requires a complex built through its top degree.
OperatorMatrix dirac(const ComplexOfGraph& c);
OperatorMatrix laplacian(const ComplexOfGraph& c);
// L_k = d_k^T d_k + d_{k-1} d_{k-1}^T, the k-th diagonal block of the Laplacian.
OperatorMatrix laplacian_block(const ComplexOfGraph& c, int k);
OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);

template <class T>
std::vector<T> apply(const OperatorMatrix& m, std::span<const T> v) {
  if (static_cast<std::size_t>(m.entries.cols()) != v.size()) throw DomainError("operator and vector sizes differ");
  std::vector<T> out(static_cast<std::size_t>(m.entries.rows()), T(0));
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) {
      const long long e = m.entries(i, j);
      if (e == 1) {
        out[i] += v[j];
      } else if (e == -1) {
        out[i] -= v[j];
      } else if (e != 0) {
        out[i] += T(static_cast<long>(e)) * v[j];
      }
    }
  return out;
}

template <class T>
Form<T> apply_d(const ComplexOfGraph& c, const Form<T>& f) {
  if (f.values.size() != c.count(f.degree)) throw DomainError("form length does not match the simplex count");
  return {f.degree + 1, apply<T>(exterior_derivative(c, f.degree), f.values)};
}

// Sum of sign * value over an oriented region.
template <class T>
T integrate(const Form<T>& f, const Orientation& o) {
  if (o.degree != f.degree) throw DomainError("orientation degree does not match the form");
  if (o.signs.size() != o.simplices.size()) throw DomainError("orientation is incomplete");
  T acc(0);
  for (std::size_t i = 0; i < o.simplices.size(); ++i) {
    if (o.simplices[i] >= f.values.size()) throw DomainError("orientation refers to a missing simplex");
    if (o.signs[i] > 0) {
      acc += f.values[o.simplices[i]];
    } else {
      acc -= f.values[o.simplices[i]];
    }
  }
  return acc;
}

template <class T>
struct StokesReport {
  T interior;  // integral of dF over the region
  T boundary;  // integral of F over the induced boundary
  T residual;
  OrientedRegion region;
};

// region: indices of (k+1)-simplices, F a k-form.
template <class T>
StokesReport<T> stokes_residual(const ComplexOfGraph& c, std::span<const std::size_t> region, const Form<T>& F) {
  StokesReport<T> r{T(0), T(0), T(0), orient_region(c, F.degree + 1, region)};
  r.interior = integrate(apply_d(c, F), r.region.region);
  r.boundary = integrate(F, r.region.boundary);
  r.residual = r.interior - r.boundary;
  return r;
}

// Value of a 1-form on the oriented edge a -> b.
template <class T>
T edge_value(const ComplexOfGraph& c, const Form<T>& F, int a, int b) {
  if (F.degree != 1) throw DomainError("expected a 1-form");
  const int e[2] = {std::min(a, b), std::max(a, b)};
  const auto idx = c.find(e);
  if (!idx || a == b) throw DomainError(std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
  return a < b ? F.values[*idx] : T(-F.values[*idx]);
}

// Sum of F(e) G(e) over the edges e at x.
template <class T>
T dot_at_vertex(const ComplexOfGraph& c, const Form<T>& F, const Form<T>& G, int x) {
  T acc(0);
  for (int y : c.graph().neighbors(x)) acc += edge_value(c, F, x, y) * edge_value(c, G, x, y);
  return acc;
}

double length_at_vertex(const ComplexOfGraph& c, const Form<double>& F, int x);
// Throws when either length vanishes.
double angle_at_vertex(const ComplexOfGraph& c, const Form<double>& F, const Form<double>& G, int x);

// F(x,y) G(x,z) - F(x,z) G(x,y) for the triangle (x,y,z) anchored at x.
template <class T>
T cross_on_triangle(const ComplexOfGraph& c, const Form<T>& F, const Form<T>& G, int x, int y, int z) {
  std::vector<int> t{x, y, z};
  if (sort_with_sign(t) == 0 || !c.find(t)) throw DomainError("not a triangle");
  return edge_value(c, F, x, y) * edge_value(c, G, x, z) - edge_value(c, F, x, z) * edge_value(c, G, x, y);
}

// Determinant of the edge values of F, G, H along x->y, x->z, x->w.
template <class T>
T triple_product(const ComplexOfGraph& c, const Form<T>& F, const Form<T>& G, const Form<T>& H, int x, int y, int z,
                 int w) {
  std::vector<int> t{x, y, z, w};
  if (sort_with_sign(t) == 0 || !c.find(t)) throw DomainError("not a tetrahedron");
  const Form<T>* rows[3] = {&F, &G, &H};
  T m[3][3];
  const int to[3] = {y, z, w};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = edge_value(c, *rows[i], x, to[j]);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// f(b) - f(a) along the edge a -> b.
template <class T>
T directional_derivative(const ComplexOfGraph& c, const Form<T>& f, int a, int b) {
  if (f.degree != 0) throw DomainError("expected a scalar function");
  if (a == b || !c.graph().adjacent(a, b)) throw DomainError(std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
  return f.values[b] - f.values[a];
}

// Follows the steepest increasing edge until no neighbor is larger. Ties go to
// the smallest neighbor index.
std::vector<int> gradient_ascent(const ComplexOfGraph& c, std::span<const double> f, int start);

// Solves d_0 f = F with f(0) = 0 on a connected graph, or throws
// NotGradientField carrying a closed walk with nonzero circulation.
std::vector<Rational> potential(const ComplexOfGraph& c, const Form<Rational>& F);
std::vector<double> potential(const ComplexOfGraph& c, const Form<double>& F, double tol = 1e-9);

struct PoissonResult {
  std::vector<double> A;  // 1-form with L_1 A = j
  std::vector<double> F;  // 2-form d_1 A
  double gauge = 0;       // max |d_0^T A|
  double maxwell = 0;     // max |d_1^T F - j|
  double closed = 0;      // max |d_2 F|, computed through the integer product d_2 d_1
};

// Throws DomainError when Kirchhoff's law d_0^T j = 0 fails and
// HarmonicComponent when j has a part in the kernel of L_1.
PoissonResult poisson_maxwell(const ComplexOfGraph& c, std::span<const double> j, double tol = 1e-9);

}  // namespace dcalc
