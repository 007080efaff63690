#include "dcalc/forms.hpp"

#include <algorithm>
#include <map>

#include "dcalc/evolution.hpp"

namespace dcalc {

OperatorMatrix exterior_derivative(const ComplexOfGraph& c, int k) {
  if (k < 0) throw DomainError("degree must be nonnegative");
  OperatorMatrix d;
  d.row_degree = k + 1;
  d.col_degree = k;
  d.entries = IntMatrix::Zero(static_cast<Eigen::Index>(c.count(k + 1)), static_cast<Eigen::Index>(c.count(k)));
  const auto& cells = c.simplices(k + 1);
  for (std::size_t r = 0; r < cells.size(); ++r) {
    const Simplex& s = cells[r];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      d.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c.index_of(face))) = i % 2 == 0 ? 1 : -1;
    }
  }
  return d;
}

OperatorMatrix codifferential(const ComplexOfGraph& c, int k) {
  OperatorMatrix d = exterior_derivative(c, k);
  return {d.entries.transpose(), k, k + 1};
}

OperatorMatrix dirac(const ComplexOfGraph& c) {
  if (!c.complete()) throw DomainError("complex was truncated below its top degree");
  const auto n = static_cast<Eigen::Index>(c.total());
  OperatorMatrix D{IntMatrix::Zero(n, n), -1, -1};
  for (int k = 0; k < c.top_degree(); ++k) {
    const IntMatrix d = exterior_derivative(c, k).entries;
    const auto r = static_cast<Eigen::Index>(c.offset(k + 1));
    const auto q = static_cast<Eigen::Index>(c.offset(k));
    D.entries.block(r, q, d.rows(), d.cols()) = d;
    D.entries.block(q, r, d.cols(), d.rows()) = d.transpose();
  }
  return D;
}

OperatorMatrix laplacian(const ComplexOfGraph& c) {
  const OperatorMatrix D = dirac(c);
  return {D.entries * D.entries, -1, -1};
}

OperatorMatrix laplacian_block(const ComplexOfGraph& c, int k) {
  const auto n = static_cast<Eigen::Index>(c.count(k));
  OperatorMatrix L{IntMatrix::Zero(n, n), k, k};
  const IntMatrix up = exterior_derivative(c, k).entries;
  if (up.rows() > 0) L.entries += up.transpose() * up;
  if (k > 0) {
    const IntMatrix down = exterior_derivative(c, k - 1).entries;
    L.entries += down * down.transpose();
  }
  return L;
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.entries.cols() != b.entries.rows()) throw DomainError("operator shapes do not compose");
  return {a.entries * b.entries, a.row_degree, b.col_degree};
}

double length_at_vertex(const ComplexOfGraph& c, const Form<double>& F, int x) {
  return std::sqrt(dot_at_vertex(c, F, F, x));
}

double angle_at_vertex(const ComplexOfGraph& c, const Form<double>& F, const Form<double>& G, int x) {
  const double lf = length_at_vertex(c, F, x), lg = length_at_vertex(c, G, x);
  if (lf == 0 || lg == 0) throw DomainError("angle undefined for a vanishing form");
  return std::acos(std::clamp(dot_at_vertex(c, F, G, x) / (lf * lg), -1.0, 1.0));
}

std::vector<int> gradient_ascent(const ComplexOfGraph& c, std::span<const double> f, int start) {
  if (static_cast<int>(f.size()) != c.graph().vertex_count()) throw DomainError("function length mismatch");
  std::vector<int> path{start};
  int x = start;
  for (int step = 0; step < c.graph().vertex_count(); ++step) {
    int best = -1;
    double best_slope = 0;
    for (int y : c.graph().neighbors(x)) {
      const double slope = f[y] - f[x];
      if (slope > best_slope) {
        best = y;
        best_slope = slope;
      }
    }
    if (best < 0) break;
    x = best;
    path.push_back(x);
  }
  return path;
}

namespace {

// Tree path from v up to the root, v first.
std::vector<int> to_root(const std::vector<int>& parent, int v) {
  std::vector<int> p{v};
  while (parent[v] != v) {
    v = parent[v];
    p.push_back(v);
  }
  return p;
}

template <class T, class Same>
std::vector<T> potential_impl(const ComplexOfGraph& c, const Form<T>& F, Same same) {
  const Graph& g = c.graph();
  if (F.degree != 1 || F.values.size() != c.count(1)) throw DomainError("expected a 1-form on the graph");
  if (!g.connected()) throw DomainError("potential needs a connected graph");
  const int n = g.vertex_count();
  std::vector<T> f(static_cast<std::size_t>(n), T(0));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  parent[0] = 0;
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int w : g.neighbors(v))
      if (parent[w] < 0) {
        parent[w] = v;
        f[w] = f[v] + edge_value(c, F, v, w);
        order.push_back(w);
      }
  }
  for (const auto& [a, b] : g.edges()) {
    if (same(T(f[b] - f[a]), edge_value(c, F, a, b))) continue;
    // Closed walk a -> ... -> lca -> ... -> b (-> a).
    std::vector<int> pa = to_root(parent, a), pb = to_root(parent, b);
    while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
      pa.pop_back();
      pb.pop_back();
    }
    std::vector<int> cycle(pa.begin(), pa.end());
    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it) cycle.push_back(*it);
    cycle.push_back(cycle.front());
    throw NotGradientField("1-form is not a gradient field: nonzero circulation around a cycle", std::move(cycle));
  }
  return f;
}

}  // namespace

std::vector<Rational> potential(const ComplexOfGraph& c, const Form<Rational>& F) {
  return potential_impl(c, F, [](const Rational& a, const Rational& b) { return a == b; });
}

std::vector<double> potential(const ComplexOfGraph& c, const Form<double>& F, double tol) {
  return potential_impl(c, F, [tol](double a, double b) { return std::abs(a - b) <= tol; });
}

PoissonResult poisson_maxwell(const ComplexOfGraph& c, std::span<const double> j, double tol) {
  if (j.size() != c.count(1)) throw DomainError("current must be a 1-form");
  const Eigen::Map<const Eigen::VectorXd> J(j.data(), static_cast<Eigen::Index>(j.size()));
  const Eigen::MatrixXd d0 = exterior_derivative(c, 0).to_double();
  const Eigen::MatrixXd d1 = exterior_derivative(c, 1).to_double();

  const Eigen::VectorXd div = d0.transpose() * J;
  if (div.size() > 0 && div.cwiseAbs().maxCoeff() > tol) throw DomainError("current violates Kirchhoff's law");

  const SpectralDecomposition L1 = sym_eigen(laplacian_block(c, 1));
  const Eigen::VectorXd harmonic = L1.kernel_projector() * J;
  if (harmonic.norm() > tol) throw HarmonicComponent("current has a harmonic component", harmonic.norm());

  const Eigen::VectorXd A = L1.pseudoinverse() * J;
  const Eigen::VectorXd F = d1 * A;
  PoissonResult r;
  r.A.assign(A.data(), A.data() + A.size());
  r.F.assign(F.data(), F.data() + F.size());
  const Eigen::VectorXd gauge = d0.transpose() * A;
  r.gauge = gauge.size() > 0 ? gauge.cwiseAbs().maxCoeff() : 0.0;
  const Eigen::VectorXd maxwell = d1.transpose() * F - J;
  r.maxwell = maxwell.size() > 0 ? maxwell.cwiseAbs().maxCoeff() : 0.0;
  const IntMatrix dd = multiply(exterior_derivative(c, 2), exterior_derivative(c, 1)).entries;
  const Eigen::VectorXd closed = dd.cast<double>() * A;
  r.closed = closed.size() > 0 ? closed.cwiseAbs().maxCoeff() : 0.0;
  return r;
}

}  // namespace dcalc
