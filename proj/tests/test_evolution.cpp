#include <doctest.h>

#include <cmath>
#include <complex>

#include "dcalc/error.hpp"
#include "dcalc/evolution.hpp"
#include "oracles.hpp"

using namespace dcalc;
using cd = std::complex<double>;

namespace {

double norm(const std::vector<cd>& v) {
  double s = 0;
  for (const cd& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> random_vector(oracle::Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.real(-1, 1);
  return v;
}

}  // namespace

TEST_SUITE("evolution") {
  TEST_CASE("eigendecompositions") {
    const auto k2 = sym_eigen(laplacian(build_complex(generate("complete:2"))));
    CHECK(k2.values(0) == doctest::Approx(0).epsilon(1e-10));
    CHECK(std::abs(k2.values(1) - 2) < 1e-10);
    CHECK(std::abs(k2.values(2) - 2) < 1e-10);

    const auto c4 = sym_eigen(laplacian_block(build_complex(generate("cycle:4")), 0));
    const double want[] = {0, 2, 2, 4};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(c4.values(i) - want[i]) < 1e-10);

    const auto id = sym_eigen(Eigen::MatrixXd::Identity(5, 5));
    for (int i = 0; i < 5; ++i) CHECK(id.values(i) == doctest::Approx(1.0));

    for (const char* s : {"octahedron", "icosahedron", "complete:5", "wheel:6", "cube"}) {
      const ComplexOfGraph c(generate(s));
      for (const OperatorMatrix& m : {dirac(c), laplacian(c)}) {
        const Eigen::MatrixXd A = m.to_double();
        const auto d = sym_eigen(A);
        const Eigen::MatrixXd& Q = d.vectors;
        const auto n = A.rows();
        CHECK((Q.transpose() * Q - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((A - Q * d.values.asDiagonal() * Q.transpose()).cwiseAbs().maxCoeff() < 1e-9 * A.cwiseAbs().maxCoeff());
        for (Eigen::Index i = 1; i < n; ++i) CHECK(d.values(i - 1) <= d.values(i));
        for (Eigen::Index j = 0; j < n; ++j) {
          Eigen::Index first = 0;
          while (std::abs(Q(first, j)) < 1e-12) ++first;
          CHECK(Q(first, j) > 0);
        }
      }
      CHECK(sym_eigen(laplacian(c)).values(0) > -1e-10);
    }
    Eigen::MatrixXd bad(2, 2);
    bad << 1, 2, 3, 4;
    CHECK_THROWS_AS(sym_eigen(bad), DomainError);
  }

  TEST_CASE("heat flow") {
    oracle::Rng rng(71);
    const ComplexOfGraph c5(generate("cycle:5"));
    const Form<double> f0{0, random_vector(rng, 5)};
    CHECK(max_diff(heat_flow(c5, f0, 0.0).values, f0.values) < 1e-12);
    double mean = 0;
    for (double v : f0.values) mean += v / 5;
    for (double v : heat_flow(c5, f0, 50.0).values) CHECK(std::abs(v - mean) < 1e-8);

    const ComplexOfGraph oct(generate("octahedron"));
    for (int k = 0; k <= 2; ++k) {
      const Form<double> g{k, random_vector(rng, oct.count(k))};
      const double t1 = rng.real(0, 2), t2 = rng.real(0, 2);
      const auto once = heat_flow(oct, g, t1 + t2).values;
      const auto twice = heat_flow(oct, heat_flow(oct, g, t1), t2).values;
      CHECK(max_diff(once, twice) < 1e-9);
    }
    for (double t : {0.1, 1.0, 7.0}) {
      const Form<double> s{0, random_vector(rng, 6)};
      double before = 0, after = 0;
      for (double v : s.values) before += v;
      for (double v : heat_flow(oct, s, t).values) after += v;
      CHECK(std::abs(before - after) < 1e-10);
    }

    // a 1-form in the full space stays a 1-form
    std::vector<double> full(oct.total(), 0.0);
    for (std::size_t i = 0; i < oct.count(1); ++i) full[oct.offset(1) + i] = rng.real(-1, 1);
    const auto out = heat_flow(oct, full, 0.8);
    for (std::size_t i = 0; i < oct.total(); ++i)
      if (i < oct.offset(1) || i >= oct.offset(2)) CHECK(out[i] == 0.0);

    CHECK_THROWS_AS(heat_flow(oct, Form<double>{0, {1, 2}}, 1.0), DomainError);
    CHECK_THROWS_AS(heat_flow(oct, Form<double>{0, std::vector<double>(6, 1.0)}, -1.0), DomainError);
  }

  TEST_CASE("Schroedinger flow") {
    const ComplexOfGraph k2(generate("complete:2"));
    const std::vector<cd> e0{1, 0, 0};
    CHECK(std::abs(norm(schrodinger_flow(k2, e0, 1.0)) - 1) < 1e-10);

    oracle::Rng rng(72);
    for (const char* s : {"octahedron", "wheel:6", "complete:4"}) {
      const ComplexOfGraph c(generate(s));
      std::vector<cd> f(c.total());
      for (cd& z : f) z = cd(rng.real(-1, 1), rng.real(-1, 1));
      const auto same = schrodinger_flow(c, f, 0.0);
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(same[i] - f[i]) < 1e-12);
      for (double t : {0.3, 2.0, 11.0}) CHECK(std::abs(norm(schrodinger_flow(c, f, t)) - norm(f)) < 1e-10);

      // truncated exponential series at t = 0.5
      const Eigen::MatrixXcd D = dirac(c).to_double().cast<cd>();
      Eigen::VectorXcd term = Eigen::Map<const Eigen::VectorXcd>(f.data(), static_cast<Eigen::Index>(f.size()));
      Eigen::VectorXcd sum = term;
      for (int n = 1; n <= 30; ++n) {
        term = (cd(0, 0.5) / static_cast<double>(n)) * (D * term);
        sum += term;
      }
      const auto got = schrodinger_flow(c, f, 0.5);
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(got[i] - sum(static_cast<Eigen::Index>(i))) < 1e-8);
    }
  }

  TEST_CASE("wave flow") {
    const ComplexOfGraph k2(generate("complete:2"));
    const std::vector<double> f0{1, 0, 0}, zero(3, 0.0);
    for (double t : {0.0, 0.4, 2.5}) {
      const double c = std::cos(std::sqrt(2.0) * t);
      const auto f = wave_flow(k2, f0, zero, t);
      CHECK(std::abs(f[0] - 0.5 * (1 + c)) < 1e-12);
      CHECK(std::abs(f[1] - 0.5 * (1 - c)) < 1e-12);
      CHECK(std::abs(f[2]) < 1e-12);
    }

    oracle::Rng rng(73);
    const ComplexOfGraph oct(generate("octahedron"));
    const std::size_t n = oct.total();
    const Eigen::MatrixXd D = dirac(oct).to_double();
    const auto spec = sym_eigen(D);
    const Eigen::MatrixXd K = spec.kernel_projector();
    Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.real(-1, 1);
    g -= K * g;
    const std::vector<double> f(random_vector(rng, n)), v(g.data(), g.data() + g.size());
    const WaveFlow w(oct, f, v);

    CHECK(max_diff(w.position(0), f) < 1e-12);
    CHECK(max_diff(w.velocity(0), v) < 1e-10);
    const double e0 = w.energy(0);
    for (double t : {0.3, 1.7}) CHECK(std::abs(w.energy(t) - e0) < 1e-8);

    // real part of e^{iDt} (f0 - i D^+ g0)
    const Eigen::VectorXd Dg = spec.pseudoinverse() * g;
    std::vector<cd> psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = cd(f[i], -Dg(static_cast<Eigen::Index>(i)));
    for (double t : {0.3, 1.7}) {
      const auto z = schrodinger_flow(oct, psi, t);
      const auto p = w.position(t);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(z[i].real() - p[i]) < 1e-10);
    }

    // f'' = -L f, through a five-point stencil on the velocity
    const Eigen::MatrixXd L = laplacian(oct).to_double();
    const double h = 1e-3, t = 0.9;
    const auto vm2 = w.velocity(t - 2 * h), vm1 = w.velocity(t - h), vp1 = w.velocity(t + h), vp2 = w.velocity(t + 2 * h);
    const auto p = w.position(t);
    const Eigen::VectorXd Lp = L * Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const double acc = (vm2[i] - 8 * vm1[i] + 8 * vp1[i] - vp2[i]) / (12 * h);
      CHECK(std::abs(acc + Lp(static_cast<Eigen::Index>(i))) < 1e-8);
    }

    std::vector<double> harmonic(n, 0.0);
    harmonic[0] = 1;  // the constant function on vertices is in the kernel, and has overlap with e_0
    CHECK_THROWS_AS(WaveFlow(oct, f, harmonic), HarmonicComponent);
  }

  TEST_CASE("Feynman path sums") {
    const OperatorMatrix d2 = dirac(build_complex(generate("complete:2")));
    CHECK(feynman_path_sum(d2, 0, 0, 2) == 1);
    CHECK(feynman_path_sum(d2, 0, 0, 0) == 1);
    CHECK(feynman_path_sum(d2, 0, 1, 0) == 0);
    for (const char* s : {"complete:2", "complete:3", "cycle:4"}) {
      const ComplexOfGraph c(generate(s));
      for (const OperatorMatrix& m : {dirac(c), laplacian(c)}) {
        const int dim = static_cast<int>(m.entries.rows());
        for (int n = 0; n <= 5; ++n)
          for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
              CHECK(feynman_path_sum(m, a, b, n) == oracle::matrix_power_entry(m.entries, b, a, n));
      }
    }
    CHECK_THROWS_AS(feynman_path_sum(d2, 0, 0, 9), DomainError);
    CHECK_THROWS_AS(feynman_path_sum(d2, 0, 3, 1), DomainError);
    CHECK_THROWS_AS(feynman_path_sum(dirac(build_complex(generate("complete:6"))), 0, 0, 1), DomainError);
  }
}
