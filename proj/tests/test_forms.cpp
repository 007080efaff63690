#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dcalc/error.hpp"
#include "dcalc/forms.hpp"
#include "oracles.hpp"

using namespace dcalc;

namespace {

std::vector<Graph> generated() {
  std::vector<Graph> gs;
  for (const char* s : {"complete:2", "complete:3", "complete:5", "complete:6", "cycle:4", "cycle:7", "wheel:5",
                        "wheel:6", "star:4", "linear:4", "path:3", "octahedron", "icosahedron", "cube", "mobius:9",
                        "band:10", "hexpatch:2", "annulus:2"})
    gs.push_back(generate(s));
  return gs;
}

IntMatrix transpose(const IntMatrix& m) { return m.transpose(); }

std::vector<std::size_t> all(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// 1-form of the W_6 exercise: hub edges 1, rim edge i -> i+1 carries i.
Form<Rational> wheel_form(const ComplexOfGraph& w) {
  Form<Rational> F{1, std::vector<Rational>(w.count(1), Rational(0))};
  for (std::size_t e = 0; e < w.count(1); ++e) {
    const Simplex& s = w.simplex(1, e);
    if (s[0] == 0) {
      F.values[e] = 1;
    } else if (s[1] == s[0] + 1) {
      F.values[e] = s[0];
    } else {
      F.values[e] = -6;  // (1,6) stores the value of 6 -> 1 reversed
    }
  }
  return F;
}

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("K_2 operators") {
    const ComplexOfGraph k2(generate("complete:2"));
    IntMatrix d0(1, 2);
    d0 << -1, 1;
    CHECK(exterior_derivative(k2, 0).entries == d0);
    IntMatrix D(3, 3), L(3, 3);
    D << 0, 0, -1, 0, 0, 1, -1, 1, 0;
    L << 1, -1, 0, -1, 1, 0, 0, 0, 2;
    CHECK(dirac(k2).entries == D);
    CHECK(laplacian(k2).entries == L);
  }

  TEST_CASE("d squared vanishes") {
    auto check = [](const ComplexOfGraph& c) {
      for (int k = 0; k + 1 <= c.top_degree(); ++k) {
        const OperatorMatrix p = multiply(exterior_derivative(c, k + 1), exterior_derivative(c, k));
        CHECK(p.entries.rows() == static_cast<Eigen::Index>(c.count(k + 2)));
        CHECK((p.entries.size() == 0 || p.entries.cwiseAbs().maxCoeff() == 0));
      }
    };
    for (const Graph& g : generated()) check(ComplexOfGraph(g));
    oracle::Rng rng(51);
    for (int t = 0; t < 50; ++t) check(ComplexOfGraph(rng.graph(static_cast<int>(rng.integer(2, 12)), rng.real(0.2, 0.9))));
  }

  TEST_CASE("Dirac and Laplacian structure") {
    oracle::Rng rng(52);
    std::vector<Graph> gs = generated();
    for (int t = 0; t < 20; ++t) gs.push_back(rng.graph(static_cast<int>(rng.integer(2, 9)), 0.5));
    for (const Graph& g : gs) {
      const ComplexOfGraph c(g);
      const OperatorMatrix D = dirac(c), L = laplacian(c);
      CHECK(D.entries == transpose(D.entries));
      CHECK(L.entries == multiply(D, D).entries);
      for (int k = 0; k <= c.top_degree(); ++k) {
        const auto o = static_cast<Eigen::Index>(c.offset(k)), n = static_cast<Eigen::Index>(c.count(k));
        CHECK(L.entries.block(o, o, n, n) == laplacian_block(c, k).entries);
        // nothing outside the diagonal blocks
        CHECK(L.entries.block(o, 0, n, o).cwiseAbs().sum() == 0);
      }
      const IntMatrix L0 = laplacian_block(c, 0).entries;
      for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(L0.row(v).sum() == 0);
        CHECK(L0(v, v) == static_cast<long long>(g.neighbors(v).size()));
        for (int u = 0; u < g.vertex_count(); ++u)
          if (u != v) CHECK(L0(v, u) == (g.adjacent(u, v) ? -1 : 0));
      }
    }
    IntMatrix c4(4, 4);
    c4 << 2, -1, 0, -1, -1, 2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2;
    CHECK(laplacian_block(ComplexOfGraph(generate("cycle:4")), 0).entries == c4);
    CHECK_THROWS_AS(dirac(ComplexOfGraph(generate("complete:5"), 2)), DomainError);
  }

  TEST_CASE("gradient and curl on a triangle") {
    const ComplexOfGraph t(generate("complete:3"));
    const Form<Rational> f{0, {0, 1, 3}};
    const Form<Rational> g = apply_d(t, f);
    CHECK(g.values == std::vector<Rational>{1, 3, 2});
    CHECK(apply_d(t, g).values == std::vector<Rational>{0});
  }

  TEST_CASE("line integrals of gradients") {
    oracle::Rng rng(53);
    const std::vector<Graph> gs = generated();
    for (int t = 0; t < 100; ++t) {
      const ComplexOfGraph c(gs[static_cast<std::size_t>(rng.integer(0, static_cast<long>(gs.size()) - 1))]);
      const Form<Rational> f{0, rng.rationals(c.count(0), -20, 20)};
      const auto walk = oracle::random_walk(rng, c.graph(), static_cast<int>(rng.integer(0, c.graph().vertex_count() - 1)),
                                            static_cast<int>(rng.integer(0, 12)));
      const Orientation path = walk_orientation(c, walk);
      CHECK(integrate(apply_d(c, f), path) == f.values[walk.back()] - f.values[walk.front()]);
    }
    const ComplexOfGraph c(generate("cycle:4"));
    CHECK(integrate(Form<Rational>{1, {1, 2, 3, 4}}, Orientation{1, {}, {}}) == 0);
    const std::vector<int> bad{0, 2};
    CHECK_THROWS_AS(walk_orientation(c, bad), DomainError);
  }

  TEST_CASE("Stokes on the wheel") {
    const ComplexOfGraph w(generate("wheel:6"));
    const Form<Rational> F = wheel_form(w);
    const auto r = stokes_residual(w, all(6), F);
    CHECK(r.interior == 21);
    CHECK(r.boundary == 21);
    CHECK(r.residual == 0);
    CHECK(r.region.boundary.simplices.size() == 6);
    // rim walk 1 -> 2 -> ... -> 6 -> 1 gives the same line integral
    const std::vector<int> rim{1, 2, 3, 4, 5, 6, 1};
    CHECK(integrate(F, walk_orientation(w, rim)) == 21);
  }

  TEST_CASE("Stokes on closed surfaces and random patches") {
    oracle::Rng rng(54);
    const ComplexOfGraph oct(generate("octahedron"));
    for (int t = 0; t < 20; ++t) {
      const auto r = stokes_residual(oct, all(8), Form<Rational>{1, rng.rationals(12, -9, 9)});
      CHECK(r.region.boundary.simplices.empty());
      CHECK(r.boundary == 0);
      CHECK(r.interior == 0);
    }

    const ComplexOfGraph ico(generate("icosahedron"));
    for (int t = 0; t < 100; ++t) {
      const auto patch = oracle::random_patch(rng, ico, static_cast<std::size_t>(rng.integer(1, 19)));
      const Form<Rational> F{1, rng.rationals(30, -50, 50)};
      const auto r = stokes_residual(ico, patch, F);
      CHECK(r.residual == 0);
      // telescoping: sum the curl by hand with the chosen signs
      Rational curl = 0;
      for (std::size_t i = 0; i < patch.size(); ++i) {
        const Simplex& s = ico.simplex(2, r.region.region.simplices[i]);
        const Rational v = edge_value(ico, F, s[1], s[2]) - edge_value(ico, F, s[0], s[2]) + edge_value(ico, F, s[0], s[1]);
        curl += r.region.region.signs[i] * v;
      }
      CHECK(curl == r.interior);
    }
  }

  TEST_CASE("Gauss on a solid") {
    // two tetrahedra of K_5 glued along a triangle
    const ComplexOfGraph k5(generate("complete:5"));
    oracle::Rng rng(55);
    const int a[4] = {0, 1, 2, 3}, b[4] = {0, 1, 2, 4};
    const std::vector<std::size_t> region{k5.index_of(a), k5.index_of(b)};
    for (int t = 0; t < 20; ++t) {
      const auto r = stokes_residual(k5, region, Form<Rational>{2, rng.rationals(10, -9, 9)});
      CHECK(r.residual == 0);
      CHECK(r.region.boundary.simplices.size() == 6);
    }
  }

  TEST_CASE("dot products, lengths and angles") {
    const ComplexOfGraph s3(generate("star:3"));
    const Form<double> F{1, {1, 2, 2}};
    CHECK(length_at_vertex(s3, F, 0) == doctest::Approx(3.0));
    CHECK(dot_at_vertex(s3, F, F, 0) == doctest::Approx(9.0));
    CHECK(angle_at_vertex(s3, F, F, 0) == doctest::Approx(0.0));

    const ComplexOfGraph oct(generate("octahedron"));
    const Form<double> f{0, {0.5, -1, 2, 3, 0.25, 7}};
    Form<double> g = apply_d(oct, f), h = g;
    for (double& v : h.values) v = -v;
    for (int x = 0; x < 6; ++x) CHECK(angle_at_vertex(oct, g, h, x) == doctest::Approx(std::numbers::pi));
    CHECK_THROWS_AS(angle_at_vertex(oct, g, Form<double>{1, std::vector<double>(12, 0.0)}, 0), DomainError);
  }

  TEST_CASE("cross products") {
    const ComplexOfGraph k4(generate("complete:4"));
    const Form<Rational> f{0, {0, 1, 2, 3}}, g{0, {0, 0, -4, -18}};  // g = x^2 - x^3
    const Form<Rational> F = apply_d(k4, f), G = apply_d(k4, g);
    // anchored at 1: F(1,2) G(1,3) - F(1,3) G(1,2) with f = id
    CHECK(cross_on_triangle(k4, F, G, 1, 2, 3) == Rational(1 * (-18 - 0) - 2 * (-4 - 0)));
    CHECK(cross_on_triangle(k4, F, F, 1, 2, 3) == 0);
    CHECK(cross_on_triangle(k4, G, F, 1, 2, 3) == -cross_on_triangle(k4, F, G, 1, 2, 3));

    oracle::Rng rng(56);
    for (int t = 0; t < 50; ++t) {
      const Form<Rational> p = apply_d(k4, Form<Rational>{0, rng.rationals(4, -9, 9)});
      const Form<Rational> q = apply_d(k4, Form<Rational>{0, rng.rationals(4, -9, 9)});
      for (const Simplex& s : k4.simplices(2)) {
        const Rational v = abs(cross_on_triangle(k4, p, q, s[0], s[1], s[2]));
        CHECK(abs(cross_on_triangle(k4, p, q, s[1], s[2], s[0])) == v);
        CHECK(abs(cross_on_triangle(k4, p, q, s[2], s[0], s[1])) == v);
      }
    }
    CHECK_THROWS_AS(cross_on_triangle(ComplexOfGraph(generate("cycle:4")), Form<Rational>{1, {1, 2, 3, 4}},
                                      Form<Rational>{1, {1, 2, 3, 4}}, 0, 1, 2),
                    DomainError);
  }

  TEST_CASE("triple products") {
    const ComplexOfGraph k5(generate("complete:5"));
    oracle::Rng rng(57);
    for (int t = 0; t < 50; ++t) {
      const Form<Rational> F{1, rng.rationals(10, -9, 9)}, G{1, rng.rationals(10, -9, 9)}, H{1, rng.rationals(10, -9, 9)};
      const int x = 1, y = 3, z = 0, w = 4;
      std::vector<std::vector<Rational>> m;
      for (const auto* form : {&F, &G, &H}) {
        std::vector<Rational> row;
        for (int to : {y, z, w}) {
          const int lo = std::min(x, to), hi = std::max(x, to);
          const int e[2] = {lo, hi};
          const Rational v = form->values[k5.index_of(e)];
          row.push_back(x < to ? v : Rational(-v));
        }
        m.push_back(row);
      }
      CHECK(triple_product(k5, F, G, H, x, y, z, w) == oracle::determinant(m));
      CHECK(triple_product(k5, F, F, G, x, y, z, w) == 0);
      CHECK(triple_product(k5, G, F, H, x, y, z, w) == -triple_product(k5, F, G, H, x, y, z, w));
    }
  }

  TEST_CASE("directional derivative and gradient ascent") {
    const ComplexOfGraph c5(generate("cycle:5"));
    const std::vector<double> f{0, 1, 2, 3, -1};
    CHECK(gradient_ascent(c5, f, 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(directional_derivative(c5, Form<double>{0, f}, 4, 0) == 1.0);
    CHECK_THROWS_AS(directional_derivative(c5, Form<double>{0, f}, 0, 2), DomainError);

    oracle::Rng rng(58);
    const ComplexOfGraph k5(generate("complete:5"));
    for (int t = 0; t < 20; ++t) {
      const auto g = rng.injective(5);
      const int top = static_cast<int>(std::max_element(g.begin(), g.end()) - g.begin());
      for (int s = 0; s < 5; ++s) {
        const auto p = gradient_ascent(k5, g, s);
        CHECK(p.back() == top);
        CHECK(p.size() <= 2);
      }
    }
    const ComplexOfGraph ico(generate("icosahedron"));
    for (int t = 0; t < 100; ++t) {
      const auto g = rng.injective(12);
      const auto p = gradient_ascent(ico, g, static_cast<int>(rng.integer(0, 11)));
      CHECK(p.size() <= 12);
      for (int y : ico.graph().neighbors(p.back())) CHECK(g[y] < g[p.back()]);
    }
  }

  TEST_CASE("potentials") {
    oracle::Rng rng(59);
    const ComplexOfGraph ico(generate("icosahedron"));
    for (int t = 0; t < 50; ++t) {
      const auto g = rng.rationals(12, -30, 30);
      const auto f = potential(ico, apply_d(ico, Form<Rational>{0, g}));
      for (int v = 0; v < 12; ++v) CHECK(f[v] == g[v] - g[0]);
    }

    const ComplexOfGraph c4(generate("cycle:4"));
    // edges (0,1), (0,3), (1,2), (2,3); circulation 0 -> 1 -> 2 -> 3 -> 0
    const Form<Rational> loop{1, {1, -1, 1, 1}};
    try {
      potential(c4, loop);
      FAIL("expected NotGradientField");
    } catch (const NotGradientField& e) {
      const auto& w = e.cycle();
      CHECK(w.size() == 5);
      CHECK(w.front() == w.back());
      CHECK(integrate(loop, walk_orientation(c4, w)) != 0);
    }

    // projection of random fields onto ker d_1, then the float solver
    const Eigen::MatrixXd d1 = exterior_derivative(ico, 1).to_double();
    const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(30, 30) -
                              d1.transpose() * (d1 * d1.transpose()).completeOrthogonalDecomposition().pseudoInverse() * d1;
    const Eigen::MatrixXd d0 = exterior_derivative(ico, 0).to_double();
    for (int t = 0; t < 100; ++t) {
      Eigen::VectorXd F(30);
      for (int i = 0; i < 30; ++i) F(i) = rng.real(-1, 1);
      F = P * F;
      const auto f = potential(ico, Form<double>{1, std::vector<double>(F.data(), F.data() + 30)});
      const Eigen::VectorXd fv = Eigen::Map<const Eigen::VectorXd>(f.data(), 12);
      CHECK((d0 * fv - F).cwiseAbs().maxCoeff() < 1e-9);
    }
  }

  TEST_CASE("Poisson and Maxwell") {
    const ComplexOfGraph k5(generate("complete:5"));
    std::vector<double> j(10, 0.0);
    const int e01[2] = {0, 1}, e12[2] = {1, 2}, e02[2] = {0, 2};
    j[k5.index_of(e01)] = 1;
    j[k5.index_of(e12)] = 1;
    j[k5.index_of(e02)] = -1;
    const PoissonResult r = poisson_maxwell(k5, j);
    CHECK(r.maxwell < 1e-10);
    CHECK(r.gauge < 1e-10);
    CHECK(r.closed == 0);
    // independent check of L_1 A = j
    const Eigen::MatrixXd L1 = laplacian_block(k5, 1).to_double();
    const Eigen::VectorXd A = Eigen::Map<const Eigen::VectorXd>(r.A.data(), 10);
    CHECK((L1 * A - Eigen::Map<const Eigen::VectorXd>(j.data(), 10)).cwiseAbs().maxCoeff() < 1e-10);

    const PoissonResult z = poisson_maxwell(k5, std::vector<double>(10, 0.0));
    for (double a : z.A) CHECK(a == 0.0);
    for (double f : z.F) CHECK(f == 0.0);

    const ComplexOfGraph c4(generate("cycle:4"));
    CHECK_THROWS_AS(poisson_maxwell(c4, std::vector<double>{1, -1, 1, 1}), HarmonicComponent);
    CHECK_THROWS_AS(poisson_maxwell(k5, std::vector<double>(10, 1.0)), DomainError);
  }
}
