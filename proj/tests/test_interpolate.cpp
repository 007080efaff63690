#include <doctest.h>

#include <cmath>

#include "dcalc/error.hpp"
#include "dcalc/expr.hpp"
#include "dcalc/interpolate.hpp"
#include "oracles.hpp"

using namespace dcalc;

TEST_SUITE("interpolate") {
  TEST_CASE("samples are reproduced exactly") {
    oracle::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      const long base = rng.integer(-5, 5);
      const Sequence s(base, rng.rationals(static_cast<std::size_t>(rng.integer(1, 14)), -1000, 1000));
      const DifferenceTable table = forward_differences(s);
      for (long x = s.base(); x < s.end(); ++x) CHECK(newton_gregory_eval(table, Integer(x)) == s.at(x));
    }
  }

  TEST_CASE("continuation of a cubic sequence") {
    const Sequence s(0, {2, 10, 30, 68, 130, 222, 350, 520, 738, 1010, 1342});
    const DifferenceTable t = forward_differences(s);
    CHECK(t.coeffs[3] == 6);
    for (std::size_t k = 4; k < t.coeffs.size(); ++k) CHECK(t.coeffs[k] == 0);
    CHECK(newton_gregory_eval(t, Integer(11)) == 1740);
    // 2 + 8[n] + 6[n]^2 + [n]^3 continues the same way
    for (long n = 11; n < 20; ++n) CHECK(newton_gregory_eval(t, Integer(n)) == 2 + 8 * n + 6 * n * (n - 1) + n * (n - 1) * (n - 2));
  }

  TEST_CASE("closed form in falling powers") {
    CHECK(to_string(interpolate_fit(Sequence(0, {0, 1, 4, 9}))) == "[x] + [x]^2");
    oracle::Rng rng(32);
    for (int t = 0; t < 100; ++t) {
      const Sequence s(0, rng.rationals(static_cast<std::size_t>(rng.integer(1, 9)), -50, 50));
      const ClosedForm f = interpolate_fit(s);
      for (long x = 0; x < s.end(); ++x) CHECK(eval(f, x) == Number(s.at(x)));
    }
    CHECK_THROWS_AS(interpolate_fit(Sequence(1, {1, 2})), DomainError);
  }

  TEST_CASE("Taylor row sum of the exponential") {
    // f = 2^x has D^k f(0) = 1, so f(4) = C(4,0) + ... + C(4,4).
    const DifferenceTable t = forward_differences(Sequence(0, {1, 2, 4, 8, 16, 32}));
    for (const auto& c : t.coeffs) CHECK(c == 1);
    Rational row = 0;
    for (long k = 0; k <= 4; ++k) row += binomial(Integer(4), k);
    CHECK(row == 16);
    CHECK(newton_gregory_eval(t, Integer(4)) == 16);
    CHECK(binomial(Integer(-1), 3) == -1);
    CHECK(binomial(Integer(10), 3) == 120);
  }

  TEST_CASE("float samples of cos(x^2/2)") {
    std::vector<double> y;
    for (int x = 0; x <= 10; ++x) y.push_back(std::cos(x * x / 2.0));
    const RealDifferenceTable t = forward_differences(y);
    for (int x = 0; x <= 10; ++x) CHECK(std::abs(newton_gregory_eval(t, static_cast<double>(x)) - y[x]) < 1e-9);

    // Lifted to exact rationals the same samples come back bit for bit.
    std::vector<Rational> exact;
    for (double v : y) exact.emplace_back(v);
    const DifferenceTable e = forward_differences(Sequence(0, exact));
    for (int x = 0; x <= 10; ++x) CHECK(newton_gregory_eval(e, Integer(x)).get_d() == y[x]);
    // Between the nodes both routes agree.
    CHECK(newton_gregory_eval(e, 2.5) == doctest::Approx(newton_gregory_eval(t, 2.5)).epsilon(1e-9));
  }
}
