#include <doctest.h>

#include "dcalc/error.hpp"
#include "dcalc/expr.hpp"
#include "oracles.hpp"

using namespace dcalc;

namespace {

std::string random_atom(oracle::Rng& rng) {
  switch (rng.integer(0, 8)) {
    case 0:
      return std::to_string(rng.integer(1, 9));
    case 1:
      return "x";
    case 2:
      return "[x]";
    case 3:
      return "[x]^" + std::to_string(rng.integer(0, 4));
    case 4:
      return "x^" + std::to_string(rng.integer(0, 3));
    case 5:
      return std::to_string(rng.integer(2, 4)) + "^x";
    case 6:
    case 7: {
      long a = rng.integer(-3, 3);
      if (a == 0) a = 2;
      return std::string(rng.coin(0.5) ? "sin(" : "cos(") + std::to_string(a) + ".x)";
    }
    default:
      return "exp(" + std::to_string(rng.integer(1, 3)) + ".x)";
  }
}

std::string random_expression(oracle::Rng& rng) {
  std::string s;
  const long terms = rng.integer(1, 3);
  for (long t = 0; t < terms; ++t) {
    if (t > 0) s += rng.coin(0.5) ? " + " : " - ";
    else if (rng.coin(0.2)) s += "-";
    s += random_atom(rng);
    if (rng.coin(0.4)) s += "*" + random_atom(rng);
    if (rng.coin(0.2)) s += "/" + std::to_string(rng.integer(2, 5));
  }
  return s;
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("parse and evaluate") {
    CHECK(eval(parse("3*[x]^5 + 3^x - 2*x + 7"), 10) == Number(3 * 30240 + 59049 - 20 + 7));
    CHECK(eval(parse("sin(x)"), 10) == Number(32));
    CHECK(eval(parse("cos(x)"), 10) == Number(0));
    CHECK(eval(parse("[x]^(-1)"), 2).to_double() == doctest::Approx(std::log2(1.5)));
    CHECK(eval(parse("exp(1.x)"), 4) == Number(16));
    CHECK(eval(parse("(1/2)^x"), 3) == Number(Rational(1, 8)));
    CHECK(eval(parse("x/3 - -x"), 6) == Number(8));
    CHECK(eval(parse("sin(-2·x)"), 1) == Number(-2));
  }

  TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse("sin(3*x)"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("1/0"), ParseError);
    CHECK_THROWS_AS(parse("x^x"), ParseError);
    CHECK_THROWS_AS(parse("x^(-2)"), ParseError);
    CHECK_THROWS_AS(parse("sin(0.x)"), ParseError);
    try {
      parse("[x]^");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 4);
    }
    try {
      parse("2 + foo(x)");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 4);
    }
  }

  TEST_CASE("derivative matches the forward difference") {
    const ClosedForm f = parse("3*[x]^5 + 3^x - 2*x + 7");
    CHECK(eval(derivative(f), 10) == Number(193696));
    CHECK(to_string(derivative(parse("[x]^3"))) == "3*[x]^2");

    oracle::Rng rng(21);
    for (int t = 0; t < 300; ++t) {
      const std::string s = random_expression(rng);
      CAPTURE(s);
      const ClosedForm g = parse(s);
      const ClosedForm dg = derivative(g);
      for (long x = -4; x <= 8; ++x) CHECK(eval(dg, x) == eval(g, x + 1) - eval(g, x));
    }
  }

  TEST_CASE("antiderivative inverts the difference") {
    CHECK(to_string(antiderivative(parse("x^2"))) == "[x]^3/3 + [x]^2/2");
    oracle::Rng rng(22);
    int solved = 0;
    for (int t = 0; t < 300; ++t) {
      const std::string s = random_expression(rng);
      CAPTURE(s);
      const ClosedForm g = parse(s);
      ClosedForm F = g;
      try {
        F = antiderivative(g);
      } catch (const NoClosedForm&) {
        continue;
      }
      ++solved;
      CHECK(eval(F, 0) == Number(0));
      for (long x = -4; x <= 8; ++x) CHECK(eval(F, x + 1) - eval(F, x) == eval(g, x));
    }
    CHECK(solved > 150);
    CHECK_THROWS_AS(antiderivative(parse("log(x)")), NoClosedForm);
    CHECK_THROWS_AS(antiderivative(parse("sin(x)*cos(x)")), NoClosedForm);
  }

  TEST_CASE("printing round-trips through the parser") {
    oracle::Rng rng(23);
    for (int t = 0; t < 300; ++t) {
      const std::string s = random_expression(rng);
      const ClosedForm g = parse(s);
      const std::string printed = to_string(g);
      CAPTURE(s);
      CAPTURE(printed);
      CHECK(parse(printed) == g);
    }
  }

  TEST_CASE("definite sums") {
    CHECK(definite_sum(parse("sin(3.x)"), 0, 10) == Number(-33237));
    CHECK(definite_sum(parse("x"), 0, 102) == Number(5151));
    CHECK(definite_sum(parse("x"), 1, 101) == Number(5050));
    CHECK(definite_sum(parse("x^2"), 1, 1001) == Number(333833500));

    const ClosedForm f = parse("x*sin(x)");
    const Number closed = definite_sum(f, 0, 103);
    const Number direct = direct_sum(f, 0, 103);
    CHECK(closed == direct);
    CHECK(closed == Number(Integer("-231935380809580545")));
    // Summation by parts in closed form: (sin(103) - sin(1)) - 102 cos(103).
    CHECK(closed == Number(Rational(sin_discrete(1, 103) - sin_discrete(1, 1) - 102 * cos_discrete(1, 103))));

    CHECK_FALSE(definite_sum(parse("log(x)"), 1, 5).is_exact());
    CHECK(definite_sum(parse("log(x)"), 1, 5).to_double() == doctest::Approx(std::log2(24.0)));
    CHECK(definite_sum(parse("x"), 3, 3) == Number(0));
    CHECK_THROWS_AS(definite_sum(parse("x"), 4, 3), DomainError);
  }

  TEST_CASE("simplify and normalize keep values") {
    oracle::Rng rng(24);
    for (int t = 0; t < 200; ++t) {
      const ClosedForm g = parse(random_expression(rng));
      const ClosedForm s = simplify(g);
      for (long x = -3; x <= 6; ++x) CHECK(eval(s, x) == eval(g, x));
      try {
        const ClosedForm n = normalize(g);
        for (long x = -3; x <= 6; ++x) CHECK(eval(n, x) == eval(g, x));
      } catch (const NoClosedForm&) {
      }
    }
  }
}
