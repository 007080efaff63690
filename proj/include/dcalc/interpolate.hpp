#pragma once

// Newton-Gregory interpolation: a function on 0..n-1 is determined by its
// forward differences at 0, f(x) = sum_k D^k f(0) [x]^k / k!.

#include <span>
#include <vector>

#include "dcalc/expr.hpp"
#include "dcalc/numcore.hpp"

namespace dcalc {

struct DifferenceTable {
  // coeffs[k] = D^k f(origin)
  std::vector<Rational> coeffs;
  long origin = 0;
};

// Inexact counterpart for float samples.
struct RealDifferenceTable {
  std::vector<double> coeffs;
  long origin = 0;
};

DifferenceTable forward_differences(const Sequence& samples);
RealDifferenceTable forward_differences(std::span<const double> samples, long origin = 0);

// sum_k coeffs[k] C(x - origin, k); exact at every integer, including
// extrapolation outside the sample window.
Rational newton_gregory_eval(const DifferenceTable& t, const Integer& x);
// The same polynomial at a real argument.
double newton_gregory_eval(const DifferenceTable& t, double x);
double newton_gregory_eval(const RealDifferenceTable& t, double x);

// The interpolating polynomial as a closed form in the falling-power basis.
// Samples must start at 0.
ClosedForm interpolate_fit(const Sequence& samples);

// C(x, k) = [x]^k / k! for any integer x.
Rational binomial(const Integer& x, long k);

}  // namespace dcalc
