#pragma once

// Euler characteristic, cohomology ranks, curvature and indices of functions
// on graph complexes.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcalc/complex.hpp"
#include "dcalc/forms.hpp"
#include "dcalc/numcore.hpp"

namespace dcalc {

long euler_characteristic(const ComplexOfGraph& c);

// Exact rank by fraction-free elimination.
long exact_rank(const IntMatrix& m);

// b_k = v_k - rank d_k - rank d_{k-1}
std::vector<long> betti(const ComplexOfGraph& c);

// K(x) = sum_{k>=0} (-1)^k V_{k-1}(x) / (k+1), V_{-1} = 1, V_j the number of
// j-simplices in the unit sphere of x.
Rational curvature(const ComplexOfGraph& c, int x);
std::vector<Rational> curvatures(const ComplexOfGraph& c);

// i_f(x) = 1 - chi(S^-(x)), S^- the neighbors with smaller value. f must be injective.
int index(const ComplexOfGraph& c, std::span<const double> f, int x);

enum class CriticalKind { Regular, Minimum, Maximum, Saddle, Monkey, Other };

struct CriticalPoint {
  CriticalKind kind = CriticalKind::Regular;
  int index = 0;
  int multiplicity = 0;  // components of S^- for saddles
};

CriticalPoint classify_critical(const ComplexOfGraph& c, std::span<const double> f, int x);
std::string to_string(const CriticalPoint& p);

struct IndexReport {
  std::vector<CriticalPoint> points;  // per vertex
  long total = 0;
};

IndexReport poincare_hopf(const ComplexOfGraph& c, std::span<const double> f);

struct ExpectationOptions {
  bool parallel = false;
  // Random orderings instead of all |V|! of them.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
};

// Average index over orderings of the vertices. Exhaustive enumeration is
// limited to 10 vertices.
std::vector<Rational> index_expectation(const ComplexOfGraph& c, const ExpectationOptions& opt = {});

// Sum of curvature over the boundary of a flat surface.
Rational umlaufsatz_sum(const ComplexOfGraph& c);

}  // namespace dcalc
