#include "dcalc/interpolate.hpp"

#include <type_traits>

#include "dcalc/error.hpp"

namespace dcalc {

DifferenceTable forward_differences(const Sequence& samples) {
  DifferenceTable t;
  t.origin = samples.base();
  std::vector<Rational> row = samples.values();
  t.coeffs.reserve(row.size());
  while (!row.empty()) {
    t.coeffs.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return t;
}

RealDifferenceTable forward_differences(std::span<const double> samples, long origin) {
  if (samples.empty()) throw DomainError("no samples");
  RealDifferenceTable t;
  t.origin = origin;
  std::vector<double> row(samples.begin(), samples.end());
  while (!row.empty()) {
    t.coeffs.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return t;
}

Rational binomial(const Integer& x, long k) {
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  Rational r(falling_power(x, k), fact);
  r.canonicalize();
  return r;
}

Rational newton_gregory_eval(const DifferenceTable& t, const Integer& x) {
  // Horner-like accumulation of C(u, k) = C(u, k-1) (u - k + 1) / k.
  const Integer u = x - t.origin;
  Rational acc = 0;
  Rational c = 1;
  for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
    if (k > 0) {
      c *= u - static_cast<long>(k) + 1;
      c /= static_cast<long>(k);
    }
    if (c == 0) break;  // u is a nonnegative integer below k: finite Taylor sum
    acc += t.coeffs[k] * c;
  }
  return acc;
}

namespace {

template <class Coeffs>
double eval_real(const Coeffs& coeffs, long origin, double x) {
  const double u = x - static_cast<double>(origin);
  double acc = 0.0;
  double c = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) c *= (u - static_cast<double>(k) + 1.0) / static_cast<double>(k);
    if constexpr (std::is_same_v<typename Coeffs::value_type, double>) {
      acc += coeffs[k] * c;
    } else {
      acc += coeffs[k].get_d() * c;
    }
  }
  return acc;
}

}  // namespace

double newton_gregory_eval(const DifferenceTable& t, double x) { return eval_real(t.coeffs, t.origin, x); }

double newton_gregory_eval(const RealDifferenceTable& t, double x) { return eval_real(t.coeffs, t.origin, x); }

ClosedForm interpolate_fit(const Sequence& samples) {
  if (samples.base() != 0) throw DomainError("interpolation samples must start at 0");
  const DifferenceTable t = forward_differences(samples);
  std::vector<ClosedForm> terms;
  Integer fact = 1;
  for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    const Rational c = t.coeffs[k] / fact;
    if (c == 0) continue;
    if (k == 0) {
      terms.push_back(ClosedForm::constant(c));
      continue;
    }
    const Rational mag = abs(c);
    ClosedForm term = ClosedForm::falling_power(static_cast<long>(k));
    if (mag != 1) term = ClosedForm::product({ClosedForm::constant(mag), term});
    terms.push_back(c < 0 ? ClosedForm::negate(term) : term);
  }
  if (terms.empty()) return ClosedForm::constant(Rational(0));
  if (terms.size() == 1) return terms[0];
  return ClosedForm::sum(std::move(terms));
}

}  // namespace dcalc
