#include "dcalc/numcore.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "dcalc/error.hpp"

namespace dcalc {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (is_integral(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussianRational inverse(const GaussianRational& z) {
  Rational n = z.norm();
  if (n == 0) throw DomainError("inverse of Gaussian zero");
  return {Rational(z.re / n), Rational(-z.im / n)};
}

std::string to_string(const GaussianInteger& z) {
  std::string out = z.re.get_str();
  if (z.im >= 0) out += "+";
  return out + z.im.get_str() + "i";
}

// ---------------------------------------------------------------------------
// Number

const Rational& Number::exact() const {
  if (!is_exact()) throw DomainError("inexact value where an exact one is required");
  return std::get<Rational>(value_);
}

double Number::to_double() const {
  if (is_exact()) return std::get<Rational>(value_).get_d();
  return std::get<double>(value_);
}

bool Number::is_zero() const {
  if (is_exact()) return std::get<Rational>(value_) == 0;
  return std::get<double>(value_) == 0.0;
}

std::string Number::to_string() const {
  if (is_exact()) return dcalc::to_string(std::get<Rational>(value_));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(value_));
  return buf;
}

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() + b.exact());
  return a.to_double() + b.to_double();
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() - b.exact());
  return a.to_double() - b.to_double();
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() * b.exact());
  return a.to_double() * b.to_double();
}

Number operator/(const Number& a, const Number& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() / b.exact());
  return a.to_double() / b.to_double();
}

Number operator-(const Number& a) {
  if (a.is_exact()) return Rational(-a.exact());
  return -a.to_double();
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

// ---------------------------------------------------------------------------
// Sequences

Sequence::Sequence(long base, std::vector<Rational> values) : base_(base), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("empty sequence");
}

Sequence::Sequence(long base, std::initializer_list<long> values) : base_(base) {
  if (values.size() == 0) throw DomainError("empty sequence");
  values_.reserve(values.size());
  for (long v : values) values_.emplace_back(v);
}

const Rational& Sequence::at(long x) const {
  if (!contains(x)) throw DomainError("index " + std::to_string(x) + " outside sequence window");
  return values_[static_cast<std::size_t>(x - base_)];
}

Sequence diff(const Sequence& f) {
  if (f.size() < 2) throw DomainError("difference needs at least two values");
  std::vector<Rational> out;
  out.reserve(f.size() - 1);
  const auto& v = f.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.emplace_back(v[i + 1] - v[i]);
  return {f.base(), std::move(out)};
}

Sequence sum_prefix(const Sequence& f) {
  if (f.base() > 0 || f.end() < 0) {
    throw DomainError("sum is anchored at 0; the window must reach 0");
  }
  const std::size_t n = f.size();
  std::vector<Rational> out(n + 1);
  const std::size_t zero = static_cast<std::size_t>(-f.base());
  const auto& v = f.values();
  out[zero] = 0;
  for (std::size_t i = zero; i < n; ++i) out[i + 1] = out[i] + v[i];
  for (std::size_t i = zero; i-- > 0;) out[i] = out[i + 1] - v[i];
  return {f.base(), std::move(out)};
}

// ---------------------------------------------------------------------------
// Falling powers

Integer falling_power(const Integer& x, long n) {
  if (n < 0) throw DomainError("falling power needs n >= 0");
  Integer acc = 1;
  for (long j = 0; j < n; ++j) acc *= x - j;
  return acc;
}

Rational falling_power(const Rational& x, long n) {
  if (n < 0) throw DomainError("falling power needs n >= 0");
  Rational acc = 1;
  for (long j = 0; j < n; ++j) acc *= x - j;
  return acc;
}

double falling_power(double x, long n, double h) {
  if (n < 0) throw DomainError("falling power needs n >= 0");
  double acc = 1.0;
  for (long j = 0; j < n; ++j) acc *= x - static_cast<double>(j) * h;
  return acc;
}

// ---------------------------------------------------------------------------
// Exponential and trigonometric functions

GaussianInteger exp_trig_exact(long a, unsigned long x) {
  return pow(GaussianInteger{Integer(1), Integer(a)}, x);
}

GaussianRational exp_trig(long a, long x) {
  GaussianRational base{Rational(1), Rational(a)};
  if (x >= 0) return pow(base, static_cast<unsigned long>(x));
  return pow(inverse(base), static_cast<unsigned long>(-x));
}

Rational sin_discrete(long a, long x) { return exp_trig(a, x).im; }
Rational cos_discrete(long a, long x) { return exp_trig(a, x).re; }

Rational exp_real(const Rational& a, long x) {
  Rational base = a + 1;
  if (x < 0) {
    if (base == 0) throw DomainError("exp(a.x) with a = -1 is not invertible");
    base = 1 / base;
    x = -x;
  }
  Rational acc = 1;
  unsigned long e = static_cast<unsigned long>(x);
  while (e != 0) {
    if (e & 1UL) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

double exp_h(double a, double h, double x) {
  if (!(h > 0)) throw DomainError("step h must be positive");
  const double base = 1.0 + a * h;
  const double e = x / h;
  const bool integral = std::floor(e) == e;
  if (base == 0.0) {
    if (!integral) throw DomainError("1+ah = 0 with non-integer x/h");
    if (e < 0) throw DomainError("1+ah = 0 with negative x/h");
    return e == 0 ? 1.0 : 0.0;
  }
  if (base < 0.0 && !integral) throw DomainError("negative base 1+ah with non-integer x/h");
  return std::pow(base, e);
}

std::complex<double> exp_h_complex(double a, double h, double x) {
  if (!(h > 0)) throw DomainError("step h must be positive");
  const std::complex<double> base(1.0, a * h);
  return std::pow(base, x / h);
}

double sin_h(double a, double h, double x) { return exp_h_complex(a, h, x).imag(); }
double cos_h(double a, double h, double x) { return exp_h_complex(a, h, x).real(); }

std::string ProjectiveRational::to_string() const {
  return infinite ? std::string("inf") : dcalc::to_string(value);
}

ProjectiveRational tan_discrete(long x) {
  const GaussianRational z = exp_trig(1, x);
  if (z.re == 0) return {true, Rational(0)};
  return {false, Rational(z.im / z.re)};
}

double log_discrete(double x) {
  if (!(x > 0)) throw DomainError("log needs x > 0");
  return std::log2(x);
}

double reciprocal(double x) {
  if (!(x > 0)) throw DomainError("reciprocal needs x > 0");
  return std::log1p(1.0 / x) / std::numbers::ln2;
}

double reciprocal_power(double x, int k) {
  if (k < 1) throw DomainError("reciprocal power needs k >= 1");
  if (k == 1) return reciprocal(x);
  const double prev_next = reciprocal_power(x + 1.0, k - 1);
  const double prev_here = reciprocal_power(x, k - 1);
  return (prev_next - prev_here) / static_cast<double>(1 - k);
}

// ---------------------------------------------------------------------------
// Harmonic oscillator

Rational HarmonicSolution::at(long x) const {
  const GaussianRational z = exp_trig(a, x);
  return c_cos * z.re + c_sin * z.im;
}

HarmonicSolution solve_harmonic(long a, const Rational& f0, const Rational& f1) {
  if (a == 0) throw DomainError("harmonic oscillator needs a != 0");
  // cos(a.1) = 1 and sin(a.1) = a.
  return {a, f0, Rational((f1 - f0) / a)};
}

}  // namespace dcalc
