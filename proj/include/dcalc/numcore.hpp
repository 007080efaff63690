#pragma once

// Exact scalars and the unit-step difference/sum calculus on the integers.
//
// Functions on Z are tabulated as Sequence windows. The difference
// D f(x) = f(x+1) - f(x) and the anchored sum S f(x) = f(0) + ... + f(x-1)
// are mutually inverse up to the constant f(0). The deformed exponential
// exp(a.x) = (1+a)^x is the eigenfunction of D, and cos(a.x), sin(a.x) are
// the real and imaginary parts of (1+ia)^x, computed exactly in Z[i].

#include <gmpxx.h>

#include <complex>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace dcalc {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
bool is_integral(const Rational& r);
std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

// Z[i] and Q[i]. Only ring operations; division goes through inverse().
template <class T>
struct Gaussian {
  T re{0};
  T im{0};

  Gaussian() = default;
  Gaussian(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Gaussian conj() const { return {re, T(-im)}; }
  T norm() const { return T(re * re + im * im); }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {T(a.re + b.re), T(a.im + b.im)};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {T(a.re - b.re), T(a.im - b.im)};
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GaussianInteger = Gaussian<Integer>;
using GaussianRational = Gaussian<Rational>;

template <class T>
Gaussian<T> pow(Gaussian<T> base, unsigned long e) {
  Gaussian<T> acc{T(1), T(0)};
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return acc;
}

GaussianRational inverse(const GaussianRational& z);
std::string to_string(const GaussianInteger& z);

// A scalar that is either exact (rational) or inexact (double). Mixed
// arithmetic degrades to double; exact arithmetic stays exact.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Number(const Integer& z) : value_(Rational(z)) {}  // NOLINT
  Number(long v) : value_(Rational(v)) {}  // NOLINT
  Number(int v) : value_(Rational(v)) {}  // NOLINT
  Number(double d) : value_(d) {}  // NOLINT

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  double to_double() const;
  bool is_zero() const;

  // Exact values print as "p" or "p/q"; inexact ones with 12 significant digits.
  std::string to_string() const;

  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b);
  friend Number operator-(const Number& a);
  Number& operator+=(const Number& b) { return *this = *this + b; }
  Number& operator-=(const Number& b) { return *this = *this - b; }
  Number& operator*=(const Number& b) { return *this = *this * b; }

  // Exact comparison when both sides are exact, double comparison otherwise.
  friend bool operator==(const Number& a, const Number& b);

 private:
  std::variant<Rational, double> value_;
};

// Values f(base), f(base+1), ..., f(base+size-1).
class Sequence {
 public:
  Sequence(long base, std::vector<Rational> values);
  Sequence(long base, std::initializer_list<long> values);

  long base() const { return base_; }
  long end() const { return base_ + static_cast<long>(values_.size()); }
  std::size_t size() const { return values_.size(); }
  bool contains(long x) const { return x >= base_ && x < end(); }
  const Rational& at(long x) const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  long base_;
  std::vector<Rational> values_;
};

// D f on the window; one element shorter, same base.
Sequence diff(const Sequence& f);

// S f(x) for x in [base, end]. For x >= 0 this is f(0) + ... + f(x-1); for
// x < 0 it is -(f(x) + ... + f(-1)), so D S f = f holds on all of Z.
// The window must reach 0 (base <= 0 <= end).
Sequence sum_prefix(const Sequence& f);

// [x]^n = x (x-1) ... (x-n+1), n >= 0.
Integer falling_power(const Integer& x, long n);
Rational falling_power(const Rational& x, long n);
// Real-argument variant with step h: x (x-h) ... (x-(n-1)h).
double falling_power(double x, long n, double h = 1.0);

// (1+ia)^x for x >= 0: re = cos(a.x), im = sin(a.x).
GaussianInteger exp_trig_exact(long a, unsigned long x);
// Same for any integer x; negative x uses the exact inverse of 1+ia.
GaussianRational exp_trig(long a, long x);
Rational sin_discrete(long a, long x);
Rational cos_discrete(long a, long x);
// (1+a)^x; negative x requires a != -1.
Rational exp_real(const Rational& a, long x);

// Deformed functions with step h: (1+ah)^(x/h) and its complex analogue.
double exp_h(double a, double h, double x);
std::complex<double> exp_h_complex(double a, double h, double x);
double sin_h(double a, double h, double x);
double cos_h(double a, double h, double x);

// tan = sin/cos on the integers, with the point at infinity where cos = 0.
struct ProjectiveRational {
  bool infinite = false;
  Rational value{0};

  friend bool operator==(const ProjectiveRational&, const ProjectiveRational&) = default;
  std::string to_string() const;
};

ProjectiveRational tan_discrete(long x);

// Inverse of exp(1.x) = 2^x, and the discrete reciprocal D log.
double log_discrete(double x);
double reciprocal(double x);
// [x]^{-k}, through [x]^{-n} = D [x]^{1-n} / (1-n).
double reciprocal_power(double x, int k);

// Coefficients of f = c_cos cos(a.x) + c_sin sin(a.x), a solution of
// D^2 f = -a^2 f through the given f(0), f(1).
struct HarmonicSolution {
  long a = 1;
  Rational c_cos{0};
  Rational c_sin{0};

  Rational at(long x) const;
};

HarmonicSolution solve_harmonic(long a, const Rational& f0, const Rational& f1);

}  // namespace dcalc
