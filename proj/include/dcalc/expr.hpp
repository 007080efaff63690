#pragma once

// Closed-form expressions over the deformed basis: falling powers [x]^n,
// exponentials c^x, sin(a.x) and cos(a.x), log, plus sums and products.
//
// Surface grammar (whitespace is insignificant):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor | '/' integer)*
//   factor := '-' factor | atom ('^' exponent)?
//   exponent := integer | '(' '-' integer ')' | 'x'
//   atom   := integer | 'x' | '[x]' | '(' expr ')'
//           | ('sin' | 'cos' | 'exp') '(' [sign integer ('.' | '·')] 'x' ')'
//           | 'log' '(' 'x' ')'
//
// `[x]^n` is a falling power, `c^x` (constant c) an exponential base,
// `exp(a.x)` the base 1+a, and `sin(a.x)` the deformed sine with frequency a.
// `sin(3*x)` is rejected: the deformed sin(a.x) is not sin composed with a*x.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dcalc/numcore.hpp"

namespace dcalc {

class ClosedForm {
 public:
  enum class Kind {
    Constant,
    Variable,
    FallingPower,
    Power,
    ExpBase,
    Trig,
    Log,
    Shift,
    Sum,
    Product,
    Negate,
  };
  enum class TrigKind { Sin, Cos };

  static ClosedForm constant(Rational c);
  static ClosedForm variable();
  static ClosedForm falling_power(long n);
  static ClosedForm power(ClosedForm base, long n);
  static ClosedForm exp_base(Rational c);
  static ClosedForm trig(TrigKind kind, long a);
  static ClosedForm log();
  // f(x+1); produced by the product rule, printable but not parseable.
  static ClosedForm shift(ClosedForm f);
  static ClosedForm sum(std::vector<ClosedForm> terms);
  static ClosedForm product(std::vector<ClosedForm> factors);
  static ClosedForm negate(ClosedForm f);

  Kind kind() const;
  const Rational& value() const;  // Constant value or ExpBase base
  long exponent() const;          // FallingPower / Power exponent
  long frequency() const;         // Trig parameter a
  TrigKind trig_kind() const;
  const std::vector<ClosedForm>& children() const;

  bool is_constant(const Rational& c) const;

  friend bool operator==(const ClosedForm& a, const ClosedForm& b);

 private:
  struct Node;
  explicit ClosedForm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

ClosedForm parse(std::string_view text);
std::string to_string(const ClosedForm& f);

// Exact where the basis allows it; log and negative falling powers are inexact.
Number eval(const ClosedForm& f, long x);

// D f with the deformed rules and the shifted Leibniz rule
// D(fg) = Df g + f(x+1) Dg, lightly simplified.
ClosedForm derivative(const ClosedForm& f);

// F with D F = f and F(0) = 0. Supported: linear combinations of
// [x]^n c^x, [x]^n sin(a.x), [x]^n cos(a.x) and products that stay inside
// that span. Throws NoClosedForm otherwise (log, negative powers, ...).
ClosedForm antiderivative(const ClosedForm& f);

// f(lo) + ... + f(hi-1). Uses the antiderivative when one exists,
// otherwise sums directly.
Number definite_sum(const ClosedForm& f, long lo, long hi);
Number direct_sum(const ClosedForm& f, long lo, long hi);

// Constant folding and flattening; no algebraic rewriting beyond that.
ClosedForm simplify(const ClosedForm& f);

// Rewrites into the canonical sum of [x]^n * basis terms when possible.
ClosedForm normalize(const ClosedForm& f);

}  // namespace dcalc
