#include "dcalc/expr.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "dcalc/error.hpp"
#include "dcalc/interpolate.hpp"

namespace dcalc {

struct ClosedForm::Node {
  Kind kind;
  Rational value{0};
  long n = 0;
  TrigKind trig = TrigKind::Sin;
  std::vector<ClosedForm> children;
};

ClosedForm ClosedForm::constant(Rational c) {
  return ClosedForm(std::make_shared<const Node>(Node{Kind::Constant, std::move(c), 0, TrigKind::Sin, {}}));
}

ClosedForm ClosedForm::variable() {
  return ClosedForm(std::make_shared<const Node>(Node{Kind::Variable, Rational(0), 0, TrigKind::Sin, {}}));
}

ClosedForm ClosedForm::falling_power(long n) {
  return ClosedForm(std::make_shared<const Node>(Node{Kind::FallingPower, Rational(0), n, TrigKind::Sin, {}}));
}

ClosedForm ClosedForm::power(ClosedForm base, long n) {
  if (n < 0) throw DomainError("plain powers need a nonnegative exponent");
  return ClosedForm(
      std::make_shared<const Node>(Node{Kind::Power, Rational(0), n, TrigKind::Sin, {std::move(base)}}));
}

ClosedForm ClosedForm::exp_base(Rational c) {
  return ClosedForm(std::make_shared<const Node>(Node{Kind::ExpBase, std::move(c), 0, TrigKind::Sin, {}}));
}

ClosedForm ClosedForm::trig(TrigKind kind, long a) {
  if (a == 0) throw DomainError("trigonometric frequency must be nonzero");
  return ClosedForm(std::make_shared<const Node>(Node{Kind::Trig, Rational(0), a, kind, {}}));
}

ClosedForm ClosedForm::log() {
  return ClosedForm(std::make_shared<const Node>(Node{Kind::Log, Rational(0), 0, TrigKind::Sin, {}}));
}

ClosedForm ClosedForm::shift(ClosedForm f) {
  return ClosedForm(
      std::make_shared<const Node>(Node{Kind::Shift, Rational(0), 0, TrigKind::Sin, {std::move(f)}}));
}

ClosedForm ClosedForm::sum(std::vector<ClosedForm> terms) {
  if (terms.empty()) return constant(Rational(0));
  return ClosedForm(std::make_shared<const Node>(Node{Kind::Sum, Rational(0), 0, TrigKind::Sin, std::move(terms)}));
}

ClosedForm ClosedForm::product(std::vector<ClosedForm> factors) {
  if (factors.empty()) return constant(Rational(1));
  return ClosedForm(
      std::make_shared<const Node>(Node{Kind::Product, Rational(0), 0, TrigKind::Sin, std::move(factors)}));
}

ClosedForm ClosedForm::negate(ClosedForm f) {
  return ClosedForm(
      std::make_shared<const Node>(Node{Kind::Negate, Rational(0), 0, TrigKind::Sin, {std::move(f)}}));
}

ClosedForm::Kind ClosedForm::kind() const { return node_->kind; }
const Rational& ClosedForm::value() const { return node_->value; }
long ClosedForm::exponent() const { return node_->n; }
long ClosedForm::frequency() const { return node_->n; }
ClosedForm::TrigKind ClosedForm::trig_kind() const { return node_->trig; }
const std::vector<ClosedForm>& ClosedForm::children() const { return node_->children; }

bool ClosedForm::is_constant(const Rational& c) const { return kind() == Kind::Constant && value() == c; }

bool operator==(const ClosedForm& a, const ClosedForm& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ClosedForm::Kind::Constant:
    case ClosedForm::Kind::ExpBase:
      return x.value == y.value;
    case ClosedForm::Kind::FallingPower:
      return x.n == y.n;
    case ClosedForm::Kind::Trig:
      return x.n == y.n && x.trig == y.trig;
    case ClosedForm::Kind::Power:
      return x.n == y.n && x.children == y.children;
    case ClosedForm::Kind::Variable:
    case ClosedForm::Kind::Log:
      return true;
    default:
      return x.children == y.children;
  }
}

// ---------------------------------------------------------------------------
// Printing. Each context decides which constructs need parentheses so that
// parse(to_string(f)) rebuilds the same tree.

namespace {

using Kind = ClosedForm::Kind;

enum class Ctx { Top, SumTerm, Factor, PowerBase };

void print(const ClosedForm& f, Ctx ctx, std::string& out);

void print_constant(const Rational& c, Ctx ctx, std::string& out) {
  const bool simple = is_integral(c) && c >= 0;
  const bool wrap = !simple && (ctx == Ctx::Factor || ctx == Ctx::PowerBase);
  if (wrap) out += '(';
  out += to_string(c);
  if (wrap) out += ')';
}

void print_sum(const ClosedForm& f, std::string& out) {
  const auto& terms = f.children();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const ClosedForm& t = terms[i];
    if (i == 0) {
      print(t, Ctx::SumTerm, out);
    } else if (t.kind() == Kind::Negate) {
      out += " - ";
      print(t.children()[0], Ctx::SumTerm, out);
    } else if (t.kind() == Kind::Constant && t.value() < 0) {
      out += " - ";
      print_constant(Rational(-t.value()), Ctx::SumTerm, out);
    } else {
      out += " + ";
      print(t, Ctx::SumTerm, out);
    }
  }
}

void print_product(const ClosedForm& f, std::string& out) {
  const auto& fs = f.children();
  std::size_t start = 0;
  Integer den = 1;
  if (fs.size() > 1 && fs[0].kind() == Kind::Constant && fs[0].value().get_den() != 1) {
    // Leading fractional constant p/q prints as p*rest/q.
    const Rational& c = fs[0].value();
    den = c.get_den();
    start = 1;
    if (c.get_num() != 1) {
      print_constant(Rational(c.get_num()), Ctx::Factor, out);
      out += '*';
    }
  }
  for (std::size_t i = start; i < fs.size(); ++i) {
    if (i > start) out += '*';
    print(fs[i], Ctx::Factor, out);
  }
  if (den != 1) out += "/" + den.get_str();
}

void print(const ClosedForm& f, Ctx ctx, std::string& out) {
  switch (f.kind()) {
    case Kind::Constant:
      print_constant(f.value(), ctx, out);
      return;
    case Kind::Variable:
      out += 'x';
      return;
    case Kind::FallingPower:
      if (f.exponent() == 1) {
        out += "[x]";
      } else if (f.exponent() < 0) {
        out += "[x]^(" + std::to_string(f.exponent()) + ")";
      } else {
        out += "[x]^" + std::to_string(f.exponent());
      }
      return;
    case Kind::Power: {
      const bool wrap = ctx == Ctx::PowerBase;
      if (wrap) out += '(';
      print(f.children()[0], Ctx::PowerBase, out);
      out += "^" + std::to_string(f.exponent());
      if (wrap) out += ')';
      return;
    }
    case Kind::ExpBase: {
      const bool wrap = ctx == Ctx::PowerBase;
      if (wrap) out += '(';
      print_constant(f.value(), Ctx::PowerBase, out);
      out += "^x";
      if (wrap) out += ')';
      return;
    }
    case Kind::Trig:
      out += f.trig_kind() == ClosedForm::TrigKind::Sin ? "sin(" : "cos(";
      out += std::to_string(f.frequency()) + ".x)";
      return;
    case Kind::Log:
      out += "log(x)";
      return;
    case Kind::Shift:
      out += "shift(";
      print(f.children()[0], Ctx::Top, out);
      out += ')';
      return;
    case Kind::Sum: {
      const bool wrap = ctx != Ctx::Top;
      if (wrap) out += '(';
      print_sum(f, out);
      if (wrap) out += ')';
      return;
    }
    case Kind::Product: {
      const bool wrap = ctx == Ctx::Factor || ctx == Ctx::PowerBase;
      if (wrap) out += '(';
      print_product(f, out);
      if (wrap) out += ')';
      return;
    }
    case Kind::Negate: {
      const bool wrap = ctx == Ctx::Factor || ctx == Ctx::PowerBase;
      if (wrap) out += '(';
      out += '-';
      print(f.children()[0], Ctx::Factor, out);
      if (wrap) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const ClosedForm& f) {
  std::string out;
  print(f, Ctx::Top, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Number number_pow(Number base, long n) {
  Number acc(1L);
  for (long i = 0; i < n; ++i) acc *= base;
  return acc;
}

}  // namespace

Number eval(const ClosedForm& f, long x) {
  switch (f.kind()) {
    case Kind::Constant:
      return f.value();
    case Kind::Variable:
      return Number(x);
    case Kind::FallingPower:
      if (f.exponent() >= 0) return Number(dcalc::falling_power(Integer(x), f.exponent()));
      return Number(reciprocal_power(static_cast<double>(x), static_cast<int>(-f.exponent())));
    case Kind::Power:
      return number_pow(eval(f.children()[0], x), f.exponent());
    case Kind::ExpBase:
      return exp_real(Rational(f.value() - 1), x);
    case Kind::Trig: {
      const GaussianRational z = exp_trig(f.frequency(), x);
      return f.trig_kind() == ClosedForm::TrigKind::Sin ? z.im : z.re;
    }
    case Kind::Log:
      return log_discrete(static_cast<double>(x));
    case Kind::Shift:
      return eval(f.children()[0], x + 1);
    case Kind::Sum: {
      Number acc(0L);
      for (const auto& c : f.children()) acc += eval(c, x);
      return acc;
    }
    case Kind::Product: {
      Number acc(1L);
      for (const auto& c : f.children()) acc *= eval(c, x);
      return acc;
    }
    case Kind::Negate:
      return -eval(f.children()[0], x);
  }
  throw std::logic_error("unhandled expression kind");
}

// ---------------------------------------------------------------------------
// Simplification

ClosedForm simplify(const ClosedForm& f) {
  switch (f.kind()) {
    case Kind::FallingPower:
      return f.exponent() == 0 ? ClosedForm::constant(Rational(1)) : f;
    case Kind::ExpBase:
      return f.value() == 1 ? ClosedForm::constant(Rational(1)) : f;
    case Kind::Power: {
      ClosedForm base = simplify(f.children()[0]);
      if (f.exponent() == 0) return ClosedForm::constant(Rational(1));
      if (f.exponent() == 1) return base;
      if (base.kind() == Kind::Constant) {
        Rational acc = 1;
        for (long i = 0; i < f.exponent(); ++i) acc *= base.value();
        return ClosedForm::constant(acc);
      }
      return ClosedForm::power(base, f.exponent());
    }
    case Kind::Shift: {
      ClosedForm inner = simplify(f.children()[0]);
      if (inner.kind() == Kind::Constant) return inner;
      return ClosedForm::shift(inner);
    }
    case Kind::Negate: {
      ClosedForm inner = simplify(f.children()[0]);
      if (inner.kind() == Kind::Constant) return ClosedForm::constant(Rational(-inner.value()));
      if (inner.kind() == Kind::Negate) return inner.children()[0];
      if (inner.kind() == Kind::Product && inner.children()[0].kind() == Kind::Constant) {
        auto fs = inner.children();
        fs[0] = ClosedForm::constant(Rational(-fs[0].value()));
        return simplify(ClosedForm::product(std::move(fs)));
      }
      return ClosedForm::negate(inner);
    }
    case Kind::Sum: {
      std::vector<ClosedForm> terms;
      Rational c = 0;
      for (const auto& child : f.children()) {
        ClosedForm s = simplify(child);
        if (s.kind() == Kind::Sum) {
          for (const auto& g : s.children()) {
            if (g.kind() == Kind::Constant) {
              c += g.value();
            } else {
              terms.push_back(g);
            }
          }
        } else if (s.kind() == Kind::Constant) {
          c += s.value();
        } else {
          terms.push_back(s);
        }
      }
      if (c != 0 || terms.empty()) terms.push_back(ClosedForm::constant(c));
      if (terms.size() == 1) return terms[0];
      return ClosedForm::sum(std::move(terms));
    }
    case Kind::Product: {
      std::vector<ClosedForm> factors;
      Rational c = 1;
      auto absorb = [&](const ClosedForm& g) {
        if (g.kind() == Kind::Constant) {
          c *= g.value();
        } else if (g.kind() == Kind::Negate) {
          c = -c;
          factors.push_back(g.children()[0]);
        } else {
          factors.push_back(g);
        }
      };
      for (const auto& child : f.children()) {
        ClosedForm s = simplify(child);
        if (s.kind() == Kind::Product) {
          for (const auto& g : s.children()) absorb(g);
        } else {
          absorb(s);
        }
      }
      if (c == 0 || factors.empty()) return ClosedForm::constant(c);
      if (c != 1) factors.insert(factors.begin(), ClosedForm::constant(c));
      if (factors.size() == 1) return factors[0];
      return ClosedForm::product(std::move(factors));
    }
    default:
      return f;
  }
}

// ---------------------------------------------------------------------------
// Symbolic derivative

namespace {

// x^n = sum_k S(n,k) [x]^k; the coefficients are read off the forward
// differences of x^n sampled at 0..n.
ClosedForm plain_power_in_falling_basis(long n) {
  std::vector<Rational> samples;
  for (long x = 0; x <= n; ++x) {
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), Integer(x).get_mpz_t(), static_cast<unsigned long>(n));
    samples.emplace_back(v);
  }
  return interpolate_fit(Sequence(0, std::move(samples)));
}

ClosedForm derive(const ClosedForm& f) {
  using CF = ClosedForm;
  switch (f.kind()) {
    case Kind::Constant:
      return CF::constant(Rational(0));
    case Kind::Variable:
      return CF::constant(Rational(1));
    case Kind::FallingPower:
      if (f.exponent() == 0) return CF::constant(Rational(0));
      return CF::product({CF::constant(Rational(f.exponent())), CF::falling_power(f.exponent() - 1)});
    case Kind::Power: {
      const ClosedForm& base = f.children()[0];
      const long n = f.exponent();
      if (n == 0) return CF::constant(Rational(0));
      if (base.kind() == Kind::Variable) return derive(plain_power_in_falling_basis(n));
      if (n == 1) return derive(base);
      ClosedForm rest = n == 2 ? base : CF::power(base, n - 1);
      return CF::sum({CF::product({derive(base), rest}), CF::product({CF::shift(base), derive(rest)})});
    }
    case Kind::ExpBase:
      return CF::product({CF::constant(Rational(f.value() - 1)), f});
    case Kind::Trig:
      if (f.trig_kind() == CF::TrigKind::Sin) {
        return CF::product({CF::constant(Rational(f.frequency())), CF::trig(CF::TrigKind::Cos, f.frequency())});
      }
      return CF::product({CF::constant(Rational(-f.frequency())), CF::trig(CF::TrigKind::Sin, f.frequency())});
    case Kind::Log:
      return CF::falling_power(-1);
    case Kind::Shift:
      return CF::shift(derive(f.children()[0]));
    case Kind::Sum: {
      std::vector<ClosedForm> terms;
      for (const auto& c : f.children()) terms.push_back(derive(c));
      return CF::sum(std::move(terms));
    }
    case Kind::Negate:
      return CF::negate(derive(f.children()[0]));
    case Kind::Product: {
      const auto& fs = f.children();
      if (fs.size() == 1) return derive(fs[0]);
      std::vector<ClosedForm> rest_factors(fs.begin() + 1, fs.end());
      ClosedForm rest = rest_factors.size() == 1 ? rest_factors[0] : CF::product(rest_factors);
      if (fs[0].kind() == Kind::Constant) return CF::product({fs[0], derive(rest)});
      return CF::sum({CF::product({derive(fs[0]), rest}), CF::product({CF::shift(fs[0]), derive(rest)})});
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

ClosedForm derivative(const ClosedForm& f) { return simplify(derive(f)); }

// ---------------------------------------------------------------------------
// Basis normal form: finite sums of coef * [x]^n * B, B in {1, c^x, sin(a.x), cos(a.x)}.

namespace {

enum class BasisKind { Exp = 0, Sin = 1, Cos = 2, One = 3 };

struct BasisKey {
  BasisKind kind = BasisKind::One;
  Rational param{0};  // c for Exp, a for Sin/Cos
  long n = 0;         // falling power

  friend bool operator<(const BasisKey& a, const BasisKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.param != b.param) return a.param < b.param;
    return a.n > b.n;
  }
};

using Combination = std::map<BasisKey, Rational>;

void add_term(Combination& acc, const BasisKey& key, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = acc.emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) acc.erase(it);
  }
}

void add_scaled(Combination& acc, const Combination& other, const Rational& s) {
  for (const auto& [k, c] : other) add_term(acc, k, Rational(c * s));
}

BasisKey with_power(BasisKey key, long n) {
  key.n = n;
  return key;
}

Combination single(BasisKind kind, const Rational& param, long n, const Rational& coef) {
  Combination out;
  add_term(out, BasisKey{kind, param, n}, coef);
  return out;
}

Integer choose(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// Product of two basis functions (without the falling-power parts).
Combination multiply_basis(const BasisKey& a, const BasisKey& b) {
  if (a.kind == BasisKind::One) return single(b.kind, b.param, 0, Rational(1));
  if (b.kind == BasisKind::One) return single(a.kind, a.param, 0, Rational(1));
  if (a.kind == BasisKind::Exp && b.kind == BasisKind::Exp) {
    return single(BasisKind::Exp, Rational(a.param * b.param), 0, Rational(1));
  }
  throw NoClosedForm("product of exponential or trigonometric factors leaves the supported basis");
}

Combination multiply(const Combination& x, const Combination& y) {
  Combination out;
  for (const auto& [ka, ca] : x) {
    for (const auto& [kb, cb] : y) {
      const Combination basis = multiply_basis(ka, kb);
      // [x]^n [x]^m = sum_k C(n,k) C(m,k) k! [x]^{n+m-k}
      for (long k = 0; k <= std::min(ka.n, kb.n); ++k) {
        const Rational w(choose(ka.n, k) * choose(kb.n, k) * factorial(k));
        for (const auto& [kc, cc] : basis) {
          add_term(out, with_power(kc, ka.n + kb.n - k), Rational(ca * cb * w * cc));
        }
      }
    }
  }
  return out;
}

// g(x) -> g(x+1)
Combination shift(const Combination& x) {
  Combination out;
  for (const auto& [key, c] : x) {
    // [x+1]^n = [x]^n + n [x]^{n-1}
    std::vector<std::pair<long, Rational>> powers{{key.n, Rational(1)}};
    if (key.n > 0) powers.emplace_back(key.n - 1, Rational(key.n));
    for (const auto& [n, w] : powers) {
      const Rational cw = c * w;
      switch (key.kind) {
        case BasisKind::One:
          add_term(out, with_power(key, n), cw);
          break;
        case BasisKind::Exp:
          add_term(out, with_power(key, n), Rational(cw * key.param));
          break;
        case BasisKind::Sin:  // sin(a.(x+1)) = sin + a cos
          add_term(out, BasisKey{BasisKind::Sin, key.param, n}, cw);
          add_term(out, BasisKey{BasisKind::Cos, key.param, n}, Rational(cw * key.param));
          break;
        case BasisKind::Cos:  // cos(a.(x+1)) = cos - a sin
          add_term(out, BasisKey{BasisKind::Cos, key.param, n}, cw);
          add_term(out, BasisKey{BasisKind::Sin, key.param, n}, Rational(-cw * key.param));
          break;
      }
    }
  }
  return out;
}

Combination to_basis(const ClosedForm& f) {
  switch (f.kind()) {
    case Kind::Constant:
      return single(BasisKind::One, Rational(0), 0, f.value());
    case Kind::Variable:
      return single(BasisKind::One, Rational(0), 1, Rational(1));
    case Kind::FallingPower:
      if (f.exponent() < 0) throw NoClosedForm("negative falling powers have no closed-form sum");
      return single(BasisKind::One, Rational(0), f.exponent(), Rational(1));
    case Kind::Power: {
      const ClosedForm& base = f.children()[0];
      if (base.kind() == Kind::Variable) return to_basis(plain_power_in_falling_basis(f.exponent()));
      Combination acc = single(BasisKind::One, Rational(0), 0, Rational(1));
      const Combination b = to_basis(base);
      for (long i = 0; i < f.exponent(); ++i) acc = multiply(acc, b);
      return acc;
    }
    case Kind::ExpBase:
      if (f.value() == 1) return single(BasisKind::One, Rational(0), 0, Rational(1));
      if (f.value() == 0) throw NoClosedForm("0^x has no closed-form sum");
      return single(BasisKind::Exp, f.value(), 0, Rational(1));
    case Kind::Trig:
      return single(f.trig_kind() == ClosedForm::TrigKind::Sin ? BasisKind::Sin : BasisKind::Cos,
                    Rational(f.frequency()), 0, Rational(1));
    case Kind::Log:
      throw NoClosedForm("log has no closed-form sum");
    case Kind::Shift:
      return shift(to_basis(f.children()[0]));
    case Kind::Sum: {
      Combination acc;
      for (const auto& c : f.children()) add_scaled(acc, to_basis(c), Rational(1));
      return acc;
    }
    case Kind::Negate: {
      Combination acc;
      add_scaled(acc, to_basis(f.children()[0]), Rational(-1));
      return acc;
    }
    case Kind::Product: {
      Combination acc = single(BasisKind::One, Rational(0), 0, Rational(1));
      for (const auto& c : f.children()) acc = multiply(acc, to_basis(c));
      return acc;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

Rational eval_basis(const Combination& x, long at) {
  Rational acc = 0;
  for (const auto& [key, c] : x) {
    Rational v = falling_power(Rational(at), key.n);
    switch (key.kind) {
      case BasisKind::One:
        break;
      case BasisKind::Exp:
        v *= exp_real(Rational(key.param - 1), at);
        break;
      case BasisKind::Sin:
        v *= sin_discrete(key.param.get_num().get_si(), at);
        break;
      case BasisKind::Cos:
        v *= cos_discrete(key.param.get_num().get_si(), at);
        break;
    }
    acc += c * v;
  }
  return acc;
}

// E with D E = B for a single non-constant basis function B (no falling power).
Combination basis_antiderivative(const BasisKey& b) {
  switch (b.kind) {
    case BasisKind::Exp:
      return single(BasisKind::Exp, b.param, 0, Rational(1 / (b.param - 1)));
    case BasisKind::Sin:
      return single(BasisKind::Cos, b.param, 0, Rational(-1 / b.param));
    case BasisKind::Cos:
      return single(BasisKind::Sin, b.param, 0, Rational(1 / b.param));
    case BasisKind::One:
      break;
  }
  throw std::logic_error("constant basis handled by the power rule");
}

// S([x]^n B), anchored so that the result vanishes at 0. For B != 1 this is
// summation by parts: S(B P) = E P - E(0) P(0) - S(E(x+1) DP) with DE = B.
Combination sum_term(const BasisKey& key) {
  if (key.kind == BasisKind::One) {
    return single(BasisKind::One, Rational(0), key.n + 1, Rational(1, key.n + 1));
  }
  const Combination e = basis_antiderivative(BasisKey{key.kind, key.param, 0});
  Combination out;
  for (const auto& [k, c] : e) add_term(out, with_power(k, key.n), c);
  if (key.n == 0) {
    add_term(out, BasisKey{}, Rational(-eval_basis(e, 0)));
    return out;
  }
  const Combination e_next = shift(e);
  for (const auto& [k, c] : e_next) {
    const Combination inner = sum_term(with_power(k, key.n - 1));
    add_scaled(out, inner, Rational(-c * key.n));
  }
  return out;
}

Combination sum_combination(const Combination& x) {
  Combination out;
  for (const auto& [key, c] : x) add_scaled(out, sum_term(key), c);
  const Rational at0 = eval_basis(out, 0);
  add_term(out, BasisKey{}, Rational(-at0));
  return out;
}

ClosedForm from_basis(const Combination& x) {
  using CF = ClosedForm;
  std::vector<ClosedForm> terms;
  for (const auto& [key, c] : x) {
    std::vector<ClosedForm> factors;
    const Rational mag = abs(c);
    if (key.n > 0) factors.push_back(CF::falling_power(key.n));
    switch (key.kind) {
      case BasisKind::One:
        break;
      case BasisKind::Exp:
        factors.push_back(CF::exp_base(key.param));
        break;
      case BasisKind::Sin:
        factors.push_back(CF::trig(CF::TrigKind::Sin, key.param.get_num().get_si()));
        break;
      case BasisKind::Cos:
        factors.push_back(CF::trig(CF::TrigKind::Cos, key.param.get_num().get_si()));
        break;
    }
    ClosedForm term = CF::constant(mag);
    if (!factors.empty()) {
      if (mag != 1) factors.insert(factors.begin(), CF::constant(mag));
      term = factors.size() == 1 ? factors[0] : CF::product(std::move(factors));
    }
    if (c < 0) term = term.kind() == Kind::Constant ? CF::constant(c) : CF::negate(term);
    terms.push_back(std::move(term));
  }
  if (terms.empty()) return CF::constant(Rational(0));
  if (terms.size() == 1) return terms[0];
  return CF::sum(std::move(terms));
}

}  // namespace

ClosedForm normalize(const ClosedForm& f) { return from_basis(to_basis(f)); }

ClosedForm antiderivative(const ClosedForm& f) { return from_basis(sum_combination(to_basis(f))); }

Number direct_sum(const ClosedForm& f, long lo, long hi) {
  if (lo > hi) throw DomainError("sum bounds need lo <= hi");
  Number acc(0L);
  for (long k = lo; k < hi; ++k) acc += eval(f, k);
  return acc;
}

Number definite_sum(const ClosedForm& f, long lo, long hi) {
  if (lo > hi) throw DomainError("sum bounds need lo <= hi");
  ClosedForm F = ClosedForm::constant(Rational(0));
  try {
    F = antiderivative(f);
  } catch (const NoClosedForm&) {
    return direct_sum(f, lo, hi);
  }
  return eval(F, hi) - eval(F, lo);
}

}  // namespace dcalc
