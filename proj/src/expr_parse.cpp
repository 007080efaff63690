// Recursive-descent parser for the expression grammar documented in expr.hpp.

#include <cctype>

#include "dcalc/error.hpp"
#include "dcalc/expr.hpp"

namespace dcalc {
namespace {

using CF = ClosedForm;
using Kind = ClosedForm::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClosedForm parse_all() {
    skip_ws();
    if (at_end()) fail("empty expression");
    ClosedForm e = parse_expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return !at_end() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // '.' or the UTF-8 middle dot U+00B7.
  bool accept_dot() {
    skip_ws();
    if (accept('.')) return true;
    if (text_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  Integer parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  long parse_small_integer() {
    const std::size_t start = pos_;
    Integer z = parse_integer();
    if (!z.fits_slong_p()) {
      pos_ = start;
      fail("integer out of range");
    }
    return z.get_si();
  }

  std::string parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static ClosedForm negated(const ClosedForm& f) {
    if (f.kind() == Kind::Constant) return CF::constant(Rational(-f.value()));
    return CF::negate(f);
  }

  ClosedForm parse_expr() {
    std::vector<ClosedForm> terms{parse_term()};
    while (true) {
      if (accept('+')) {
        terms.push_back(parse_term());
      } else if (accept('-')) {
        terms.push_back(negated(parse_term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms[0];
    return CF::sum(std::move(terms));
  }

  ClosedForm parse_term() {
    std::vector<ClosedForm> factors{parse_factor()};
    while (true) {
      if (accept('*')) {
        factors.push_back(parse_factor());
      } else if (peek('/')) {
        const std::size_t at = pos_;
        ++pos_;
        const Integer q = parse_integer();
        if (q == 0) {
          pos_ = at;
          fail("division by zero");
        }
        // Division by an integer folds into the leading constant.
        if (factors[0].kind() == Kind::Constant) {
          factors[0] = CF::constant(Rational(factors[0].value() / q));
        } else {
          factors.insert(factors.begin(), CF::constant(make_rational(1, q)));
        }
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors[0];
    return CF::product(std::move(factors));
  }

  ClosedForm parse_factor() {
    if (accept('-')) return negated(parse_factor());
    const std::size_t atom_start = (skip_ws(), pos_);
    const bool falling = peek('[');
    ClosedForm base = parse_atom();
    if (!accept('^')) return base;
    skip_ws();
    if (!at_end() && text_[pos_] == 'x' &&
        (pos_ + 1 >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      if (base.kind() != Kind::Constant) {
        pos_ = atom_start;
        fail("exponent x needs a constant base");
      }
      return CF::exp_base(base.value());
    }
    long n = 0;
    if (accept('(')) {
      expect('-');
      n = -parse_small_integer();
      expect(')');
    } else {
      n = parse_small_integer();
    }
    if (falling) return CF::falling_power(n);
    if (n < 0) fail("negative exponent on a plain power");
    return CF::power(base, n);
  }

  // Argument of sin/cos/exp: [sign integer dot] x
  long parse_frequency() {
    skip_ws();
    long a = 1;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      long sign = 1;
      if (accept('-')) {
        sign = -1;
      } else {
        accept('+');
      }
      a = sign * parse_small_integer();
      if (!accept_dot()) {
        if (peek('*')) fail("use a.x for a deformed frequency; a*x is not supported here");
        fail("expected '.' after frequency");
      }
    }
    skip_ws();
    if (at_end() || text_[pos_] != 'x') fail("expected 'x'");
    ++pos_;
    if (peek('*')) fail("use a.x for a deformed frequency; x*a is not supported here");
    return a;
  }

  ClosedForm parse_atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return CF::constant(Rational(parse_integer()));
    if (c == '(') {
      ++pos_;
      ClosedForm inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      skip_ws();
      if (at_end() || text_[pos_] != 'x') fail("expected 'x' inside []");
      ++pos_;
      expect(']');
      return CF::falling_power(1);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const std::string id = parse_identifier();
      if (id == "x") return CF::variable();
      if (id == "sin" || id == "cos" || id == "exp") {
        expect('(');
        const long a = parse_frequency();
        expect(')');
        if (id == "exp") return CF::exp_base(Rational(a + 1));
        if (a == 0) {
          pos_ = start;
          fail("trigonometric frequency must be nonzero");
        }
        return CF::trig(id == "sin" ? CF::TrigKind::Sin : CF::TrigKind::Cos, a);
      }
      if (id == "log") {
        expect('(');
        skip_ws();
        if (at_end() || text_[pos_] != 'x') fail("log takes the argument x");
        ++pos_;
        expect(')');
        return CF::log();
      }
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

ClosedForm parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace dcalc
