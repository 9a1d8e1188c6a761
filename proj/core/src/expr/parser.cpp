#include "bispec/expr/parser.hpp"

#include "bispec/error.hpp"
#include "bispec/exact/param.hpp"

#include <algorithm>
#include <cctype>

namespace bispec {

const XRat& Expr::as_xrat() const {
  if (is_quasi()) throw Error(ErrorKind::Parse, "expected a rational function of x, got exp(...) or a symbolic power");
  return std::get<XRat>(value_);
}

XPoly Expr::as_xpoly() const {
  const XRat& f = as_xrat();
  if (!f.is_polynomial()) throw Error(ErrorKind::Parse, "expected a polynomial in x");
  return f.numerator();
}

Scalar Expr::as_scalar() const {
  const auto c = as_xrat().constant_value();
  if (!c) throw Error(ErrorKind::Parse, "expected an expression free of x");
  return *c;
}

QuasiRat Expr::as_quasirat() const {
  if (is_quasi()) return std::get<QuasiRat>(value_);
  return QuasiRat::from_xrat(std::get<XRat>(value_));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& declared) : text_(text), declared_(declared) {}

  Expr run() {
    Expr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Expr add(const Expr& a, const Expr& b, bool subtract) {
    if (a.is_quasi() || b.is_quasi()) {
      throw Error(ErrorKind::Parse, "sums of exp(...) or symbolic powers are not supported");
    }
    return subtract ? Expr(a.as_xrat() - b.as_xrat()) : Expr(a.as_xrat() + b.as_xrat());
  }

  static Expr mul(const Expr& a, const Expr& b) {
    if (!a.is_quasi() && !b.is_quasi()) return a.as_xrat() * b.as_xrat();
    return a.as_quasirat() * b.as_quasirat();
  }

  static Expr div(const Expr& a, const Expr& b) {
    if (b.is_quasi()) return a.as_quasirat() * b.as_quasirat().pow(Scalar(-1));
    if (b.as_xrat().is_zero()) throw Error(ErrorKind::Domain, "division by zero");
    if (!a.is_quasi()) return a.as_xrat() / b.as_xrat();
    return a.as_quasirat() * QuasiRat::from_xrat(b.as_xrat()).pow(Scalar(-1));
  }

  static Expr power(const Expr& base, const Expr& exponent) {
    const Scalar e = exponent.as_scalar();
    if (!base.is_quasi() && e.is_rational() && is_integer(e.rational_value())) {
      const Rat r = e.rational_value();
      if (!r.get_num().fits_sint_p()) throw Error(ErrorKind::Domain, "exponent too large");
      const long n = r.get_num().get_si();
      if (n < 0 && base.as_xrat().is_zero()) throw Error(ErrorKind::Domain, "division by zero");
      return base.as_xrat().pow(static_cast<int>(n));
    }
    return base.as_quasirat().pow(e);
  }

  Expr sum() {
    Expr e = signed_term();
    while (true) {
      if (accept('+')) {
        e = add(e, signed_term(), false);
      } else if (accept('-')) {
        e = add(e, signed_term(), true);
      } else {
        return e;
      }
    }
  }

  Expr signed_term() {
    if (accept('-')) {
      Expr e = signed_term();
      if (e.is_quasi()) fail("cannot negate exp(...) or a symbolic power");
      return -e.as_xrat();
    }
    if (accept('+')) return signed_term();
    return product();
  }

  Expr product() {
    Expr e = power_expr();
    while (true) {
      if (accept('*')) {
        e = mul(e, power_expr());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Expr d = power_expr();
        if (!d.is_quasi() && d.as_xrat().is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        e = div(e, d);
      } else {
        return e;
      }
    }
  }

  Expr power_expr() {
    Expr base = atom();
    if (!accept('^')) return base;
    const bool neg = accept('-');
    Expr ex = power_expr();
    if (neg) ex = -ex.as_xrat();
    return power(base, ex);
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return XRat(Scalar(Rat(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == kVariableX) return XRat::x();
      if (name == "exp") {
        expect('(');
        Expr arg = sum();
        expect(')');
        const XRat& f = arg.as_xrat();
        if (!f.is_polynomial()) fail("exp(...) needs a polynomial argument");
        return QuasiRat::exponential(f.numerator());
      }
      if (std::find(declared_.begin(), declared_.end(), name) == declared_.end()) {
        std::string known;
        for (const auto& d : declared_) known += (known.empty() ? "" : ", ") + d;
        pos_ = start;
        throw Error(ErrorKind::UnknownId, "unknown identifier '" + name + "' at column " + std::to_string(start + 1) +
                                              "; declared parameters: " + (known.empty() ? "(none)" : known));
      }
      return XRat(Scalar::variable(param(name)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& declared_;
  std::size_t pos_ = 0;
};

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Expr parse_expr(std::string_view text, const std::vector<std::string>& declared) {
  return Parser(text, declared).run();
}

std::string declare_param(std::string_view decl) {
  const auto eq = decl.find('=');
  if (eq == std::string_view::npos) {
    const auto name = trim(decl);
    if (!valid_name(name) || name == kVariableX || name == "exp") {
      throw Error(ErrorKind::Parse, "invalid parameter name '" + std::string(name) + "'");
    }
    param(name);
    return std::string(name);
  }
  auto lhs = trim(decl.substr(0, eq));
  const auto rhs = trim(decl.substr(eq + 1));
  if (lhs.size() < 3 || lhs.substr(lhs.size() - 2) != "^2") {
    throw Error(ErrorKind::Parse, "algebraic parameter must be declared as name^2=r");
  }
  lhs = trim(lhs.substr(0, lhs.size() - 2));
  if (!valid_name(lhs) || lhs == kVariableX || lhs == "exp") {
    throw Error(ErrorKind::Parse, "invalid parameter name '" + std::string(lhs) + "'");
  }
  algebraic(lhs, parse_rat(rhs));
  return std::string(lhs);
}

}  // namespace bispec
