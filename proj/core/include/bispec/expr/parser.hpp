#pragma once

#include "bispec/diffop/quasirat.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bispec {

/// Parsed expression: a rational function of x, or a quasi-rational
/// function when exp(...) or a non-integer power occurs.
class Expr {
 public:
  Expr(XRat f) : value_(std::move(f)) {}     // NOLINT
  Expr(QuasiRat q) : value_(std::move(q)) {}  // NOLINT

  bool is_quasi() const { return std::holds_alternative<QuasiRat>(value_); }
  bool is_polynomial() const { return !is_quasi() && std::get<XRat>(value_).is_polynomial(); }
  /// Throws Error(Parse) when the value is not of the requested kind.
  const XRat& as_xrat() const;
  XPoly as_xpoly() const;
  Scalar as_scalar() const;
  QuasiRat as_quasirat() const;

 private:
  std::variant<XRat, QuasiRat> value_;
};

/// Parses integers, `x`, declared parameter names, `+ - * / ^`, `exp(...)`
/// and parentheses. `^` binds tightest and is right-associative; unary minus
/// binds loosest. Errors carry the 1-based column.
Expr parse_expr(std::string_view text, const std::vector<std::string>& declared);

/// Declares a parameter from "name" or "name^2=r" (a quadratic algebraic
/// number); returns its name.
std::string declare_param(std::string_view decl);

}  // namespace bispec
