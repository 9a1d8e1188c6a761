#include "bispec/expr/printer.hpp"

#include "bispec/exact/param.hpp"

#include <vector>

namespace bispec {

namespace {

struct SignedText {
  bool negative;
  std::string body;
};

std::string join_terms(const std::vector<SignedText>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      out += terms[i].negative ? "-" : "";
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

std::string join_factors(const std::vector<std::string>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (f.empty()) continue;
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

bool single_term(const Scalar& c) { return c.is_polynomial() && c.num().terms().size() == 1; }

// c * tail, where tail is a product text (possibly empty).
SignedText scaled_text(const Scalar& c, const std::string& tail) {
  if (single_term(c)) {
    const Term& t = c.num().terms().front();
    const bool neg = sgn(t.coef) < 0;
    const Rat mag = neg ? Rat(-t.coef) : t.coef;
    std::string coef;
    const std::string mono = to_string(t.mono);
    if (mag != 1 || (mono.empty() && tail.empty())) coef = to_string(mag);
    return {neg, join_factors({coef, mono, tail})};
  }
  return {false, join_factors({"(" + to_string(c) + ")", tail})};
}

std::string power_text(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string to_string(const Monomial& m) {
  std::vector<std::string> fs;
  for (const auto& f : m.factors()) fs.push_back(power_text(ParamTable::global().name(f.var), static_cast<int>(f.exp)));
  return join_factors(fs);
}

std::string to_string(const MPoly& p) {
  std::vector<SignedText> terms;
  for (const auto& t : p.terms()) terms.push_back(scaled_text(Scalar(MPoly::monomial(t.mono, t.coef)), ""));
  return join_terms(terms);
}

std::string to_string(const Scalar& s) {
  if (s.is_polynomial()) return to_string(s.num());
  std::string num = to_string(s.num());
  if (s.num().terms().size() > 1) num = paren(num);
  return num + "/" + paren(to_string(s.den()));
}

std::string to_string(const XPoly& p) {
  std::vector<SignedText> terms;
  for (int i = p.degree(); i >= 0; --i) {
    const Scalar& c = p.coeff(i);
    if (c.is_zero()) continue;
    terms.push_back(scaled_text(c, i == 0 ? "" : power_text("x", i)));
  }
  return join_terms(terms);
}

std::string to_string(const XRat& f) {
  const XPoly num = f.numerator();
  std::vector<std::string> den;
  for (const auto& fac : f.factors()) {
    if (fac.exp >= 0) continue;
    const std::string b = fac.base.degree() == 1 && fac.base.coeff(0).is_zero() && fac.base.lc().is_one()
                              ? "x"
                              : paren(to_string(fac.base));
    den.push_back(power_text(b, -fac.exp));
  }
  if (den.empty()) return to_string(num);
  std::string n = to_string(num);
  const bool simple = num.degree() <= 0 ? single_term(num.coeff(0)) : false;
  if (!simple) n = paren(n);
  return n + "/" + (den.size() == 1 && den[0] == "x" ? den[0] : paren(join_factors(den)));
}

std::string to_string(const QuasiRat& q) {
  std::vector<std::string> fs;
  for (const auto& f : q.factors()) {
    std::string b = paren(to_string(f.base));
    if (f.exponent.is_one()) {
      fs.push_back(b);
    } else {
      fs.push_back(b + "^" + paren(to_string(f.exponent)));
    }
  }
  if (!q.exp_part().is_zero()) fs.push_back("exp(" + to_string(q.exp_part()) + ")");
  if (fs.empty()) return "1";
  return join_factors(fs);
}

std::string to_string(const DiffOp& op) {
  std::vector<SignedText> terms;
  for (int r = op.order(); r >= 0; --r) {
    const XRat& c = op.coeff(r);
    if (c.is_zero()) continue;
    const std::string d = r == 0 ? "" : power_text("D", r);
    if (c.is_scalar()) {
      terms.push_back(scaled_text(c.raw_num().coeff(0), d));
    } else {
      terms.push_back({false, join_factors({paren(to_string(c)), d})});
    }
  }
  return join_terms(terms);
}

std::string to_string(const XMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ", ";
      out += to_string(m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string to_string(const MatDiffOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (int r = op.order(); r >= 0; --r) {
    const XMatrix c = op.coeff(r);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += (r == 0 ? std::string("1") : power_text("D", r)) + ": " + to_string(c);
  }
  return out;
}

}  // namespace bispec
