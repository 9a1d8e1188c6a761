#include "bispec/exact/mpoly.hpp"

#include "bispec/error.hpp"

#include <algorithm>
#include <set>

namespace bispec {
namespace {

bool term_greater(const Term& a, const Term& b) { return Monomial::compare(a.mono, b.mono) > 0; }

// Sorts and merges in place; rewrites nothing.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rat sum = std::move(terms[i].coef);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coef;
      ++j;
    }
    if (sgn(sum) != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

MPoly::MPoly(int c) {
  if (c != 0) terms_.push_back({Monomial{}, Rat(c)});
}

MPoly::MPoly(const Rat& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

MPoly MPoly::variable(VarId v, std::uint32_t exp) { return monomial(Monomial::variable(v, exp)); }

MPoly MPoly::monomial(const Monomial& m, const Rat& c) {
  return from_terms({Term{m, c}});
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) reduce_relations(t.mono, t.coef);
  canonicalize(terms);
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::Internal, "constant_value of non-constant polynomial");
  return terms_.empty() ? Rat(0) : terms_[0].coef;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MPoly::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exponent(v));
  return d;
}

std::vector<VarId> MPoly::variables() const {
  std::set<VarId> vs;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vs.insert(f.var);
  }
  return {vs.begin(), vs.end()};
}

bool MPoly::has_algebraic() const {
  const auto& table = ParamTable::global();
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) {
      if (table.relation(f.var)) return true;
    }
  }
  return false;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto ia = terms_.begin();
  auto ib = o.terms_.begin();
  while (ia != terms_.end() || ib != o.terms_.end()) {
    int c;
    if (ia == terms_.end()) {
      c = -1;
    } else if (ib == o.terms_.end()) {
      c = 1;
    } else {
      c = Monomial::compare(ia->mono, ib->mono);
    }
    if (c > 0) {
      merged.push_back(std::move(*ia++));
    } else if (c < 0) {
      merged.push_back(*ib++);
    } else {
      Rat s = ia->coef + ib->coef;
      if (sgn(s) != 0) merged.push_back({std::move(ia->mono), std::move(s)});
      ++ia;
      ++ib;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.is_constant()) return a * b.terms_[0].coef;
  if (a.is_constant()) return b * a.terms_[0].coef;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Term t{ta.mono * tb.mono, ta.coef * tb.coef};
      reduce_relations(t.mono, t.coef);
      prod.push_back(std::move(t));
    }
  }
  canonicalize(prod);
  MPoly out;
  out.terms_ = std::move(prod);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = 1;
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::times(const Monomial& m, const Rat& c) const {
  if (sgn(c) == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  bool rewritten = false;
  for (const auto& t : terms_) {
    Term n{t.mono * m, t.coef * c};
    rewritten |= reduce_relations(n.mono, n.coef);
    out.push_back(std::move(n));
  }
  MPoly p;
  if (rewritten) canonicalize(out);
  p.terms_ = std::move(out);
  return p;
}

Rat MPoly::content() const {
  if (terms_.empty()) return 0;
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rat c(g, l);
  c.canonicalize();
  if (sgn(terms_.front().coef) < 0) c = -c;
  return c;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return {};
  Rat c = content();
  if (c == 1) return *this;
  MPoly out = *this;
  Rat inv = 1 / c;
  for (auto& t : out.terms_) t.coef *= inv;
  return out;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

MPoly MPoly::divided_by(const Monomial& m) const {
  if (m.is_one()) return *this;
  MPoly out = *this;
  for (auto& t : out.terms_) t.mono = t.mono.divided_by(m);
  return out;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return MPoly{};
  if (d.is_constant()) return *this * (1 / d.terms_[0].coef);
  const Term& lt_d = d.leading();
  std::vector<Term> quotient;
  MPoly r = *this;
  // Relation rewriting can break the leading-term cancellation; bound the work.
  std::size_t guard = 64 + 4 * (size() + 1) * (d.size() + 1);
  while (!r.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    const Term& lt_r = r.leading();
    if (!lt_d.mono.divides(lt_r.mono)) return std::nullopt;
    Term q{lt_r.mono.divided_by(lt_d.mono), lt_r.coef / lt_d.coef};
    Monomial before = lt_r.mono;
    r -= d.times(q.mono, q.coef);
    if (!r.is_zero() && Monomial::compare(r.leading().mono, before) >= 0) return std::nullopt;
    quotient.push_back(std::move(q));
  }
  return from_terms(std::move(quotient));
}

MPoly MPoly::substitute(VarId v, const MPoly& value) const {
  // Group terms by the exponent of v, then Horner-free sum of value^e * rest.
  std::map<std::uint32_t, std::vector<Term>> by_exp;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.mono.exponent(v);
    Term rest{e == 0 ? t.mono : t.mono.divided_by(Monomial::variable(v, e)), t.coef};
    by_exp[e].push_back(std::move(rest));
  }
  MPoly out;
  MPoly power = 1;
  std::uint32_t current = 0;
  for (auto& [e, ts] : by_exp) {
    while (current < e) {
      power *= value;
      ++current;
    }
    out += from_terms(std::move(ts)) * power;
  }
  return out;
}

Rat MPoly::evaluate(const std::map<VarId, Rat>& values) const {
  Rat sum = 0;
  for (const auto& t : terms_) {
    Rat v = t.coef;
    for (const auto& f : t.mono.factors()) {
      auto it = values.find(f.var);
      if (it == values.end()) {
        throw Error(ErrorKind::Domain, "no value for parameter '" + ParamTable::global().name(f.var) + "'");
      }
      v *= bispec::pow(it->second, f.exp);
    }
    sum += v;
  }
  return sum;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

int MPoly::compare(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = Monomial::compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    c = cmp(a.terms_[i].coef, b.terms_[i].coef);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1315423911u + t.mono.hash();
    h ^= mpz_get_ui(t.coef.get_num_mpz_t()) + 31 * mpz_get_ui(t.coef.get_den_mpz_t());
  }
  return h;
}

}  // namespace bispec
