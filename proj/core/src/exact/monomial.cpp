#include "bispec/exact/monomial.hpp"

namespace bispec {

Monomial Monomial::variable(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({v, exp});
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& f : factors_) {
    if (f.var == v) return f.exp;
    if (f.var > v) break;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.factors_.begin();
  for (const auto& f : factors_) {
    std::uint32_t e = f.exp;
    if (it != divisor.factors_.end() && it->var == f.var) {
      e -= it->exp;
      ++it;
    }
    if (e > 0) out.factors_.push_back({f.var, e});
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->var < ib->var) {
      ++ia;
    } else if (ib->var < ia->var) {
      ++ib;
    } else {
      out.factors_.push_back({ia->var, std::min(ia->exp, ib->exp)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->var < ib->var)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->var < ia->var) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->var, std::max(ia->exp, ib->exp)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->var < ib->var)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->var < ia->var) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->var, ia->exp + ib->exp});
      ++ia;
      ++ib;
    }
  }
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
    if (ia->var != ib->var) return ia->var < ib->var ? 1 : -1;
    if (ia->exp != ib->exp) return ia->exp < ib->exp ? -1 : 1;
  }
  // Equal total degree and equal common prefix means equal monomials.
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var) << 20) ^ f.exp;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool reduce_relations(Monomial& m, Rat& factor) {
  const ParamTable& table = ParamTable::global();
  bool needed = false;
  for (const auto& f : m.factors()) {
    if (f.exp >= 2 && table.relation(f.var)) {
      needed = true;
      break;
    }
  }
  if (!needed) return false;
  Monomial rebuilt;
  for (const auto& f : m.factors()) {
    const auto& rel = table.relation(f.var);
    if (rel && f.exp >= 2) {
      factor *= pow(*rel, f.exp / 2);
      if (f.exp % 2 == 1) rebuilt = rebuilt * Monomial::variable(f.var, 1);
    } else {
      rebuilt = rebuilt * Monomial::variable(f.var, f.exp);
    }
  }
  m = rebuilt;
  return true;
}

}  // namespace bispec
