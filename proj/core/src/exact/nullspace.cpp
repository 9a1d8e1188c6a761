#include "bispec/exact/nullspace.hpp"

#include "bispec/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace bispec {
namespace {

using PolyRow = std::vector<MPoly>;

// Multiply a row of fractions through by a common multiple of its
// denominators and strip rational and monomial content.
PolyRow clear_row(const ScalarRow& row) {
  std::vector<MPoly> dens;
  bool all_monomial = true;
  for (const auto& s : row) {
    if (s.is_zero() || s.den().is_one()) continue;
    if (std::none_of(dens.begin(), dens.end(), [&](const MPoly& d) { return d == s.den(); })) {
      dens.push_back(s.den());
      all_monomial &= s.den().is_monomial();
    }
  }
  PolyRow out;
  out.reserve(row.size());
  if (dens.empty()) {
    for (const auto& s : row) out.push_back(s.num());
  } else if (all_monomial) {
    Monomial l;
    for (const auto& d : dens) l = Monomial::lcm(l, d.leading().mono);
    for (const auto& s : row) {
      out.push_back(s.is_zero() ? MPoly{} : s.num().times(l.divided_by(s.den().leading().mono)));
    }
  } else {
    for (const auto& s : row) {
      MPoly v = s.num();
      for (const auto& d : dens) {
        if (!(d == s.den())) v *= d;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

void strip_content(PolyRow& row) {
  Monomial g;
  bool first = true;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    g = first ? p.monomial_content() : Monomial::gcd(g, p.monomial_content());
    first = false;
    for (const auto& t : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    }
  }
  if (first) return;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (auto& p : row) {
    if (p.is_zero()) continue;
    p = p.divided_by(g);
    p *= scale;
  }
}

bool row_is_zero(const PolyRow& row) {
  return std::all_of(row.begin(), row.end(), [](const MPoly& p) { return p.is_zero(); });
}

struct RowHash {
  std::size_t operator()(const PolyRow& r) const {
    std::size_t h = r.size();
    for (const auto& p : r) h = h * 1099511628211ULL ^ p.hash();
    return h;
  }
};

// Pivot preference: constants first (no genericity assumption), then small.
std::pair<int, std::size_t> pivot_cost(const MPoly& p) {
  if (p.is_constant()) return {0, 0};
  return {1, p.size() * 64 + p.total_degree()};
}

struct Echelon {
  std::vector<PolyRow> rows;           // rows[k] has pivot at pivots[k]
  std::vector<std::size_t> pivots;
  std::vector<MPoly> assumptions;
};

// Fraction-free forward elimination. With `bareiss` each update is divided
// exactly by the previous pivot; returns nullopt if a division is not exact
// (possible when algebraic relations are present).
std::optional<Echelon> eliminate(std::vector<PolyRow> rows, std::size_t cols, bool bareiss) {
  Echelon e;
  MPoly prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::pair<int, std::size_t> best_cost{2, 0};
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      auto cost = pivot_cost(rows[i][c]);
      if (best == rows.size() || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const MPoly pivot = rows[r][c];
    if (!pivot.is_constant()) e.assumptions.push_back(pivot.primitive());
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) {
        if (!bareiss) continue;
        // Bareiss keeps the determinant scaling uniform across rows.
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (rows[i][j].is_zero()) continue;
          MPoly v = pivot * rows[i][j];
          auto q = v.divide_exact(prev);
          if (!q) return std::nullopt;
          rows[i][j] = std::move(*q);
        }
        continue;
      }
      const MPoly factor = rows[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        MPoly v = pivot * rows[i][j] - factor * rows[r][j];
        if (bareiss) {
          auto q = v.divide_exact(prev);
          if (!q) return std::nullopt;
          v = std::move(*q);
        }
        rows[i][j] = std::move(v);
      }
      rows[i][c] = MPoly{};
      if (!bareiss) strip_content(rows[i]);
    }
    prev = bareiss ? pivot : MPoly(1);
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

NullspaceResult nullspace(const ScalarMatrix& matrix, std::size_t cols) {
  std::vector<PolyRow> rows;
  std::unordered_set<PolyRow, RowHash> seen;
  for (const auto& row : matrix) {
    if (row.size() != cols) throw Error(ErrorKind::Domain, "nullspace: ragged matrix");
    PolyRow p = clear_row(row);
    strip_content(p);
    if (row_is_zero(p)) continue;
    if (seen.insert(p).second) rows.push_back(std::move(p));
  }

  std::optional<Echelon> ech = eliminate(rows, cols, true);
  if (!ech) ech = eliminate(rows, cols, false);

  NullspaceResult result;
  for (auto& a : ech->assumptions) {
    if (std::none_of(result.assumptions.begin(), result.assumptions.end(),
                     [&](const MPoly& b) { return b == a || b == -a; })) {
      result.assumptions.push_back(a);
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech->pivots) is_pivot[c] = true;

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ScalarRow v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t k = ech->rows.size(); k-- > 0;) {
      const std::size_t pc = ech->pivots[k];
      Scalar acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (v[j].is_zero() || ech->rows[k][j].is_zero()) continue;
        acc += Scalar(ech->rows[k][j]) * v[j];
      }
      v[pc] = -acc / Scalar(ech->rows[k][pc]);
    }
    PolyRow cleared = clear_row(v);
    strip_content(cleared);
    ScalarRow out;
    out.reserve(cols);
    for (auto& p : cleared) out.emplace_back(std::move(p));
    result.basis.push_back(std::move(out));
  }

  for (const auto& v : result.basis) {
    for (const auto& row : rows) {
      MPoly acc;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j].num();
      }
      if (!acc.is_zero()) throw Error(ErrorKind::Internal, "nullspace vector failed back-substitution");
    }
  }
  return result;
}

}  // namespace bispec
