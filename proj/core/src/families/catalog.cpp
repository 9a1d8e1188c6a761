#include "bispec/families/catalog.hpp"

#include "bispec/adcond/heisenberg.hpp"
#include "bispec/darboux/darboux.hpp"
#include "bispec/error.hpp"
#include "bispec/exact/param.hpp"
#include "bispec/expr/parser.hpp"

#include <algorithm>
#include <map>

namespace bispec {

namespace {

const std::vector<std::string>& catalog_params() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"k", "m", "a", "b", "c", "e", "c0", "c1", "c2", "c3", "c4", "p1", "e1",
                                 "a1", "a2", "a3", "a4", "s", "r1", "r2"};
    for (const auto& n : out) param(n);
    algebraic("s2", Rat(2));
    algebraic("s3", Rat(3));
    algebraic("i", Rat(-1));
    out.insert(out.end(), {"s2", "s3", "i"});
    return out;
  }();
  return names;
}

XRat rat(const std::string& text) { return parse_expr(text, catalog_params()).as_xrat(); }
XPoly poly(const std::string& text) { return parse_expr(text, catalog_params()).as_xpoly(); }
QuasiRat quasi(const std::string& text) { return parse_expr(text, catalog_params()).as_quasirat(); }

// Θ with the constant term dropped.
XPoly drop_constant(XPoly p) {
  if (p.degree() < 0) return p;
  std::vector<Scalar> c = p.coeffs();
  c[0] = Scalar();
  return XPoly(std::move(c));
}

XMatrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<XRat>> r;
  for (const auto& row : rows) {
    std::vector<XRat> rr;
    for (const auto& e : row) rr.push_back(rat(e));
    r.push_back(std::move(rr));
  }
  return XMatrix::from_rows(r);
}

// F'' + F' B + F C.
MatDiffOp matrix_operator(const XMatrix& B, const XMatrix& C) {
  return MatDiffOp({C, B, XMatrix::identity(B.size())}, ActionSide::Right);
}

struct Spec {
  Spec(std::string id_, std::string anchor_, std::vector<std::string> params_, bool claim = true, bool flag = false,
       std::string note_ = "")
      : id(std::move(id_)), anchor(std::move(anchor_)), params(std::move(params_)), claim_holds(claim), flagged(flag),
        note(std::move(note_)) {}
  std::string id;
  std::string anchor;
  std::vector<std::string> params;
  bool claim_holds;
  bool flagged;
  std::string note;
};

CatalogEntry scalar_entry(Spec s, DiffOp L, XPoly theta, WeightVector w, std::optional<XPoly> tau = std::nullopt) {
  return {std::move(s.id), std::move(s.anchor), std::move(s.params), s.claim_holds, s.flagged, std::move(s.note),
          ScalarEntry{std::move(L), drop_constant(std::move(theta)), std::move(w), std::move(tau)}};
}

CatalogEntry matrix_entry(Spec s, MatDiffOp L, std::vector<std::pair<int, XMatrix>> terms) {
  const int n = L.size();
  MatCondition cond{std::move(terms), MatDiffOp::multiplication(XMatrix::identity(n, XRat::x()), ActionSide::Right)};
  return {std::move(s.id), std::move(s.anchor), std::move(s.params), s.claim_holds, s.flagged, std::move(s.note),
          MatrixEntry{std::move(L), std::move(cond)}};
}

WeightVector wv(std::initializer_list<std::pair<const int, Scalar>> w) { return WeightVector(std::map<int, Scalar>(w)); }

struct AnsatzItem {
  std::string equation;
  int index;
  std::string anchor;
  std::vector<std::string> params;
  std::string theta;
  std::string V;
  bool flagged = false;
  std::string note;
  std::string suffix;  // for variants: id gets ":<index><suffix>"
};

AnsatzItem item(std::string equation, int index, std::string anchor, std::vector<std::string> params,
                std::string theta, std::string V, bool flagged = false, std::string note = "", std::string suffix = "") {
  return {std::move(equation), index, std::move(anchor), std::move(params), std::move(theta), std::move(V),
          flagged, std::move(note), std::move(suffix)};
}

// The reparametrisation used for the quartic-Θ solution: s^2 = 3 a3^2 - 8 a2 a4,
// so a2 = (3 a3^2 - s^2)/(8 a4); Θ' then has roots -(s+a3)/(4a4),
// (s-a3)/(4a4), -a3/(4a4), which fixes a1 = a3 (a3^2 - s^2)/(16 a4^2).
const std::string kA2 = "((3*a3^2 - s^2)/(8*a4))";
const std::string kA1 = "(a3*(a3^2 - s^2)/(16*a4^2))";

std::string subst_a(std::string t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.compare(i, 2, "a2") == 0) {
      out += kA2;
      ++i;
    } else {
      out += t[i];
    }
  }
  return out;
}

const std::string kV9 =
    "x^2 + s2*s3*x + (c3 - 10*a3)/(3*a3) + 2/(x + (s3 + 3)/(s2*s3))^2 + 2/(x - (s3 - 3)/(s2*s3))^2";
const std::string kV10 =
    "x^2 - s2*s3*x + (c3 - 10*a3)/(3*a3) + (4*s2*3^11*s3*a3*(x + (s3*i - 3)/(s2*s3))*(x - (s3*i + 3)/(s2*s3)))/"
    "(s2*3^11*s3*a3*(x - (s2*s3 - s2)/2)^2*(x - (s2*s3 + s2)/2)^2)";

const std::vector<AnsatzItem>& ansatz_items() {
  static const std::vector<AnsatzItem> items = {
      item("A2-4A0", 1, "the general solution is", {"c1"}, "x", "x^2 + c1"),
      item("A2-4A0", 2, "the original Hermite case", {}, "x", "x^2"),
      item("A3-16A1", 1, "once again it is not too hard to see that the general solution is", {"a1", "a2", "c0", "c1", "c2"},
       "a2*x^2 + a1*x",
       "(4*a2^2*x^2 + 4*a1*a2*x + 2*a2*c2 - a1^2)/(4*a2^2) - (2*a1^2*a2*c2 + 8*c0*a2^3 - 4*a1*c1*a2^2 - a1^4)/"
       "(4*a2^2*(2*a2*x + a1)^2)"),
      item("A3-16A1", 2, "the Hermite example after one application of Darboux's method", {"a2"}, "a2*x^2", "x^2 + 2/x^2"),
      item("A5-5A3+4A1", 1, "A first solution given by", {"c"}, "x", "x^2 + c*x"),
      item("A5-5A3+4A1", 2, "A second solution given by", {"c"}, "x", "x^2/4 + c*x"),
      item("A5-5A3+4A1", 3, "A third solution given by", {"c", "e"}, "x^2 + c*x", "x^2/4 + e*x"),
      item("A5-5A3+4A1", 4, "A fourth solution given by", {"c1", "p1"}, "x^2 + c1*x", "4*p1/(2*x + c1)^2 + (x^2 + c1*x)/16"),
      item("A5-5A3+4A1", 5, "A fifth solution given by", {"a", "b"}, "x*(2*x + a)*(4*x^2 + 2*a*x + 4*b - a^2)/8",
       "(2*x^2 + a*x)/32"),
      item("A5-5A3+4A1", 6, "A sixth solution given by", {"b", "e1", "p1"}, "x*(x + 2*e1)*(x^2 + 2*e1*x - 4*e1^2 + b)",
       "p1/(x + e1)^2 + (x^2 + 2*e1*x)/16"),
      item("A5-5A3+4A1", 7, "the most interesting solution for the potential", {"a3", "a4", "s", "c4"},
       subst_a("a4*x^4 + a3*x^3 + a2*x^2") + " + " + kA1 + "*x",
       subst_a("2/(x + (s + a3)/(4*a4))^2 + 2/(x - (s - a3)/(4*a4))^2"
               " - (1024*a4^4 - 64*a2^2*a4^2 + 48*a2*a3^2*a4 - 9*a3^4)/(4096*a4^4*(x + a3/(4*a4))^2)"
               " + (48*a4^2*x^2 + 24*a3*a4*x + 192*a4*c4 - 8*a2*a4 - 9*a3^2)/(768*a4^2)"),
       false,
       "square root written as s with a2 = (3a3^2 - s^2)/(8a4); the poles force a1 = a3(a3^2 - s^2)/(16a4^2)"),
      item("A4-40A2+144A0", 1, "A first solution given by", {"c"}, "x", "9*x^2 + c"),
      item("A4-40A2+144A0", 2, "A second solution given by", {"c"}, "x", "x^2 + c"),
      item("A4-40A2+144A0", 3, "A third solution given by", {"c"}, "x^3", "x^2 + c"),
      item("A4-40A2+144A0", 4, "A fourth solution given by", {"c"}, "x^3", "x^2 + c + 2/x^2"),
      item("A4-40A2+144A0", 5, "A fifth solution given by", {"a1", "c3"}, "x^3 + a1*x", "(9*x^2 + 3*c3 - a1)/9"),
      item("A4-40A2+144A0", 6, "A sixth solution given by", {"c", "i", "s2"}, "x^3 + 3/2*x",
       "2/(x - i/s2)^2 + 2/(x + i/s2)^2 + x^2 + c"),
      item("A4-40A2+144A0", 7, "A seventh solution given by", {"c", "s2"}, "x^3 - 3/2*x",
       "2/(x - 1/s2)^2 + 2/(x + 1/s2)^2 + x^2 + c"),
      item("A4-40A2+144A0", 8, "An eighth solution given by", {"a2", "a3"}, "a3*x^3 + a2*x^2 + 2/9*a2^2/a3",
       "x^2 + 2/3*a2/a3*x", true,
       "printed constant term 2/9 a2^2/a3 in Θ is dropped; see the :8x variant"),
      item("A4-40A2+144A0", 8, "An eighth solution given by", {"a2", "a3"}, "a3*x^3 + a2*x^2 + 2/9*a2^2/a3*x",
       "x^2 + 2/3*a2/a3*x", false, "printed 2/9 a2^2/a3 read as the coefficient of x", "x"),
      item("A4-40A2+144A0", 9, "A ninth solution given by", {"a3", "c3", "s2", "s3"}, "x^3 + 3*s3*x^2 + 3*s2*x", kV9,
       true, "V is the seventh potential shifted by sqrt(3/2), so Θ needs leading coefficient sqrt(2); see :9s2"),
      item("A4-40A2+144A0", 9, "A ninth solution given by", {"a3", "c3", "s2", "s3"},
       "s2*x^3 + 3*s3*x^2 + 3*s2*x", kV9, false, "leading coefficient sqrt(2) in Θ", "s2"),
      item("A4-40A2+144A0", 10, "there is an extra solution given by", {"a3", "c3", "i", "s2", "s3"},
       "x^3 - 3*s3*x^2 + 3*s2*x", kV10, true,
       "V is the seventh potential shifted by -sqrt(3/2), so Θ needs leading coefficient sqrt(2); see :10s2"),
      item("A4-40A2+144A0", 10, "there is an extra solution given by", {"a3", "c3", "i", "s2", "s3"},
       "s2*x^3 - 3*s3*x^2 + 3*s2*x", kV10, false, "leading coefficient sqrt(2) in Θ", "s2"),
  };
  return items;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  for (int k = 0; k <= 4; ++k) {
    auto p = exceptional_hermite(k);
    out.push_back(scalar_entry({"hermite-exc:k=" + std::to_string(k), "we have the new ad-condition", {}},
                               p.L, p.theta, hermite_new_weights(k), hermite_poly(k)));
  }
  {
    auto p = hermite_partition_22();
    out.push_back(scalar_entry({"hermite-exc:partition=2,2", "with $\\Theta=4 x^5+ 15 x$", {}}, p.L, p.theta,
                               hermite_new_weights(4), poly("4*x^4 + 3")));
  }
  {
    auto p = exceptional_hermite(1);
    out.push_back(scalar_entry({"hermite-exc:k=1:stronger", "but this is actually false", {}, false}, p.L, p.theta,
                               wv({{2, 1}, {0, -16}})));
    auto q = exceptional_hermite(3);
    out.push_back(scalar_entry({"hermite-exc:k=3:stronger", "does not hold", {}, false}, q.L, q.theta,
                               wv({{4, 1}, {2, -80}, {0, 1024}})));
  }
  for (int k = 0; k <= 3; ++k) {
    auto p = exceptional_hermite(k);
    out.push_back(scalar_entry({"hermite-reach:k=" + std::to_string(k), "the method of M. Reach", {}}, p.L, p.theta,
                               reach_weights(k + 1, {Rat(2)})));
  }

  for (int step = 0; step <= 3; ++step) out.push_back(laguerre_catalog(step));
  {
    const auto& s2 = laguerre_catalog(2).scalar();
    out.push_back(scalar_entry({"laguerre-step:2:product", "A compact from for M. Reach's conditions", {"k"}, true, false,
                                "constant term -36 from the product formula instead of the printed -34"},
                               s2.L, s2.theta, reach_weights(3, {Rat(1)})));
    const auto V3 = rat("(x^2 - 2*k^2 + 24)/16") +
                    log_potential(quasi("x^((k^4 - 16*k^2 + 60)/32)*(x^6 - 3*k^2*x^4 + (3*k^4 - 12*k^2)*x^2 - k^6 + 12*k^4 - 32*k^2)"));
    out.push_back(scalar_entry({"laguerre-step:3:k6", "One more careful application of the Darboux method", {"k"}, true,
                                false, "constant term of τ read as -k^6 + 12k^4 - 32k^2 instead of the printed 12k^4 - 32k^2 - k"},
                               DiffOp::schrodinger(V3),
                               poly("x^8 - 4*k^2*x^6 + (6*k^4 - 24*k^2)*x^4 + 4*(-k^6 + 12*k^4 - 32*k^2)*x^2"),
                               reach_weights(4, {Rat(1)})));
  }

  for (const auto& it : ansatz_items()) {
    const std::string id = "ansatz:" + it.equation + ":" + std::to_string(it.index) + it.suffix;
    out.push_back(scalar_entry({id, it.anchor, it.params, true, it.flagged, it.note}, DiffOp::schrodinger(rat(it.V)),
                               poly(it.theta), ansatz_equation_weights(it.equation)));
  }

  {
    const auto L = matrix_operator(mat({{"-2*x", "2*a"}, {"0", "-2*x"}}), mat({{"-2", "0"}, {"0", "0"}}));
    const auto M = mat({{"r1", "r2"}, {"0", "0"}});
    out.push_back(matrix_entry({"matrix:hermite:1", "In this case the ad-conditions become", {"a", "r1", "r2"}}, L,
                               {{2, M}, {0, M.scaled(Scalar(-4))}}));
    const auto E11 = mat({{"1", "0"}, {"0", "0"}});
    const auto E12 = mat({{"0", "1"}, {"0", "0"}});
    out.push_back(matrix_entry({"matrix:hermite:r1", "a pair of independent ad-conditions", {"a"}}, L,
                               {{2, E11}, {0, E11.scaled(Scalar(-4))}}));
    out.push_back(matrix_entry({"matrix:hermite:r2", "a pair of independent ad-conditions", {"a"}}, L,
                               {{2, E12}, {0, E12.scaled(Scalar(-4))}}));
  }
  {
    const auto L = matrix_operator(mat({{"-2*x", "4*a*x"}, {"0", "-2*x"}}), mat({{"-4", "2*a"}, {"0", "0"}}));
    const auto E11 = mat({{"1", "0"}, {"0", "0"}});
    const auto E12 = mat({{"0", "1"}, {"0", "0"}});
    const Scalar a2 = rat("4*a^2").raw_num().coeff(0);
    out.push_back(matrix_entry({"matrix:laguerre:1", "there are two possible ad-conditions, namely", {"a"}, true, true,
                                "printed weight 4a^2 on A_1"},
                               L, {{3, E12}, {1, E12.scaled(-a2)}}));
    out.push_back(matrix_entry({"matrix:laguerre:2", "or with the same $\\Theta$", {"a"}, true, true, "printed weight 4a^2 on A_1"},
                               L, {{3, E11}, {1, E11.scaled(-a2)}}));
    out.push_back(matrix_entry({"matrix:laguerre:1:weight4", "there are two possible ad-conditions, namely", {"a"}, true,
                                false, "weight 4 on A_1 in place of the printed 4a^2"},
                               L, {{3, E12}, {1, E12.scaled(Scalar(-4))}}));
    out.push_back(matrix_entry({"matrix:laguerre:2:weight4", "or with the same $\\Theta$", {"a"}, true, false,
                                "weight 4 on A_1 in place of the printed 4a^2"},
                               L, {{3, E11}, {1, E11.scaled(Scalar(-4))}}));
  }
  {
    const auto L =
        matrix_operator(mat({{"2*b - 2*x", "2*a - 2*a*b*x"}, {"0", "-2*x"}}), mat({{"-2", "0"}, {"0", "0"}}));
    const auto M = mat({{"r1", "r2"}, {"0", "0"}});
    out.push_back(matrix_entry({"matrix:laguerre:3", "A second Laguerre example is given by", {"a", "b", "r1", "r2"}, true,
                                true, "printed Θ = xI"},
                               L, {{2, M}, {0, M.scaled(Scalar(-4))}}));
    auto shifted = matrix_entry({"matrix:laguerre:3:shifted", "A second Laguerre example is given by",
                                 {"a", "b", "r1", "r2"}, true, false, "Θ = (x - b)I in place of the printed xI"},
                                L, {{2, M}, {0, M.scaled(Scalar(-4))}});
    std::get<MatrixEntry>(shifted.body).condition.theta =
        MatDiffOp::multiplication(XMatrix::identity(2, rat("x - b")), ActionSide::Right);
    out.push_back(std::move(shifted));
  }

  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return out;
}

std::vector<CatalogEntry> build_laguerre() {
  std::vector<CatalogEntry> out;
  out.push_back(scalar_entry({"laguerre-step:0", "The classical Laguerre operator is given by", {"k"}},
                             DiffOp::schrodinger(rat("x^2/16 + (k^4 + 8*k^2 + 12)/(16*x^2)")), poly("x^2"),
                             wv({{3, 1}, {1, -1}})));
  out.push_back(scalar_entry({"laguerre-step:1", "Under one application of the Darboux process", {"k"}},
                             DiffOp::schrodinger(rat("2/(x + k)^2 + 2/(x - k)^2 + (x^2 - 2*k^2 + 8)/16 + (k^4 - 4)/(16*x^2)")),
                             poly("x^4 - 2*k^2*x^2"), wv({{5, 1}, {3, -5}, {1, 4}}), poly("x^2 - k^2")));
  out.push_back(scalar_entry(
      {"laguerre-step:2", "The corresponding ad-condition is", {"k"}, true, true,
       "printed constant term -34; the product formula gives -36"},
      DiffOp::schrodinger(rat("4/(x^2 - k^2 + 2*k) + (8*k^2 - 16*k)/(x^2 - k^2 + 2*k)^2 + 4/(x^2 - k^2 - 2*k)"
                              " + (8*k^2 + 16*k)/(x^2 - k^2 - 2*k)^2 + (x^2 - 2*k^2 + 16)/16 + (k^4 - 8*k^2 + 12)/(16*x^2)")),
      poly("x^6 - 3*k^2*x^4 + (3*k^4 - 12*k^2)*x^2"), wv({{7, 1}, {5, -14}, {3, 49}, {1, -34}}),
      poly("(x^2 - k^2 - 2*k)*(x^2 - k^2 + 2*k)")));
  const auto V3 = rat("(x^2 - 2*k^2 + 24)/16") +
                  log_potential(quasi("x^((k^4 - 16*k^2 + 60)/32)*(x^6 - 3*k^2*x^4 + (3*k^4 - 12*k^2)*x^2 + 12*k^4 - 32*k^2 - k)"));
  out.push_back(scalar_entry({"laguerre-step:3", "One more careful application of the Darboux method", {"k"}, true, true,
                              "printed τ has a lone -k term"},
                             DiffOp::schrodinger(V3),
                             poly("x^8 - 4*k^2*x^6 + (6*k^4 - 24*k^2)*x^4 + 4*(12*k^4 - 32*k^2 - k)*x^2"),
                             wv({{9, 1}, {7, -30}, {5, 273}, {3, -820}, {1, 576}})));
  return out;
}

}  // namespace

WeightVector ansatz_equation_weights(const std::string& equation) {
  if (equation == "A2-4A0") return wv({{2, 1}, {0, -4}});
  if (equation == "A3-16A1") return wv({{3, 1}, {1, -16}});
  if (equation == "A5-5A3+4A1") return wv({{5, 1}, {3, -5}, {1, 4}});
  if (equation == "A4-40A2+144A0") return wv({{4, 1}, {2, -40}, {0, 144}});
  throw Error(ErrorKind::UnknownId, "unknown ad-condition '" + equation + "'");
}

const CatalogEntry& laguerre_catalog(int step) {
  static const std::vector<CatalogEntry> entries = build_laguerre();
  if (step < 0 || step > 3) throw Error(ErrorKind::Domain, "Laguerre step must be 0..3");
  return entries[static_cast<std::size_t>(step)];
}

XRat laguerre_classical_potential_m() { return rat("x^2/16 + ((4*m^2 - 1)/4)/x^2"); }

QuasiRat laguerre_step1_seed() { return quasi("x^(-(k^2 + 4)/4 + 1/2)*((x^2 - k^2)/4)*exp(x^2/8)"); }

std::vector<QuasiRat> laguerre_chain_seeds(const std::string& tau3_constant) {
  return {laguerre_step1_seed(),
          quasi("x^((2 - k^2)/4)*(x^2 - k^2 + 2*k)*(x^2 - k^2 - 2*k)*(x^2 - k^2)^(-1)*exp(x^2/8)"),
          quasi("x^((6 - k^2)/4)*(x^6 - 3*k^2*x^4 + (3*k^4 - 12*k^2)*x^2 + (" + tau3_constant +
                "))*((x^2 - k^2 + 2*k)*(x^2 - k^2 - 2*k))^(-1)*exp(x^2/8)")};
}

std::pair<XPoly, XRat> ansatz_solution_catalog(const std::string& equation, int index) {
  ansatz_equation_weights(equation);
  for (const auto& it : ansatz_items()) {
    if (it.equation == equation && it.index == index && it.suffix.empty()) {
      return {drop_constant(poly(it.theta)), rat(it.V)};
    }
  }
  throw Error(ErrorKind::UnknownId, "no solution " + std::to_string(index) + " for " + equation);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  const auto& all = catalog();
  auto it = std::lower_bound(all.begin(), all.end(), id, [](const CatalogEntry& e, const std::string& k) { return e.id < k; });
  if (it == all.end() || it->id != id) {
    throw Error(ErrorKind::UnknownId, "unknown catalog id '" + id + "' (try `catalog list`)");
  }
  return *it;
}

bool theta_tau_check(const CatalogEntry& entry) {
  if (entry.is_matrix() || !entry.scalar().tau) return false;
  const DiffOp dt = DiffOp::multiplication(XRat(entry.scalar().theta.derivative()));
  const DiffOp tau = DiffOp::multiplication(XRat(*entry.scalar().tau));
  return proportionality(dt, tau).has_value() && !entry.scalar().theta.derivative().is_zero();
}

EntryCheck check_entry(const CatalogEntry& entry, ActionSide side) {
  EntryCheck out;
  if (entry.is_matrix()) {
    const auto& m = entry.matrix();
    auto rep = verify_matrix_condition(m.L.with_side(side), m.condition);
    out.condition_holds = rep.holds;
    out.matrix_residual = std::move(rep.residual);
  } else {
    const auto& s = entry.scalar();
    auto rep = verify_condition(s.L, DiffOp::multiplication(XRat(s.theta)), s.weights);
    out.condition_holds = rep.holds;
    out.residual = std::move(rep.residual);
  }
  out.verdict = out.condition_holds == entry.claim_holds;
  return out;
}

}  // namespace bispec
