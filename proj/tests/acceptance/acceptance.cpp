// One acceptance criterion per invocation: `bispec_acceptance N` prints
// "criterion N: PASS|FAIL <detail>" and exits nonzero on FAIL.

#include "properties.hpp"
#include "support.hpp"

#include "bispec/adcond/adcond.hpp"
#include "bispec/adcond/heisenberg.hpp"
#include "bispec/ansatz/ansatz.hpp"
#include "bispec/darboux/darboux.hpp"
#include "bispec/expr/printer.hpp"
#include "bispec/families/catalog.hpp"
#include "bispec/families/hermite.hpp"

#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace bispec {
namespace {

using test::S;
using test::V;
using test::W;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

DiffOp theta_of(const XPoly& p) { return DiffOp::multiplication(XRat(p)); }

std::string weights_text(const WeightVector& w) {
  std::string out;
  for (auto it = w.weights().rbegin(); it != w.weights().rend(); ++it) {
    out += (out.empty() ? "" : ", ") + std::to_string(it->first) + ":" + to_string(it->second);
  }
  return "{" + out + "}";
}

void reach(Outcome& o) {
  o.check(reach_weights(1, {Rat(1)}) == W({{3, 1}, {1, -1}}), "n=1 s=1");
  o.check(reach_weights(2, {Rat(1)}) == W({{5, 1}, {3, -5}, {1, 4}}), "n=2 s=1");
  o.check(reach_weights(1, {Rat(2)}) == W({{3, 1}, {1, -4}}), "n=1 s=2");
  o.check(reach_weights(2, {Rat(2)}) == W({{5, 1}, {3, -20}, {1, 64}}), "n=2 s=2");
  o.detail << "reach(2,2) = " << weights_text(reach_weights(2, {Rat(2)}));
}

void hermite_weights(Outcome& o) {
  const std::vector<WeightVector> expected = {
      W({{2, 1}, {0, -4}}),
      W({{3, 1}, {1, -16}}),
      W({{4, 1}, {2, -40}, {0, 144}}),
      W({{5, 1}, {3, -80}, {1, 1024}}),
      W({{6, 1}, {4, -140}, {2, 4144}, {0, -14400}}),
  };
  for (int k = 0; k <= 4; ++k) {
    o.check(hermite_new_weights(k) == expected[static_cast<std::size_t>(k)], "k=" + std::to_string(k));
  }
  o.detail << "k=4 " << weights_text(hermite_new_weights(4));
}

void hermite_verify(Outcome& o) {
  for (int k = 0; k <= 4; ++k) {
    const auto p = exceptional_hermite(k);
    const auto rep = verify_condition(p.L, theta_of(p.theta), hermite_new_weights(k));
    o.check(rep.holds && rep.residual.is_zero(), "k=" + std::to_string(k));
  }
  const auto q = hermite_partition_22();
  o.check(q.theta == test::P("4*x^5 + 15*x"), "partition Θ");
  o.check(verify_condition(q.L, theta_of(q.theta), hermite_new_weights(4)).holds, "partition (2,2)");
  o.detail << "k=0..4 and partition (2,2): zero residual";
}

void negative_control(Outcome& o) {
  const auto p1 = exceptional_hermite(1);
  const auto r1 = verify_condition(p1.L, theta_of(p1.theta), W({{2, 1}, {0, -16}}));
  o.check(!r1.holds && !r1.residual.is_zero(), "k=1 A2-16A0 should not vanish");
  const auto p3 = exceptional_hermite(3);
  const auto r3 = verify_condition(p3.L, theta_of(p3.theta), W({{4, 1}, {2, -80}, {0, 1024}}));
  o.check(!r3.holds && !r3.residual.is_zero(), "k=3 A4-80A2+1024A0 should not vanish");
  o.detail << "k=1 residual order " << r1.residual.order() << ", k=3 residual order " << r3.residual.order();
}

void implication(Outcome& o) {
  const auto p = exceptional_hermite(1);
  const auto powers = ad_powers(p.L, theta_of(p.theta), 5);
  o.check(verify_condition(powers, W({{3, 1}, {1, -16}})).holds, "A3-16A1");
  o.check(verify_condition(powers, W({{5, 1}, {3, -20}, {1, 64}})).holds, "A5-20A3+64A1");
  // A5 - 20A3 + 64A1 = ad^2 (A3 - 16A1) - 4 (A3 - 16A1)
  const DiffOp base = powers[3] - powers[1].scaled(Scalar(16));
  const DiffOp lhs = powers[5] - powers[3].scaled(Scalar(20)) + powers[1].scaled(Scalar(64));
  const DiffOp rhs = commutator(p.L, commutator(p.L, base)) - base.scaled(Scalar(4));
  o.check(lhs == rhs, "factorisation through ad^2 - 4");
  o.detail << "k=1: A5-20A3+64A1 = (ad^2 - 4)(A3-16A1) = 0";
}

void darboux_laguerre(Outcome& o) {
  const DiffOp& L0 = laguerre_catalog(0).scalar().L;
  const XRat vm = laguerre_classical_potential_m().substitute(V("m"), S("-(k^2 + 4)/4"));
  o.check(vm == *L0.potential(), "m-form of the classical operator");
  const auto r = darboux_step(L0, laguerre_step1_seed());
  const XRat got = *r.op.potential();
  const XRat want = *laguerre_catalog(1).scalar().L.potential();
  o.check(got.derivative() == want.derivative(), "V' of the one-step potential");
  o.check(intertwine_check(L0, r.op, laguerre_step1_seed()), "intertwining");
  o.detail << "eigenvalue " << to_string(r.step.eigenvalue) << "; V_new - V_displayed = " << to_string(got - want);
}

void laguerre_conditions(Outcome& o) {
  // Step 1.
  const DiffOp& L1 = laguerre_catalog(1).scalar().L;
  const WeightVector w1 = W({{5, 1}, {3, -5}, {1, 4}});
  const auto s1 = solve_theta(L1, w1, 4);
  o.check(!s1.basis.empty(), "step 1: no Θ of degree <= 4");
  for (const auto& t : s1.basis) o.check(verify_condition(L1, theta_of(t), w1).holds, "step 1 Θ " + to_string(t));
  o.detail << "step 1: Θ in span{";
  for (std::size_t i = 0; i < s1.basis.size(); ++i) o.detail << (i ? ", " : "") << to_string(s1.basis[i]);
  o.detail << "}; ";

  // Step 2: decide the A_1 weight.
  const auto& e2 = laguerre_catalog(2);
  const auto& e2p = find_entry("laguerre-step:2:product");
  const DiffOp& L2 = e2.scalar().L;
  const auto fit = fit_weights(L2, theta_of(e2.scalar().theta), {7, 5, 3, 1});
  const bool unique = fit.basis.size() == 1;
  const Scalar a1 = unique ? fit.basis[0].normalized().weight(1) : Scalar();
  const auto printed = solve_theta(L2, e2.scalar().weights, 6);
  const auto product = solve_theta(L2, e2p.scalar().weights, 6);
  const bool decided = unique && (a1 == Scalar(-36)) == printed.basis.empty() &&
                       (a1 == Scalar(-36)) == !product.basis.empty() && (a1 == Scalar(-34) || a1 == Scalar(-36));
  o.check(decided, "step 2 undetermined");
  o.detail << "step 2: A1 weight is " << (unique ? to_string(a1) : std::string("?")) << " (printed -34 gives "
           << printed.basis.size() << " Θ, product -36 gives " << product.basis.size() << " Θ; cited: \""
           << e2.anchor << "\" and \"" << e2p.anchor << "\"); ";

  // Step 3: the potential reached by three Darboux steps.
  const auto chain = darboux_chain(laguerre_catalog(0).scalar().L, laguerre_chain_seeds());
  const DiffOp& L3 = chain.back().op;
  const WeightVector w3 = W({{9, 1}, {7, -30}, {5, 273}, {3, -820}, {1, 576}});
  o.check(w3 == laguerre_catalog(3).scalar().weights, "displayed step-3 weights");
  const XPoly& theta3 = find_entry("laguerre-step:3:k6").scalar().theta;
  o.check(verify_condition(L3, theta_of(theta3), w3).holds, "step 3 condition");
  bool printed_tau_ok = true;
  try {
    darboux_chain(laguerre_catalog(0).scalar().L, laguerre_chain_seeds("12*k^4 - 32*k^2 - k"));
  } catch (const NotEigenfunctionError&) {
    printed_tau_ok = false;
  }
  o.detail << "step 3: displayed weights hold on the three-step potential with Θ = " << to_string(theta3)
           << "; τ constant 12k^4 - 32k^2 - k " << (printed_tau_ok ? "is" : "is not") << " reachable by a Darboux step";
}

void ansatz_solutions(Outcome& o) {
  int checked = 0;
  std::vector<std::string> failed, corrected;
  for (const auto& e : catalog()) {
    if (e.id.rfind("ansatz:", 0) != 0) continue;
    const std::string suffix = e.id.substr(e.id.rfind(':') + 1);
    const bool variant = suffix.find_first_not_of("0123456789") != std::string::npos;
    const auto& s = e.scalar();
    const bool holds = verify_candidate(s.weights, s.theta, *s.L.potential()).holds;
    if (variant) {
      if (holds) corrected.push_back(e.id);
      else failed.push_back(e.id);
      continue;
    }
    ++checked;
    if (!holds) failed.push_back(e.id);
  }
  for (const auto& id : failed) o.check(false, id);

  const auto s5 = generate_system(W({{5, 1}, {3, -5}, {1, 4}}));
  const auto s4 = generate_system(W({{4, 1}, {2, -40}, {0, 144}}));
  auto forced = [](const AnsatzSystem& sys, const char* name, const char* value) {
    for (const auto& f : sys.forced) {
      if (f.unknown == V(name)) return f.value == S(value);
    }
    return false;
  };
  o.check(forced(s5, "c6", "a4/12"), "c6 = a4/12");
  o.check(forced(s5, "c5", "a3/8"), "c5 = a3/8");
  o.check(forced(s4, "c5", "a3"), "c5 = a3");
  o.check(forced(s4, "c4", "5*a2/3"), "c4 = 5/3 a2");
  o.detail << checked << " displayed solutions, " << failed.size() << " failing; corrected readings holding:";
  for (const auto& id : corrected) o.detail << ' ' << id;
  o.detail << "; forced relations checked";
}

// 1x1 matrices carrying a scalar condition.
MatCondition embedded(const WeightVector& w, const XPoly& theta, ActionSide side) {
  MatCondition c{{}, MatDiffOp::multiplication(XMatrix::identity(1, XRat(theta)), side)};
  for (const auto& [j, a] : w.weights()) c.terms.push_back({j, XMatrix::identity(1, XRat(a))});
  return c;
}

void matrix_conditions(Outcome& o) {
  for (const char* id : {"matrix:hermite:1", "matrix:hermite:r1", "matrix:hermite:r2", "matrix:laguerre:1",
                         "matrix:laguerre:2", "matrix:laguerre:3"}) {
    const auto& e = find_entry(id);
    const auto probe = convention_probe(e.matrix().L, e.matrix().condition);
    const auto side = probe.selected();
    const bool holds = side && (*side == ActionSide::Right ? probe.right : probe.left);
    o.check(holds, id);
    o.detail << id << (holds ? " holds" : " fails") << " (right " << probe.right << ", left " << probe.left << "); ";
  }
  for (const char* id : {"matrix:laguerre:1:weight4", "matrix:laguerre:2:weight4", "matrix:laguerre:3:shifted"}) {
    const auto& e = find_entry(id);
    o.detail << id << (check_entry(e).condition_holds ? " holds" : " fails") << "; ";
  }
  for (ActionSide side : {ActionSide::Right, ActionSide::Left}) {
    for (int k = 0; k <= 4; ++k) {
      const auto p = exceptional_hermite(k);
      const auto L = MatDiffOp::embed(p.L, 1, side);
      o.check(verify_matrix_condition(L, embedded(hermite_new_weights(k), p.theta, side)).holds,
              "1x1 embedding k=" + std::to_string(k));
    }
    const auto p1 = exceptional_hermite(1);
    o.check(!verify_matrix_condition(MatDiffOp::embed(p1.L, 1, side), embedded(W({{2, 1}, {0, -16}}), p1.theta, side))
                 .holds,
            "1x1 embedding negative control");
  }
  o.detail << "1x1 embedding reproduces the scalar Hermite suite";
}

void heisenberg(Outcome& o) {
  const DiffOp L = DiffOp::schrodinger(test::R("x^2"));
  const auto ho = heisenberg_series(L, test::mul("x"), 9);
  for (int n = 0; n <= 9; ++n) {
    // t^n/n! coefficient of cosh(2t) x - sinh(2t) D
    const Scalar c = Scalar(2).pow(n);
    const DiffOp want = n % 2 == 0 ? test::mul("x").scaled(c) : DiffOp::derivative().scaled(-c);
    o.check(ho.terms[static_cast<std::size_t>(n)] == want, "oscillator order " + std::to_string(n));
  }
  const auto p = exceptional_hermite(1);
  const auto h = heisenberg_series(p.L, theta_of(p.theta), 9);
  for (int i = 1; 2 * i + 1 <= 9; ++i) {
    const auto f = proportionality(h.terms[static_cast<std::size_t>(2 * i + 1)], h.terms[1]);
    o.check(f && *f == Scalar(16).pow(i), "A" + std::to_string(2 * i + 1) + " = 16^" + std::to_string(i) + " A1");
  }
  bool even_ok = true;
  for (int i = 2; 2 * i <= 9; ++i) {
    const auto f = proportionality(h.terms[static_cast<std::size_t>(2 * i)], h.terms[2]);
    even_ok = even_ok && f && *f == Scalar(16).pow(i - 1);
  }
  o.check(even_ok, "even part A_{2i} = 16^{i-1} A2");
  const bool cosh_claim = h.terms[2] == h.terms[0].scaled(Scalar(16));
  o.detail << "oscillator matches to order 9; k=1 odd part A_{2i+1} = 16^i A1 to order 9; even part A_{2i} = 16^{i-1} A2 "
           << (even_ok ? "holds" : "fails") << "; cosh(4t) A0 at order 2 " << (cosh_claim ? "matches" : "does not match")
           << " (A2 = " << to_string(h.terms[2]) << ")";
}

void properties(Outcome& o) {
  using test::PropertyOutcome;
  const std::vector<std::function<PropertyOutcome(int, std::uint32_t)>> suites = {
      test::jacobi_identity,        test::derivation_law, test::commutator_bilinear_antisymmetric,
      test::equals_matches_monomial_oracle, test::darboux_steps_intertwine, test::nullspace_back_substitution};
  std::uint32_t seed = 20240;
  for (const auto& suite : suites) {
    const auto r = suite(100, seed++);
    o.check(r.ok() && r.instances >= 100, r.name + ": " + r.first_failure);
    o.detail << r.name << " " << (r.instances - r.failures) << "/" << r.instances << "; ";
  }
}

}  // namespace
}  // namespace bispec

int main(int argc, char** argv) {
  using namespace bispec;
  if (argc != 2) {
    std::cerr << "usage: bispec_acceptance N\n";
    return 2;
  }
  const int n = std::atoi(argv[1]);
  const std::vector<void (*)(Outcome&)> criteria = {reach,          hermite_weights,     hermite_verify,
                                                    negative_control, implication,       darboux_laguerre,
                                                    laguerre_conditions, ansatz_solutions, matrix_conditions,
                                                    heisenberg,     properties};
  if (n < 1 || n > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be 1.." << criteria.size() << '\n';
    return 2;
  }
  Outcome o;
  try {
    criteria[static_cast<std::size_t>(n - 1)](o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << ' ' << o.detail.str() << '\n';
  return o.pass ? 0 : 1;
}
