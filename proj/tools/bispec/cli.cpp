#include "cli.hpp"

#include "bispec/adcond/adcond.hpp"
#include "bispec/adcond/heisenberg.hpp"
#include "bispec/adcond/weights.hpp"
#include "bispec/ansatz/ansatz.hpp"
#include "bispec/darboux/darboux.hpp"
#include "bispec/expr/parser.hpp"
#include "bispec/expr/printer.hpp"
#include "bispec/families/catalog.hpp"
#include "bispec/families/hermite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace bispec::cli {
namespace {

using nlohmann::json;

struct Verdict {
  std::string id;
  bool holds = false;
  std::string residual;
  std::vector<std::string> assumptions;
};

struct Report {
  Report() = default;
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<Verdict> verdicts;
  std::map<std::string, std::string> anchors;  // catalog id -> quoted phrase

  int exit_code() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; }) ? kOk : kFailed;
  }

  json to_json() const {
    json vs = json::array();
    for (const auto& v : verdicts) {
      vs.push_back({{"id", v.id}, {"holds", v.holds}, {"residual", v.residual}, {"assumptions", v.assumptions}});
    }
    return {{"schema", 1},      {"command", command}, {"inputs", inputs},         {"result", result},
            {"verdicts", vs},   {"anchors", anchors}, {"exit_code", exit_code()}};
  }
};

struct Options {
  std::vector<std::string> params;
  std::vector<std::string> ids;
  bool all = false;
  std::string L;
  std::string theta;
  std::string catalog_id;
  std::string weights;
  std::string orders;
  std::string omega2;
  std::vector<std::string> seeds;
  int j = 0;
  int deg = 0;
  int n = 0;
  int k = 0;
  int order = 0;
  std::string step = "1";
};

std::optional<int> max_degree() {
  const char* env = std::getenv("BISPEC_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  const std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw Error(ErrorKind::Parse, "BISPEC_MAX_DEGREE must be a nonnegative integer, got '" + std::string(text) + "'");
  }
  return value;
}

void check_degree(const std::string& what, int value) {
  if (auto cap = max_degree(); cap && value > *cap) {
    throw Error(ErrorKind::Domain,
                what + " = " + std::to_string(value) + " exceeds BISPEC_MAX_DEGREE = " + std::to_string(*cap));
  }
}

std::vector<std::string> declared(const Options& o) {
  std::vector<std::string> names;
  for (const auto& p : o.params) names.push_back(declare_param(p));
  return names;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  auto b = text.find_first_not_of(' ');
  auto e = text.find_last_not_of(' ');
  if (b == std::string::npos) throw Error(ErrorKind::Parse, "empty " + what);
  auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e + 1, value);
  if (ec != std::errc() || ptr != text.data() + e + 1) throw Error(ErrorKind::Parse, "bad " + what + " '" + text + "'");
  return value;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_int(s, "order"));
  return out;
}

/// "9:1,7:-30,..." with scalar expressions as weights.
WeightVector parse_weights(const std::string& text, const std::vector<std::string>& names) {
  std::map<int, Scalar> w;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "weight '" + item + "' is not order:value");
    const int j = parse_int(item.substr(0, colon), "order");
    if (w.count(j)) throw Error(ErrorKind::Parse, "order " + std::to_string(j) + " given twice");
    w[j] = parse_expr(item.substr(colon + 1), names).as_scalar();
  }
  return WeightVector(w);
}

json weights_json(const WeightVector& w) {
  json out = json::object();
  for (const auto& [j, a] : w.weights()) out[std::to_string(j)] = to_string(a);
  return out;
}

json polys_json(const std::vector<MPoly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

std::vector<std::string> poly_strings(const std::vector<MPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

const ScalarEntry& scalar_entry(const std::string& id) {
  const auto& e = find_entry(id);
  if (e.is_matrix()) throw Error(ErrorKind::Domain, "catalog entry '" + id + "' is matrix-valued");
  return e.scalar();
}

/// L and Θ from --catalog or from --L/--theta.
std::pair<DiffOp, DiffOp> scalar_pair(const Options& o, const std::vector<std::string>& names, Report& r) {
  if (!o.catalog_id.empty()) {
    const auto& e = scalar_entry(o.catalog_id);
    r.inputs["catalog_id"] = o.catalog_id;
    r.anchors[o.catalog_id] = find_entry(o.catalog_id).anchor;
    return {e.L, DiffOp::multiplication(XRat(e.theta))};
  }
  if (o.L.empty() || o.theta.empty()) throw Error(ErrorKind::Parse, "need --catalog or both --L and --theta");
  const XRat V = parse_expr(o.L, names).as_xrat();
  const XRat th = parse_expr(o.theta, names).as_xrat();
  r.inputs["V"] = to_string(V);
  r.inputs["theta"] = to_string(th);
  return {DiffOp::schrodinger(V), DiffOp::multiplication(th)};
}

const char* side_name(ActionSide s) { return s == ActionSide::Left ? "left" : "right"; }

Report cmd_verify(const Options& o) {
  Report r("verify");
  std::vector<const CatalogEntry*> entries;
  if (o.all) {
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    if (o.ids.empty()) throw Error(ErrorKind::Parse, "verify needs a catalog id or --all");
    for (const auto& id : o.ids) entries.push_back(&find_entry(id));
  }
  r.inputs["ids"] = json::array();
  json items = json::array();
  for (const auto* e : entries) {
    r.inputs["ids"].push_back(e->id);
    json item = {{"id", e->id}, {"claim_holds", e->claim_holds}, {"flagged", e->flagged}, {"params", e->params}};
    if (!e->note.empty()) item["note"] = e->note;
    ActionSide side = ActionSide::Right;
    if (e->is_matrix()) {
      const auto probe = convention_probe(e->matrix().L, e->matrix().condition);
      side = probe.selected().value_or(ActionSide::Right);
      item["left"] = probe.left;
      item["right"] = probe.right;
      item["side"] = side_name(side);
    }
    const auto check = check_entry(*e, side);
    item["condition_holds"] = check.condition_holds;
    std::string residual = "0";
    if (check.residual) residual = to_string(*check.residual);
    if (check.matrix_residual) residual = to_string(*check.matrix_residual);
    r.verdicts.push_back({e->id, check.verdict, residual, {}});
    r.anchors[e->id] = e->anchor;
    items.push_back(std::move(item));
  }
  r.result["entries"] = std::move(items);
  return r;
}

Report cmd_ad(const Options& o) {
  Report r("ad");
  const auto names = declared(o);
  if (o.j < 0) throw Error(ErrorKind::Domain, "--j must be nonnegative");
  check_degree("--j", o.j);
  auto [L, theta] = scalar_pair(o, names, r);
  r.inputs["j"] = o.j;
  const DiffOp A = ad_power(L, theta, o.j);
  r.result["operator"] = to_string(A);
  r.result["order"] = A.order();
  return r;
}

Report cmd_fit_weights(const Options& o) {
  Report r("fit-weights");
  const auto names = declared(o);
  const auto orders = parse_orders(o.orders);
  for (int j : orders) check_degree("order", j);
  auto [L, theta] = scalar_pair(o, names, r);
  r.inputs["orders"] = orders;
  const auto fit = fit_weights(L, theta, orders);
  json basis = json::array();
  for (const auto& w : fit.basis) basis.push_back(weights_json(w.normalized()));
  r.result["basis"] = basis;
  r.result["assumptions"] = polys_json(fit.assumptions);
  r.verdicts.push_back({"weights-found", !fit.basis.empty(), fit.basis.empty() ? "empty nullspace" : "0",
                        poly_strings(fit.assumptions)});
  if (!o.catalog_id.empty()) {
    const auto& e = find_entry(o.catalog_id);
    const WeightVector printed = e.scalar().weights.normalized();
    r.result["catalog_weights"] = weights_json(printed);
    const bool same = fit.basis.size() == 1 && fit.basis[0].normalized() == printed;
    r.verdicts.push_back({"catalog-weights", same, same ? "0" : "catalog weights differ from the fitted basis", {}});
    json variants = json::array();
    for (const auto& v : catalog()) {
      if (v.id.rfind(e.id + ":", 0) != 0 || v.is_matrix()) continue;
      json item = {{"id", v.id}, {"weights", weights_json(v.scalar().weights.normalized())}};
      if (!v.note.empty()) item["note"] = v.note;
      variants.push_back(std::move(item));
      r.anchors[v.id] = v.anchor;
    }
    r.result["variants"] = variants;
  }
  return r;
}

Report cmd_solve_theta(const Options& o) {
  Report r("solve-theta");
  const auto names = declared(o);
  if (o.deg < 1) throw Error(ErrorKind::Domain, "--deg must be at least 1");
  check_degree("--deg", o.deg);
  DiffOp L;
  std::optional<WeightVector> w;
  if (!o.catalog_id.empty()) {
    const auto& e = scalar_entry(o.catalog_id);
    L = e.L;
    w = e.weights;
    r.inputs["catalog_id"] = o.catalog_id;
    r.anchors[o.catalog_id] = find_entry(o.catalog_id).anchor;
  } else {
    if (o.L.empty()) throw Error(ErrorKind::Parse, "need --catalog or --L");
    const XRat V = parse_expr(o.L, names).as_xrat();
    r.inputs["V"] = to_string(V);
    L = DiffOp::schrodinger(V);
  }
  if (!o.weights.empty()) w = parse_weights(o.weights, names);
  if (!w) throw Error(ErrorKind::Parse, "need --weights");
  check_degree("top order", w->top_order());
  r.inputs["weights"] = weights_json(*w);
  r.inputs["deg"] = o.deg;
  const auto sol = solve_theta(L, *w, o.deg);
  json basis = json::array();
  for (const auto& p : sol.basis) basis.push_back(to_string(p));
  r.result["basis"] = basis;
  r.result["assumptions"] = polys_json(sol.assumptions);
  r.verdicts.push_back({"theta-found", !sol.basis.empty(), sol.basis.empty() ? "no polynomial Θ in range" : "0",
                        poly_strings(sol.assumptions)});
  return r;
}

Report cmd_reach_weights(const Options& o) {
  Report r("reach-weights");
  if (o.n < 1) throw Error(ErrorKind::Domain, "--n must be at least 1");
  check_degree("top order", 2 * o.n + 1);
  const Rat s = parse_rat(o.step);
  r.inputs["n"] = o.n;
  r.inputs["step"] = to_string(s);
  r.result["weights"] = weights_json(reach_weights(o.n, {s}));
  return r;
}

Report cmd_hermite_new_weights(const Options& o) {
  Report r("hermite-new-weights");
  if (o.k < 0) throw Error(ErrorKind::Domain, "--k must be nonnegative");
  check_degree("top order", o.k + 2);
  r.inputs["k"] = o.k;
  r.result["weights"] = weights_json(hermite_new_weights(o.k));
  return r;
}

Report cmd_darboux(const Options& o) {
  Report r("darboux");
  const auto names = declared(o);
  if (o.L.empty() || o.seeds.empty()) throw Error(ErrorKind::Parse, "need --L and at least one --seed");
  const XRat V = parse_expr(o.L, names).as_xrat();
  r.inputs["V"] = to_string(V);
  std::vector<QuasiRat> seeds;
  for (const auto& s : o.seeds) {
    seeds.push_back(parse_expr(s, names).as_quasirat());
    r.inputs["seeds"].push_back(to_string(seeds.back()));
  }
  DiffOp L = DiffOp::schrodinger(V);
  json steps = json::array();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const std::string tag = std::to_string(i);
    try {
      const auto res = darboux_step(L, seeds[i]);
      r.verdicts.push_back({"eigenfunction:" + tag, true, "0", {}});
      const bool ok = intertwine_check(L, res.op, seeds[i]);
      r.verdicts.push_back({"intertwining:" + tag, ok, ok ? "0" : "L_new (D - w) != (D - w) L", {}});
      steps.push_back({{"eigenvalue", to_string(res.step.eigenvalue)}, {"V", to_string(res.step.output_V)}});
      L = res.op;
    } catch (const NotEigenfunctionError& e) {
      r.verdicts.push_back({"eigenfunction:" + tag, false, "(L psi)/psi = " + to_string(e.ratio()), {}});
      break;
    }
  }
  r.result["steps"] = steps;
  return r;
}

Report cmd_gen_system(const Options& o) {
  Report r("gen-system");
  const auto names = declared(o);
  if (o.weights.empty()) throw Error(ErrorKind::Parse, "need --weights");
  const WeightVector w = parse_weights(o.weights, names);
  check_degree("top order", w.top_order());
  r.inputs["weights"] = weights_json(w);
  const auto sys = generate_system(w);
  const auto& table = ParamTable::global();
  auto var_names = [&](const std::vector<VarId>& vs) {
    json out = json::array();
    for (VarId v : vs) out.push_back(table.name(v));
    return out;
  };
  auto relations = [&](const std::vector<ForcedRelation>& rs) {
    json out = json::array();
    for (const auto& f : rs) out.push_back({{"unknown", table.name(f.unknown)}, {"value", to_string(f.value)}});
    return out;
  };
  r.result["theta_unknowns"] = var_names(sys.theta_unknowns);
  r.result["p_unknowns"] = var_names(sys.p_unknowns);
  r.result["forced"] = relations(sys.forced);
  r.result["equations"] = polys_json(sys.equations);
  r.result["cleared_power"] = sys.cleared_power;
  r.result["assumptions"] = polys_json(sys.assumptions);
  if (auto g = solve_linear_subcase(sys)) {
    r.result["general_solution"] = {{"theta", to_string(g->theta)},
                                    {"V", to_string(g->V)},
                                    {"relations", relations(g->relations)},
                                    {"assumptions", polys_json(g->assumptions)}};
  }
  return r;
}

Report cmd_heisenberg(const Options& o) {
  Report r("heisenberg");
  const auto names = declared(o);
  if (o.order < 2) throw Error(ErrorKind::Domain, "--order must be at least 2");
  check_degree("--order", o.order);
  auto [L, theta] = scalar_pair(o, names, r);
  r.inputs["order"] = o.order;
  std::optional<Scalar> omega2;
  if (!o.omega2.empty()) {
    omega2 = parse_expr(o.omega2, names).as_scalar();
    r.inputs["omega_squared"] = to_string(*omega2);
  }
  const auto rep = heisenberg_series(L, theta, o.order, omega2);
  json terms = json::array();
  for (const auto& t : rep.terms) terms.push_back(to_string(t));
  json relations = json::array();
  for (const auto& s : rep.relations) relations.push_back({{"order", s.order}, {"factor", to_string(s.factor)}});
  r.result["terms"] = terms;
  r.result["relations"] = relations;
  r.result["matches"] = rep.matches;
  if (!rep.omega_squared) {
    r.result["omega_squared"] = nullptr;
    r.verdicts.push_back({"omega-squared", false, "no relation A_3 = c A_1", {}});
    return r;
  }
  r.result["omega_squared"] = to_string(*rep.omega_squared);
  for (int n = 2; n <= o.order; ++n) {
    const bool ok = rep.matches[static_cast<std::size_t>(n)];
    r.verdicts.push_back({"closed-form:" + std::to_string(n), ok, ok ? "0" : "A_" + std::to_string(n) + " differs", {}});
  }
  return r;
}

Report cmd_catalog_list() {
  Report r("catalog list");
  json items = json::array();
  for (const auto& e : catalog()) {
    json item = {{"id", e.id},
                 {"kind", e.is_matrix() ? "matrix" : "scalar"},
                 {"params", e.params},
                 {"claim_holds", e.claim_holds},
                 {"flagged", e.flagged}};
    if (!e.note.empty()) item["note"] = e.note;
    r.anchors[e.id] = e.anchor;
    items.push_back(std::move(item));
  }
  r.result["entries"] = items;
  return r;
}

std::string kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnknownId: return "unknown-id";
    case ErrorKind::NotEigenfunction: return "not-eigenfunction";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

void summarize(const Report& r, std::ostream& err) {
  int held = 0;
  for (const auto& v : r.verdicts) {
    err << (v.holds ? "  holds  " : "  FAILS  ") << v.id << '\n';
    held += v.holds ? 1 : 0;
  }
  err << r.command << ": ";
  if (r.verdicts.empty()) {
    err << "done\n";
  } else {
    err << held << "/" << r.verdicts.size() << " verdicts hold\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ad-condition engine for second-order operators"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--param", o.params, "Declare a parameter: name or name^2=r")->take_all();
  app.fallthrough();

  auto* verify = app.add_subcommand("verify", "Check catalog entries");
  verify->add_option("id", o.ids, "Catalog ids");
  verify->add_flag("--all", o.all, "Check every entry");

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--L", o.L, "Potential V of L = -D^2 + V");
    sub->add_option("--theta", o.theta, "Polynomial Θ");
    sub->add_option("--catalog,--catalog-id", o.catalog_id, "Take L and Θ from a catalog entry");
  };
  auto* ad = app.add_subcommand("ad", "A_j = ad_L^j(Θ)");
  add_source(ad);
  ad->add_option("--j", o.j, "Commutator order")->required();

  auto* fit = app.add_subcommand("fit-weights", "Weights supported on given orders");
  add_source(fit);
  fit->add_option("--orders", o.orders, "Comma-separated orders")->required();

  auto* solve = app.add_subcommand("solve-theta", "Polynomial Θ for given weights");
  solve->add_option("--L", o.L, "Potential V of L = -D^2 + V");
  solve->add_option("--catalog,--catalog-id", o.catalog_id, "Take L (and weights) from a catalog entry");
  solve->add_option("--weights", o.weights, "order:weight,...");
  solve->add_option("--deg", o.deg, "Degree bound for Θ")->required();

  auto* reach = app.add_subcommand("reach-weights", "Weights of prod (ad^2 - (s i)^2) ad");
  reach->add_option("--n", o.n, "Number of factors")->required();
  reach->add_option("--step", o.step, "Spectrum step s");

  auto* hermite = app.add_subcommand("hermite-new-weights", "Weights for exceptional Hermite k");
  hermite->add_option("--k", o.k, "Index k")->required();

  auto* darboux = app.add_subcommand("darboux", "Darboux steps from a potential");
  darboux->add_option("--L", o.L, "Potential V of L = -D^2 + V")->required();
  darboux->add_option("--seed", o.seeds, "Quasi-rational eigenfunction; repeat for a chain")->required();

  auto* gen = app.add_subcommand("gen-system", "Polynomial system for V = (P/Θ')'");
  gen->add_option("--weights", o.weights, "order:weight,...")->required();

  auto* heis = app.add_subcommand("heisenberg", "Series e^{tL} Θ e^{-tL}");
  add_source(heis);
  heis->add_option("--order", o.order, "Highest order N")->required();
  heis->add_option("--omega2", o.omega2, "ω² for the closed form");

  auto* cat = app.add_subcommand("catalog", "Catalog access");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List entries");

  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  for (auto* sub : app.get_subcommands()) command = sub->get_name();
  try {
    Report r;
    if (*verify) r = cmd_verify(o);
    else if (*ad) r = cmd_ad(o);
    else if (*fit) r = cmd_fit_weights(o);
    else if (*solve) r = cmd_solve_theta(o);
    else if (*reach) r = cmd_reach_weights(o);
    else if (*hermite) r = cmd_hermite_new_weights(o);
    else if (*darboux) r = cmd_darboux(o);
    else if (*gen) r = cmd_gen_system(o);
    else if (*heis) r = cmd_heisenberg(o);
    else if (*list) r = cmd_catalog_list();
    out << r.to_json().dump(2) << '\n';
    summarize(r, err);
    return r.exit_code();
  } catch (const Error& e) {
    const int code = e.kind() == ErrorKind::Internal ? kInternal : kUsage;
    json j = {{"schema", 1},
              {"command", command},
              {"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}},
              {"exit_code", code}};
    out << j.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return code;
  }
}

}  // namespace bispec::cli
