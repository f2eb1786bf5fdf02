#include "dlakit/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace dlakit {

namespace {

Json exact_terms(const OperatorElement& e) {
  Json terms = Json::array();
  for (const auto& [s, c] : e.terms()) terms.push_back({{"string", s.str()}, {"coeff", to_string(c)}});
  return terms;
}

Json exact_coords(const DlaBasis& basis, const OperatorElement& e) {
  Json out = Json::object();
  for (const auto& [i, c] : expand_in_basis(basis, e)) out[basis[i].name] = to_string(c);
  return out;
}

Json real_coords(const DlaBasis& basis, const RealElement& e) {
  Json out = Json::object();
  for (const auto& [i, c] : project_on_basis(basis, e).first) out[basis[i].name] = c;
  return out;
}

Json coords_json(const SymmetricCoordinates& coords) {
  Json out = Json::array();
  for (const auto& [key, c] : coords) {
    out.push_back({{"representative", key.representative.str()}, {"period", key.period}, {"coeff", to_string(c)}});
  }
  return out;
}

Json root_json(const Root& r) {
  Json j = {{"value", r.value}};
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  return j;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

void checks_text(std::ostringstream& os, const std::vector<Check>& checks, const std::string& indent) {
  for (const auto& c : checks) {
    os << indent << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (c.exact) {
      os << " [exact]";
    } else {
      os << " [residual " << sci(c.residual) << "]";
    }
    os << '\n';
  }
}

std::string combination_text(const Json& coords) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, v] : coords.items()) {
    std::string c = v.is_string() ? v.get<std::string>() : fmt(v.get<double>());
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    if (c != "1") os << c << "*";
    os << name;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"residual", c.residual}, {"exact", c.exact}, {"passed", c.passed}});
  }
  return out;
}

Json basis_json(const DlaBasis& basis) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    elements.push_back({{"name", basis[i].name},
                        {"norm_sq", to_string(basis.norm_sq(i))},
                        {"terms", exact_terms(basis[i].element)}});
  }
  return {{"schema", kSchema},
          {"command", "basis"},
          {"n", basis.n()},
          {"dimension", basis.size()},
          {"elements", std::move(elements)}};
}

std::string basis_text(const DlaBasis& basis) {
  std::ostringstream os;
  os << "named basis, n = " << basis.n() << ", dimension " << basis.size() << '\n';
  for (std::size_t i = 0; i < basis.size(); ++i) {
    os << "  " << basis[i].name << " = " << basis[i].element.str() << '\n';
  }
  return os.str();
}

ClosureVerdict closure_verdict(const ClosureResult& result) {
  const DlaBasis basis(result.n);
  return {result.dimension() == static_cast<std::size_t>(3 * result.n - 1),
          span_equal(result.elements, basis.as_list())};
}

Json closure_json(const ClosureResult& result, const ClosureVerdict& verdict) {
  Json trace = Json::array();
  for (const auto& t : result.trace) {
    Json entry = {{"depth", t.depth}, {"label", t.label}};
    entry["produced_by"] = t.produced_by ? Json::array({t.produced_by->first, t.produced_by->second}) : Json(nullptr);
    entry["orbits"] = coords_json(t.element);
    trace.push_back(std::move(entry));
  }
  return {{"schema", kSchema},
          {"command", "closure"},
          {"n", result.n},
          {"dimension", result.dimension()},
          {"expected", 3 * result.n - 1},
          {"max_depth", result.max_depth},
          {"verdict",
           {{"dimension_ok", verdict.dimension_ok}, {"span_equal", verdict.span_equal}, {"passed", verdict.passed()}}},
          {"trace", std::move(trace)}};
}

std::string closure_text(const ClosureResult& result, const ClosureVerdict& verdict) {
  std::ostringstream os;
  os << "closure, n = " << result.n << ": dimension " << result.dimension() << " (3n-1 = " << 3 * result.n - 1
     << "), depth " << result.max_depth << '\n';
  for (const auto& t : result.trace) {
    os << "  depth " << t.depth << "  " << t.label;
    if (t.produced_by) os << " = [" << t.produced_by->first << ", " << t.produced_by->second << "]";
    os << "  (" << t.element.size() << " orbits)\n";
  }
  os << "span equals named basis: " << (verdict.span_equal ? "yes" : "no") << '\n';
  os << (verdict.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

Json structure_json(const StructureReport& report) {
  const DlaBasis basis(report.n);
  Json roots = Json::array();
  for (const auto& r : report.roots.roots) roots.push_back(root_json(r));

  Json ideals = Json::array();
  for (std::size_t i = 0; i < report.ideals.size(); ++i) {
    const Ideal& id = report.ideals[i];
    const IdealVerdict& v = report.verdicts[i];
    Json j = {{"lambda", id.lambda}};
    j["exact_lambda"] = id.exact_lambda ? Json(*id.exact_lambda) : Json(nullptr);
    j["a"] = id.a;
    j["sx_tilde_norm_sq"] = id.sx_tilde_norm_sq;
    j["sy_tilde_norm_sq"] = id.sy_tilde_norm_sq;
    if (id.exact) {
      j["xhat"] = exact_coords(basis, id.exact->xhat);
      j["yhat"] = exact_coords(basis, id.exact->yhat);
      j["zhat"] = exact_coords(basis, id.exact->zhat);
      j["sx_tilde"] = exact_coords(basis, id.exact->sx_tilde);
      j["sy_tilde"] = exact_coords(basis, id.exact->sy_tilde);
    } else {
      j["xhat"] = real_coords(basis, id.parts.xhat);
      j["yhat"] = real_coords(basis, id.parts.yhat);
      j["zhat"] = real_coords(basis, id.parts.zhat);
      j["sx_tilde"] = real_coords(basis, id.parts.sx_tilde);
      j["sy_tilde"] = real_coords(basis, id.parts.sy_tilde);
    }
    j["sx"] = real_coords(basis, id.sx);
    j["sy"] = real_coords(basis, id.sy);
    j["sz"] = real_coords(basis, id.sz);
    j["max_residual"] = v.max_residual();
    j["checks"] = checks_json(v.checks);
    j["passed"] = v.passed();
    ideals.push_back(std::move(j));
  }

  return {{"schema", kSchema},
          {"command", "structure"},
          {"n", report.n},
          {"dimension", report.dimension},
          {"root_tol", report.roots.tol},
          {"roots", std::move(roots)},
          {"center", {{"c1", exact_coords(basis, report.center.c1)}, {"c2", exact_coords(basis, report.center.c2)}}},
          {"ideals", std::move(ideals)},
          {"global_checks", checks_json(report.global_checks)},
          {"passed", report.all_passed}};
}

std::string structure_text(const StructureReport& report) {
  const Json j = structure_json(report);
  std::ostringstream os;
  os << "structure, n = " << report.n << ": center (2) + " << report.ideals.size() << " x su(2) = dimension "
     << report.dimension << '\n';
  os << "roots of a_" << report.n - 1 << ":";
  for (const auto& r : report.roots.roots) os << ' ' << (r.exact ? std::to_string(*r.exact) : fmt(r.value));
  os << '\n';
  os << "center:\n  C1 = " << combination_text(j["center"]["c1"]) << "\n  C2 = "
     << combination_text(j["center"]["c2"]) << '\n';
  for (std::size_t i = 0; i < report.ideals.size(); ++i) {
    const Ideal& id = report.ideals[i];
    const Json& ij = j["ideals"][i];
    os << "ideal lambda = " << (id.exact_lambda ? std::to_string(*id.exact_lambda) : fmt(id.lambda))
       << (id.exact ? " (exact)" : "") << '\n';
    os << "  Xhat = " << combination_text(ij["xhat"]) << '\n';
    os << "  Yhat = " << combination_text(ij["yhat"]) << '\n';
    os << "  Zhat = " << combination_text(ij["zhat"]) << '\n';
    checks_text(os, report.verdicts[i].checks, "  ");
  }
  os << "global:\n";
  checks_text(os, report.global_checks, "  ");
  os << (report.all_passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

Json verify_json(const VerifyReport& report) {
  return {{"schema", kSchema},      {"command", "verify"},
          {"n", report.n},          {"oracle", report.oracle},
          {"seed", report.seed},    {"checks", checks_json(report.checks)},
          {"passed", report.passed}};
}

std::string verify_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "verify, n = " << report.n << (report.oracle ? " with dense oracle" : "") << ", seed " << report.seed
     << '\n';
  checks_text(os, report.checks, "  ");
  os << (report.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

Json reach3_json(const Reach3Report& report) {
  Json roots = Json::array();
  for (const auto& r : report.roots.roots) roots.push_back(root_json(r));
  Json curve = Json::array();
  for (const auto& [t, tau] : report.curve) curve.push_back(Json::array({t, tau}));
  return {{"schema", kSchema},
          {"command", "reach3"},
          {"a2", report.a2},
          {"roots", std::move(roots)},
          {"theta_star", report.maximum.theta_star},
          {"tau_star", report.maximum.tau_star},
          {"grid", report.maximum.grid},
          {"oracle_grid", report.oracle_grid},
          {"oracle_max_diff", report.oracle_max_diff},
          {"checks", checks_json(report.checks)},
          {"family_curve", std::move(curve)},
          {"passed", report.passed}};
}

std::string reach3_text(const Reach3Report& report) {
  std::ostringstream os;
  os << "three-qubit example: a_2 = " << report.a2 << '\n';
  os << "theta* = " << fmt(report.maximum.theta_star) << ", tau* = " << fmt(report.maximum.tau_star)
     << " (grid " << report.maximum.grid << ")\n";
  os << "family formula vs hyperdeterminant: max diff " << sci(report.oracle_max_diff) << " over "
     << report.oracle_grid << " angles\n";
  checks_text(os, report.checks, "  ");
  os << "family curve: " << report.curve.size() << " points (use --format json)\n";
  os << (report.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace dlakit
