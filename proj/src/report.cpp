#include "sextic/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "sextic/expr.hpp"

namespace sextic {

VerifyResult verify_record(const CurveRecord& r, const CertifyOptions& opts) {
  VerifyResult v;
  v.id = r.id;
  v.name = r.name;
  try {
    BuiltCurve b = build(r.param);
    v.cert = certify(b.curve, b.claims, opts);
    v.cert.curve_id = r.id;
    v.ok = v.cert.pass;
  } catch (const std::exception& e) {
    v.error = e.what();
  }
  return v;
}

DualResult dual_record(const CurveRecord& r, bool classify, const CertifyOptions& opts) {
  DualResult d;
  d.id = r.id;
  d.k = singular_point_count(r);
  d.expected = 30 - 19 - d.k;
  BuiltCurve b = build(r.param);
  RationalPlaneCurve dc = dual(b.curve);
  d.degree = dc.degree();
  d.ok = d.degree == d.expected;
  if (!d.ok) d.detail = "degree " + std::to_string(d.degree) + ", expected " + std::to_string(d.expected);
  if (!classify) return d;

  d.singularities = discover_singularities(dc, opts);
  std::vector<int> got;
  for (const auto& t : *d.singularities) got.push_back(t.n);
  std::sort(got.rbegin(), got.rend());
  std::vector<int> want;
  if (r.autodual) want = r.multiset();
  else want = r.dual_singularities;
  std::sort(want.rbegin(), want.rend());
  if (!want.empty() && got != want) {
    d.ok = false;
    std::string w;
    for (int n : want) w += (w.empty() ? "" : "+") + ("A_" + std::to_string(n));
    d.detail += (d.detail.empty() ? "" : "; ") + ("singularities " + multiset_name(*d.singularities) +
                                                  ", expected " + w);
  }
  return d;
}

ReduceResult reduce_record(const CurveRecord& r) {
  ReduceResult out;
  out.id = r.id;
  FieldPtr field = r.param.field.build_f();
  out.red = pencil_reduce(printed_affine_sextic(r, field), record_pencil(r, field));
  const FieldPtr f = out.red.alpha.field();
  if (f->is_rationals()) {
    // α u² + γ = v²  ⇔  α (u/v)² + γ (1/v)² = 1.
    ConicProblem c = conic_solvable_over_Q(out.red.alpha.rational_part(), out.red.gamma.rational_part());
    out.conic_equation = c.a_red.get_str() + "*X^2 + " + c.b_red.get_str() + "*Y^2 = 1";
    out.ok = c.verdict != ConicProblem::Verdict::Undecided;
    out.conic = std::move(c);
    return out;
  }
  // Only Q(√−7) is handled: α and γ are then π and a times squares.
  const auto& m = f->minpoly();
  bool sqrt_m7 = f->height() == 1 && f->degree() == 2 && m[0].rational_part() == 7 && m[1].is_zero();
  if (!sqrt_m7) {
    out.notes.push_back("conics over " + f->describe() + " are not handled");
    return out;
  }
  ExprContext ctx = ExprContext::for_field(f);
  FieldElement pi = parse_constant("(1 - a)/2", ctx);
  auto sa = sqrt_in_quadratic(out.red.alpha / pi);
  auto sg = sqrt_in_quadratic(out.red.gamma / f->generator());
  if (!sa || !sg) {
    out.notes.push_back("alpha/pi or gamma/a is not a square in F");
    return out;
  }
  out.notes.push_back("alpha = pi * (" + sa->to_string() + ")^2");
  out.notes.push_back("gamma = a * (" + sg->to_string() + ")^2");
  out.conic_equation = "pi*X^2 + a*Y^2 = 1, pi = (1 - a)/2";
  out.proof = verify_case34_obstruction();
  out.ok = out.proof->ok();
  return out;
}

// ---- rendering ---------------------------------------------------------------

std::string field_name(const FieldDescriptor& f, bool e) {
  const int levels = e ? static_cast<int>(f.tower.size()) : f.f_levels;
  if (levels == 0) return "Q";
  std::string s = "Q(";
  for (int k = 0; k < levels; ++k) s += (k ? ", " : "") + f.tower[k].generator;
  return s + ")";
}

Json summary_json(const CurveRecord& r) {
  auto fl = r.flags();
  Json flags = Json::array();
  if (fl.e_differs_from_f) flags.push_back("E!=F");
  if (fl.has_symmetry) flags.push_back("symmetry");
  if (fl.has_alt_parametrization) flags.push_back("alt-parametrization");
  if (fl.has_printed_implicit) flags.push_back("printed-implicit");
  if (r.pencil) flags.push_back("pencil");
  if (fl.autodual_claimed) flags.push_back("autodual");
  return Json{{"id", r.id}, {"name", r.name},          {"points", singular_point_count(r)},
              {"F", field_name(r.param.field, false)}, {"E", field_name(r.param.field, true)},
              {"flags", flags}};
}

std::string summary_text(const CurveRecord& r) {
  Json j = summary_json(r);
  std::ostringstream os;
  os.width(3);
  os << r.id << "  ";
  std::string name = r.name;
  name.resize(std::max<std::size_t>(name.size(), 24), ' ');
  os << name << "  F=" << j["F"].get<std::string>() << "  E=" << j["E"].get<std::string>();
  std::string flags;
  for (const auto& f : j["flags"]) flags += (flags.empty() ? "" : ",") + f.get<std::string>();
  if (!flags.empty()) os << "  [" << flags << "]";
  return os.str();
}

Json verify_json(const VerifyResult& v) {
  Json j{{"id", v.id}, {"name", v.name}, {"pass", v.ok}};
  if (!v.error.empty()) {
    j["error"] = v.error;
    return j;
  }
  const Certificate& c = v.cert;
  j["implicit_degree"] = c.implicit_degree;
  j["map_degree"] = c.mapdeg;
  j["sum_mu"] = c.sum_mu;
  j["sum_delta"] = c.sum_delta;
  j["distinct_points"] = c.distinct_ok;
  Json claims = Json::array();
  for (const auto& cv : c.verdicts) {
    Json cj{{"type", cv.claim.type.name()},
            {"location", cv.claim.location.to_string()},
            {"computed", cv.computed},
            {"preimages", cv.preimages_ok},
            {"ok", cv.ok}};
    if (!cv.point.empty()) cj["point"] = cv.point;
    if (!cv.reason.empty()) cj["reason"] = cv.reason;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["failures"] = c.failures;
  j["seconds"] = c.seconds;
  return j;
}

std::string verify_text(const VerifyResult& v) {
  std::ostringstream os;
  os << "case " << v.id << "  " << v.name << "  " << (v.ok ? "PASS" : "FAIL");
  if (!v.error.empty()) {
    os << "\n  error: " << v.error << "\n";
    return os.str();
  }
  const Certificate& c = v.cert;
  os << "  degree " << c.implicit_degree << "  mu " << c.sum_mu << "  delta " << c.sum_delta;
  os.precision(2);
  os << std::fixed << "  " << c.seconds << "s\n";
  for (const auto& cv : c.verdicts) {
    os << "  " << cv.claim.type.name() << " at " << cv.claim.location.to_string() << ": ";
    if (cv.ok) {
      os << "ok";
    } else {
      os << "computed";
      for (int n : cv.computed) os << " A_" << n;
      if (!cv.reason.empty()) os << " (" << cv.reason << ")";
    }
    os << "\n";
  }
  for (const auto& f : c.failures) os << "  failure: " << f << "\n";
  return os.str();
}

Json dual_json(const DualResult& d) {
  Json j{{"id", d.id}, {"degree", d.degree}, {"singular_points", d.k}, {"expected_degree", d.expected}};
  if (d.singularities) j["singularities"] = multiset_name(*d.singularities);
  j["ok"] = d.ok;
  if (!d.detail.empty()) j["detail"] = d.detail;
  return j;
}

std::string dual_text(const DualResult& d) {
  std::ostringstream os;
  os << "case " << d.id << "  dual degree " << d.degree << " (30 - 19 - " << d.k << " = " << d.expected << ")";
  if (d.singularities) os << "  singularities " << multiset_name(*d.singularities);
  os << "  " << (d.ok ? "ok" : "MISMATCH");
  if (!d.detail.empty()) os << "  " << d.detail;
  return os.str() + "\n";
}

Json conic_json(const ConicProblem& c) {
  Json symbols = Json::array();
  for (const auto& [v, s] : c.symbols)
    symbols.push_back(Json{{"place", v == 0 ? Json("inf") : Json(v)}, {"symbol", s}});
  Json j{{"a", to_string(c.a)},
         {"b", to_string(c.b)},
         {"a_reduced", c.a_red.get_str()},
         {"b_reduced", c.b_red.get_str()},
         {"verdict", c.verdict_name()},
         {"symbols", symbols}};
  if (c.obstruction) j["obstruction"] = *c.obstruction == 0 ? Json("inf") : Json(*c.obstruction);
  if (c.witness) j["witness"] = Json::array({to_string((*c.witness)[0]), to_string((*c.witness)[1])});
  if (c.height_reached) j["height_reached"] = c.height_reached;
  j["trace"] = c.trace;
  return j;
}

std::string conic_text(const ConicProblem& c) {
  std::ostringstream os;
  os << to_string(c.a) << "*X^2 + " << to_string(c.b) << "*Y^2 = 1: " << c.verdict_name();
  if (c.obstruction) os << " (obstruction at " << (*c.obstruction == 0 ? std::string("inf") : std::to_string(*c.obstruction)) << ")";
  if (c.witness) os << " (X, Y) = (" << to_string((*c.witness)[0]) << ", " << to_string((*c.witness)[1]) << ")";
  os << "\n";
  for (const auto& t : c.trace) os << "  " << t << "\n";
  return os.str();
}

Json proof_json(const ProofTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j{{"claim", s.claim}, {"ok", s.ok}};
    if (!s.detail.empty()) j["detail"] = s.detail;
    steps.push_back(j);
  }
  return Json{{"steps", steps}, {"conclusion", t.conclusion}, {"ok", t.ok()}};
}

std::string proof_text(const ProofTrace& t) {
  std::ostringstream os;
  for (const auto& s : t.steps) {
    os << "  [" << (s.ok ? "ok" : "FAIL") << "] " << s.claim;
    if (!s.detail.empty()) os << "  (" << s.detail << ")";
    os << "\n";
  }
  os << "  " << t.conclusion << "\n";
  return os.str();
}

Json reduce_json(const ReduceResult& r) {
  const auto& red = r.red;
  Json j{{"id", r.id},
         {"p1_degree", Json{{"x", red.p1.degree_in(0)}, {"l", red.p1.degree_in(2)}}},
         {"D1", to_string(red.d1, "l")},
         {"D2", to_string(red.d2, "l")},
         {"Q", Json{{"alpha", red.alpha.to_string()}, {"gamma", red.gamma.to_string()}}},
         {"conic", r.conic_equation}};
  if (r.conic) j["verdict"] = conic_json(*r.conic);
  if (r.proof) j["obstruction"] = proof_json(*r.proof);
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["ok"] = r.ok;
  return j;
}

std::string reduce_text(const ReduceResult& r) {
  const auto& red = r.red;
  std::ostringstream os;
  os << "case " << r.id << "\n";
  os << "  P1: degree " << red.p1.degree_in(0) << " in x, " << red.p1.degree_in(2) << " in l\n";
  os << "  D1 = " << to_string(red.d1, "l") << "\n";
  os << "  D2 = " << to_string(red.d2, "l") << "\n";
  os << "  Q = (" << red.alpha.to_string() << ")*u^2 + (" << red.gamma.to_string() << ") - v^2\n";
  for (const auto& n : r.notes) os << "  " << n << "\n";
  if (!r.conic_equation.empty()) os << "  conic: " << r.conic_equation << "\n";
  if (r.conic) os << "  " << conic_text(*r.conic);
  if (r.proof) os << proof_text(*r.proof);
  return os.str();
}

Json crosscheck_json(const CrossCheck& c) {
  return Json{{"id", c.id}, {"ok", c.ok}, {"checks", c.checks}, {"failures", c.failures}};
}

}  // namespace sextic
