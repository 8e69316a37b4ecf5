#include "sextic/database.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace sextic {

using nlohmann::json;

// ---- fields ------------------------------------------------------------

namespace {

FieldPtr build_levels(const std::vector<FieldLevel>& tower, int levels) {
  FieldPtr f = NumberField::rationals();
  for (int k = 0; k < levels; ++k) {
    std::vector<FieldElement> m;
    for (const auto& c : tower[k].minpoly) m.push_back(f->from_rational(c));
    f = NumberField::extension(f, tower[k].generator, m);
  }
  return f;
}

}  // namespace

FieldPtr FieldDescriptor::build() const { return build_levels(tower, static_cast<int>(tower.size())); }
FieldPtr FieldDescriptor::build_f() const { return build_levels(tower, f_levels); }

// ---- records -----------------------------------------------------------

std::vector<int> CurveRecord::multiset() const {
  static const std::regex term(R"((\d*)A_(\d+))");
  std::vector<int> out;
  for (auto it = std::sregex_iterator(name.begin(), name.end(), term); it != std::sregex_iterator(); ++it) {
    int mult = (*it)[1].length() ? std::stoi((*it)[1]) : 1;
    for (int k = 0; k < mult; ++k) out.push_back(std::stoi((*it)[2]));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

CurveFlags CurveRecord::flags() const {
  CurveFlags f;
  f.e_differs_from_f = param.field.e_differs_from_f();
  f.has_symmetry = symmetry.has_value();
  f.has_alt_parametrization = alt.has_value();
  f.has_printed_implicit = printed_implicit.has_value();
  f.autodual_claimed = autodual;
  return f;
}

int singular_point_count(const CurveRecord& r) { return static_cast<int>(r.multiset().size()); }

const CurveRecord& Corpus::get(int id) const {
  for (const auto& r : records)
    if (r.id == id) return r;
  throw std::out_of_range("no record with id " + std::to_string(id));
}

ExprContext plane_context(const FieldPtr& field) {
  ExprContext ctx = ExprContext::for_field(field);
  ctx.variables = {{"x", 0}, {"y", 1}, {"z", 2}, {"X", 0}, {"Y", 1}, {"Z", 2}};
  return ctx;
}

namespace {

ParameterLocation build_location(const LocationSpec& l, const ExprContext& ctx) {
  auto value = [&](const std::string& s) {
    return s == "infinity" ? ParameterLocation::infinity()
                           : ParameterLocation::finite(parse_constant(s, ctx));
  };
  if (l.kind == "infinity") return ParameterLocation::infinity();
  if (l.kind == "finite") return ParameterLocation::finite(parse_constant(l.text, ctx));
  if (l.kind == "roots") return ParameterLocation::roots(parse_univariate(l.text, ctx));
  if (l.kind == "pair") return ParameterLocation::pair_of(value(l.pair[0]), value(l.pair[1]));
  throw SchemaError("unknown location kind '" + l.kind + "'");
}

}  // namespace

BuiltCurve build(const ParametrizationSpec& spec) {
  BuiltCurve b;
  b.e = spec.field.build();
  b.f = spec.field.build_f();
  b.ctx = ExprContext::for_field(b.e);
  b.ctx.variables = {{"t", 0}};
  for (const auto& [name, text] : spec.definitions) b.ctx.definitions[name] = parse_expr(text, b.ctx);
  std::array<UniPoly, 3> comps;
  for (int i = 0; i < 3; ++i) comps[i] = to_uni(parse_expr(spec.comps[i].expr, b.ctx), 0);
  b.curve = RationalPlaneCurve(comps);
  b.claims.push_back({{spec.odd.n}, build_location(spec.odd.location, b.ctx)});
  for (const auto& c : spec.irreducible) b.claims.push_back({{c.n}, build_location(c.location, b.ctx)});
  return b;
}

// ---- JSON --------------------------------------------------------------

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& need(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing");
  return *it;
}

std::string need_string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_string()) schema_fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

int need_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_number_integer()) schema_fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

const json& need_array(const json& obj, const std::string& key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_array()) schema_fail(path + "." + key, "expected an array");
  return v;
}

std::string opt_string(const json& obj, const std::string& key, const std::string& path) {
  return obj.contains(key) ? need_string(obj, key, path) : std::string();
}

BigRational rational_at(const json& v, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    schema_fail(path, e.what());
  }
}

LocationSpec location_from(const json& j, const std::string& path) {
  LocationSpec l;
  l.kind = need_string(j, "kind", path);
  if (l.kind == "finite") l.text = need_string(j, "value", path);
  else if (l.kind == "roots") l.text = need_string(j, "poly", path);
  else if (l.kind == "pair") {
    const json& v = need_array(j, "values", path);
    if (v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      schema_fail(path + ".values", "expected two strings");
    l.pair = {v[0].get<std::string>(), v[1].get<std::string>()};
  } else if (l.kind != "infinity") {
    schema_fail(path + ".kind", "unknown location kind '" + l.kind + "'");
  }
  return l;
}

json location_to(const LocationSpec& l) {
  json j{{"kind", l.kind}};
  if (l.kind == "finite") j["value"] = l.text;
  else if (l.kind == "roots") j["poly"] = l.text;
  else if (l.kind == "pair") j["values"] = {l.pair[0], l.pair[1]};
  return j;
}

ClaimSpec claim_from(const json& j, const std::string& path) {
  ClaimSpec c;
  c.n = need_int(j, "type", path);
  if (c.n < 1) schema_fail(path + ".type", "A_n index must be positive");
  c.location = location_from(need(j, "location", path), path + ".location");
  return c;
}

json claim_to(const ClaimSpec& c) { return {{"type", c.n}, {"location", location_to(c.location)}}; }

using Pairs = std::vector<std::pair<std::string, std::string>>;

Pairs pairs_from(const json& j, const std::string& path) {
  Pairs out;
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      const json& e = j[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        schema_fail(path + "[" + std::to_string(k) + "]", "expected [name, expression]");
      out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!v.is_string()) schema_fail(path + "." + k, "expected a string");
      out.emplace_back(k, v.get<std::string>());
    }
  } else {
    schema_fail(path, "expected an array of pairs");
  }
  return out;
}

json pairs_to(const Pairs& p) {
  json j = json::array();
  for (const auto& [k, v] : p) j.push_back({k, v});
  return j;
}

ParametrizationSpec param_from(const json& j, const std::string& path) {
  ParametrizationSpec p;
  const json& field = need(j, "field", path);
  const json& tower = need_array(field, "tower", path + ".field");
  for (std::size_t k = 0; k < tower.size(); ++k) {
    std::string lp = path + ".field.tower[" + std::to_string(k) + "]";
    FieldLevel lvl;
    lvl.generator = need_string(tower[k], "generator", lp);
    const json& mp = need_array(tower[k], "minpoly", lp);
    if (mp.size() < 2) schema_fail(lp + ".minpoly", "degree must be at least 1");
    for (std::size_t i = 0; i < mp.size(); ++i)
      lvl.minpoly.push_back(rational_at(mp[i], lp + ".minpoly[" + std::to_string(i) + "]"));
    p.field.tower.push_back(std::move(lvl));
  }
  p.field.f_levels = need_int(field, "f_levels", path + ".field");
  if (p.field.f_levels < 0 || p.field.f_levels > static_cast<int>(tower.size()))
    schema_fail(path + ".field.f_levels", "out of range");
  if (j.contains("definitions")) p.definitions = pairs_from(j["definitions"], path + ".definitions");
  const char* names[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    std::string cp = path + "." + names[i];
    const json& c = need(j, names[i], path);
    p.comps[i].expr = need_string(c, "expr", cp);
    if (c.contains("coeffs")) {
      const json& cs = need_array(c, "coeffs", cp);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (!cs[k].is_array()) schema_fail(cp + ".coeffs[" + std::to_string(k) + "]", "expected an array");
        std::vector<std::string> coords;
        for (std::size_t m = 0; m < cs[k].size(); ++m) {
          std::string ep = cp + ".coeffs[" + std::to_string(k) + "][" + std::to_string(m) + "]";
          rational_at(cs[k][m], ep);
          coords.push_back(cs[k][m].get<std::string>());
        }
        p.comps[i].coeffs.push_back(std::move(coords));
      }
    }
  }
  p.odd = claim_from(need(j, "odd", path), path + ".odd");
  const json& irr = need_array(j, "irreducible", path);
  for (std::size_t k = 0; k < irr.size(); ++k)
    p.irreducible.push_back(claim_from(irr[k], path + ".irreducible[" + std::to_string(k) + "]"));
  if (j.contains("f_embedding")) p.f_embedding = pairs_from(j["f_embedding"], path + ".f_embedding");
  return p;
}

json param_to(const ParametrizationSpec& p) {
  json tower = json::array();
  for (const auto& l : p.field.tower) {
    json mp = json::array();
    for (const auto& c : l.minpoly) mp.push_back(to_string(c));
    tower.push_back({{"generator", l.generator}, {"minpoly", mp}});
  }
  json j{{"field", {{"tower", tower}, {"f_levels", p.field.f_levels}}},
         {"definitions", pairs_to(p.definitions)},
         {"odd", claim_to(p.odd)}};
  const char* names[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) j[names[i]] = {{"expr", p.comps[i].expr}, {"coeffs", p.comps[i].coeffs}};
  json irr = json::array();
  for (const auto& c : p.irreducible) irr.push_back(claim_to(c));
  j["irreducible"] = irr;
  if (!p.f_embedding.empty()) j["f_embedding"] = pairs_to(p.f_embedding);
  return j;
}

CurveRecord record_from(const json& j, const std::string& path) {
  CurveRecord r;
  r.id = need_int(j, "id", path);
  r.name = need_string(j, "name", path);
  r.bracket = opt_string(j, "bracket", path);
  r.param = param_from(need(j, "parametrization", path), path + ".parametrization");
  if (j.contains("alt_parametrization"))
    r.alt = param_from(j["alt_parametrization"], path + ".alt_parametrization");
  if (j.contains("symmetry")) {
    std::string sp = path + ".symmetry";
    const json& s = j["symmetry"];
    SymmetrySpec sym;
    const json& m = need_array(s, "map", sp);
    if (m.size() != 3) schema_fail(sp + ".map", "expected a 3x3 matrix");
    for (int a = 0; a < 3; ++a) {
      if (!m[a].is_array() || m[a].size() != 3) schema_fail(sp + ".map", "expected a 3x3 matrix");
      for (int b = 0; b < 3; ++b) sym.map[a][b] = m[a][b].get<long>();
    }
    const json& mob = need_array(s, "mobius", sp);
    if (mob.size() != 4) schema_fail(sp + ".mobius", "expected four integers");
    for (int a = 0; a < 4; ++a) sym.mobius[a] = mob[a].get<long>();
    r.symmetry = sym;
  }
  if (j.contains("printed_implicit")) {
    const json& pi = j["printed_implicit"];
    r.printed_implicit = PrintedImplicit{need_string(pi, "h", path + ".printed_implicit"),
                                         need_string(pi, "f", path + ".printed_implicit")};
  }
  if (j.contains("pencil")) {
    const json& pe = j["pencil"];
    r.pencil = PencilSpec{need_string(pe, "g", path + ".pencil"),
                          need_string(pe, "basepoint_factor", path + ".pencil")};
  }
  if (j.contains("conic_witness")) {
    const json& w = j["conic_witness"];
    std::string wp = path + ".conic_witness";
    r.conic_witness = ConicWitness{need_string(w, "equation", wp), need_string(w, "X", wp),
                                   need_string(w, "Y", wp), need_string(w, "Z", wp)};
  }
  if (j.contains("dual_singularities")) r.dual_singularities = j["dual_singularities"].get<std::vector<int>>();
  if (j.contains("autodual")) r.autodual = j["autodual"].get<bool>();
  if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  return r;
}

json record_to(const CurveRecord& r) {
  json j{{"id", r.id}, {"name", r.name}, {"bracket", r.bracket}, {"parametrization", param_to(r.param)}};
  if (r.alt) j["alt_parametrization"] = param_to(*r.alt);
  if (r.symmetry) {
    json m = json::array();
    for (const auto& row : r.symmetry->map) m.push_back(row);
    j["symmetry"] = {{"map", m}, {"mobius", r.symmetry->mobius}};
  }
  if (r.printed_implicit) j["printed_implicit"] = {{"h", r.printed_implicit->h}, {"f", r.printed_implicit->f}};
  if (r.pencil) j["pencil"] = {{"g", r.pencil->g}, {"basepoint_factor", r.pencil->basepoint_factor}};
  if (r.conic_witness)
    j["conic_witness"] = {{"equation", r.conic_witness->equation}, {"X", r.conic_witness->x},
                          {"Y", r.conic_witness->y}, {"Z", r.conic_witness->z}};
  if (!r.dual_singularities.empty()) j["dual_singularities"] = r.dual_singularities;
  if (r.autodual) j["autodual"] = true;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json records_json(const Corpus& c) {
  json a = json::array();
  for (const auto& r : c.records) a.push_back(record_to(r));
  return a;
}

std::vector<std::vector<std::string>> coefficient_strings(const UniPoly& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : p.coeffs()) {
    std::vector<std::string> coords;
    for (const auto& q : c.coords()) coords.push_back(to_string(q));
    out.push_back(std::move(coords));
  }
  return out;
}

/// Builds the record and checks the load-time invariants; fills or checks
/// the stored coefficients.
void validate_record(CurveRecord& r, bool strict) {
  const std::string who = "record " + std::to_string(r.id);
  auto ms = r.multiset();
  if (ms.empty()) throw CorpusInvariantError(who + ": name has no A_n terms");
  int sum = 0, odd = 0;
  for (int n : ms) {
    sum += n;
    odd += n % 2;
  }
  if (sum != 19) throw CorpusInvariantError(who + ": indices sum to " + std::to_string(sum));
  if (odd != 1) throw CorpusInvariantError(who + ": " + std::to_string(odd) + " odd indices");

  auto check_param = [&](ParametrizationSpec& p, const std::string& label) {
    BuiltCurve b;
    try {
      b = build(p);
    } catch (const std::exception& e) {
      throw CorpusInvariantError(who + " " + label + ": " + e.what());
    }
    if (b.curve.degree() != 6)
      throw CorpusInvariantError(who + " " + label + ": parametrization degree " + std::to_string(b.curve.degree()));
    if (p.odd.n % 2 == 0) throw CorpusInvariantError(who + " " + label + ": the two-branch claim has even index");
    std::vector<int> claimed;
    for (const auto& c : b.claims) {
      if (c.type.branches() == 2 && c.location.count() != 2)
        throw CorpusInvariantError(who + " " + label + ": the two-branch claim needs two parameters");
      if (&c != &b.claims.front() && c.type.n % 2)
        throw CorpusInvariantError(who + " " + label + ": irreducible claim with odd index");
      for (int k = 0; k < c.points(); ++k) claimed.push_back(c.type.n);
    }
    std::sort(claimed.rbegin(), claimed.rend());
    if (claimed != ms) throw CorpusInvariantError(who + " " + label + ": claims do not match the name " + r.name);
    for (int i = 0; i < 3; ++i) {
      auto computed = coefficient_strings(b.curve[i]);
      if (p.comps[i].coeffs.empty() && !strict) p.comps[i].coeffs = computed;
      else if (p.comps[i].coeffs != computed)
        throw CorpusInvariantError(who + " " + label + ": stored coefficients of component " +
                                   std::to_string(i) + " differ from the expression");
    }
  };
  check_param(r.param, "parametrization");
  if (r.alt) check_param(*r.alt, "alternative parametrization");
}

}  // namespace

std::string corpus_checksum(const Corpus& c) {
  std::string s = records_json(c).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

Corpus parse_corpus(const std::string& text, bool strict) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("$: invalid JSON: ") + e.what());
  }
  Corpus c;
  c.schema_version = need_int(j, "schema_version", "$");
  if (c.schema_version != 1) schema_fail("$.schema_version", "unsupported version " + std::to_string(c.schema_version));
  const json& recs = need_array(j, "records", "$");
  for (std::size_t k = 0; k < recs.size(); ++k)
    c.records.push_back(record_from(recs[k], "$.records[" + std::to_string(k) + "]"));
  std::vector<int> ids;
  for (auto& r : c.records) {
    validate_record(r, strict);
    ids.push_back(r.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw CorpusInvariantError("duplicate record id");
  std::string sum = corpus_checksum(c);
  if (j.contains("checksum")) c.checksum = need_string(j, "checksum", "$");
  if (strict && c.checksum != sum)
    throw CorpusInvariantError("checksum mismatch: stored " + c.checksum + ", computed " + sum);
  c.checksum = sum;
  return c;
}

Corpus load_corpus(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), strict);
}

std::string serialize_corpus(const Corpus& c) {
  json j{{"schema_version", c.schema_version}, {"checksum", corpus_checksum(c)}, {"records", records_json(c)}};
  return j.dump(1) + "\n";
}

std::string serialize_record(const CurveRecord& r) { return record_to(r).dump(1) + "\n"; }

std::string default_corpus_path() {
  if (const char* env = std::getenv("SEXTIC_CORPUS"); env && *env) return env;
#ifdef SEXTIC_DEFAULT_CORPUS
  return SEXTIC_DEFAULT_CORPUS;
#else
  return "corpus/sextics.json";
#endif
}

// ---- cross checks ------------------------------------------------------

namespace {

/// Homogenizes an affine polynomial in slots 0, 1 to degree d with slot 2.
TriPoly homogenize(const TriPoly& f, int d) {
  TriPoly h(f.field());
  for (const auto& [e, v] : f.terms()) h.add_term({e[0], e[1], d - e[0] - e[1]}, v);
  return h;
}


UniPoly lift_to(const UniPoly& p, const FieldPtr& f) {
  return p.map([&](const FieldElement& v) { return f->lift(v); });
}

// The two parameters of a two-branch claim as homogeneous pairs (n, d),
// handed to `fn` over `ring` or over an extension of it holding the roots.
using ParamPair = std::array<std::array<FieldElement, 2>, 2>;
// `into` carries the location's coefficients into `ring`.
void with_pair(const ParameterLocation& loc, const FieldPtr& ring,
               const std::function<FieldElement(const FieldElement&)>& into,
               const std::function<void(const FieldPtr&, const ParamPair&)>& fn) {
  auto hom = [&](const ParameterLocation& l, const FieldPtr& f) -> std::array<FieldElement, 2> {
    if (l.kind == ParameterLocation::Kind::Infinity) return {f->one(), f->zero()};
    return {f->lift(into(l.value)), f->one()};
  };
  if (loc.kind == ParameterLocation::Kind::Pair) {
    fn(ring, {hom(loc.pair[0], ring), hom(loc.pair[1], ring)});
    return;
  }
  if (loc.kind != ParameterLocation::Kind::Roots || loc.poly.degree() != 2)
    throw std::invalid_argument("two-branch location must be a pair or a quadratic");
  UniPoly q = loc.poly.map(into);
  for_each_root_component(q, "r", [&](const FieldPtr& a, const FieldElement& th, const UniPoly&) {
    FieldElement other = -(a->lift(q[1]) / a->lift(q[2])) - th;
    fn(a, {std::array<FieldElement, 2>{th, a->one()}, std::array<FieldElement, 2>{other, a->one()}});
  });
}

// Binary quadratic form q((u1 s + u2) / (d1 s + d2)) cleared of denominators,
// as coefficients of s^0, s^1, s^2.
std::array<FieldElement, 3> pulled_back(const UniPoly& q, const ParamPair& u, const FieldPtr& f) {
  UniPoly num({u[1][0], u[0][0]}, f->zero()), den({u[1][1], u[0][1]}, f->zero());
  UniPoly acc(f->zero());
  UniPoly qq = lift_to(q, f);
  for (int k = 0; k <= 2; ++k) {
    UniPoly term = UniPoly::constant(qq[k]);
    for (int j = 0; j < k; ++j) term = term * num;
    for (int j = k; j < 2; ++j) term = term * den;
    acc += term;
  }
  return {acc[0], acc[1], acc[2]};
}

const SingularityClaim* quadratic_branch_claim(const BuiltCurve& b) {
  for (const auto& c : b.claims)
    if (c.type.branches() == 1 && c.location.kind == ParameterLocation::Kind::Roots &&
        c.location.poly.degree() == 2)
      return &c;
  return nullptr;
}

// Searches for a Möbius map μ and a projective map T with T∘main∘μ = alt.
// μ must send the two-branch parameters of alt to those of main and the
// roots of alt's quadratic one-branch claim to those of main's. Runs over
// the compositum of the two fields, one ring component at a time, keeping
// only components where the F generators agree with the given embedding.
// Returns the number of components checked and whether all succeeded.
std::pair<int, bool> projectively_equivalent(const CurveRecord& r, const BuiltCurve& main,
                                             const BuiltCurve& alt) {
  if (r.alt->field.tower.size() != 1)
    throw std::invalid_argument("alternative field must be a single extension of Q");
  const SingularityClaim* qm = quadratic_branch_claim(main);
  const SingularityClaim* qa = quadratic_branch_claim(alt);
  if (!qm || !qa) throw std::invalid_argument("no quadratic one-branch claim to anchor the map");

  std::vector<FieldElement> mb;
  for (const auto& c : r.alt->field.tower[0].minpoly) mb.push_back(main.e->from_rational(c));
  int checked = 0;
  bool all = true;
  for_each_root_component(UniPoly(mb, main.e->zero()), r.alt->field.tower[0].generator,
                          [&](const FieldPtr& k, const FieldElement& th, const UniPoly&) {
    std::vector<FieldElement> images{th};
    for (const auto& [gen, expr] : r.alt->f_embedding) {
      FieldElement lhs = k->lift(parse_constant(gen, main.ctx));
      FieldElement rhs = map_element(parse_constant(expr, alt.ctx), images, k);
      if (!decide_zero(lhs - rhs)) return;
    }
    std::array<UniPoly, 3> ac;
    for (int i = 0; i < 3; ++i)
      ac[i] = alt.curve[i].map([&](const FieldElement& v) { return map_element(v, images, k); });
    ++checked;
    bool found = false;
    auto lift_k = [&](const FieldElement& v) { return k->lift(v); };
    auto map_k = [&](const FieldElement& v) { return map_element(v, images, k); };
    with_pair(main.claims.front().location, k, lift_k, [&](const FieldPtr& r1, const ParamPair& um) {
      with_pair(alt.claims.front().location, r1, map_k,
                [&](const FieldPtr& f, const ParamPair& va) {
        RationalPlaneCurve target(std::array<UniPoly, 3>{lift_to(ac[0], f), lift_to(ac[1], f), lift_to(ac[2], f)});
        RationalPlaneCurve source = main.curve.lifted(f);
        auto lift_pair = [&](const ParamPair& p) {
          ParamPair o;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) o[i][j] = f->lift(p[i][j]);
          return o;
        };
        ParamPair v = lift_pair(va);
        UniPoly qalt = lift_to(qa->location.poly.map([&](const FieldElement& c) { return map_element(c, images, k); }), f);
        auto qv = pulled_back(qalt, v, f);
        for (int swap = 0; swap < 2 && !found; ++swap) {
          ParamPair u = lift_pair(um);
          if (swap) std::swap(u[0], u[1]);
          auto qu = pulled_back(qm->location.poly, u, f);
          // q(μ) ∝ q_alt forces λ from the middle coefficients.
          if (decide_zero(qu[1]) || decide_zero(qv[0])) continue;
          FieldElement lam = qv[1] * qu[0] / (qu[1] * qv[0]);
          if (!decide_zero(qu[2] * lam * lam * qv[0] - qv[2] * qu[0])) continue;
          // μ = M_u · diag(λ, 1) · adj(M_v), M_w = [[w1n, w2n], [w1d, w2d]].
          Mobius mu{lam * u[0][0] * v[1][1] - u[1][0] * v[0][1], -lam * u[0][0] * v[1][0] + u[1][0] * v[0][0],
                    lam * u[0][1] * v[1][1] - u[1][1] * v[0][1], -lam * u[0][1] * v[1][0] + u[1][1] * v[0][0]};
          if (match_parametrizations(reparametrize(source, mu), target)) found = true;
        }
      });
    });
    all = all && found;
  });
  return {checked, checked > 0 && all};
}

}  // namespace

TriPoly printed_affine_sextic(const CurveRecord& r, const FieldPtr& f) {
  if (!r.printed_implicit) throw std::invalid_argument("record " + std::to_string(r.id) + " has no printed sextic");
  ExprContext ctx = plane_context(f);
  ctx.definitions["h"] = parse_expr(r.printed_implicit->h, ctx);
  return parse_expr(r.printed_implicit->f, ctx);
}

CubicPencil record_pencil(const CurveRecord& r, const FieldPtr& f) {
  if (!r.pencil) throw std::invalid_argument("record " + std::to_string(r.id) + " has no pencil");
  ExprContext ctx = plane_context(f);
  ctx.variables.erase("z");
  ctx.variables.erase("Z");
  ctx.variables["l"] = 2;
  TriPoly g = parse_expr(r.pencil->g, ctx);
  UniPoly base = to_uni(parse_expr(r.pencil->basepoint_factor, ctx), 0);
  return CubicPencil::from_combined(g, base);
}

bool symmetry_holds(const CurveRecord& r, const std::optional<SymmetrySpec>& s) {
  const std::optional<SymmetrySpec>& sym = s ? s : r.symmetry;
  if (!sym) throw std::invalid_argument("record " + std::to_string(r.id) + " states no symmetry");
  BuiltCurve b = build(r.param);
  const auto& m = sym->mobius;
  return verify_symmetry(b.curve, ProjectiveMap::make(b.e, sym->map), Mobius::make(b.e, m[0], m[1], m[2], m[3]));
}

CrossCheck cross_check_record(const CurveRecord& r) {
  CrossCheck cc;
  cc.id = r.id;
  auto pass = [&](const std::string& s) { cc.checks.push_back(s); };
  auto fail = [&](const std::string& s) {
    cc.failures.push_back(s);
    cc.ok = false;
  };
  auto ms = r.multiset();
  int sum = 0, odd = 0;
  for (int n : ms) {
    sum += n;
    odd += n % 2;
  }
  sum == 19 ? pass("indices sum to 19") : fail("indices sum to " + std::to_string(sum));
  odd == 1 ? pass("exactly one odd index") : fail(std::to_string(odd) + " odd indices");

  BuiltCurve b;
  try {
    b = build(r.param);
  } catch (const std::exception& e) {
    fail(std::string("parametrization does not build: ") + e.what());
    return cc;
  }
  for (int i = 0; i < 3; ++i)
    if (coefficient_strings(b.curve[i]) != r.param.comps[i].coeffs)
      fail("stored coefficients of component " + std::to_string(i) + " differ");
  if (cc.ok) pass("stored coefficients match the expressions");

  if (r.symmetry) {
    const auto& m = r.symmetry->mobius;
    verify_symmetry(b.curve, ProjectiveMap::make(b.e, r.symmetry->map), Mobius::make(b.e, m[0], m[1], m[2], m[3]))
        ? pass("stated symmetry maps the curve to itself")
        : fail("stated symmetry does not preserve the curve");
  }

  std::optional<TriPoly> implicit;
  auto get_implicit = [&]() -> const TriPoly& {
    if (!implicit) implicit = implicitize(b.curve);
    return *implicit;
  };

  if (r.printed_implicit) {
    ExprContext ctx = plane_context(b.e);
    ctx.definitions["h"] = parse_expr(r.printed_implicit->h, ctx);
    TriPoly f = homogenize(parse_expr(r.printed_implicit->f, ctx), 6);
    if (equal_up_to_unit(get_implicit(), f)) pass("implicit equation matches the printed sextic");
    else fail("implicit equation differs from the printed sextic");
    // The one-branch points on the two roots of h lie on y = 0.
    UniPoly h = to_uni(ctx.definitions["h"], 0);
    for (const auto& c : b.claims) {
      if (c.location.kind != ParameterLocation::Kind::Roots || c.type.branches() != 1) continue;
      bool ok = true;
      for_each_root_component(c.location.poly, "r", [&](const FieldPtr& a, const FieldElement& th, const UniPoly&) {
        ProjectivePoint p = evaluate(b.curve, th);
        FieldElement xv = p[0] / p[2];
        UniPoly ha = h.map([&](const FieldElement& v) { return a->lift(v); });
        if (!decide_zero(p[1]) || !decide_zero(eval(ha, xv))) ok = false;
      });
      ok ? pass(c.type.name() + " points lie on y = 0 at the roots of h")
         : fail(c.type.name() + " points are not on y = 0 at the roots of h");
    }
  }

  if (r.alt) {
    try {
      BuiltCurve ab = build(*r.alt);
      TriPoly fa = implicitize(ab.curve);
      const TriPoly& fm = get_implicit();
      bool same;
      if (ab.e == b.e || r.alt->f_embedding.empty()) {
        same = equal_up_to_unit(fm, fa.lifted(fm.field()));
      } else {
        // Send the generators of F into the alternative field.
        std::vector<FieldElement> images(r.param.field.tower.size());
        for (std::size_t k = 0; k < static_cast<std::size_t>(r.param.field.f_levels); ++k) {
          const auto& gen = r.param.field.tower[k].generator;
          auto it = std::find_if(r.alt->f_embedding.begin(), r.alt->f_embedding.end(),
                                 [&](const auto& e) { return e.first == gen; });
          if (it == r.alt->f_embedding.end()) throw std::runtime_error("no image for generator " + gen);
          images[k] = parse_constant(it->second, ab.ctx);
        }
        // Scaled to a monic leading term, the coefficients lie in F: only
        // the leading block of flattened coordinates may be set.
        FieldPtr f = r.param.field.build_f();
        images.resize(r.param.field.f_levels);
        TriPoly mapped(ab.e);
        bool in_f = true;
        TriPoly fn = fm.normalized();
        for (const auto& [e, v] : fn.terms()) {
          std::vector<BigRational> c = v.coords();
          for (std::size_t k = f->absolute_degree(); k < c.size(); ++k) in_f = in_f && sgn(c[k]) == 0;
          c.resize(f->absolute_degree());
          mapped.add_term(e, map_element(FieldElement(f, c), images, ab.e));
        }
        if (!in_f) throw std::runtime_error("implicit equation is not defined over F");
        same = equal_up_to_unit(mapped, fa);
      }
      if (same) {
        pass("both parametrizations give the same sextic");
      } else {
        auto [n, ok] = projectively_equivalent(r, b, ab);
        ok ? pass("the two implicit equations differ but are projectively equivalent (" +
                  std::to_string(n) + " field embedding" + (n == 1 ? "" : "s") + ")")
           : fail("the alternative parametrization gives an inequivalent sextic");
      }
    } catch (const std::exception& e) {
      fail(std::string("alternative parametrization: ") + e.what());
    }
  }
  return cc;
}

}  // namespace sextic
