#include "sextic/singularity.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace sextic {

// ---- locations ---------------------------------------------------------

ParameterLocation ParameterLocation::finite(FieldElement v) {
  ParameterLocation l;
  l.kind = Kind::Finite;
  l.value = std::move(v);
  return l;
}

ParameterLocation ParameterLocation::infinity() { return {}; }

ParameterLocation ParameterLocation::roots(UniPoly p) {
  if (p.degree() < 1) throw std::invalid_argument("root location needs a non-constant polynomial");
  ParameterLocation l;
  l.kind = Kind::Roots;
  l.poly = monic(p);
  return l;
}

ParameterLocation ParameterLocation::pair_of(ParameterLocation a, ParameterLocation b) {
  for (const auto* x : {&a, &b})
    if (x->kind != Kind::Finite && x->kind != Kind::Infinity)
      throw std::invalid_argument("pair entries must be values or infinity");
  ParameterLocation l;
  l.kind = Kind::Pair;
  l.pair = {std::move(a), std::move(b)};
  return l;
}

int ParameterLocation::count() const {
  switch (kind) {
    case Kind::Finite:
    case Kind::Infinity: return 1;
    case Kind::Roots: return poly.degree();
    case Kind::Pair: return 2;
  }
  return 0;
}

std::string ParameterLocation::to_string() const {
  switch (kind) {
    case Kind::Finite: return value.to_string();
    case Kind::Infinity: return "infinity";
    case Kind::Roots: return "roots of " + sextic::to_string(poly);
    case Kind::Pair: return "{" + pair[0].to_string() + ", " + pair[1].to_string() + "}";
  }
  return "";
}

// ---- local analysis ----------------------------------------------------

namespace {

UniPoly lift_poly(const UniPoly& p, const FieldPtr& f) {
  if (p.zero().field() == f) return p;
  return p.map([&](const FieldElement& v) { return f->lift(v); });
}

int chart_index(const ProjectivePoint& p) {
  for (int k : {2, 1, 0})
    if (!decide_zero(p[k])) return k;
  throw DegenerateCurve("all coordinates of the point vanish");
}

TruncatedSeries constant_series(const FieldElement& c, int n) {
  return TruncatedSeries(std::vector<FieldElement>{c}, n);
}

/// The two affine coordinates of the branch in the chart where coordinate k
/// is 1, each shifted to vanish at s = 0.
std::array<TruncatedSeries, 2> affine(const Branch& b, int k, int n) {
  TruncatedSeries inv = TruncatedSeries::from_poly(b.comps[k], n).invert_unit();
  std::array<TruncatedSeries, 2> uv;
  int idx = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    TruncatedSeries s = TruncatedSeries::from_poly(b.comps[j], n) * inv;
    s -= constant_series(s[0], n);
    uv[idx++] = s;
  }
  return uv;
}

int min_order(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

template <class F>
int with_retries(int precision, int doublings, F&& f) {
  for (int k = 0;; ++k) {
    try {
      return f(precision);
    } catch (const TruncationExhausted&) {
      if (k >= doublings) throw;
      precision *= 2;
    }
  }
}

}  // namespace

Branch branch_at(const RationalPlaneCurve& c, const FieldElement& t0) {
  const FieldPtr& a = t0.field();
  UniPoly shift({t0, a->one()}, a->zero());
  Branch b;
  for (int i = 0; i < 3; ++i) b.comps[i] = compose(lift_poly(c[i], a), shift);
  return b;
}

Branch branch_at_infinity(const RationalPlaneCurve& c) {
  Branch b;
  for (int i = 0; i < 3; ++i) b.comps[i] = c[i].reversed(c.degree());
  return b;
}

int branch_index(const Branch& b, int precision) {
  int k = chart_index(b.point());
  auto [u, v] = affine(b, k, precision);
  int ou = u.order(), ov = v.order();
  int m = min_order(ou, ov);
  if (m < 0) throw TruncationExhausted("branch is constant to the working precision");
  if (m == 1) return 0;
  if (m >= 3) throw ClassificationError("point of multiplicity " + std::to_string(m));
  TruncatedSeries x = ou == 2 ? u : v;
  TruncatedSeries y = ou == 2 ? v : u;
  FieldElement lead_inv = x[2].inverse();
  std::vector<TruncatedSeries> xp{constant_series(x.field()->one(), precision), x};
  for (;;) {
    int oy = y.order();
    if (oy < 0) throw TruncationExhausted("branch classification needs more precision");
    if (oy % 2 == 1) return oy - 1;
    int e = oy / 2;
    while (static_cast<int>(xp.size()) <= e) xp.push_back(xp.back() * x);
    FieldElement c = y[oy] * lead_inv.pow(e);
    y -= c * xp[e];
  }
}

int two_branch_index(const Branch& b1, const Branch& b2, int precision) {
  if (!same_point(b1.point(), b2.point()))
    throw ClassificationError("the two parameters have different images");
  int k = chart_index(b1.point());
  auto uv1 = affine(b1, k, precision);
  auto uv2 = affine(b2, k, precision);
  if (min_order(uv1[0].order(), uv1[1].order()) != 1)
    throw ClassificationError("first branch is not smooth");
  int xi;
  if (uv2[0].order() == 1) xi = 0;
  else if (uv2[1].order() == 1) xi = 1;
  else throw ClassificationError("second branch is not smooth");
  const TruncatedSeries& x2 = uv2[xi];
  const TruncatedSeries& y2 = uv2[1 - xi];
  TruncatedSeries h = y2.compose(x2.reversion());
  TruncatedSeries d = uv1[1 - xi] - h.compose(uv1[xi]);
  int i = d.order();
  if (i < 0) throw TruncationExhausted("branches agree to the working precision");
  return 2 * i - 1;
}

namespace {

constexpr int kDefaultPrecision = 42;
constexpr int kDefaultDoublings = 3;

Branch branch_for(const RationalPlaneCurve& c, const ParameterLocation& l, const FieldPtr& ring) {
  if (l.kind == ParameterLocation::Kind::Infinity) {
    Branch b = branch_at_infinity(c);
    for (auto& p : b.comps) p = lift_poly(p, ring);
    return b;
  }
  return branch_at(c, ring->lift(l.value));
}

}  // namespace

SingularityType branch_type_at(const RationalPlaneCurve& c, const FieldElement& t0, int precision) {
  Branch b = branch_at(c, t0);
  int n = with_retries(precision > 0 ? precision : kDefaultPrecision, kDefaultDoublings,
                       [&](int p) { return branch_index(b, p); });
  if (n == 0) throw ClassificationError("the branch is smooth");
  return {n};
}

SingularityType branch_type_at_infinity(const RationalPlaneCurve& c, int precision) {
  Branch b = branch_at_infinity(c);
  int n = with_retries(precision > 0 ? precision : kDefaultPrecision, kDefaultDoublings,
                       [&](int p) { return branch_index(b, p); });
  if (n == 0) throw ClassificationError("the branch is smooth");
  return {n};
}

void for_each_root_component(
    const UniPoly& g, const std::string& name,
    const std::function<void(const FieldPtr&, const FieldElement&, const UniPoly&)>& fn) {
  const FieldPtr& e = g.zero().field();
  UniPoly m = monic(g);
  FieldPtr a = NumberField::extension(e, name, m.coeffs());
  try {
    fn(a, a->generator(), m);
  } catch (const ZeroDivisorError& z) {
    if (z.ring != a) throw;
    UniPoly f(z.factor, e->zero());
    UniPoly rest = divmod(m, f).first;
    for_each_root_component(f, name, fn);
    for_each_root_component(rest, name, fn);
  }
}

SingularityType two_branch_type(const RationalPlaneCurve& c, const ParameterLocation& loc,
                                int precision) {
  int p0 = precision > 0 ? precision : kDefaultPrecision;
  if (loc.kind == ParameterLocation::Kind::Pair) {
    Branch b1 = branch_for(c, loc.pair[0], c.field());
    Branch b2 = branch_for(c, loc.pair[1], c.field());
    return {with_retries(p0, kDefaultDoublings, [&](int p) { return two_branch_index(b1, b2, p); })};
  }
  if (loc.kind != ParameterLocation::Kind::Roots || loc.poly.degree() != 2)
    throw std::invalid_argument("two-branch location must be a pair or a quadratic");
  std::vector<int> found;
  for_each_root_component(lift_poly(loc.poly, c.field()), "r",
                          [&](const FieldPtr& a, const FieldElement& th, const UniPoly& /*g*/) {
                            FieldElement other = -(a->lift(loc.poly[1]) / a->lift(loc.poly[2])) - th;
                            Branch b1 = branch_at(c, th), b2 = branch_at(c, other);
                            int n = with_retries(p0, kDefaultDoublings,
                                                 [&](int p) { return two_branch_index(b1, b2, p); });
                            found.push_back(n);
                          });
  for (int n : found)
    if (n != found.front()) throw ClassificationError("root components disagree");
  return {found.front()};
}

// ---- certificate -------------------------------------------------------

namespace {

/// True iff the preimage of P is exactly the given parameters.
bool preimages_match(const RationalPlaneCurve& c, const ProjectivePoint& p,
                     const std::vector<FieldElement>& finite, bool at_infinity, std::string& why) {
  const FieldPtr& ring = p[0].field();
  std::array<UniPoly, 3> comps;
  for (int i = 0; i < 3; ++i) comps[i] = lift_poly(c[i], ring);
  std::array<UniPoly, 3> pt{UniPoly::constant(p[0]), UniPoly::constant(p[1]), UniPoly::constant(p[2])};
  auto cr = cross(comps, pt);
  UniPoly g(ring->zero());
  bool any = false;
  for (const auto& q : cr) {
    if (q.is_zero()) continue;
    g = any ? gcd(g, q) : monic(q);
    any = true;
  }
  if (!any) {
    why = "the curve is constant";
    return false;
  }
  UniPoly expected = UniPoly::constant(ring->one());
  for (const auto& t : finite) expected *= UniPoly({-t, ring->one()}, ring->zero());
  UniPoly sf = squarefree_part(g);
  if (sf != expected) {
    why = "finite preimages of the point are the roots of " + sextic::to_string(sf, "s") +
          ", expected " + sextic::to_string(expected, "s");
    return false;
  }
  ProjectivePoint inf = evaluate_at_infinity(c);
  for (auto& v : inf) v = ring->lift(v);
  bool hits_inf = same_point(p, inf);
  if (hits_inf != at_infinity) {
    why = hits_inf ? "t = infinity is an unclaimed preimage" : "t = infinity is not a preimage";
    return false;
  }
  return true;
}

UniPoly location_poly(const ParameterLocation& l, const FieldPtr& e) {
  return UniPoly({-e->lift(l.value), e->one()}, e->zero());
}

}  // namespace

Certificate certify(const RationalPlaneCurve& c, const std::vector<SingularityClaim>& claims,
                    const CertifyOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Certificate cert;
  const FieldPtr& e = c.field();
  const int doublings = opts.max_doublings;

  try {
    int md = 0;
    TriPoly f = implicitize(c, &md);
    cert.implicit_degree = f.degree();
    cert.mapdeg = md;
    cert.degree_ok = c.degree() == 6 && f.degree() == 6 && md == 1;
    if (!cert.degree_ok)
      cert.failures.push_back("implicit degree " + std::to_string(f.degree()) + ", map degree " +
                              std::to_string(md));
  } catch (const std::exception& ex) {
    cert.failures.push_back(std::string("implicitization failed: ") + ex.what());
  }

  for (const auto& claim : claims) {
    ClaimVerdict v;
    v.claim = claim;
    const int n = claim.type.n;
    const int p0 = opts.truncation > 0 ? opts.truncation : 2 * n + 4;
    const auto& loc = claim.location;
    using K = ParameterLocation::Kind;
    bool pre_ok = true;
    std::string why;
    try {
      if (claim.type.branches() == 1) {
        auto run = [&](const Branch& b, const std::vector<FieldElement>& fin, bool inf) {
          int idx = with_retries(p0, doublings, [&](int p) { return branch_index(b, p); });
          std::string w;
          bool ok = preimages_match(c, b.point(), fin, inf, w);
          v.computed.push_back(idx);
          if (!ok) {
            pre_ok = false;
            why = w;
          }
          if (v.point.empty()) v.point = to_string(normalize_point(b.point()));
        };
        if (loc.kind == K::Infinity) {
          run(branch_at_infinity(c), {}, true);
        } else if (loc.kind == K::Finite) {
          FieldElement t0 = e->lift(loc.value);
          run(branch_at(c, t0), {t0}, false);
        } else if (loc.kind == K::Roots) {
          for_each_root_component(lift_poly(loc.poly, e), "r",
                                  [&](const FieldPtr&, const FieldElement& th, const UniPoly&) {
                                    Branch b = branch_at(c, th);
                                    int idx = with_retries(p0, doublings,
                                                           [&](int p) { return branch_index(b, p); });
                                    std::string w;
                                    bool ok = preimages_match(c, b.point(), {th}, false, w);
                                    std::string pt = to_string(normalize_point(b.point()));
                                    v.computed.push_back(idx);
                                    if (!ok) {
                                      pre_ok = false;
                                      why = w;
                                    }
                                    if (v.point.empty()) v.point = pt;
                                  });
        } else {
          throw ClassificationError("a one-branch claim cannot sit at a parameter pair");
        }
      } else {
        if (loc.kind == K::Pair) {
          Branch b1 = branch_for(c, loc.pair[0], e), b2 = branch_for(c, loc.pair[1], e);
          int idx = with_retries(p0, doublings, [&](int p) { return two_branch_index(b1, b2, p); });
          std::vector<FieldElement> fin;
          bool inf = false;
          for (const auto& l : loc.pair) {
            if (l.kind == K::Infinity) inf = true;
            else fin.push_back(e->lift(l.value));
          }
          if (inf && fin.size() != 1) throw ClassificationError("pair lists infinity twice");
          if (!inf && decide_zero(fin[0] - fin[1])) throw ClassificationError("pair entries coincide");
          pre_ok = preimages_match(c, b1.point(), fin, inf, why);
          v.computed.push_back(idx);
          v.point = to_string(normalize_point(b1.point()));
        } else if (loc.kind == K::Roots && loc.poly.degree() == 2) {
          UniPoly pp = lift_poly(loc.poly, e);
          for_each_root_component(pp, "r", [&](const FieldPtr& a, const FieldElement& th, const UniPoly&) {
            FieldElement other = -(a->lift(pp[1]) / a->lift(pp[2])) - th;
            Branch b1 = branch_at(c, th), b2 = branch_at(c, other);
            int idx = with_retries(p0, doublings, [&](int p) { return two_branch_index(b1, b2, p); });
            std::string w;
            bool ok = preimages_match(c, b1.point(), {th, other}, false, w);
            std::string pt = to_string(normalize_point(b1.point()));
            v.computed.push_back(idx);
            if (!ok) {
              pre_ok = false;
              why = w;
            }
            if (v.point.empty()) v.point = pt;
          });
        } else {
          throw ClassificationError("a two-branch claim needs a pair or a quadratic");
        }
      }
      v.preimages_ok = pre_ok;
      bool types_ok = !v.computed.empty() &&
                      std::all_of(v.computed.begin(), v.computed.end(), [&](int x) { return x == n; });
      v.ok = types_ok && pre_ok;
      if (!types_ok) {
        std::ostringstream os;
        os << "computed";
        for (int x : v.computed) os << " A_" << x;
        os << " instead of " << claim.type.name();
        v.reason = os.str();
      } else if (!pre_ok) {
        v.reason = why;
      }
    } catch (const std::exception& ex) {
      v.ok = false;
      v.reason = ex.what();
    }
    if (!v.ok)
      cert.failures.push_back(claim.type.name() + " at " + loc.to_string() + ": " + v.reason);
    cert.verdicts.push_back(std::move(v));
  }

  // Claimed parameter sets must be pairwise disjoint.
  try {
    std::vector<UniPoly> polys;
    int infinities = 0;
    for (const auto& claim : claims) {
      const auto& loc = claim.location;
      using K = ParameterLocation::Kind;
      auto add = [&](const ParameterLocation& l) {
        if (l.kind == K::Infinity) ++infinities;
        else if (l.kind == K::Finite) polys.push_back(location_poly(l, e));
        else if (l.kind == K::Roots) polys.push_back(lift_poly(l.poly, e));
      };
      if (loc.kind == K::Pair) for (const auto& l : loc.pair) add(l);
      else add(loc);
    }
    bool ok = infinities <= 1;
    for (std::size_t i = 0; ok && i < polys.size(); ++i) {
      if (squarefree_part(polys[i]).degree() != polys[i].degree()) ok = false;
      for (std::size_t j = i + 1; ok && j < polys.size(); ++j)
        if (gcd(polys[i], polys[j]).degree() > 0) ok = false;
    }
    cert.distinct_ok = ok;
    if (!ok) cert.failures.push_back("claimed parameter sets overlap");
  } catch (const std::exception& ex) {
    cert.failures.push_back(std::string("distinctness check failed: ") + ex.what());
  }

  for (const auto& claim : claims) {
    cert.sum_mu += claim.type.milnor() * claim.points();
    cert.sum_delta += claim.type.delta() * claim.points();
  }
  if (cert.sum_mu != 19) cert.failures.push_back("total Milnor number " + std::to_string(cert.sum_mu));
  if (cert.sum_delta != 10) cert.failures.push_back("total delta " + std::to_string(cert.sum_delta));

  cert.pass = cert.failures.empty() && cert.degree_ok && cert.distinct_ok &&
              std::all_of(cert.verdicts.begin(), cert.verdicts.end(), [](const auto& v) { return v.ok; });
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

// ---- discovery ---------------------------------------------------------

std::vector<SingularityType> discover_singularities(const RationalPlaneCurve& c,
                                                    const CertifyOptions& opts) {
  const FieldPtr& e = c.field();
  // Start small: most points of a dual curve are nodes and cusps, and the
  // ring components can be large.
  const int p0 = opts.truncation > 0 ? opts.truncation : 6;
  const int doublings = opts.truncation > 0 ? opts.max_doublings : 5;

  // Move a smooth point with a single preimage to t = ∞.
  RationalPlaneCurve moved;
  bool found = false;
  for (long cv = 0; cv <= 50 && !found; ++cv) {
    FieldElement t0 = e->from_integer(cv);
    Branch b = branch_at(c, t0);
    try {
      if (branch_index(b, 8) != 0) continue;
    } catch (const std::exception&) {
      continue;
    }
    std::string why;
    if (!preimages_match(c, b.point(), {t0}, false, why)) continue;
    moved = reparametrize(c, {e->from_integer(cv), e->one(), e->one(), e->zero()});
    found = true;
  }
  if (!found) throw ClassificationError("no regular parameter found to move to infinity");

  // A fixed transform keeps the pairwise eliminations below non-degenerate.
  ProjectiveMap t = ProjectiveMap::make(e, {{{1, 2, -1}, {3, -1, 2}, {2, 1, 5}}});
  RationalPlaneCurve psi = transform(t, moved);

  // Parameters where the branch is singular: ψ ∧ ψ' = 0.
  std::array<UniPoly, 3> d{derivative(psi[0]), derivative(psi[1]), derivative(psi[2])};
  UniPoly w(e->zero());
  bool any = false;
  for (const auto& q : cross(d, psi.components())) {
    if (q.is_zero()) continue;
    w = any ? gcd(w, q) : monic(q);
    any = true;
  }

  // Parameters t with a second parameter s ≠ t on the same point.
  using BiPoly = Poly<UniPoly>;
  const UniPoly uzero(e->zero());
  auto in_s = [&](const UniPoly& p) {
    std::vector<UniPoly> cs;
    for (int k = 0; k <= p.degree(); ++k) cs.push_back(UniPoly::constant(p[k]));
    return BiPoly(cs, uzero);
  };
  auto in_t = [&](const UniPoly& p) { return BiPoly::constant(p); };
  BiPoly s_minus_t({-UniPoly::variable(e->one()), UniPoly::constant(e->one())}, uzero);
  auto h = [&](int i, int j) {
    BiPoly num = in_s(psi[i]) * in_t(psi[j]) - in_s(psi[j]) * in_t(psi[i]);
    return exact_div(num, s_minus_t);
  };
  BiPoly h01 = h(0, 1), h02 = h(0, 2), h12 = h(1, 2);
  UniPoly dbl(e->zero());
  any = false;
  for (const auto& r : {resultant(h01, h02), resultant(h01, h12), resultant(h02, h12)}) {
    if (r.is_zero()) continue;
    dbl = any ? gcd(dbl, r) : monic(r);
    any = true;
  }
  if (!any) throw ClassificationError("double-point eliminants vanish identically");

  UniPoly cand = squarefree_part(w * dbl);
  std::map<int, BigRational> weight;
  if (cand.degree() < 1) return {};
  for_each_root_component(cand, "r", [&](const FieldPtr& a, const FieldElement& th, const UniPoly& g) {
    Branch b = branch_at(psi, th);
    ProjectivePoint pt = b.point();
    std::array<UniPoly, 3> comps;
    for (int i = 0; i < 3; ++i) comps[i] = lift_poly(psi[i], a);
    std::array<UniPoly, 3> pc{UniPoly::constant(pt[0]), UniPoly::constant(pt[1]), UniPoly::constant(pt[2])};
    UniPoly gg(a->zero());
    bool first = true;
    for (const auto& q : cross(comps, pc)) {
      if (q.is_zero()) continue;
      gg = first ? monic(q) : gcd(gg, q);
      first = false;
    }
    UniPoly sf = squarefree_part(gg);
    int r = sf.degree();
    int idx;
    if (r == 1) {
      idx = with_retries(p0, doublings, [&](int p) { return branch_index(b, p); });
      if (idx == 0) return;  // a smooth point: spurious candidate
    } else if (r == 2) {
      UniPoly rest = divmod(sf, UniPoly({-th, a->one()}, a->zero())).first;
      FieldElement other = -(rest[0] / rest[1]);
      Branch b2 = branch_at(psi, other);
      idx = with_retries(p0, doublings, [&](int p) { return two_branch_index(b, b2, p); });
    } else {
      throw ClassificationError("point with " + std::to_string(r) + " preimages");
    }
    weight[idx] += BigRational(g.degree(), r);
  });

  std::vector<SingularityType> out;
  for (auto it = weight.rbegin(); it != weight.rend(); ++it) {
    BigRational w8 = it->second;
    w8.canonicalize();
    if (w8.get_den() != 1) throw ClassificationError("inconsistent point count for A_" + std::to_string(it->first));
    for (long k = 0; k < w8.get_num().get_si(); ++k) out.push_back({it->first});
  }
  return out;
}

std::string multiset_name(std::vector<SingularityType> types) {
  std::sort(types.begin(), types.end(), [](const auto& a, const auto& b) { return a.n > b.n; });
  std::ostringstream os;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t j = i;
    while (j < types.size() && types[j].n == types[i].n) ++j;
    if (i) os << "+";
    if (j - i > 1) os << (j - i);
    os << types[i].name();
    i = j;
  }
  return os.str();
}

}  // namespace sextic
