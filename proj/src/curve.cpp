#include "sextic/curve.hpp"

#include <algorithm>

namespace sextic {

Mobius Mobius::make(const FieldPtr& f, long a, long b, long c, long d) {
  return {f->from_integer(a), f->from_integer(b), f->from_integer(c), f->from_integer(d)};
}

ProjectiveMap ProjectiveMap::make(const FieldPtr& f,
                                  const std::array<std::array<long, 3>, 3>& entries) {
  ProjectiveMap t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.m[i][j] = f->from_integer(entries[i][j]);
  return t;
}

FieldElement ProjectiveMap::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<UniPoly, 3> remove_common_factor(std::array<UniPoly, 3> comps) {
  UniPoly g(comps[0].zero());
  bool any = false;
  for (const auto& c : comps) {
    if (c.is_zero()) continue;
    g = any ? gcd(g, c) : monic(c);
    any = true;
  }
  if (!any) throw DegenerateCurve("all components vanish identically");
  if (g.degree() > 0)
    for (auto& c : comps) c = divmod(c, g).first;
  return comps;
}

RationalPlaneCurve::RationalPlaneCurve(std::array<UniPoly, 3> comps, int declared_degree)
    : comps_(std::move(comps)) {
  FieldPtr f;
  for (const auto& c : comps_) {
    FieldPtr g = c.zero().field();
    if (!g) throw std::invalid_argument("curve component without a field");
    if (!f || g->contains(f)) f = g;
  }
  for (auto& c : comps_) c = c.map([&](const FieldElement& v) { return f->lift(v); });

  auto reduced = remove_common_factor(comps_);
  for (int i = 0; i < 3; ++i)
    if (reduced[i].degree() != comps_[i].degree())
      throw DegenerateCurve("components share a common factor");
  degree_ = 0;
  for (const auto& c : comps_) degree_ = std::max(degree_, c.degree());
  if (degree_ < 1) throw DegenerateCurve("constant parametrization");
  if (declared_degree >= 0 && declared_degree != degree_)
    throw DegenerateCurve("declared degree " + std::to_string(declared_degree) +
                          " differs from the parametrization degree " + std::to_string(degree_));
}

RationalPlaneCurve RationalPlaneCurve::lifted(const FieldPtr& target) const {
  std::array<UniPoly, 3> c;
  for (int i = 0; i < 3; ++i) c[i] = comps_[i].map([&](const FieldElement& v) { return target->lift(v); });
  return RationalPlaneCurve(std::move(c));
}

namespace {

// Number of parameters over a generic point: common roots of the minors
// of (C(t), C(t0)), minimized over a few t0.
int map_degree(const RationalPlaneCurve& c) {
  const FieldPtr& f = c.field();
  int best = c.degree();
  for (long t0 : {2, 3, 5, 7, 11}) {
    FieldElement v = f->from_integer(t0);
    std::array<FieldElement, 3> p{eval(c[0], v), eval(c[1], v), eval(c[2], v)};
    UniPoly g(f->zero());
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) g = gcd(g, p[j] * c[i] - p[i] * c[j]);
    if (!g.is_zero()) best = std::min(best, g.degree());
  }
  return best;
}

// F with r = F^m up to a constant, term by term from the top in lex order.
TriPoly power_root(const TriPoly& r, int m) {
  const FieldPtr& f = r.field();
  TriPoly monic = r.leading_coeff().inverse() * r;
  Exponent e0 = monic.leading_exponent();
  for (int& k : e0) {
    if (k % m) throw InexactDivision("the resultant is not a power");
    k /= m;
  }
  TriPoly root = TriPoly::monomial(f->one(), e0);
  const FieldElement inv_m = f->from_integer(m).inverse();
  const Exponent lead{(m - 1) * e0[0], (m - 1) * e0[1], (m - 1) * e0[2]};
  for (std::size_t guard = 0; guard <= monic.size() * 4 + 8; ++guard) {
    TriPoly rem = monic - root.pow(m);
    if (rem.is_zero()) return root;
    const Exponent& le = rem.leading_exponent();
    Exponent d{le[0] - lead[0], le[1] - lead[1], le[2] - lead[2]};
    if (d[0] < 0 || d[1] < 0 || d[2] < 0 || !(d < e0)) break;
    root.add_term(d, rem.leading_coeff() * inv_m);
  }
  throw InexactDivision("the resultant is not a power");
}

}  // namespace

TriPoly implicitize(const RationalPlaneCurve& c, int* mapdeg) {
  const FieldPtr& f = c.field();
  TriPoly X = TriPoly::variable(f, 0), Y = TriPoly::variable(f, 1);
  TriPoly x = from_uni(c[0], 2), y = from_uni(c[1], 2), z = from_uni(c[2], 2);
  TriPoly r = resultant(x - z * X, y - z * Y, 2);
  int d = r.degree();
  if (r.is_zero() || d < 1) throw DegenerateCurve("the image is not a curve");
  TriPoly h(f);
  for (const auto& [e, v] : r.terms()) h.add_term({e[0], e[1], d - e[0] - e[1]}, v);
  // A parametrization of degree m onto its image gives F^m.
  int m = map_degree(c);
  if (m > 1) h = power_root(h, m);
  if (mapdeg) *mapdeg = m;
  return h.normalized();
}

RationalPlaneCurve dual(const RationalPlaneCurve& c) {
  std::array<UniPoly, 3> d{derivative(c[0]), derivative(c[1]), derivative(c[2])};
  auto w = cross(d, c.components());
  for (const auto& p : w)
    if (!p.is_zero()) return RationalPlaneCurve(remove_common_factor(w));
  throw DegenerateCurve("the curve is a line");
}

RationalPlaneCurve reparametrize(const RationalPlaneCurve& c, const Mobius& m) {
  FieldPtr f = c.field();
  FieldElement a = f->lift(m.alpha), b = f->lift(m.beta), g = f->lift(m.gamma), d = f->lift(m.delta);
  if (decide_zero(a * d - b * g)) throw std::invalid_argument("singular Möbius map");
  const int n = c.degree();
  UniPoly num({b, a}, f->zero()), den({d, g}, f->zero());
  std::vector<UniPoly> pn{UniPoly::constant(f->one())}, pd{UniPoly::constant(f->one())};
  for (int k = 1; k <= n; ++k) {
    pn.push_back(pn.back() * num);
    pd.push_back(pd.back() * den);
  }
  std::array<UniPoly, 3> out;
  for (int i = 0; i < 3; ++i) {
    UniPoly acc(f->zero());
    for (int k = 0; k <= c[i].degree(); ++k)
      if (!c[i][k].is_zero()) acc += c[i][k] * (pn[k] * pd[n - k]);
    out[i] = acc;
  }
  return RationalPlaneCurve(remove_common_factor(out));
}

RationalPlaneCurve transform(const ProjectiveMap& t, const RationalPlaneCurve& c) {
  FieldPtr f = c.field();
  for (const auto& row : t.m)
    for (const auto& v : row)
      if (!f->contains(v.field())) f = v.field();
  std::array<UniPoly, 3> out;
  for (int i = 0; i < 3; ++i) {
    UniPoly acc(f->zero());
    for (int j = 0; j < 3; ++j) acc += f->lift(t.m[i][j]) * c[j].map([&](const FieldElement& v) { return f->lift(v); });
    out[i] = acc;
  }
  return RationalPlaneCurve(remove_common_factor(out));
}

bool verify_symmetry(const RationalPlaneCurve& c, const ProjectiveMap& t, const Mobius& m) {
  RationalPlaneCurve lhs = reparametrize(c, m);
  RationalPlaneCurve rhs = transform(t, c);
  FieldPtr f = rhs.field()->contains(lhs.field()) ? rhs.field() : lhs.field();
  lhs = lhs.lifted(f);
  rhs = rhs.lifted(f);
  for (const auto& p : cross(lhs.components(), rhs.components()))
    if (!p.is_zero()) return false;
  return true;
}

std::optional<ProjectiveMap> match_parametrizations(const RationalPlaneCurve& a,
                                                    const RationalPlaneCurve& b) {
  FieldPtr f = a.field();
  const int rows = std::max(a.degree(), b.degree()) + 1;
  ProjectiveMap t;
  for (int i = 0; i < 3; ++i) {
    // Row i of T solves  sum_j T_ij a_j = b_i  coefficientwise.
    std::vector<std::array<FieldElement, 4>> m(rows);
    for (int k = 0; k < rows; ++k) m[k] = {a[0][k], a[1][k], a[2][k], f->lift(b[i][k])};
    int r = 0;
    std::array<int, 3> pivot_row{-1, -1, -1};
    for (int c = 0; c < 3 && r < rows; ++c) {
      int p = r;
      while (p < rows && decide_zero(m[p][c])) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[r]);
      FieldElement inv = m[r][c].inverse();
      for (auto& v : m[r]) v = v * inv;
      for (int k = 0; k < rows; ++k) {
        if (k == r || m[k][c].is_zero()) continue;
        FieldElement s = m[k][c];
        for (int j = 0; j < 4; ++j) m[k][j] -= s * m[r][j];
      }
      pivot_row[c] = r++;
    }
    for (int k = r; k < rows; ++k)
      if (!decide_zero(m[k][3])) return std::nullopt;
    for (int c = 0; c < 3; ++c) t.m[i][c] = pivot_row[c] < 0 ? f->zero() : m[pivot_row[c]][3];
  }
  if (decide_zero(t.determinant())) return std::nullopt;
  return t;
}

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q) {
  for (const auto& v : cross(p, q))
    if (!decide_zero(v)) return false;
  return true;
}

ProjectivePoint normalize_point(const ProjectivePoint& p) {
  for (int i = 0; i < 3; ++i)
    if (!decide_zero(p[i])) {
      FieldElement inv = p[i].inverse();
      return {p[0] * inv, p[1] * inv, p[2] * inv};
    }
  throw DegenerateCurve("all coordinates of the point vanish");
}

std::string to_string(const ProjectivePoint& p) {
  return "(" + p[0].to_string() + " : " + p[1].to_string() + " : " + p[2].to_string() + ")";
}

ProjectivePoint evaluate(const RationalPlaneCurve& c, const FieldElement& t) {
  ProjectivePoint p;
  for (int i = 0; i < 3; ++i) {
    UniPoly ci = c[i].map([&](const FieldElement& v) { return t.field()->lift(v); });
    p[i] = eval(ci, t);
  }
  return p;
}

ProjectivePoint evaluate_at_infinity(const RationalPlaneCurve& c) {
  return {c[0][c.degree()], c[1][c.degree()], c[2][c.degree()]};
}

}  // namespace sextic
