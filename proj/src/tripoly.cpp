#include "sextic/tripoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sextic {

namespace {

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->contains(b)) return a;
  if (b->contains(a)) return b;
  throw FieldMismatch("polynomials over unrelated fields");
}

bool divides(const Exponent& d, const Exponent& e) {
  return d[0] <= e[0] && d[1] <= e[1] && d[2] <= e[2];
}

}  // namespace

TriPoly TriPoly::constant(const FieldElement& c) { return monomial(c, {0, 0, 0}); }

TriPoly TriPoly::monomial(const FieldElement& c, Exponent e) {
  TriPoly p(c.field());
  p.add_term(e, c);
  return p;
}

TriPoly TriPoly::variable(const FieldPtr& field, int which) {
  Exponent e{0, 0, 0};
  e[which] = 1;
  return monomial(field->one(), e);
}

int TriPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int TriPoly::degree_in(int slot) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[slot]);
  return d;
}

int TriPoly::min_degree_in(int slot) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[slot];
  for (const auto& [e, c] : terms_) d = std::min(d, e[slot]);
  return d;
}

bool TriPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = e[0] + e[1] + e[2];
    if (d < 0) d = s;
    else if (s != d) return false;
  }
  return true;
}

FieldElement TriPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_->zero() : it->second;
}

const FieldElement& TriPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero");
  return terms_.begin()->second;
}

const Exponent& TriPoly::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("leading exponent of zero");
  return terms_.begin()->first;
}

void TriPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  FieldPtr f = common_field(field_, c.field());
  if (f != field_) *this = lifted(f);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, field_->lift(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TriPoly TriPoly::lifted(const FieldPtr& target) const {
  if (target == field_) return *this;
  TriPoly r(target);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, target->lift(c));
  return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  if (!field_) field_ = o.field_;
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  if (!field_) field_ = o.field_;
  return *this;
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r(common_field(a.field_, b.field_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TriPoly operator*(const FieldElement& s, const TriPoly& p) {
  TriPoly r(common_field(p.field_, s.field()));
  if (s.is_zero()) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, r.field_->lift(s * c));
  return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

TriPoly TriPoly::pow(int e) const {
  TriPoly result = TriPoly::constant(field_->one()), b = *this;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

TriPoly TriPoly::strip_power(int slot, int* removed) const {
  int k = min_degree_in(slot);
  if (removed) *removed = k;
  if (k == 0) return *this;
  TriPoly r(field_);
  for (const auto& [key, c] : terms_) {
    Exponent e = key;
    e[slot] -= k;
    r.terms_.emplace(e, c);
  }
  return r;
}

FieldElement TriPoly::evaluate(const FieldElement& x, const FieldElement& y,
                               const FieldElement& z) const {
  FieldElement acc = x.field()->zero();
  for (const auto& [e, c] : terms_) acc += c * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
  return acc;
}

TriPoly TriPoly::substitute(const std::array<TriPoly, 3>& images) const {
  TriPoly r(field_);
  // Cache powers of the images.
  std::array<std::vector<TriPoly>, 3> pw;
  for (int s = 0; s < 3; ++s) {
    pw[s].push_back(TriPoly::constant(field_->one()));
    for (int k = 1; k <= degree_in(s); ++k) pw[s].push_back(pw[s].back() * images[s]);
  }
  for (const auto& [e, c] : terms_) r += c * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
  return r;
}

TriPoly TriPoly::specialize(int slot, const FieldElement& v) const {
  TriPoly r(common_field(field_, v.field()));
  std::vector<FieldElement> pw{r.field_->one()};
  for (const auto& [key, c] : terms_) {
    Exponent e = key;
    while (static_cast<int>(pw.size()) <= e[slot]) pw.push_back(pw.back() * v);
    FieldElement cc = c * pw[e[slot]];
    e[slot] = 0;
    r.add_term(e, cc);
  }
  return r;
}

TriPoly TriPoly::derivative(int slot) const {
  TriPoly r(field_);
  for (const auto& [key, c] : terms_) {
    Exponent e = key;
    if (e[slot] == 0) continue;
    FieldElement cc = c.scaled(e[slot]);
    e[slot] -= 1;
    r.add_term(e, cc);
  }
  return r;
}

TriPoly TriPoly::normalized() const {
  if (terms_.empty()) return *this;
  TriPoly r = leading_coeff().inverse() * *this;
  bool rational = std::all_of(r.terms_.begin(), r.terms_.end(),
                              [](const auto& t) { return t.second.is_rational(); });
  if (!rational) return r;
  BigInt den = 1, num = 0;
  for (const auto& [e, c] : r.terms_) {
    const BigRational& q = c.rational_part();
    den = lcm(den, BigInt(q.get_den()));
  }
  for (const auto& [e, c] : r.terms_) {
    BigRational q = c.rational_part() * den;
    num = gcd(num, BigInt(q.get_num()));
  }
  return r.field_->from_rational(BigRational(den) / BigRational(num)) * r;
}

std::string TriPoly::to_string(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int s = 0; s < 3; ++s) {
      if (e[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[s];
      if (e[s] > 1) mono += "^" + std::to_string(e[s]);
    }
    std::string cs = c.to_string();
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
    else if (cs == "1") term = mono;
    else if (cs == "-1") term = "-" + mono;
    else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (first) os << term;
    else if (term[0] == '-') os << " - " << term.substr(1);
    else os << " + " << term;
    first = false;
  }
  return os.str();
}

bool is_zero(const TriPoly& p) { return p.is_zero(); }
TriPoly zero_like(const TriPoly& p) { return TriPoly(p.field()); }
TriPoly one_like(const TriPoly& p) { return TriPoly::constant(p.field()->one()); }
TriPoly int_like(const TriPoly& p, long k) { return TriPoly::constant(p.field()->from_integer(k)); }
std::string to_string(const TriPoly& p) { return p.to_string(); }

TriPoly exact_div(const TriPoly& a, const TriPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  TriPoly q(a.field()), r = a;
  if (b.size() == 1) {
    // Monomial divisor: divide term by term.
    const auto& eb = b.leading_exponent();
    FieldElement inv = b.leading_coeff().inverse();
    for (const auto& [e, c] : a.terms()) {
      if (!divides(eb, e)) throw InexactDivision("polynomial division is not exact");
      q.add_term({e[0] - eb[0], e[1] - eb[1], e[2] - eb[2]}, c * inv);
    }
    return q;
  }
  const Exponent lb = b.leading_exponent();
  const FieldElement inv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Exponent le = r.leading_exponent();
    if (!divides(lb, le)) throw InexactDivision("polynomial division is not exact");
    Exponent d{le[0] - lb[0], le[1] - lb[1], le[2] - lb[2]};
    FieldElement c = r.leading_coeff() * inv;
    q.add_term(d, c);
    for (const auto& [eb, cb] : b.terms()) r.add_term({eb[0] + d[0], eb[1] + d[1], eb[2] + d[2]}, -(c * cb));
  }
  return q;
}

Poly<TriPoly> to_univariate(const TriPoly& p, int slot) {
  std::vector<TriPoly> coeffs(std::max(p.degree_in(slot) + 1, 0), TriPoly(p.field()));
  for (const auto& [key, c] : p.terms()) {
    Exponent e = key;
    int k = e[slot];
    e[slot] = 0;
    coeffs[k].add_term(e, c);
  }
  return Poly<TriPoly>(std::move(coeffs), TriPoly(p.field()));
}

TriPoly from_univariate(const Poly<TriPoly>& p, int slot) {
  TriPoly r(p.zero().field());
  for (int k = 0; k <= p.degree(); ++k)
    for (const auto& [key, c] : p[k].terms()) {
    Exponent e = key;
      e[slot] += k;
      r.add_term(e, c);
    }
  return r;
}

TriPoly resultant(const TriPoly& a, const TriPoly& b, int slot) {
  return resultant(to_univariate(a, slot), to_univariate(b, slot));
}

TriPoly from_uni(const Poly<FieldElement>& p, int slot) {
  TriPoly r(p.zero().field());
  for (int k = 0; k <= p.degree(); ++k) {
    Exponent e{0, 0, 0};
    e[slot] = k;
    r.add_term(e, p[k]);
  }
  return r;
}

Poly<FieldElement> to_uni(const TriPoly& p, int slot) {
  std::vector<FieldElement> c(std::max(p.degree_in(slot) + 1, 0), p.field()->zero());
  for (const auto& [e, v] : p.terms()) {
    for (int s = 0; s < 3; ++s)
      if (s != slot && e[s] != 0) throw std::invalid_argument("polynomial is not univariate");
    c[e[slot]] = v;
  }
  return Poly<FieldElement>(std::move(c), p.field()->zero());
}

bool equal_up_to_unit(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size() || a.leading_exponent() != b.leading_exponent()) return false;
  return b.leading_coeff() * a == a.leading_coeff() * b;
}

}  // namespace sextic
