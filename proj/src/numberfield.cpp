#include "sextic/numberfield.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "sextic/poly.hpp"

namespace sextic {

BigRational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '+') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational: " + std::string(text));
  };
  if (slash == std::string::npos) {
    check_int(s);
    return BigRational(BigInt(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  BigRational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

ZeroDivisorError::ZeroDivisorError(FieldPtr r, std::vector<FieldElement> f)
    : std::runtime_error("zero divisor in " + r->describe()),
      ring(std::move(r)),
      factor(std::move(f)) {}

// ---- FieldElement ------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<BigRational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("FieldElement without a field");
  if (static_cast<int>(c_.size()) != field_->absolute_degree())
    throw std::invalid_argument("coordinate vector has the wrong length");
}

bool FieldElement::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw FieldMismatch("operands live in different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  FieldElement b = o;
  unify(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  FieldElement b = o;
  unify(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) {
    FieldElement x = a, y = b;
    unify(x, y);
    return x * y;
  }
  std::vector<BigRational> out;
  a.field_->multiply(a.c_, b.c_, out);
  return FieldElement(a.field_, std::move(out));
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  FieldElement b = o;
  unify(*this, b);
  return *this *= b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  FieldElement x = a, y = b;
  try {
    unify(x, y);
  } catch (const FieldMismatch&) {
    return false;
  }
  return x.c_ == y.c_;
}

FieldElement FieldElement::scaled(const BigRational& q) const {
  FieldElement r = *this;
  for (auto& v : r.c_) v *= q;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return FieldElement(field_, field_->invert(*this));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_->one(), b = *this;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

std::vector<FieldElement> FieldElement::over_base() const {
  const auto& base = field_->base();
  if (!base) return {*this};
  int db = base->absolute_degree();
  std::vector<FieldElement> out;
  for (int j = 0; j < field_->degree(); ++j)
    out.emplace_back(base, std::vector<BigRational>(c_.begin() + j * db, c_.begin() + (j + 1) * db));
  return out;
}

std::string FieldElement::to_string() const {
  if (!field_) return "<invalid>";
  if (field_->is_rationals()) return c_[0].get_str();
  auto parts = over_base();
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(parts.size()) - 1; j >= 0; --j) {
    if (parts[j].is_zero()) continue;
    std::string c = parts[j].to_string();
    std::string term;
    if (j == 0) {
      term = c;
    } else {
      std::string g = field_->generator_name();
      if (j > 1) g += "^" + std::to_string(j);
      bool compound = c.find_first_of("+-", 1) != std::string::npos;
      if (c == "1") term = g;
      else if (c == "-1") term = "-" + g;
      else term = (compound ? "(" + c + ")" : c) + "*" + g;
    }
    if (!first) {
      if (term[0] == '-') os << " - " << term.substr(1);
      else os << " + " << term;
    } else {
      os << term;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

// ---- NumberField -------------------------------------------------------

NumberField::NumberField() {
  groups_.push_back({{{0, BigRational(1)}}});
  pair_group_ = {0};
}

NumberField::NumberField(FieldPtr base, std::string gen, std::vector<FieldElement> minpoly)
    : base_(std::move(base)), gen_name_(std::move(gen)), minpoly_(std::move(minpoly)) {
  rel_degree_ = static_cast<int>(minpoly_.size()) - 1;
  abs_degree_ = rel_degree_ * base_->absolute_degree();
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = std::make_shared<const NumberField>();
  return q;
}

FieldPtr NumberField::extension(FieldPtr base, std::string generator,
                                std::vector<FieldElement> minpoly) {
  if (!base) throw std::invalid_argument("extension of a null field");
  for (auto& c : minpoly) {
    if (!c.valid()) throw std::invalid_argument("invalid minimal polynomial coefficient");
    c = base->lift(c);
  }
  while (!minpoly.empty() && minpoly.back().is_zero()) minpoly.pop_back();
  if (minpoly.size() < 2) throw std::invalid_argument("defining polynomial must have degree >= 1");
  FieldElement inv = minpoly.back().inverse();
  for (auto& c : minpoly) c *= inv;

  Poly<FieldElement> m(minpoly, base->zero());
  if (gcd(m, derivative(m)).degree() > 0)
    throw std::invalid_argument("defining polynomial for " + generator + " is not squarefree");

  auto field = std::make_shared<NumberField>(base, std::move(generator), std::move(minpoly));
  field->build_tables();
  return field;
}

FieldPtr NumberField::extension(std::string generator, const std::vector<BigRational>& minpoly) {
  auto q = rationals();
  std::vector<FieldElement> coeffs;
  for (const auto& c : minpoly) coeffs.push_back(q->from_rational(c));
  return extension(q, std::move(generator), std::move(coeffs));
}

namespace {

struct VecLess {
  bool operator()(const std::vector<BigRational>& a, const std::vector<BigRational>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace

void NumberField::build_tables() {
  const int d = rel_degree_;
  const int db = base_->absolute_degree();
  const int D = abs_degree_;

  auto base_mul = [&](const std::vector<BigRational>& x, const std::vector<BigRational>& y) {
    std::vector<BigRational> out;
    base_->multiply(x, y, out);
    return out;
  };

  // θ^k for k < 2d - 1 as flattened vectors.
  std::vector<std::vector<BigRational>> pw;
  for (int k = 0; k < 2 * d - 1; ++k) {
    std::vector<BigRational> v(D);
    if (k < d) {
      v[k * db] = 1;
    } else {
      const auto& prev = pw.back();
      std::vector<BigRational> top(prev.begin() + (d - 1) * db, prev.end());
      for (int j = d - 1; j >= 1; --j)
        for (int i = 0; i < db; ++i) v[j * db + i] = prev[(j - 1) * db + i];
      for (int l = 0; l < d; ++l) {
        auto t = base_mul(top, minpoly_[l].coords());
        for (int i = 0; i < db; ++i) v[l * db + i] -= t[i];
      }
    }
    pw.push_back(std::move(v));
  }

  // Base basis products b_i1 · b_i2.
  std::vector<std::vector<std::vector<BigRational>>> bb(db, std::vector<std::vector<BigRational>>(db));
  for (int i1 = 0; i1 < db; ++i1)
    for (int i2 = 0; i2 < db; ++i2) {
      std::vector<BigRational> e1(db), e2(db);
      e1[i1] = 1;
      e2[i2] = 1;
      bb[i1][i2] = base_mul(e1, e2);
    }

  std::map<std::vector<BigRational>, int, VecLess> seen;
  pair_group_.assign(static_cast<std::size_t>(D) * D, 0);
  for (int p = 0; p < D; ++p)
    for (int q = 0; q < D; ++q) {
      int j1 = p / db, i1 = p % db, j2 = q / db, i2 = q % db;
      const auto& t = pw[j1 + j2];
      std::vector<BigRational> v(D);
      for (int l = 0; l < d; ++l) {
        std::vector<BigRational> slice(t.begin() + l * db, t.begin() + (l + 1) * db);
        auto r = base_mul(slice, bb[i1][i2]);
        for (int i = 0; i < db; ++i) v[l * db + i] = r[i];
      }
      auto it = seen.find(v);
      if (it == seen.end()) {
        Group g;
        for (int k = 0; k < D; ++k)
          if (sgn(v[k]) != 0) g.expansion.emplace_back(k, v[k]);
        it = seen.emplace(std::move(v), static_cast<int>(groups_.size())).first;
        groups_.push_back(std::move(g));
      }
      pair_group_[p * D + q] = it->second;
    }
}

void NumberField::multiply(const std::vector<BigRational>& x, const std::vector<BigRational>& y,
                           std::vector<BigRational>& out) const {
  const int D = abs_degree_;
  out.assign(D, BigRational(0));
  if (D == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  std::vector<BigRational> acc(groups_.size());
  std::vector<char> used(groups_.size(), 0);
  BigRational t;
  for (int i = 0; i < D; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < D; ++j) {
      if (sgn(y[j]) == 0) continue;
      int g = pair_group_[i * D + j];
      t = x[i] * y[j];
      acc[g] += t;
      used[g] = 1;
    }
  }
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (!used[g] || sgn(acc[g]) == 0) continue;
    for (const auto& [k, c] : groups_[g].expansion) {
      t = acc[g] * c;
      out[k] += t;
    }
  }
}

std::vector<BigRational> NumberField::invert(const FieldElement& x) const {
  const int D = abs_degree_;
  const auto& xc = x.coords();
  if (D == 1) return {1 / xc[0]};

  // Column j of M is x · e_j; solve M y = e_0.
  std::vector<std::vector<BigRational>> m(D, std::vector<BigRational>(D + 1));
  std::vector<BigRational> e(D), col;
  for (int j = 0; j < D; ++j) {
    e.assign(D, BigRational(0));
    e[j] = 1;
    multiply(xc, e, col);
    for (int i = 0; i < D; ++i) m[i][j] = col[i];
  }
  m[0][D] = 1;

  for (int c = 0; c < D; ++c) {
    int piv = -1;
    for (int r = c; r < D; ++r)
      if (sgn(m[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      // Not invertible: the gcd with the defining polynomial is a proper
      // factor. If the base is itself not a field, computing this gcd may
      // raise a ZeroDivisorError for the base first, which is what we want.
      Poly<FieldElement> rep(x.over_base(), base_->zero());
      Poly<FieldElement> mp(minpoly_, base_->zero());
      Poly<FieldElement> g = gcd(rep, mp);
      throw ZeroDivisorError(shared_from_this(), g.coeffs());
    }
    std::swap(m[piv], m[c]);
    BigRational inv = 1 / m[c][c];
    for (int k = c; k <= D; ++k) m[c][k] *= inv;
    for (int r = 0; r < D; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      BigRational f = m[r][c];
      for (int k = c; k <= D; ++k)
        if (sgn(m[c][k]) != 0) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<BigRational> y(D);
  for (int i = 0; i < D; ++i) y[i] = m[i][D];
  return y;
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<BigRational>(abs_degree_));
}

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::from_rational(const BigRational& q) const {
  std::vector<BigRational> c(abs_degree_);
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::generator() const {
  if (is_rationals()) throw std::logic_error("Q has no generator");
  std::vector<BigRational> c(abs_degree_);
  if (rel_degree_ == 1) {
    // θ = -m_0 when the defining polynomial is linear.
    auto v = (-minpoly_[0]).coords();
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
  } else {
    c[base_->absolute_degree()] = 1;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_base_coords(const std::vector<FieldElement>& coeffs) const {
  if (is_rationals()) {
    if (coeffs.empty()) return zero();
    if (coeffs.size() > 1) throw std::invalid_argument("Q has no generator");
    return lift(coeffs[0]);
  }
  const int db = base_->absolute_degree();
  if (static_cast<int>(coeffs.size()) <= rel_degree_) {
    std::vector<BigRational> c(abs_degree_);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      auto b = base_->lift(coeffs[j]);
      for (int i = 0; i < db; ++i) c[j * db + i] = b.coords()[i];
    }
    return FieldElement(shared_from_this(), std::move(c));
  }
  FieldElement acc = zero(), g = generator();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * g + lift(*it);
  return acc;
}

bool NumberField::contains(const FieldPtr& f) const {
  if (f.get() == this) return true;
  return base_ && base_->contains(f);
}

FieldElement NumberField::lift(const FieldElement& x) const {
  if (x.field().get() == this) return x;
  if (!base_ || !base_->contains(x.field()))
    throw FieldMismatch("cannot embed an element of " + x.field()->describe() + " into " +
                        describe());
  FieldElement y = base_->lift(x);
  std::vector<BigRational> c(abs_degree_);
  for (std::size_t i = 0; i < y.coords().size(); ++i) c[i] = y.coords()[i];
  return FieldElement(shared_from_this(), std::move(c));
}

std::vector<std::string> NumberField::generator_names() const {
  if (!base_) return {};
  auto names = base_->generator_names();
  names.push_back(gen_name_);
  return names;
}

std::string NumberField::describe() const {
  if (!base_) return "Q";
  std::vector<FieldElement> mp = minpoly_;
  Poly<FieldElement> m(mp, base_->zero());
  return base_->describe() + "[" + gen_name_ + "]/(" + sextic::to_string(m, gen_name_) + ")";
}

// ---- free functions ----------------------------------------------------

void unify(FieldElement& a, FieldElement& b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("operation on an invalid element");
  if (a.field() == b.field()) return;
  if (a.field()->contains(b.field())) {
    b = a.field()->lift(b);
  } else if (b.field()->contains(a.field())) {
    a = b.field()->lift(a);
  } else {
    throw FieldMismatch("operands live in unrelated fields: " + a.field()->describe() + " and " +
                        b.field()->describe());
  }
}

bool decide_zero(const FieldElement& x) {
  if (x.is_zero()) return true;
  (void)x.inverse();
  return false;
}

FieldElement map_element(const FieldElement& x, const std::vector<FieldElement>& images,
                         const FieldPtr& target) {
  const auto& f = x.field();
  if (f->is_rationals()) return target->from_rational(x.coords()[0]);
  auto parts = x.over_base();
  int level = f->height() - 1;
  FieldElement acc = target->zero();
  for (int j = static_cast<int>(parts.size()) - 1; j >= 0; --j) {
    if (j < static_cast<int>(parts.size()) - 1 || !parts[j].is_zero()) {
      if (j < static_cast<int>(parts.size()) - 1 && !acc.is_zero()) {
        if (level >= static_cast<int>(images.size()) || !images[level].valid())
          throw std::invalid_argument("no image given for generator " + f->generator_name());
        acc = acc * target->lift(images[level]);
      }
      acc += map_element(parts[j], images, target);
    }
  }
  return acc;
}

}  // namespace sextic
