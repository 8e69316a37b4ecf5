#pragma once

// Dense univariate polynomials over a commutative ring R.
//
// R must provide the free functions is_zero, zero_like, one_like, int_like
// and exact_div (exact division in an integral domain, true division in a
// field). FieldElement, TriPoly and Poly<R> itself satisfy this.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sextic {

struct InexactDivision : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {
// Out-of-class so that the member Poly::is_zero does not hide the free
// functions found by argument-dependent lookup.
template <class T>
bool ring_is_zero(const T& x) { return is_zero(x); }
}  // namespace detail

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(R zero) : zero_(zero_like(zero)) {}
  Poly(std::vector<R> coeffs, const R& like) : c_(std::move(coeffs)), zero_(zero_like(like)) {
    trim();
  }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}, c); }
  static Poly monomial(const R& c, int degree) {
    std::vector<R> v(degree + 1, zero_like(c));
    v[degree] = c;
    return Poly(std::move(v), c);
  }
  /// The polynomial t over the ring of `like`.
  static Poly variable(const R& like) { return monomial(one_like(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& zero() const { return zero_; }
  R one() const { return one_like(zero_); }

  const R& operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero_;
  }
  const R& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  /// Replaces coefficient i, growing the vector as needed.
  void set(int i, const R& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, zero_);
    c_[i] = v;
    trim();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (detail::ring_is_zero(b.c_[j])) continue;
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(out), a.zero_);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const R& s, const Poly& p) {
    if (detail::ring_is_zero(s)) return Poly(p.zero_);
    std::vector<R> out = p.c_;
    for (auto& v : out) v = s * v;
    return Poly(std::move(out), p.zero_);
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Multiplies by t^k.
  Poly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<R> out(k, zero_);
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out), zero_);
  }

  /// Coefficients reversed with respect to `n`: t^n · p(1/t).
  Poly reversed(int n) const {
    std::vector<R> out(n + 1, zero_);
    for (int i = 0; i <= degree(); ++i) out[n - i] = c_[i];
    return Poly(std::move(out), zero_);
  }

  template <class F>
  auto map(F&& f) const {
    using S = decltype(f(zero_));
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(f(v));
    return Poly<S>(std::move(out), f(zero_));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::ring_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
  R zero_{};
};

template <class R>
bool is_zero(const Poly<R>& p) { return p.is_zero(); }
template <class R>
Poly<R> zero_like(const Poly<R>& p) { return Poly<R>(p.zero()); }
template <class R>
Poly<R> one_like(const Poly<R>& p) { return Poly<R>::constant(p.one()); }
template <class R>
Poly<R> int_like(const Poly<R>& p, long k) {
  return Poly<R>(std::vector<R>{int_like(p.zero(), k)}, p.zero());
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
  if (p.degree() < 1) return Poly<R>(p.zero());
  std::vector<R> out;
  out.reserve(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out.push_back(int_like(p.zero(), i) * p[i]);
  return Poly<R>(std::move(out), p.zero());
}

/// Horner evaluation at a point of the coefficient ring.
template <class R>
R eval(const Poly<R>& p, const R& x) {
  R acc = p.zero();
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

/// p(q(t)).
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc(p.zero());
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<R>::constant(p[i]);
  return acc;
}

template <class R>
R pow(const R& base, int e) {
  R result = one_like(base);
  R b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) · a = q·b + r.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero");
  Poly<R> r = a;
  int e = a.degree() - b.degree() + 1;
  if (e <= 0) return r;
  const R& lb = b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly<R> t = Poly<R>::monomial(r.lc(), r.degree() - b.degree());
    r = lb * r - t * b;
    --e;
  }
  if (e > 0) r = pow(lb, e) * r;
  return r;
}

/// Exact quotient a / b over an integral domain; throws InexactDivision when
/// b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw InexactDivision("polynomial division is not exact");
  std::vector<R> q(a.degree() - b.degree() + 1, a.zero());
  Poly<R> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    R c = exact_div(r.lc(), b.lc());
    q[k] = c;
    r -= (c * b).shifted(k);
  }
  if (!r.is_zero()) throw InexactDivision("polynomial division is not exact");
  return Poly<R>(std::move(q), a.zero());
}

/// Resultant by the subresultant pseudo-remainder sequence; exact over any
/// integral domain. Res(a, b) = lc(a)^deg b · Π b(α) over the roots α of a.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("resultant of two zero polynomials");
    return a.is_zero() ? b.zero() : a.zero();
  }
  R sign = one_like(a.zero());
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() * b.degree()) % 2 == 1) sign = -sign;
  }
  if (b.degree() == 0) return sign * pow(b.lc(), a.degree());
  R g = one_like(a.zero());
  R h = one_like(a.zero());
  for (;;) {
    int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    Poly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return a.zero();
    a = std::move(b);
    R divisor = g * pow(h, delta);
    b = r.map([&](const R& c) { return exact_div(c, divisor); });
    g = a.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div(pow(g, delta), pow(h, delta - 1));
    }
    if (b.degree() == 0) {
      R hh = exact_div(pow(b.lc(), a.degree()), pow(h, a.degree() - 1));
      return sign * hh;
    }
  }
}

/// Discr(f) = (-1)^(n(n-1)/2) · Res(f, f') / lc(f).
template <class R>
R discriminant(const Poly<R>& f) {
  int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant of a constant polynomial");
  if (n == 1) return one_like(f.zero());
  R d = exact_div(resultant(f, derivative(f)), f.lc());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

// ---- Operations over a coefficient field -------------------------------

template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly<R>(a.zero()), a};
  R inv = exact_div(one_like(b.lc()), b.lc());
  std::vector<R> q(a.degree() - b.degree() + 1, a.zero());
  Poly<R> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    R c = r.lc() * inv;
    q[k] = c;
    r -= (c * b).shifted(k);
  }
  return {Poly<R>(std::move(q), a.zero()), r};
}

template <class R>
Poly<R> rem(const Poly<R>& a, const Poly<R>& b) { return divmod(a, b).second; }

template <class R>
Poly<R> monic(const Poly<R>& p) {
  if (p.is_zero()) return p;
  R inv = exact_div(one_like(p.lc()), p.lc());
  return inv * p;
}

/// Monic greatest common divisor over a field.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly<R> r = rem(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// Extended Euclid: returns (g, s, u) with s·a + u·b = g, g monic.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> extended_gcd(Poly<R> a, Poly<R> b) {
  Poly<R> s0 = Poly<R>::constant(a.one()), s1(a.zero());
  Poly<R> u0(a.zero()), u1 = Poly<R>::constant(a.one());
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    Poly<R> s2 = s0 - q * s1, u2 = u0 - q * u1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  R inv = exact_div(one_like(a.lc()), a.lc());
  return {inv * a, inv * s0, inv * u0};
}

template <class R>
struct SquarefreeFactor {
  Poly<R> factor;  // monic, squarefree
  int multiplicity;
};

/// Yun's algorithm (characteristic zero): f = lc(f) · Π A_i^i with the A_i
/// monic, squarefree and pairwise coprime. Constant A_i are omitted.
template <class R>
std::vector<SquarefreeFactor<R>> squarefree_decomposition(const Poly<R>& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<SquarefreeFactor<R>> out;
  if (f.degree() == 0) return out;
  Poly<R> fp = derivative(f);
  Poly<R> b = gcd(f, fp);
  Poly<R> c = divmod(f, b).first;
  Poly<R> d = divmod(fp, b).first - derivative(c);
  for (int i = 1; c.degree() > 0; ++i) {
    Poly<R> a = gcd(c, d);
    c = divmod(c, a).first;
    d = divmod(d, a).first - derivative(c);
    if (a.degree() > 0) out.push_back({monic(a), i});
  }
  return out;
}

/// Monic squarefree part (product of the distinct monic irreducible factors).
template <class R>
Poly<R> squarefree_part(const Poly<R>& f) {
  if (f.degree() < 1) return Poly<R>::constant(f.one());
  return monic(divmod(f, gcd(f, derivative(f))).first);
}

/// Two polynomials are equal up to unit when one is a nonzero constant
/// multiple of the other.
template <class R>
bool equal_up_to_unit(const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return b.lc() * a == a.lc() * b;
}

template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (is_zero(p[i])) continue;
    std::string c = to_string(p[i]);
    bool compound = c.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (i == 0) {
      term = compound ? "(" + c + ")" : c;
    } else {
      std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
      if (c == "1") term = mono;
      else if (c == "-1") term = "-" + mono;
      else term = (compound ? "(" + c + ")" : c) + "*" + mono;
    }
    if (first) os << term;
    else if (term[0] == '-') os << " - " << term.substr(1);
    else os << " + " << term;
    first = false;
  }
  return os.str();
}

}  // namespace sextic
