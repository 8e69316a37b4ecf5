#include "sextic/series.hpp"

#include <algorithm>

namespace sextic {

TruncatedSeries::TruncatedSeries(FieldPtr field, int n) : field_(std::move(field)) {
  if (n < 1) throw std::invalid_argument("series precision must be at least 1");
  c_.assign(n, field_->zero());
}

TruncatedSeries::TruncatedSeries(std::vector<FieldElement> coeffs, int n) {
  if (n < 1 || coeffs.empty()) throw std::invalid_argument("series needs a field and precision >= 1");
  field_ = coeffs.front().field();
  coeffs.resize(n, field_->zero());
  c_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::from_poly(const Poly<FieldElement>& p, int n) {
  TruncatedSeries r(p.zero().field(), n);
  for (int i = 0; i < n && i <= p.degree(); ++i) r.c_[i] = p[i];
  return r;
}

TruncatedSeries TruncatedSeries::identity(const FieldPtr& field, int n) {
  TruncatedSeries r(field, n);
  if (n > 1) r.c_[1] = field->one();
  return r;
}

int TruncatedSeries::order() const {
  for (int i = 0; i < precision(); ++i)
    if (!decide_zero(c_[i])) return i;
  return -1;
}

int TruncatedSeries::valuation() const {
  int o = order();
  if (o < 0) throw TruncationExhausted("series vanishes to the working precision");
  return o;
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
  TruncatedSeries r = *this;
  if (n < precision()) r.c_.resize(n);
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.precision() < precision()) c_.resize(o.precision());
  for (int i = 0; i < precision(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.precision() < precision()) c_.resize(o.precision());
  for (int i = 0; i < precision(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.precision(), b.precision());
  TruncatedSeries r(a.field_, n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const FieldElement& c, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& v : r.c_) v = c * v;
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.precision(), b.precision());
  for (int i = 0; i < n; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  TruncatedSeries result(field_, precision()), b = *this;
  result.c_[0] = field_->one();
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
  if (decide_zero(c_[0])) throw std::domain_error("series with zero constant term is not a unit");
  const int n = precision();
  TruncatedSeries r(field_, n);
  FieldElement inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int k = 1; k < n; ++k) {
    FieldElement acc = field_->zero();
    for (int i = 1; i <= k; ++i)
      if (!c_[i].is_zero()) acc += c_[i] * r.c_[k - i];
    r.c_[k] = -(acc * inv0);
  }
  return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  if (!decide_zero(g.c_[0])) throw std::domain_error("composition needs g(0) = 0");
  int n = std::min(precision(), g.precision());
  TruncatedSeries gg = g.truncated(n);
  TruncatedSeries acc(field_, n);
  int top = n - 1;
  while (top > 0 && c_[top].is_zero()) --top;
  for (int i = top; i >= 0; --i) {
    acc = acc * gg;
    acc.c_[0] += c_[i];
  }
  return acc;
}

TruncatedSeries TruncatedSeries::reversion() const {
  if (!decide_zero(c_[0]) || precision() < 2 || decide_zero(c_[1]))
    throw std::domain_error("reversion needs f(0) = 0 and f'(0) a unit");
  const int n = precision();
  // f' for the Newton step.
  TruncatedSeries df(field_, n - 1);
  for (int i = 1; i < n; ++i) df.c_[i - 1] = c_[i].scaled(i);

  TruncatedSeries g(field_, std::min(2, n));
  if (n > 1) g.c_[1] = c_[1].inverse();
  for (int m = 2; m < n;) {
    int m2 = std::min(2 * m, n);
    g.c_.resize(m2, field_->zero());
    TruncatedSeries fg = truncated(m2).compose(g);
    fg -= identity(field_, m2);
    TruncatedSeries dg = df.truncated(m2).compose(g).invert_unit();
    // fg vanishes below order m, so dg is only needed to precision m2 - m.
    dg.c_.resize(m2, field_->zero());
    g -= fg * dg;
    m = m2;
  }
  return g;
}

}  // namespace sextic
