#pragma once

// Truncated power series in s over a number field (or a product of number
// fields; zero tests go through decide_zero so that a zero divisor splits
// the computation instead of being mistaken for zero or a unit).

#include <stdexcept>
#include <vector>

#include "sextic/numberfield.hpp"
#include "sextic/poly.hpp"

namespace sextic {

struct TruncationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Zero series with coefficients 0..n-1 known.
  TruncatedSeries(FieldPtr field, int n);
  TruncatedSeries(std::vector<FieldElement> coeffs, int n);
  /// The polynomial p viewed as a series known to order n.
  static TruncatedSeries from_poly(const Poly<FieldElement>& p, int n);
  /// The series s.
  static TruncatedSeries identity(const FieldPtr& field, int n);

  int precision() const { return static_cast<int>(c_.size()); }
  const FieldPtr& field() const { return field_; }
  const FieldElement& operator[](int i) const { return c_.at(i); }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  /// Index of the first nonzero coefficient, or -1 if every known
  /// coefficient vanishes. May raise ZeroDivisorError.
  int order() const;
  /// As order(), but throws TruncationExhausted instead of returning -1.
  int valuation() const;

  TruncatedSeries truncated(int n) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const FieldElement& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries pow(int e) const;
  /// 1/f for f(0) a unit.
  TruncatedSeries invert_unit() const;
  /// f(g) for g(0) = 0.
  TruncatedSeries compose(const TruncatedSeries& g) const;
  /// The compositional inverse of f with f(0) = 0 and f'(0) a unit.
  TruncatedSeries reversion() const;

 private:
  FieldPtr field_;
  std::vector<FieldElement> c_;
};

}  // namespace sextic
