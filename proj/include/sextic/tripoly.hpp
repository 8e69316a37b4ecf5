#pragma once

// Sparse polynomials in three variables over a number field. Used both for
// homogeneous forms F(X, Y, Z) and, with the slots reinterpreted, for
// bivariate eliminations such as P(x, λ).

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sextic/numberfield.hpp"
#include "sextic/poly.hpp"

namespace sextic {

using Exponent = std::array<int, 3>;

class TriPoly {
 public:
  // Lex order with the first slot most significant; begin() is the leading term.
  using TermMap = std::map<Exponent, FieldElement, std::greater<Exponent>>;

  TriPoly() = default;
  explicit TriPoly(FieldPtr field) : field_(std::move(field)) {}

  static TriPoly constant(const FieldElement& c);
  static TriPoly monomial(const FieldElement& c, Exponent e);
  /// The variable in slot `which` (0, 1 or 2).
  static TriPoly variable(const FieldPtr& field, int which);

  const FieldPtr& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for zero.
  int degree() const;
  int degree_in(int slot) const;
  /// Smallest exponent of `slot` over all terms.
  int min_degree_in(int slot) const;
  bool is_homogeneous() const;

  FieldElement coeff(const Exponent& e) const;
  const FieldElement& leading_coeff() const;
  const Exponent& leading_exponent() const;
  void add_term(const Exponent& e, const FieldElement& c);

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly operator-() const;
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const FieldElement& s, const TriPoly& p);
  friend bool operator==(const TriPoly& a, const TriPoly& b);
  friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

  TriPoly pow(int e) const;
  /// Divides every exponent of `slot` by its minimum (removes x^k content).
  TriPoly strip_power(int slot, int* removed = nullptr) const;
  /// Evaluates at a point of the coefficient field (or an extension of it).
  FieldElement evaluate(const FieldElement& x, const FieldElement& y, const FieldElement& z) const;
  /// Substitutes polynomials for the three slots.
  TriPoly substitute(const std::array<TriPoly, 3>& images) const;
  /// Substitutes a value for one slot.
  TriPoly specialize(int slot, const FieldElement& v) const;
  /// Maps coefficients into a field that contains the current one.
  TriPoly lifted(const FieldPtr& target) const;
  TriPoly derivative(int slot) const;

  /// Scales so the leading coefficient is 1; if then all coefficients are
  /// rational, rescales to coprime integers with positive leading term.
  TriPoly normalized() const;

  std::string to_string(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

 private:
  FieldPtr field_;
  TermMap terms_;
};

bool is_zero(const TriPoly& p);
TriPoly zero_like(const TriPoly& p);
TriPoly one_like(const TriPoly& p);
TriPoly int_like(const TriPoly& p, long k);
/// Exact multivariate division; throws InexactDivision on a nonzero remainder.
TriPoly exact_div(const TriPoly& a, const TriPoly& b);
std::string to_string(const TriPoly& p);

/// Views p as a univariate polynomial in `slot` with TriPoly coefficients
/// free of that slot.
Poly<TriPoly> to_univariate(const TriPoly& p, int slot);
TriPoly from_univariate(const Poly<TriPoly>& p, int slot);

/// Resultant with respect to one slot, by the subresultant PRS.
TriPoly resultant(const TriPoly& a, const TriPoly& b, int slot);

/// Univariate bridge: a polynomial in slot `slot` only.
TriPoly from_uni(const Poly<FieldElement>& p, int slot);
/// Inverse of from_uni; throws if p involves another slot.
Poly<FieldElement> to_uni(const TriPoly& p, int slot);

/// a = c·b for a nonzero scalar c.
bool equal_up_to_unit(const TriPoly& a, const TriPoly& b);

}  // namespace sextic
