#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/tripoly.hpp"

namespace sextic {

using UniPoly = Poly<FieldElement>;

struct DegenerateCurve : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// t ↦ (αt + β)/(γt + δ).
struct Mobius {
  FieldElement alpha, beta, gamma, delta;
  static Mobius make(const FieldPtr& f, long a, long b, long c, long d);
};

/// Linear map of the projective plane, acting on column vectors (x, y, z).
struct ProjectiveMap {
  std::array<std::array<FieldElement, 3>, 3> m;
  static ProjectiveMap make(const FieldPtr& f, const std::array<std::array<long, 3>, 3>& entries);
  FieldElement determinant() const;
};

/// (x(t) : y(t) : z(t)) with no common factor.
class RationalPlaneCurve {
 public:
  RationalPlaneCurve() = default;
  /// Throws DegenerateCurve when the components share a factor, all vanish,
  /// or the maximal degree differs from `declared_degree` (if given).
  explicit RationalPlaneCurve(std::array<UniPoly, 3> comps, int declared_degree = -1);

  const FieldPtr& field() const { return comps_[0].zero().field(); }
  const UniPoly& operator[](int i) const { return comps_[i]; }
  const std::array<UniPoly, 3>& components() const { return comps_; }
  int degree() const { return degree_; }

  RationalPlaneCurve lifted(const FieldPtr& target) const;

 private:
  std::array<UniPoly, 3> comps_;
  int degree_ = 0;
};

/// Divides the three polynomials by their monic gcd.
std::array<UniPoly, 3> remove_common_factor(std::array<UniPoly, 3> comps);

/// Primitive homogeneous F(X, Y, Z) of the image, from Res_t(x − zX, y − zY)
/// after homogenization (this drops the Z-power content) and normalization.
/// `mapdeg` receives deg C / deg F.
TriPoly implicitize(const RationalPlaneCurve& c, int* mapdeg = nullptr);

/// (y'z − z'y, z'x − x'z, x'y − y'x) with the common factor removed.
RationalPlaneCurve dual(const RationalPlaneCurve& c);

RationalPlaneCurve reparametrize(const RationalPlaneCurve& c, const Mobius& m);
RationalPlaneCurve transform(const ProjectiveMap& t, const RationalPlaneCurve& c);

/// reparametrize(C, m) and T∘C agree up to a scalar function of t.
bool verify_symmetry(const RationalPlaneCurve& c, const ProjectiveMap& t, const Mobius& m);

/// A map T with T∘a equal to b up to a constant factor, if one exists.
/// Both curves must be over the same ring.
std::optional<ProjectiveMap> match_parametrizations(const RationalPlaneCurve& a,
                                                    const RationalPlaneCurve& b);

/// Components of the point; entries may live in an extension ring.
using ProjectivePoint = std::array<FieldElement, 3>;

/// Cross product of two 3-vectors.
template <class T>
std::array<T, 3> cross(const std::array<T, 3>& u, const std::array<T, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// Proportionality test; zero tests go through decide_zero.
bool same_point(const ProjectivePoint& p, const ProjectivePoint& q);
/// Scales so that the first coordinate that is a unit becomes 1.
ProjectivePoint normalize_point(const ProjectivePoint& p);
std::string to_string(const ProjectivePoint& p);

/// Image of a parameter value in a ring containing the coefficient field.
ProjectivePoint evaluate(const RationalPlaneCurve& c, const FieldElement& t);
/// Image of t = ∞ (the coefficients of t^deg).
ProjectivePoint evaluate_at_infinity(const RationalPlaneCurve& c);

}  // namespace sextic
