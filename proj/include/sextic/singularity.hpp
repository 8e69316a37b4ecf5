#pragma once

// Local classification of A_n points of a rational plane curve from its
// parametrization, and the per-curve certificate.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sextic/curve.hpp"
#include "sextic/series.hpp"

namespace sextic {

struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularityType {
  int n = 1;  // A_n
  int milnor() const { return n; }
  int delta() const { return (n + 1) / 2; }
  int branches() const { return n % 2 ? 2 : 1; }
  std::string name() const { return "A_" + std::to_string(n); }
  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

/// Where on the parameter line a singularity sits.
struct ParameterLocation {
  enum class Kind { Finite, Infinity, Roots, Pair };
  Kind kind = Kind::Infinity;
  FieldElement value;                    // Finite
  UniPoly poly;                          // Roots: squarefree, any degree
  std::vector<ParameterLocation> pair;   // Pair: two Finite/Infinity entries

  static ParameterLocation finite(FieldElement v);
  static ParameterLocation infinity();
  static ParameterLocation roots(UniPoly p);
  static ParameterLocation pair_of(ParameterLocation a, ParameterLocation b);

  /// Number of parameter values.
  int count() const;
  std::string to_string() const;
};

struct SingularityClaim {
  SingularityType type;
  ParameterLocation location;
  /// Singular points described by this claim (a 2A_4 at two roots is 2).
  int points() const { return type.branches() == 2 ? 1 : location.count(); }
};

/// A local parametrization germ: the curve recentred so that s = 0 is the
/// parameter of interest. Coefficients may live in an extension ring.
struct Branch {
  std::array<UniPoly, 3> comps;
  ProjectivePoint point() const { return {comps[0][0], comps[1][0], comps[2][0]}; }
};

Branch branch_at(const RationalPlaneCurve& c, const FieldElement& t0);
Branch branch_at_infinity(const RationalPlaneCurve& c);

/// Even index 2k of a one-branch double point, or 0 if the branch is smooth.
/// Throws ClassificationError for multiplicity ≥ 3, TruncationExhausted when
/// `precision` is too small.
int branch_index(const Branch& b, int precision);
/// Odd index 2i − 1 for two smooth branches through the same point.
int two_branch_index(const Branch& b1, const Branch& b2, int precision);

/// Convenience wrappers that retry with doubled precision.
SingularityType branch_type_at(const RationalPlaneCurve& c, const FieldElement& t0, int precision = 0);
SingularityType branch_type_at_infinity(const RationalPlaneCurve& c, int precision = 0);
SingularityType two_branch_type(const RationalPlaneCurve& c, const ParameterLocation& loc,
                                int precision = 0);

/// Runs `fn` on E[θ]/(g) with θ the class of t, splitting g whenever a
/// zero divisor is met. `fn` receives the component ring, θ and the factor
/// of g defining that component.
void for_each_root_component(
    const UniPoly& g, const std::string& name,
    const std::function<void(const FieldPtr&, const FieldElement&, const UniPoly&)>& fn);

struct ClaimVerdict {
  SingularityClaim claim;
  std::vector<int> computed;  // index per ring component
  std::string point;
  bool preimages_ok = false;
  bool ok = false;
  std::string reason;
};

struct Certificate {
  int curve_id = 0;
  std::vector<ClaimVerdict> verdicts;
  int implicit_degree = 0;
  int mapdeg = 0;
  bool degree_ok = false;
  bool distinct_ok = false;
  int sum_mu = 0;
  int sum_delta = 0;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> failures;
};

struct CertifyOptions {
  int truncation = 0;  // 0: per-claim default 2n + 4
  int max_doublings = 3;
};

Certificate certify(const RationalPlaneCurve& c, const std::vector<SingularityClaim>& claims,
                    const CertifyOptions& opts = {});

/// All singular points of a rational curve, found without claims: the
/// parameters where the branch is singular or where two parameters meet.
/// Intended for small-degree curves such as duals of the corpus sextics.
std::vector<SingularityType> discover_singularities(const RationalPlaneCurve& c,
                                                    const CertifyOptions& opts = {});

/// "A_10+A_4+2A_2+A_1"-style name, largest index first.
std::string multiset_name(std::vector<SingularityType> types);

}  // namespace sextic
