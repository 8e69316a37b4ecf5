#pragma once

// Randomized property checks with independent oracles, shared by the unit
// tests and the acceptance runner. Every check is exact; a failure carries
// the first counterexample found.

#include <random>
#include <string>
#include <vector>

#include "sextic/conic.hpp"
#include "sextic/curve.hpp"
#include "sextic/series.hpp"

namespace props {

struct Result {
  explicit Result(std::string n) : name(std::move(n)) {}
  std::string name;
  bool ok = true;
  int cases = 0;
  std::string detail;  // first failure
};

// Building blocks for the oracles.
/// Determinant of the Sylvester matrix; coefficients low to high.
sextic::BigRational sylvester_resultant(const std::vector<sextic::BigRational>& a,
                                        const std::vector<sextic::BigRational>& b);
/// Solutions of a·X² + b·Y² = 1 with X, Y of height ≤ h, by enumeration.
bool conic_has_small_point(const sextic::BigRational& a, const sextic::BigRational& b, long h);

Result field_axioms(unsigned seed, int trials);
Result resultant_vs_sylvester(unsigned seed, int trials);
Result resultant_vs_roots(unsigned seed, int trials);
Result discriminant_vs_roots(unsigned seed, int trials);
Result yun_reconstruction(unsigned seed, int trials);
Result series_laws(unsigned seed, int trials);
Result standard_models();
Result hilbert_product_formula(unsigned seed, int pairs);
Result hilbert_bilinearity(unsigned seed, int trials);
Result conic_vs_bruteforce(unsigned seed, int pairs, long height = 50);

}  // namespace props
