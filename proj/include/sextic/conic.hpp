#pragma once

// Field of definition: reduction of a sextic to a conic through a pencil of
// cubics, Hilbert symbols and conic solvability over Q, and the two fixed
// number field arguments (a congruence obstruction and a printed point).

#include <optional>
#include <string>
#include <vector>

#include "sextic/curve.hpp"

namespace sextic {

/// g_λ = g0 + λ·g1 in x, y (slots 0, 1), with the known base point factor
/// of Res_y(f, g_λ) as a polynomial in x.
struct CubicPencil {
  TriPoly g0, g1;
  UniPoly basepoint_factor;

  /// Splits g (with λ in slot 2, degree ≤ 1 in it) into g0 + λ·g1.
  static CubicPencil from_combined(const TriPoly& g, const UniPoly& basepoint_factor);
  /// g0 + λ·g1 with λ in slot 2.
  TriPoly combined() const;
};

struct PencilReduction {
  TriPoly p;       // Res_y(f, g_λ), x in slot 0 and λ in slot 2
  TriPoly p1;      // p / basepoint factor
  UniPoly d;       // Discr_x p1, in λ
  UniPoly d1, d2;  // d = d1 · d2², d1 of degree 2
  /// Discr_λ(d1 − u²) − v² = alpha·u² + gamma − v².
  FieldElement alpha, gamma;
};

struct PencilError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// f affine in x, y. Throws InexactDivision when the base point factor does
/// not divide the resultant and PencilError when d1 is not quadratic.
PencilReduction pencil_reduce(const TriPoly& f, const CubicPencil& pencil);

/// A place of Q: 0 stands for the infinite place, otherwise a prime.
using Place = long;

/// (a, b)_v, ±1. Throws std::invalid_argument for zero input or when the
/// place is not 0 or a prime.
int hilbert_symbol(const BigRational& a, const BigRational& b, Place v);

/// Squarefree integer s with q = s·r² for a rational r.
BigInt squarefree_class(const BigRational& q, BigRational* root = nullptr);

/// Primes dividing a nonzero integer, increasing.
std::vector<BigInt> prime_factors(BigInt n);

struct ConicProblem {
  enum class Verdict { Solvable, Unsolvable, Undecided };

  BigRational a, b;              // a·X² + b·Y² = 1
  BigInt a_red, b_red;           // squarefree classes
  BigRational a_root, b_root;    // a = a_red·a_root², likewise b
  Verdict verdict = Verdict::Undecided;
  std::vector<std::pair<Place, int>> symbols;  // places checked, in order
  std::vector<Place> obstructions;  // every place with symbol −1
  std::optional<Place> obstruction;  // the one reported: odd prime, else ∞, else 2
  std::optional<std::array<BigRational, 2>> witness;  // (X, Y)
  long height_reached = 0;
  std::vector<std::string> trace;

  std::string verdict_name() const;
};

/// Decides a·X² + b·Y² = 1 over Q by local symbols at ∞, 2 and the primes
/// of the reduced coefficients. When solvable, searches integer points of
/// a_red·x² + b_red·y² = z² by increasing height, doubling the bound up to
/// `max_height`; if none is found by then the verdict is Undecided.
ConicProblem conic_solvable_over_Q(const BigRational& a, const BigRational& b,
                                   long max_height = 1L << 16);

/// Square root in a field Q(√d) (a single level with minimal polynomial
/// t² − d), if there is one.
std::optional<FieldElement> sqrt_in_quadratic(const FieldElement& x);

/// One exact step of a fixed argument.
struct ProofStep {
  std::string claim;
  bool ok = false;
  std::string detail;
};

struct ProofTrace {
  std::vector<ProofStep> steps;
  std::string conclusion;
  bool ok() const;
};

/// πX² + aY² = 1 has no point over Q(√−7), π = (1 − a)/2: reduction mod π³
/// and the congruence 6X² + 5Y² ≡ Z² mod 8.
ProofTrace verify_case34_obstruction();

/// (2 − a)X² − 5a(a + 2)Y² − Z² = 0 over Q(a), a³ − a² − a − 1 = 0, at the
/// given point (expressions in a). The zero triple is rejected.
bool verify_case24_solution(const std::string& x = "2 + 2*a^2", const std::string& y = "1 + a - a^2",
                            const std::string& z = "2 - a^2");

}  // namespace sextic
