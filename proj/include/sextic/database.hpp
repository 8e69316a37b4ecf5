#pragma once

// The curve corpus: JSON records with exact data, loading, validation and
// the per-record consistency checks.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/conic.hpp"
#include "sextic/expr.hpp"
#include "sextic/singularity.hpp"

namespace sextic {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CorpusInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldLevel {
  std::string generator;
  std::vector<BigRational> minpoly;  // over Q, low to high
};

struct FieldDescriptor {
  std::vector<FieldLevel> tower;  // empty for Q
  int f_levels = 0;               // leading levels that define F

  FieldPtr build() const;  // E
  FieldPtr build_f() const;
  bool e_differs_from_f() const { return f_levels < static_cast<int>(tower.size()); }
};

struct LocationSpec {
  std::string kind;                  // finite | infinity | roots | pair
  std::string text;                  // value or polynomial expression
  std::array<std::string, 2> pair;  // "infinity" or a value expression
};

struct ClaimSpec {
  int n = 0;
  LocationSpec location;
};

struct ComponentSpec {
  std::string expr;
  /// Absolute coordinates of each coefficient, low degree first.
  std::vector<std::vector<std::string>> coeffs;
};

struct ParametrizationSpec {
  FieldDescriptor field;
  std::vector<std::pair<std::string, std::string>> definitions;
  std::array<ComponentSpec, 3> comps;
  ClaimSpec odd;
  std::vector<ClaimSpec> irreducible;
  /// For a parametrization over a different field: the image of each F
  /// generator as an expression in this field.
  std::vector<std::pair<std::string, std::string>> f_embedding;
};

struct SymmetrySpec {
  std::array<std::array<long, 3>, 3> map{};
  std::array<long, 4> mobius{};
};

struct PrintedImplicit {
  std::string h;  // auxiliary factor, in x
  std::string f;  // affine equation in x, y
};

struct PencilSpec {
  std::string g;                 // in x, y and the pencil parameter l
  std::string basepoint_factor;  // in x
};

struct ConicWitness {
  std::string equation;  // in X, Y, Z
  std::string x, y, z;
};

struct CurveFlags {
  bool e_differs_from_f = false;
  bool has_symmetry = false;
  bool has_alt_parametrization = false;
  bool has_printed_implicit = false;
  bool autodual_claimed = false;
};

struct CurveRecord {
  int id = 0;
  std::string name;     // as printed, e.g. "(A_17+A_2)"
  std::string bracket;  // printed parameter list
  ParametrizationSpec param;
  std::optional<ParametrizationSpec> alt;
  std::optional<SymmetrySpec> symmetry;
  std::optional<PrintedImplicit> printed_implicit;
  std::optional<PencilSpec> pencil;
  std::optional<ConicWitness> conic_witness;
  std::vector<int> dual_singularities;  // printed singularities of the dual, if any
  bool autodual = false;
  std::vector<std::string> notes;

  CurveFlags flags() const;
  /// Singularity indices, largest first.
  std::vector<int> multiset() const;
};

/// A parametrization with its claims, evaluated over its field.
struct BuiltCurve {
  FieldPtr e, f;
  ExprContext ctx;  // generators and definitions, variable t
  RationalPlaneCurve curve;
  std::vector<SingularityClaim> claims;
};

BuiltCurve build(const ParametrizationSpec& spec);

/// Context for x, y (slots 0, 1) over `field`, z in slot 2.
ExprContext plane_context(const FieldPtr& field);

struct Corpus {
  int schema_version = 0;
  std::string checksum;
  std::vector<CurveRecord> records;

  const CurveRecord& get(int id) const;
};

/// FNV-1a 64 of the canonical serialization of the records.
std::string corpus_checksum(const Corpus& c);

/// Parses and validates the corpus. `strict` also requires the stored
/// coefficients and checksum to match; without it they are recomputed.
Corpus load_corpus(const std::string& path, bool strict = true);
Corpus parse_corpus(const std::string& text, bool strict = true);
std::string serialize_corpus(const Corpus& c);
/// One record in the corpus format.
std::string serialize_record(const CurveRecord& r);

/// Default path: $SEXTIC_CORPUS, else the bundled file.
std::string default_corpus_path();

/// Number of singular points described by the claims (distinct images).
int singular_point_count(const CurveRecord& r);

/// The printed affine sextic of a record over f (its field F, built once by
/// the caller so that several objects share it), x and y in slots 0, 1.
TriPoly printed_affine_sextic(const CurveRecord& r, const FieldPtr& f);
/// The record's pencil of cubics over f; its parameter is written l.
CubicPencil record_pencil(const CurveRecord& r, const FieldPtr& f);

/// The record's stated symmetry (or `s` in its place) maps the curve to
/// itself: T∘φ = φ∘μ up to a scalar function of t.
bool symmetry_holds(const CurveRecord& r, const std::optional<SymmetrySpec>& s = std::nullopt);

struct CrossCheck {
  int id = 0;
  bool ok = true;
  std::vector<std::string> checks;    // passed
  std::vector<std::string> failures;  // named mismatches
};

/// Internal consistency of one record: Σn = 19, one odd index, stored
/// coefficients, printed equations and the alternative parametrization.
CrossCheck cross_check_record(const CurveRecord& r);

}  // namespace sextic
