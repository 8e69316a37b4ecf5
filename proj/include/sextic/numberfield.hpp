#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sextic {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

class FieldElement;

/// Raised when a nonzero element of a quotient ring K = B[θ]/(m) turns out
/// not to be invertible. `factor` is the monic gcd of the element's
/// representative with m, as coefficients over B (low to high); it is a
/// proper factor of m, so the caller can split m and retry.
struct ZeroDivisorError : std::runtime_error {
  ZeroDivisorError(FieldPtr ring, std::vector<FieldElement> factor);
  FieldPtr ring;
  std::vector<FieldElement> factor;
};

/// Element of a number field (or of a product of number fields when the
/// defining polynomial of the top level is reducible). Coordinates are in
/// the flattened power basis: index j * D_base + i stands for θ^j · b_i.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<BigRational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<BigRational>& coords() const { return c_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  /// True iff the element lies in Q (only the constant coordinate is set).
  bool is_rational() const;
  const BigRational& rational_part() const { return c_.front(); }

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement scaled(const BigRational& q) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  /// Coordinates over the immediate base field: the j-th entry is the
  /// coefficient of θ^j.
  std::vector<FieldElement> over_base() const;

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  std::vector<BigRational> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Q, or a simple extension B[θ]/(m(θ)) of another NumberField B with m
/// monic and squarefree over B. Instances are immutable and shared.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldPtr rationals();
  /// `minpoly` holds the coefficients of m over `base`, low to high; it is
  /// made monic here. Throws std::invalid_argument when m has degree < 1
  /// or is not squarefree.
  static FieldPtr extension(FieldPtr base, std::string generator,
                            std::vector<FieldElement> minpoly);
  /// Convenience for extensions of Q given rational coefficients.
  static FieldPtr extension(std::string generator, const std::vector<BigRational>& minpoly);

  bool is_rationals() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  int degree() const { return rel_degree_; }
  int absolute_degree() const { return abs_degree_; }
  int height() const { return base_ ? base_->height() + 1 : 0; }
  const std::string& generator_name() const { return gen_name_; }
  /// Monic defining polynomial over the base, low to high.
  const std::vector<FieldElement>& minpoly() const { return minpoly_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const BigRational& q) const;
  FieldElement from_integer(long v) const { return from_rational(BigRational(v)); }
  FieldElement generator() const;
  /// Builds an element from coordinates over the immediate base.
  FieldElement from_base_coords(const std::vector<FieldElement>& coeffs) const;

  /// True if `f` is this field or appears in its chain of base fields.
  bool contains(const FieldPtr& f) const;
  /// Embeds an element of a field in the base chain into this field.
  FieldElement lift(const FieldElement& x) const;

  /// Generator names from the bottom level up, e.g. {"a", "w"}.
  std::vector<std::string> generator_names() const;

  std::string describe() const;

  // Kernel used by FieldElement.
  void multiply(const std::vector<BigRational>& x, const std::vector<BigRational>& y,
                std::vector<BigRational>& out) const;
  std::vector<BigRational> invert(const FieldElement& x) const;

  NumberField(FieldPtr base, std::string gen, std::vector<FieldElement> minpoly);
  NumberField();

 private:
  void build_tables();

  FieldPtr base_;
  std::string gen_name_;
  std::vector<FieldElement> minpoly_;
  int rel_degree_ = 1;
  int abs_degree_ = 1;

  // Products of basis elements are grouped by identical expansion vectors.
  struct Group {
    std::vector<std::pair<int, BigRational>> expansion;  // sparse result vector
  };
  std::vector<Group> groups_;
  std::vector<int> pair_group_;  // index i * D + j -> group id
};

/// Lifts both operands to a common field when one field lies in the other's
/// base chain.
void unify(FieldElement& a, FieldElement& b);

/// Zero test used where a computation branches on the result. A nonzero
/// element that is a zero divisor raises ZeroDivisorError.
bool decide_zero(const FieldElement& x);

/// Evaluates the ring homomorphism that sends the generator of level k of
/// x's field (counted from the bottom, starting at 0) to images[k]. A level
/// may be left unmapped (invalid element) when x does not involve it.
FieldElement map_element(const FieldElement& x, const std::vector<FieldElement>& images,
                         const FieldPtr& target);

// Ring interface shared with the polynomial templates.
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement zero_like(const FieldElement& x) { return x.field()->zero(); }
inline FieldElement one_like(const FieldElement& x) { return x.field()->one(); }
inline FieldElement int_like(const FieldElement& x, long k) { return x.field()->from_integer(k); }
inline FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }
inline std::string to_string(const FieldElement& x) { return x.to_string(); }

}  // namespace sextic
