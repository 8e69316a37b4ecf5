#pragma once

// A small parser for polynomial expressions written in Maple style, e.g.
// "(t^2 + (4*a-12)*t - 2*a^5)*t^2". Division is allowed by constants only.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sextic/tripoly.hpp"

namespace sextic {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExprContext {
  FieldPtr field;
  /// Named constants, e.g. field generators.
  std::map<std::string, FieldElement> constants;
  /// Polynomial variables and the TriPoly slot each one occupies.
  std::map<std::string, int> variables;
  /// Previously parsed named sub-expressions (p, q, h, ...).
  std::map<std::string, TriPoly> definitions;

  /// Context whose constants are the generator names of `field`'s tower.
  static ExprContext for_field(const FieldPtr& field);
};

TriPoly parse_expr(std::string_view text, const ExprContext& ctx);

/// Parses a polynomial in the single variable `var` (slot 0).
Poly<FieldElement> parse_univariate(std::string_view text, const ExprContext& ctx,
                                    const std::string& var = "t");

/// Parses a constant expression into a field element.
FieldElement parse_constant(std::string_view text, const ExprContext& ctx);

}  // namespace sextic
