#include "helpers.hpp"

using namespace sextic;

TEST_SUITE("polynomial") {

TEST_CASE("resultant and discriminant of small examples") {
  FieldPtr q = NumberField::rationals();
  CHECK(resultant(upoly(q, "t^2 - 2"), upoly(q, "t^2 - 3")) == q->one());
  CHECK(discriminant(upoly(q, "t^2 + 5*t + 3")) == q->from_integer(13));
  CHECK(discriminant(upoly(q, "t^3 - t")) == q->from_integer(4));
  CHECK(resultant(upoly(q, "t - 2"), upoly(q, "t^2 + 1")) == q->from_integer(5));
}

TEST_CASE("resultant over a number field vanishes on a common root") {
  FieldPtr f = NumberField::extension("a", {BigRational(-2), BigRational(0), BigRational(1)});
  CHECK(resultant(upoly(f, "t - a"), upoly(f, "t^2 - 2")).is_zero());
  CHECK_FALSE(resultant(upoly(f, "t - a"), upoly(f, "t^2 - 3")).is_zero());
}

TEST_CASE("resultants against the Sylvester determinant") {
  require_property(props::resultant_vs_sylvester(201, 80));
}

TEST_CASE("resultants and discriminants against known roots") {
  require_property(props::resultant_vs_roots(202, 80));
  require_property(props::discriminant_vs_roots(203, 80));
}

TEST_CASE("gcd and exact division") {
  FieldPtr q = NumberField::rationals();
  UniPoly a = upoly(q, "(t - 1)^2*(t + 2)"), b = upoly(q, "(t - 1)*(t + 3)");
  CHECK(gcd(a, b) == upoly(q, "t - 1"));
  CHECK(exact_div(a, upoly(q, "t + 2")) == upoly(q, "(t - 1)^2"));
  CHECK_THROWS_AS(exact_div(a, upoly(q, "t + 3")), InexactDivision);
}

TEST_CASE("squarefree decomposition") {
  FieldPtr q = NumberField::rationals();
  auto parts = squarefree_decomposition(upoly(q, "3*(t + 1)*(t - 2)^3"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].factor == upoly(q, "t + 1"));
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[1].factor == upoly(q, "t - 2"));
  CHECK(parts[1].multiplicity == 3);
  CHECK(squarefree_part(upoly(q, "(t^2 + 1)^2*t")) == upoly(q, "t^3 + t"));
  require_property(props::yun_reconstruction(204, 30));
}

}
