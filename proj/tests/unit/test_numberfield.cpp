#include "helpers.hpp"

using namespace sextic;

TEST_SUITE("numberfield") {

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("arithmetic in Q(sqrt 2)") {
  FieldPtr f = NumberField::extension("a", {BigRational(-2), BigRational(0), BigRational(1)});
  FieldElement a = f->generator();
  CHECK(a * a == f->from_integer(2));
  CHECK((a + f->one()) * (a - f->one()) == f->one());
  CHECK((a + f->one()).inverse() == a - f->one());
  CHECK(a.pow(-2) == f->from_rational(BigRational(1, 2)));
  CHECK_THROWS_AS(f->zero().inverse(), DivisionByZero);
}

TEST_CASE("randomized field axioms on a tower") {
  require_property(props::field_axioms(101, 50));
}

TEST_CASE("non-squarefree minimal polynomials are refused") {
  CHECK_THROWS_AS(NumberField::extension("a", {BigRational(1), BigRational(2), BigRational(1)}),
                  std::invalid_argument);
}

TEST_CASE("a reducible modulus reports its zero divisors") {
  // Q[t]/(t^2 - 1): t - 1 is not invertible.
  FieldPtr r = NumberField::extension("t", {BigRational(-1), BigRational(0), BigRational(1)});
  FieldElement x = r->generator() - r->one();
  try {
    (void)x.inverse();
    FAIL("expected a zero divisor");
  } catch (const ZeroDivisorError& e) {
    REQUIRE(e.factor.size() == 2);
    CHECK(e.factor[0] == r->base()->from_integer(-1));
    CHECK(e.factor[1].is_one());
  }
  CHECK_THROWS_AS(decide_zero(x * (r->generator() + r->one()) + x), ZeroDivisorError);
}

TEST_CASE("elements of unrelated fields do not mix") {
  FieldPtr f = NumberField::extension("a", {BigRational(-2), BigRational(0), BigRational(1)});
  FieldPtr g = NumberField::extension("a", {BigRational(-2), BigRational(0), BigRational(1)});
  CHECK_THROWS_AS(f->generator() + g->generator(), FieldMismatch);
}

TEST_CASE("towers lift base elements") {
  FieldPtr qa = NumberField::extension("a", {BigRational(-3), BigRational(0), BigRational(1)});
  FieldPtr f = NumberField::extension(qa, "i", {qa->one(), qa->zero(), qa->one()});
  CHECK(f->absolute_degree() == 4);
  CHECK(f->contains(qa));
  FieldElement a = f->lift(qa->generator());
  FieldElement i = f->generator();
  CHECK((a * i).pow(2) == f->from_integer(-3));
  CHECK(f->generator_names() == std::vector<std::string>{"a", "i"});
}

TEST_CASE("map_element evaluates the generator substitution") {
  FieldPtr qa = NumberField::extension("a", {BigRational(-2), BigRational(0), BigRational(1)});
  FieldPtr qb = NumberField::extension("b", {BigRational(-8), BigRational(0), BigRational(1)});
  FieldElement half_b = qb->generator().scaled(BigRational(1, 2));
  FieldElement x = qa->from_integer(3) + qa->generator();
  FieldElement y = map_element(x, {half_b}, qb);
  CHECK(y == qb->from_integer(3) + half_b);
  CHECK(map_element(x * x, {half_b}, qb) == y * y);
}

}
