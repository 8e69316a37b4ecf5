#include "helpers.hpp"

using namespace sextic;

namespace {

RationalPlaneCurve curve(const FieldPtr& f, const std::string& x, const std::string& y, const std::string& z) {
  return RationalPlaneCurve({upoly(f, x), upoly(f, y), upoly(f, z)});
}

TriPoly plane(const FieldPtr& f, const std::string& text) {
  ExprContext ctx = plane_context(f);
  ctx.variables["z"] = 2;
  return parse_expr(text, ctx);
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("implicit equation of a conic and a nodal cubic") {
  FieldPtr q = NumberField::rationals();
  int mapdeg = 0;
  CHECK(equal_up_to_unit(implicitize(curve(q, "t^2", "t", "1"), &mapdeg), plane(q, "x*z - y^2")));
  CHECK(mapdeg == 1);
  CHECK(equal_up_to_unit(implicitize(curve(q, "t^2 - 1", "t^3 - t", "1")), plane(q, "y^2*z - x^3 - x^2*z")));
}

TEST_CASE("a non-birational parametrization reports its map degree") {
  FieldPtr q = NumberField::rationals();
  int mapdeg = 0;
  TriPoly f = implicitize(curve(q, "t^4", "t^2", "1"), &mapdeg);
  CHECK(mapdeg == 2);
  CHECK(equal_up_to_unit(f, plane(q, "x*z - y^2")));
}

TEST_CASE("degenerate parametrizations are refused") {
  FieldPtr q = NumberField::rationals();
  CHECK_THROWS_AS(curve(q, "1", "2", "3"), DegenerateCurve);
  CHECK_THROWS_AS(curve(q, "0", "0", "0"), DegenerateCurve);
  CHECK_THROWS_AS(curve(q, "t^2 - t", "t^2 - 1", "t - 1"), DegenerateCurve);
}

TEST_CASE("a line implicitizes to a linear form") {
  FieldPtr q = NumberField::rationals();
  RationalPlaneCurve l = curve(q, "t", "2*t + 1", "1");
  CHECK(equal_up_to_unit(implicitize(l), plane(q, "y - 2*x - z")));
  CHECK_THROWS_AS(dual(l), DegenerateCurve);
}

TEST_CASE("common factors are removed on request") {
  FieldPtr q = NumberField::rationals();
  auto comps = remove_common_factor({upoly(q, "t^3 - t"), upoly(q, "t^2 - t"), upoly(q, "t - 1")});
  CHECK(RationalPlaneCurve(comps).degree() == 2);
  CHECK(comps[2] == upoly(q, "1"));
}

TEST_CASE("dual of a conic is a conic") {
  FieldPtr q = NumberField::rationals();
  RationalPlaneCurve d = dual(curve(q, "t^2", "t", "1"));
  CHECK(d.degree() == 2);
  CHECK(equal_up_to_unit(implicitize(d), plane(q, "y^2 - 4*x*z")));
}

TEST_CASE("dual of a cuspidal cubic is a cuspidal cubic") {
  FieldPtr q = NumberField::rationals();
  RationalPlaneCurve d = dual(curve(q, "t^2", "t^3", "1"));
  CHECK(d.degree() == 3);
}

TEST_CASE("symmetry of a curve and a perturbed control") {
  FieldPtr q = NumberField::rationals();
  RationalPlaneCurve c = curve(q, "t", "t^3 + t", "1");
  Mobius neg = Mobius::make(q, -1, 0, 0, 1);
  CHECK(verify_symmetry(c, ProjectiveMap::make(q, {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}), neg));
  CHECK_FALSE(verify_symmetry(c, ProjectiveMap::make(q, {{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}), neg));
  CHECK_FALSE(verify_symmetry(c, ProjectiveMap::make(q, {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}),
                              Mobius::make(q, 1, 1, 0, 1)));
}

TEST_CASE("match_parametrizations recovers a projective map") {
  FieldPtr f = NumberField::extension("a", {BigRational(-5), BigRational(0), BigRational(1)});
  RationalPlaneCurve c = curve(f, "t^3 + a*t", "t^2 - 1", "t + 2");
  ProjectiveMap t = ProjectiveMap::make(f, {{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}}});
  RationalPlaneCurve image = transform(t, c);
  auto m = match_parametrizations(c, image);
  REQUIRE(m.has_value());
  CHECK(verify_symmetry(c, *m, Mobius::make(f, 1, 0, 0, 1)) == false);  // not a map of c to itself
  for (const auto& p : cross(transform(*m, c).components(), image.components())) CHECK(p.is_zero());
  // A different curve of the same degree is not an image of c.
  CHECK_FALSE(match_parametrizations(c, curve(f, "t^3", "t^2 + t", "1")).has_value());
}

TEST_CASE("reparametrization by a Mobius map keeps the implicit equation") {
  FieldPtr q = NumberField::rationals();
  RationalPlaneCurve c = curve(q, "t^2 - 1", "t^3 - t", "1");
  RationalPlaneCurve r = reparametrize(c, Mobius::make(q, 2, 1, 1, 1));
  CHECK(r.degree() == 3);
  CHECK(equal_up_to_unit(implicitize(r), implicitize(c)));
}

}
