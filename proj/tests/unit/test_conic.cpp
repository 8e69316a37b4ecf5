#include "helpers.hpp"

#include "sextic/report.hpp"

using namespace sextic;

namespace {

UniPoly in_l(const FieldPtr& f, const std::string& text) {
  ExprContext ctx = ExprContext::for_field(f);
  ctx.variables["l"] = 2;
  return to_uni(parse_expr(text, ctx), 2);
}

}  // namespace

TEST_SUITE("conic") {

TEST_CASE("Hilbert symbols at the usual places") {
  CHECK(hilbert_symbol(6, 5, 3) == -1);
  CHECK(hilbert_symbol(6, 5, 0) == 1);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(2, 3, 3) == -1);
  CHECK(hilbert_symbol(BigRational(3, 4), BigRational(-3), 5) == 1);
  for (long v : {0L, 2L, 3L, 7L}) {
    CHECK(hilbert_symbol(7, -7, v) == 1);
    CHECK(hilbert_symbol(1, 13, v) == 1);
  }
  CHECK_THROWS_AS(hilbert_symbol(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_symbol(1, 1, 9), std::invalid_argument);
}

TEST_CASE("product formula and bilinearity") {
  require_property(props::hilbert_product_formula(401, 100));
  require_property(props::hilbert_bilinearity(402, 40));
}

TEST_CASE("squarefree classes") {
  BigRational root;
  CHECK(squarefree_class(BigRational(-72, 5), &root) == -10);
  CHECK(root == BigRational(6, 5));
  CHECK(prime_factors(360) == std::vector<BigInt>{2, 3, 5});
}

TEST_CASE("conic verdicts") {
  ConicProblem none = conic_solvable_over_Q(6, 5);
  CHECK(none.verdict == ConicProblem::Verdict::Unsolvable);
  REQUIRE(none.obstruction.has_value());
  CHECK(*none.obstruction == 3);

  ConicProblem neg = conic_solvable_over_Q(-1, -1);
  CHECK(neg.verdict == ConicProblem::Verdict::Unsolvable);
  CHECK(*neg.obstruction == 0);

  ConicProblem circle = conic_solvable_over_Q(1, 1);
  CHECK(circle.verdict == ConicProblem::Verdict::Solvable);
  REQUIRE(circle.witness.has_value());
  const auto& [x, y] = *circle.witness;
  CHECK(x * x + y * y == 1);

  ConicProblem scaled = conic_solvable_over_Q(BigRational(7, 9), BigRational(2, 9));
  CHECK(scaled.verdict == ConicProblem::Verdict::Solvable);
}

TEST_CASE("conic verdicts against brute force") {
  require_property(props::conic_vs_bruteforce(403, 60, 30));
}

TEST_CASE("square roots in Q(sqrt -7)") {
  FieldPtr f = NumberField::extension("a", {BigRational(7), BigRational(0), BigRational(1)});
  FieldElement x = constant(f, "3 - 2*a");
  auto r = sqrt_in_quadratic(x * x);
  REQUIRE(r.has_value());
  CHECK(*r * *r == x * x);
  CHECK_FALSE(sqrt_in_quadratic(f->generator()).has_value());
}

TEST_CASE("pencil reduction of case 36") {
  ReduceResult r = reduce_record(bundled_corpus().get(36));
  FieldPtr f = r.red.d1.zero().field();
  CHECK(r.red.d1 == in_l(f, "6*l^2 - 54*l + 54"));
  CHECK(r.red.d2 == in_l(f, "2*l^3 - 48*l^2 + 288*l - 270"));
  CHECK(r.red.d == r.red.d1 * r.red.d2 * r.red.d2);
  CHECK(r.red.alpha == f->from_integer(24));
  CHECK(r.red.gamma == f->from_integer(1620));
  REQUIRE(r.conic.has_value());
  CHECK(r.conic->a_red == 6);
  CHECK(r.conic->b_red == 5);
  CHECK(r.conic->verdict == ConicProblem::Verdict::Unsolvable);
  CHECK(r.ok);
}

TEST_CASE("a wrong base point factor does not divide") {
  const auto& rec = bundled_corpus().get(36);
  FieldPtr f = rec.param.field.build_f();
  CubicPencil pencil = record_pencil(rec, f);
  TriPoly sextic = printed_affine_sextic(rec, f);
  CHECK_NOTHROW(pencil_reduce(sextic, pencil));
  pencil.basepoint_factor = pencil.basepoint_factor * upoly(f, "t - 7");
  CHECK_THROWS_AS(pencil_reduce(sextic, pencil), InexactDivision);
}

TEST_CASE("pencil reduction of case 34") {
  ReduceResult r = reduce_record(bundled_corpus().get(34));
  FieldPtr f = r.red.d1.zero().field();
  CHECK(f->generator_name() == "a");
  CHECK(r.red.d1.lc().inverse() * r.red.d1 == in_l(f, "l^2 + (11*a - 1)*l - 46*a - 54"));
  REQUIRE(r.proof.has_value());
  CHECK(r.proof->ok());
  CHECK(r.ok);
}

TEST_CASE("the case 34 obstruction argument") {
  ProofTrace t = verify_case34_obstruction();
  CHECK(t.steps.size() >= 10);
  for (const auto& s : t.steps) {
    INFO(s.claim, ": ", s.detail);
    CHECK(s.ok);
  }
  CHECK(t.ok());
}

TEST_CASE("the case 24 point") {
  CHECK(verify_case24_solution());
  CHECK_FALSE(verify_case24_solution("3 + 2*a^2"));
  CHECK_FALSE(verify_case24_solution("0", "0", "0"));
}

}
