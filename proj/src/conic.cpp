#include "sextic/conic.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "sextic/expr.hpp"

namespace sextic {

// ---- pencil of cubics -------------------------------------------------------

CubicPencil CubicPencil::from_combined(const TriPoly& g, const UniPoly& basepoint_factor) {
  if (g.degree_in(2) > 1) throw std::invalid_argument("pencil must be linear in its parameter");
  CubicPencil p{TriPoly(g.field()), TriPoly(g.field()), basepoint_factor};
  for (const auto& [e, v] : g.terms()) {
    Exponent k{e[0], e[1], 0};
    (e[2] == 0 ? p.g0 : p.g1).add_term(k, v);
  }
  if (p.g1.is_zero()) throw std::invalid_argument("pencil does not depend on its parameter");
  return p;
}

TriPoly CubicPencil::combined() const { return g0 + TriPoly::variable(g0.field(), 2) * g1; }

PencilReduction pencil_reduce(const TriPoly& f, const CubicPencil& pencil) {
  if (f.degree_in(2) > 0) throw std::invalid_argument("f must be affine in x and y");
  PencilReduction r;
  FieldPtr k = f.field();
  r.p = resultant(f, pencil.combined(), 1);
  r.p1 = exact_div(r.p, from_uni(pencil.basepoint_factor, 0));

  TriPoly disc = discriminant(to_univariate(r.p1, 0));
  r.d = to_uni(disc, 2);
  if (r.d.is_zero()) throw PencilError("P1 has a repeated factor in x for every value of the parameter");

  // d = c · Π A_i^i; odd multiplicities go to d1, the rest to d2.
  FieldElement c = r.d.lc();
  UniPoly odd = UniPoly::constant(k->one()), even = UniPoly::constant(k->one());
  for (const auto& [a, m] : squarefree_decomposition(r.d)) {
    for (int j = 0; j < m / 2; ++j) even = even * a;
    if (m % 2) odd = odd * a;
  }
  // Over Q split the constant as s·q² with s squarefree; elsewhere it all
  // stays in d1.
  FieldElement s = c, q = k->one();
  if (c.is_rational()) {
    BigRational root;
    BigInt sf = squarefree_class(c.rational_part(), &root);
    s = k->from_rational(BigRational(sf));
    q = k->from_rational(root);
  }
  r.d1 = s * odd;
  r.d2 = q * even;
  if (r.d1.degree() != 2)
    throw PencilError("the odd part of the discriminant has degree " + std::to_string(r.d1.degree()) +
                      ", not 2");
  // Discr_λ(c2 λ² + c1 λ + c0 − u²) = 4 c2 u² + c1² − 4 c2 c0.
  const FieldElement &c0 = r.d1[0], &c1 = r.d1[1], &c2 = r.d1[2];
  r.alpha = c2.scaled(4);
  r.gamma = c1 * c1 - (c2 * c0).scaled(4);
  return r;
}

// ---- Hilbert symbols over Q -----------------------------------------------

namespace {

BigInt integer_class(const BigRational& q) {
  // n/d and n·d differ by the square d².
  return q.get_num() * q.get_den();
}

int valuation(BigInt& n, const BigInt& p) {
  int v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

int mod_small(const BigInt& n, long m) {
  BigInt r = n % m;
  if (r < 0) r += m;
  return static_cast<int>(r.get_si());
}

}  // namespace

std::vector<BigInt> prime_factors(BigInt n) {
  if (n == 0) throw std::invalid_argument("prime factors of zero");
  n = abs(n);
  std::vector<BigInt> out;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

BigInt squarefree_class(const BigRational& q, BigRational* root) {
  if (q == 0) throw std::invalid_argument("square class of zero");
  BigInt n = integer_class(q);
  BigInt s = n < 0 ? BigInt(-1) : BigInt(1), r = 1;
  for (const auto& p : prime_factors(n)) {
    BigInt m = n;
    int v = valuation(m, p);
    if (v % 2) s *= p;
    for (int j = 0; j < v / 2; ++j) r *= p;
  }
  if (root) *root = BigRational(r, q.get_den());  // q = s·r²/den²
  if (root) root->canonicalize();
  return s;
}

int hilbert_symbol(const BigRational& a, const BigRational& b, Place v) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (v == 0) return (a < 0 && b < 0) ? -1 : 1;
  BigInt p = v;
  if (v < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("place " + std::to_string(v) + " is not a prime");
  BigInt u = integer_class(a), w = integer_class(b);
  int alpha = valuation(u, p), beta = valuation(w, p);
  if (v == 2) {
    auto eps = [](const BigInt& x) { return (mod_small(x, 4) - 1) / 2 % 2; };
    auto omega = [](const BigInt& x) {
      int r = mod_small(x, 8);
      return (r * r - 1) / 8 % 2;
    };
    int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 ? -1 : 1;
  }
  int sign = (alpha * beta % 2 && (v - 1) / 2 % 2) ? -1 : 1;
  int lu = mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  int lw = mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
  if (beta % 2) sign *= lu;
  if (alpha % 2) sign *= lw;
  return sign;
}

// ---- conics over Q ----------------------------------------------------------

std::string ConicProblem::verdict_name() const {
  switch (verdict) {
    case Verdict::Solvable: return "solvable";
    case Verdict::Unsolvable: return "unsolvable";
    default: return "undecided";
  }
}

namespace {

bool perfect_square(std::int64_t n, std::int64_t* root) {
  if (n < 0) return false;
  BigInt r = sqrt(BigInt(static_cast<long>(n)));
  if (r * r != n) return false;
  *root = r.get_si();
  return true;
}

// a x² + b y² = z² with 0 < z and max(|x|, |y|, z) ≤ h.
std::optional<std::array<std::int64_t, 3>> search_points(std::int64_t a, std::int64_t b, long h) {
  for (std::int64_t z = 1; z <= h; ++z)
    for (std::int64_t x = 0; x <= h; ++x) {
      std::int64_t rest = z * z - a * x * x;
      if (rest % b) continue;
      std::int64_t y;
      if (perfect_square(rest / b, &y) && y <= h) return std::array<std::int64_t, 3>{x, y, z};
    }
  return std::nullopt;
}

}  // namespace

ConicProblem conic_solvable_over_Q(const BigRational& a, const BigRational& b, long max_height) {
  if (a == 0 || b == 0) throw std::invalid_argument("conic coefficient is zero");
  ConicProblem c;
  c.a = a;
  c.b = b;
  c.a_red = squarefree_class(a, &c.a_root);
  c.b_red = squarefree_class(b, &c.b_root);
  c.trace.push_back("a = " + c.a_red.get_str() + " * (" + to_string(c.a_root) + ")^2, b = " +
                    c.b_red.get_str() + " * (" + to_string(c.b_root) + ")^2");

  std::set<BigInt> primes{2};
  for (const auto& n : {c.a_red, c.b_red})
    for (const auto& p : prime_factors(n)) primes.insert(p);
  std::vector<Place> places{0};
  for (const auto& p : primes) places.push_back(p.get_si());
  for (Place v : places) {
    int s = hilbert_symbol(BigRational(c.a_red), BigRational(c.b_red), v);
    c.symbols.emplace_back(v, s);
    c.trace.push_back("(" + c.a_red.get_str() + ", " + c.b_red.get_str() + ")_" +
                      (v == 0 ? std::string("inf") : std::to_string(v)) + " = " + std::to_string(s));
    if (s == -1) c.obstructions.push_back(v);
  }
  // The −1 places come in pairs and 2 is always among the checked ones, so
  // report the first other place (∞, then odd primes) when there is one.
  for (Place v : c.obstructions)
    if (v != 2) {
      c.obstruction = v;
      break;
    }
  if (!c.obstruction && !c.obstructions.empty()) c.obstruction = c.obstructions.front();
  if (c.obstruction) {
    c.verdict = ConicProblem::Verdict::Unsolvable;
    return c;
  }

  // Holzer: some point has max(|x|, |y|, |z|) ≤ sqrt|ab|, so the search
  // ends soon after the bound passes that height.
  const BigInt lim = BigInt(1) << 24;
  if (abs(c.a_red) >= lim || abs(c.b_red) >= lim) {
    c.trace.push_back("coefficients too large for the point search");
    return c;
  }
  std::int64_t ar = c.a_red.get_si(), br = c.b_red.get_si();
  for (long h = 8;; h *= 2) {
    h = std::min(h, max_height);
    c.height_reached = h;
    if (auto pt = search_points(ar, br, h)) {
      auto [x, y, z] = *pt;
      // X = x / (z · a_root), Y = y / (z · b_root).
      BigRational X = BigRational(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(z))) / c.a_root;
      BigRational Y = BigRational(BigInt(static_cast<long>(y)), BigInt(static_cast<long>(z))) / c.b_root;
      X.canonicalize();
      Y.canonicalize();
      if (a * X * X + b * Y * Y != 1) throw std::logic_error("conic witness does not satisfy the equation");
      c.witness = std::array<BigRational, 2>{X, Y};
      c.verdict = ConicProblem::Verdict::Solvable;
      c.trace.push_back("point (" + std::to_string(x) + " : " + std::to_string(y) + " : " +
                        std::to_string(z) + ") found at height " + std::to_string(h));
      return c;
    }
    if (h >= max_height) break;
  }
  c.trace.push_back("no point up to height " + std::to_string(c.height_reached));
  return c;
}

std::optional<FieldElement> sqrt_in_quadratic(const FieldElement& x) {
  const FieldPtr& f = x.field();
  const auto& m = f->minpoly();
  if (f->degree() != 2 || f->height() != 1 || !m[1].is_zero())
    throw std::invalid_argument("square roots only in Q(sqrt d)");
  // (u + v·a)² = c0 + c1·a with a² = d.
  BigRational d = -m[0].rational_part();
  BigRational c0 = x.coords()[0], c1 = x.coords()[1];
  auto rational_sqrt = [](const BigRational& q) -> std::optional<BigRational> {
    if (q < 0) return std::nullopt;
    BigInt n = sqrt(q.get_num()), e = sqrt(q.get_den());
    if (n * n != q.get_num() || e * e != q.get_den()) return std::nullopt;
    return BigRational(n, e);
  };
  if (c1 == 0) {
    if (auto u = rational_sqrt(c0)) return f->from_rational(*u);
    if (auto v = rational_sqrt(c0 / d)) return f->generator().scaled(*v);
    return std::nullopt;
  }
  // u² = (c0 ± sqrt(c0² − d·c1²)) / 2, v = c1 / (2u).
  auto n = rational_sqrt(c0 * c0 - d * c1 * c1);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    if (auto u = rational_sqrt((c0 + sign * *n) / 2); u && *u != 0) {
      BigRational v = c1 / (2 * *u);
      FieldElement r = f->from_rational(*u) + f->generator().scaled(v);
      if (r * r == x) return r;
    }
  }
  return std::nullopt;
}

// ---- fixed number field arguments -----------------------------------------

bool ProofTrace::ok() const {
  return !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) { return s.ok; });
}

namespace {

// x = c0 + c1·a with a² = −7 lies in the ring of integers Z[(1 + a)/2] iff
// c0 + c1 and 2·c1 are integers.
bool integral_sqrt_m7(const FieldElement& x) {
  const auto& c = x.coords();
  BigRational s = c[0] + c[1], t = 2 * c[1];
  return s.get_den() == 1 && t.get_den() == 1;
}

}  // namespace

ProofTrace verify_case34_obstruction() {
  ProofTrace tr;
  FieldPtr f = NumberField::extension("a", {BigRational(7), BigRational(0), BigRational(1)});
  ExprContext ctx = ExprContext::for_field(f);
  auto val = [&](const char* s) { return parse_constant(s, ctx); };
  FieldElement pi = val("(1 - a)/2"), a = f->generator();
  auto step = [&](std::string claim, bool ok, std::string detail = "") {
    tr.steps.push_back({std::move(claim), ok, std::move(detail)});
  };

  FieldElement pi3 = pi.pow(3);
  step("pi^4 - 3*pi^3 = 8", pi.pow(4) - pi3.scaled(3) == f->from_integer(8), (pi.pow(4) - pi3.scaled(3)).to_string());
  step("norm of pi is 2", pi * val("(1 + a)/2") == f->from_integer(2));
  step("8 lies in (pi^3)", integral_sqrt_m7(f->from_integer(8) / pi3));
  step("4 does not lie in (pi^3), so O_F/(pi^3) = Z/8", !integral_sqrt_m7(f->from_integer(4) / pi3));
  step("pi = -2 - pi^3", pi == f->from_integer(-2) - pi3);
  step("pi = 6 mod pi^3", integral_sqrt_m7((pi - f->from_integer(6)) / pi3));
  step("a = 1 - 2*pi", a == f->one() - pi.scaled(2));
  step("a = 5 mod pi^3", integral_sqrt_m7((a - f->from_integer(5)) / pi3));

  std::set<int> squares;
  for (int x = 0; x < 8; ++x) squares.insert(x * x % 8);
  step("squares mod 8 are {0, 1, 4}", squares == std::set<int>{0, 1, 4});

  int solutions = 0;
  bool all_even = true;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z)
        if ((6 * x * x + 5 * y * y - z * z) % 8 == 0) {
          ++solutions;
          all_even = all_even && x % 2 == 0 && y % 2 == 0 && z % 2 == 0;
        }
  step("every solution of 6X^2 + 5Y^2 = Z^2 mod 8 is even", all_even,
       std::to_string(solutions) + " solutions mod 8");
  step("2 = pi - pi^2, so pi divides 2", f->from_integer(2) == pi - pi * pi);

  tr.conclusion = tr.ok() ? "a primitive solution of pi*X^2 + a*Y^2 = Z^2 would have X, Y, Z divisible by pi; "
                            "pi*X^2 + a*Y^2 = 1 has no point over Q(sqrt(-7))"
                          : "the argument failed at a step above";
  return tr;
}

bool verify_case24_solution(const std::string& x, const std::string& y, const std::string& z) {
  FieldPtr f = NumberField::extension("a", {BigRational(-1), BigRational(-1), BigRational(-1), BigRational(1)});
  ExprContext ctx = ExprContext::for_field(f);
  FieldElement X = parse_constant(x, ctx), Y = parse_constant(y, ctx), Z = parse_constant(z, ctx);
  if (X.is_zero() && Y.is_zero() && Z.is_zero()) return false;
  FieldElement a = f->generator();
  FieldElement lhs = (f->from_integer(2) - a) * X * X - (a * (a + f->from_integer(2))).scaled(5) * Y * Y - Z * Z;
  return lhs.is_zero();
}

}  // namespace sextic
