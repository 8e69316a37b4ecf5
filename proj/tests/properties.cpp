#include "properties.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "sextic/singularity.hpp"

using namespace sextic;

namespace props {

namespace {

using Coeffs = std::vector<BigRational>;

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  long nonzero(long lo, long hi) {
    for (;;)
      if (long v = range(lo, hi)) return v;
  }
  BigRational rational(long num, long den) {
    BigRational q(range(-num, num), range(1, den));
    q.canonicalize();
    return q;
  }
  BigRational nonzero_rational(long num, long den) {
    BigRational q(nonzero(-num, num), range(1, den));
    q.canonicalize();
    return q;
  }
  FieldElement element(const FieldPtr& f) {
    std::vector<BigRational> c(f->absolute_degree());
    for (auto& v : c) v = rational(6, 4);
    return FieldElement(f, c);
  }
};

UniPoly to_poly(const Coeffs& c) {
  FieldPtr q = NumberField::rationals();
  std::vector<FieldElement> v;
  for (const auto& x : c) v.push_back(q->from_rational(x));
  return UniPoly(v, q->zero());
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

BigRational eval(const Coeffs& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

void fail(Result& r, const std::string& what) {
  if (r.ok) r.detail = what;
  r.ok = false;
}

std::string str(const Coeffs& c) { return to_string(to_poly(c)); }

}  // namespace

BigRational sylvester_resultant(const Coeffs& a, const Coeffs& b) {
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  std::vector<std::vector<BigRational>> s(m + n, std::vector<BigRational>(m + n, BigRational(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return determinant(s);
}

bool conic_has_small_point(const BigRational& a, const BigRational& b, long h) {
  auto square_root = [](const BigInt& n, BigInt& r) {
    if (n < 0) return false;
    r = sqrt(n);
    return r * r == n;
  };
  for (long q = 1; q <= h; ++q)
    for (long p = 0; p <= h; ++p) {
      if (std::gcd(p, q) != 1) continue;
      BigRational x(p, q);
      BigRational rest = (1 - a * x * x) / b;
      BigInt rn, rd;
      if (square_root(rest.get_num(), rn) && square_root(rest.get_den(), rd) && rn <= h && rd <= h) return true;
    }
  return false;
}

Result field_axioms(unsigned seed, int trials) {
  Result r{"field axioms in Q(a)(i), a^3 = 2, i^2 = -1"};
  Rng g(seed);
  FieldPtr qa = NumberField::extension("a", {BigRational(-2), BigRational(0), BigRational(0), BigRational(1)});
  FieldPtr f = NumberField::extension(qa, "i", {qa->one(), qa->zero(), qa->one()});
  for (int t = 0; t < trials; ++t, ++r.cases) {
    FieldElement x = g.element(f), y = g.element(f), z = g.element(f);
    if ((x + y) + z != x + (y + z)) fail(r, "addition is not associative");
    if (x * y != y * x) fail(r, "multiplication is not commutative");
    if ((x * y) * z != x * (y * z)) fail(r, "multiplication is not associative");
    if (x * (y + z) != x * y + x * z) fail(r, "distributivity fails");
    if (x - x != f->zero() || x * f->one() != x) fail(r, "identities fail");
    if (!x.is_zero() && x * x.inverse() != f->one()) fail(r, "inverse fails for " + x.to_string());
    if (x.pow(5) != x * x * x * x * x) fail(r, "power fails");
  }
  FieldElement a = f->lift(qa->generator()), i = f->generator();
  if (a.pow(3) != f->from_integer(2) || i * i != f->from_integer(-1)) fail(r, "generators violate their relations");
  return r;
}

Result resultant_vs_sylvester(unsigned seed, int trials) {
  Result r{"resultant equals the Sylvester determinant"};
  Rng g(seed);
  for (int t = 0; t < trials; ++t, ++r.cases) {
    Coeffs a(g.range(2, 6)), b(g.range(2, 5));
    for (auto& v : a) v = g.rational(9, 3);
    for (auto& v : b) v = g.rational(9, 3);
    a.back() = g.nonzero_rational(9, 3);
    b.back() = g.nonzero_rational(9, 3);
    FieldElement got = resultant(to_poly(a), to_poly(b));
    BigRational want = sylvester_resultant(a, b);
    if (got.rational_part() != want) fail(r, "Res(" + str(a) + ", " + str(b) + ")");
  }
  return r;
}

Result resultant_vs_roots(unsigned seed, int trials) {
  Result r{"resultant equals lc^deg b times the product of b over the roots"};
  Rng g(seed);
  for (int t = 0; t < trials; ++t, ++r.cases) {
    BigRational c = g.nonzero_rational(7, 3);
    std::vector<BigRational> roots(g.range(1, 5));
    Coeffs a{c};
    for (auto& x : roots) {
      x = g.rational(8, 4);
      a = mul(a, {-x, BigRational(1)});
    }
    Coeffs b(g.range(1, 5));
    for (auto& v : b) v = g.rational(9, 2);
    b.back() = g.nonzero_rational(9, 2);
    BigRational want = 1;
    for (int k = 0; k + 1 < static_cast<int>(b.size()); ++k) want *= c;
    for (const auto& x : roots) want *= eval(b, x);
    if (resultant(to_poly(a), to_poly(b)).rational_part() != want) fail(r, "Res(" + str(a) + ", " + str(b) + ")");
  }
  return r;
}

Result discriminant_vs_roots(unsigned seed, int trials) {
  Result r{"discriminant equals lc^(2n-2) times the squared root differences"};
  Rng g(seed);
  for (int t = 0; t < trials; ++t, ++r.cases) {
    BigRational c = g.nonzero_rational(7, 3);
    std::vector<BigRational> roots(g.range(2, 6));
    Coeffs f{c};
    for (auto& x : roots) {
      x = g.rational(8, 4);
      f = mul(f, {-x, BigRational(1)});
    }
    const int n = static_cast<int>(roots.size());
    BigRational want = 1;
    for (int k = 0; k < 2 * n - 2; ++k) want *= c;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) want *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    if (discriminant(to_poly(f)).rational_part() != want) fail(r, "Disc(" + str(f) + ")");
  }
  return r;
}

Result yun_reconstruction(unsigned seed, int trials) {
  Result r{"squarefree decomposition multiplies back, factors squarefree and coprime"};
  Rng g(seed);
  FieldPtr f = NumberField::extension("a", {BigRational(-3), BigRational(0), BigRational(1)});
  for (int t = 0; t < trials; ++t, ++r.cases) {
    UniPoly p = UniPoly::constant(g.element(f) + f->from_integer(10));
    if (p.is_zero()) continue;
    for (int m = 1; m <= 3; ++m) {
      std::vector<FieldElement> c(g.range(2, 3));
      for (auto& v : c) v = g.element(f);
      c.back() = f->one();
      UniPoly a(c, f->zero());
      for (int k = 0; k < m; ++k) p = p * a;
    }
    auto parts = squarefree_decomposition(p);
    UniPoly back = UniPoly::constant(p.lc());
    for (const auto& [a, m] : parts) {
      for (int k = 0; k < m; ++k) back = back * a;
      if (gcd(a, derivative(a)).degree() != 0) fail(r, "factor " + to_string(a) + " is not squarefree");
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (gcd(parts[i].factor, parts[j].factor).degree() != 0) fail(r, "factors share a root");
    if (back != p) fail(r, "reconstruction differs for " + to_string(p));
  }
  return r;
}

Result series_laws(unsigned seed, int trials) {
  Result r{"series composition and reversion laws"};
  Rng g(seed);
  FieldPtr f = NumberField::extension("a", {BigRational(-5), BigRational(0), BigRational(1)});
  const int n = 10;
  auto random_series = [&](bool zero_constant) {
    std::vector<FieldElement> c(n);
    for (auto& v : c) v = g.element(f);
    if (zero_constant) c[0] = f->zero();
    return TruncatedSeries(c, n);
  };
  TruncatedSeries s = TruncatedSeries::identity(f, n);
  for (int t = 0; t < trials; ++t, ++r.cases) {
    TruncatedSeries u = random_series(true), v = random_series(true), w = random_series(false);
    if (u[1].is_zero()) continue;
    if (u.compose(u.reversion()) != s || u.reversion().compose(u) != s) fail(r, "reversion is not an inverse");
    if (w.compose(u).compose(v) != w.compose(u.compose(v))) fail(r, "composition is not associative");
    if ((w * u).compose(v) != w.compose(v) * u.compose(v)) fail(r, "composition does not respect products");
    if (!w[0].is_zero() && w * w.invert_unit() != TruncatedSeries::from_poly(UniPoly::constant(f->one()), n))
      fail(r, "unit inverse fails");
  }
  return r;
}

Result standard_models() {
  Result r{"classifier on the models (t^2, t^(2k+1), 1) and y = +-x^k"};
  FieldPtr q = NumberField::rationals();
  auto mono = [&](int e, long c = 1) { return UniPoly::monomial(q->from_integer(c), e); };
  for (int k = 1; k <= 9; ++k, ++r.cases) {
    RationalPlaneCurve c({mono(2), mono(2 * k + 1), mono(0)});
    int n = branch_type_at(c, q->zero()).n;
    if (n != 2 * k) fail(r, "cusp model k=" + std::to_string(k) + " gave A_" + std::to_string(n));
  }
  for (int k = 1; k <= 10; ++k, ++r.cases) {
    Branch b1{{mono(1), mono(k), mono(0)}}, b2{{mono(1), mono(k, -1), mono(0)}};
    int n = two_branch_index(b1, b2, 2 * k + 4);
    if (n != 2 * k - 1) fail(r, "two-branch model k=" + std::to_string(k) + " gave A_" + std::to_string(n));
  }
  ++r.cases;
  Branch smooth{{mono(1), mono(2), mono(0)}};
  if (branch_index(smooth, 8) != 0) fail(r, "smooth branch classified as singular");
  ++r.cases;
  try {
    branch_index(Branch{{mono(3), mono(4), mono(0)}}, 12);
    fail(r, "triple point accepted");
  } catch (const ClassificationError&) {
  }
  return r;
}

namespace {

std::vector<Place> relevant_places(const BigRational& a, const BigRational& b) {
  std::set<long> s{2};
  for (const BigInt& n : {a.get_num(), a.get_den(), b.get_num(), b.get_den()})
    if (abs(n) > 1)
      for (const auto& p : prime_factors(n)) s.insert(p.get_si());
  std::vector<Place> v{0};
  v.insert(v.end(), s.begin(), s.end());
  return v;
}

}  // namespace

Result hilbert_product_formula(unsigned seed, int pairs) {
  Result r{"Hilbert symbols multiply to 1 over all places"};
  Rng g(seed);
  for (int t = 0; t < pairs; ++t, ++r.cases) {
    BigRational a = g.nonzero_rational(200, 20), b = g.nonzero_rational(200, 20);
    int prod = 1;
    for (Place v : relevant_places(a, b)) prod *= hilbert_symbol(a, b, v);
    if (prod != 1) fail(r, "(" + to_string(a) + ", " + to_string(b) + ")");
  }
  return r;
}

Result hilbert_bilinearity(unsigned seed, int trials) {
  Result r{"Hilbert symbols are bilinear and symmetric"};
  Rng g(seed);
  for (int t = 0; t < trials; ++t) {
    BigRational a = g.nonzero_rational(50, 6), a2 = g.nonzero_rational(50, 6), b = g.nonzero_rational(50, 6);
    for (Place v : {0L, 2L, 3L, 5L, 7L}) {
      ++r.cases;
      if (hilbert_symbol(a * a2, b, v) != hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v))
        fail(r, "(" + to_string(a) + "*" + to_string(a2) + ", " + to_string(b) + ")_" + std::to_string(v));
      if (hilbert_symbol(a, b, v) != hilbert_symbol(b, a, v)) fail(r, "symmetry at " + std::to_string(v));
      if (hilbert_symbol(a, -a, v) != 1 || hilbert_symbol(a, 1 - a == 0 ? BigRational(1) : 1 - a, v) != 1)
        fail(r, "(a, -a) or (a, 1 - a) is not 1 for a = " + to_string(a));
    }
  }
  return r;
}

Result conic_vs_bruteforce(unsigned seed, int pairs, long height) {
  Result r{"conic verdicts against a height-" + std::to_string(height) + " point search"};
  Rng g(seed);
  int solvable = 0, found = 0;
  for (int t = 0; t < pairs; ++t, ++r.cases) {
    BigRational a = g.nonzero_rational(20, 6), b = g.nonzero_rational(20, 6);
    ConicProblem c = conic_solvable_over_Q(a, b);
    bool small = conic_has_small_point(a, b, height);
    std::string tag = "(" + to_string(a) + ", " + to_string(b) + ")";
    found += small;
    if (c.verdict == ConicProblem::Verdict::Undecided) fail(r, tag + " undecided");
    if (small && c.verdict != ConicProblem::Verdict::Solvable) fail(r, tag + " has a point but was declared unsolvable");
    if (c.verdict == ConicProblem::Verdict::Solvable) {
      ++solvable;
      if (!c.witness) fail(r, tag + " solvable without a witness");
      else if (a * (*c.witness)[0] * (*c.witness)[0] + b * (*c.witness)[1] * (*c.witness)[1] != 1)
        fail(r, tag + " witness does not satisfy the equation");
    }
  }
  std::ostringstream os;
  os << solvable << " solvable, " << pairs - solvable << " unsolvable, " << found << " with a small point";
  if (r.ok) r.detail = os.str();
  return r;
}

}  // namespace props
