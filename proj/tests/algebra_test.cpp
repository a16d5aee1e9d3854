#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "anonrs/error.hpp"
#include "anonrs/field.hpp"
#include "anonrs/matrix.hpp"
#include "anonrs/modular.hpp"
#include "anonrs/polynomial.hpp"
#include "anonrs/rng.hpp"

namespace anonrs {
namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Schoolbook F_p[x] helpers for the independent irreducibility check.
void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
  trim(a);
  const u64 lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const u64 f = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(f, m[i], p), p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
  }
  return poly_mod(r, m, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// gcd(m, x^(p^i) - x) = 1 for every i <= d/2.
bool no_small_factor(const Poly& m, u64 p) {
  const std::size_t d = m.size() - 1;
  Poly xp = {0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    xp = poly_powmod(xp, p, m, p);
    Poly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = sub_mod(diff[1], 1, p);
    const Poly g = poly_gcd(m, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Exhaustive: no monic divisor of degree 1..d/2.
bool brute_irreducible(const Poly& m, u64 p) {
  const std::size_t d = m.size() - 1;
  for (std::size_t deg = 1; deg <= d / 2; ++deg) {
    u64 count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      Poly f(deg + 1, 0);
      f[deg] = 1;
      u64 rest = idx;
      for (std::size_t i = 0; i < deg; ++i, rest /= p) f[i] = rest % p;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

Poly raw(const Polynomial& f) {
  Poly out;
  for (const auto& c : f.coeffs()) out.push_back(c.coeffs()[0]);
  return out;
}

Element cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Element acc = m.field().zero();
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(m.field(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0, out = 0; cc < n; ++cc) {
        if (cc != c) minor(r - 1, out++) = m(r, cc);
      }
    }
    const Element term = m(0, c) * cofactor_det(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.random(rng);
  }
  return m;
}

std::vector<Field> test_fields() {
  return {Field::prime(7), Field::prime(9223372036854775783ULL), Field::extension(3, {1, 0, 1}),
          Field::extension(2309, raw(find_irreducible(2309, 16, 0)))};
}

TEST(ModularTest, NextPrime) {
  EXPECT_EQ(next_prime(10), 11u);
  EXPECT_EQ(next_prime(2), 2u);
  u64 expect = 141120000;
  while (!trial_division_prime(expect)) ++expect;
  EXPECT_EQ(next_prime(141120000), expect);
  EXPECT_THROW(next_prime(1), Error);
  EXPECT_THROW(next_prime(kMaxModulus - 5), Error);
}

TEST(ModularTest, PrimalityMatchesTrialDivision) {
  for (u64 n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
  EXPECT_TRUE(is_prime((u64{1} << 61) - 1));
  EXPECT_TRUE(is_prime(9223372036854775783ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime(4294967297ULL));
}

TEST(FieldTest, SmallExamples) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(f7.from_int(3) + f7.from_int(5), f7.from_int(1));
  EXPECT_EQ(f7.from_int(4).inv(), f7.from_int(2));
  EXPECT_EQ(f7.from_int(-1), f7.from_int(6));
  const Field f9 = Field::extension(3, {1, 0, 1});
  const Element x = f9.generator();
  EXPECT_EQ(x * x, f9.from_int(2));
}

TEST(FieldTest, Errors) {
  const Field f7 = Field::prime(7);
  const Field f11 = Field::prime(11);
  try {
    (void)f7.zero().inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::division_by_zero);
  }
  try {
    (void)(f7.one() + f11.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::field_mismatch);
  }
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::extension(3, {2, 0, 1}), Error);  // x^2 + 2 = (x-1)(x+1)
  EXPECT_THROW(Field::extension(3, {1, 0, 2}), Error);  // not monic
}

TEST(FieldTest, Axioms) {
  for (const Field& f : test_fields()) {
    Rng rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
      const Element a = f.random(rng), b = f.random(rng), c = f.random(rng);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a - a, f.zero());
      if (!a.is_zero()) {
        ASSERT_TRUE((a * a.inv()).is_one());
        ASSERT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(FieldTest, PowAndFermat) {
  for (const Field& f : test_fields()) {
    Rng rng(3);
    const Element a = f.random_nonzero(rng);
    EXPECT_EQ(a.pow(0), f.one());
    EXPECT_EQ(a.pow(3), a * a * a);
    if (auto q = f.order()) {
      EXPECT_TRUE(a.pow(*q - 1).is_one());
    }
  }
}

TEST(FieldTest, TextRoundTrip) {
  for (const Field& f : test_fields()) {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
      const Element a = f.random(rng);
      EXPECT_EQ(f.parse(f.format(a)), a);
    }
    EXPECT_EQ(Field::parse_description(f.describe()), f);
  }
  EXPECT_EQ(Field::prime(7).describe(), "prime 7");
  EXPECT_EQ(Field::extension(3, {1, 0, 1}).describe(), "ext 3 2 1,0,1");
  EXPECT_EQ(Field::extension(3, {1, 0, 1}).format(Field::extension(3, {1, 0, 1}).generator()), "0,1");
  EXPECT_THROW(Field::prime(7).parse("7"), Error);
  EXPECT_THROW(Field::prime(7).parse("x"), Error);
}

TEST(FieldTest, ElementIndexBijection) {
  const Field f9 = Field::extension(3, {1, 0, 1});
  for (u64 i = 0; i < 9; ++i) EXPECT_EQ(f9.index_of(f9.element_at(i)), i);
}

TEST(IrreducibleTest, SmallCases) {
  EXPECT_EQ(raw(find_irreducible(2, 2, 0)), (Poly{1, 1, 1}));
  const Field f3 = Field::prime(3);
  EXPECT_TRUE(is_irreducible(Polynomial(f3, {f3.one(), f3.zero(), f3.one()})));
  EXPECT_FALSE(is_irreducible(Polynomial(f3, {f3.from_int(2), f3.zero(), f3.one()})));
}

TEST(IrreducibleTest, MatchesExhaustiveSearch) {
  for (u64 p : {2, 3, 5, 7}) {
    for (std::size_t d = 1; d <= 6; ++d) {
      for (u64 seed = 0; seed < 3; ++seed) {
        const Poly m = raw(find_irreducible(p, d, seed));
        ASSERT_EQ(m.size(), d + 1);
        EXPECT_EQ(m.back(), 1u);
        EXPECT_TRUE(brute_irreducible(m, p)) << "p=" << p << " d=" << d;
      }
    }
  }
  // Rabin agrees with exhaustive search on every monic quartic over F_3.
  const Field f3 = Field::prime(3);
  for (u64 idx = 0; idx < 81; ++idx) {
    Poly m{idx % 3, idx / 3 % 3, idx / 9 % 3, idx / 27 % 3, 1};
    std::vector<Element> c;
    for (u64 v : m) c.push_back(f3.element_at(v));
    EXPECT_EQ(is_irreducible(Polynomial(f3, c)), brute_irreducible(m, 3)) << idx;
  }
}

TEST(IrreducibleTest, DeterministicAndNeverFactors) {
  for (std::size_t d : {4, 9, 16, 36}) {
    const Poly a = raw(find_irreducible(2309, d, 0));
    EXPECT_EQ(a, raw(find_irreducible(2309, d, 0)));
    EXPECT_TRUE(no_small_factor(a, 2309)) << d;
  }
  EXPECT_TRUE(no_small_factor(raw(find_irreducible(1000003, 5, 7)), 1000003));
}

TEST(PolynomialTest, Evaluation) {
  const Field f7 = Field::prime(7);
  EXPECT_TRUE(poly_eval(Polynomial(f7), f7.from_int(3)).is_zero());
  EXPECT_FALSE(Polynomial(f7).degree().has_value());
  EXPECT_TRUE(poly_eval(Polynomial(f7, {f7.one(), f7.from_int(2)}), f7.from_int(3)).is_zero());
  for (const Field& f : test_fields()) {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Element> c;
      for (int i = 0; i < 6; ++i) c.push_back(f.random(rng));
      const Element x = f.random(rng);
      Element naive = f.zero();
      for (std::size_t i = 0; i < c.size(); ++i) {
        Element term = c[i];
        for (std::size_t e = 0; e < i; ++e) term *= x;
        naive += term;
      }
      EXPECT_EQ(poly_eval(Polynomial(f, c), x), naive);
    }
  }
}

TEST(PolynomialTest, TrimsTrailingZeros) {
  const Field f7 = Field::prime(7);
  const Polynomial p(f7, {f7.one(), f7.zero(), f7.zero()});
  EXPECT_EQ(p.coeffs().size(), 1u);
  EXPECT_EQ(p.degree(), std::optional<std::size_t>(0));
}

TEST(PolynomialTest, Interpolation) {
  const Field f7 = Field::prime(7);
  const std::vector<std::pair<Element, Element>> one{{f7.one(), f7.from_int(5)}};
  EXPECT_EQ(interpolate(one), Polynomial(f7, {f7.from_int(5)}));
  const std::vector<std::pair<Element, Element>> line{{f7.from_int(1), f7.from_int(2)},
                                                      {f7.from_int(2), f7.from_int(4)}};
  EXPECT_EQ(interpolate(line), Polynomial(f7, {f7.zero(), f7.from_int(2)}));
  const std::vector<std::pair<Element, Element>> dup{{f7.from_int(1), f7.from_int(2)},
                                                     {f7.from_int(1), f7.from_int(4)}};
  try {
    (void)interpolate(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::duplicate_node);
  }
  for (const Field& f : test_fields()) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t k = 1 + rng.below(5);
      std::vector<Element> c;
      for (std::size_t i = 0; i < k; ++i) c.push_back(f.random(rng));
      const Polynomial g(f, c);
      std::vector<std::pair<Element, Element>> pts;
      std::vector<Element> xs;
      while (pts.size() < k) {
        const Element x = f.random(rng);
        if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
        xs.push_back(x);
        pts.emplace_back(x, g(x));
      }
      EXPECT_EQ(interpolate(pts), g);
    }
  }
}

TEST(MatrixTest, Identity) {
  const Field f = Field::prime(13);
  const Matrix id = Matrix::identity(f, 4);
  EXPECT_TRUE(det(id).is_one());
  EXPECT_EQ(rank(id), 4u);
  EXPECT_TRUE(kernel_basis(id).empty());
  try {
    (void)det(Matrix(f, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shape);
  }
}

TEST(MatrixTest, DeterminantMatchesCofactor) {
  for (const Field& f : test_fields()) {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = random_matrix(f, 5, 5, rng);
      EXPECT_EQ(det(m), cofactor_det(m));
    }
  }
}

TEST(MatrixTest, RankNullityAndKernel) {
  const Field f = Field::prime(5);
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    Matrix m = random_matrix(f, r, c, rng);
    if (r > 1 && rng.below(2)) {  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * f.from_int(2);
    }
    const auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker) {
      for (const auto& e : m.multiply(v)) EXPECT_TRUE(e.is_zero());
    }
    if (r == c) {
      EXPECT_EQ(det(m).is_zero(), rank(m) < r);
    }
  }
}

TEST(MatrixTest, SolveConsistent) {
  const Field f = Field::prime(11);
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = random_matrix(f, 4, 3, rng);
    std::vector<Element> x;
    for (int i = 0; i < 3; ++i) x.push_back(f.random(rng));
    const auto b = m.multiply(x);
    const auto sol = solve_consistent(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.multiply(*sol), b);
  }
  Matrix m(f, 2, 1, {f.one(), f.one()});
  const std::vector<Element> b{f.one(), f.from_int(2)};
  EXPECT_FALSE(solve_consistent(m, b).has_value());
}

}  // namespace
}  // namespace anonrs
