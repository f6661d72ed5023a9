#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <numbers>
#include <random>

#include "workbench/errors.hpp"
#include "workbench/exact_arith.hpp"

using namespace wb;

namespace {

// Floating-point value of a cyclotomic from its power-basis coefficients.
std::complex<double> approx(const Cyclotomic& x) {
  std::complex<double> z = 0;
  const int e = x.conductor();
  for (size_t k = 0; k < x.coeffs().size(); ++k) {
    double a = 2 * std::numbers::pi * static_cast<double>(k) / e;
    z += x.coeffs()[k].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int e) {
  std::uniform_int_distribution<int> coef(-3, 3), pw(0, e - 1);
  Cyclotomic x = coef(rng);
  for (int k = 0; k < 3; ++k) x += Cyclotomic::zeta(e, pw(rng)) * Rational(coef(rng));
  return x;
}

// Multiplicative order of x in GF(2^f)*, by repeated multiplication.
std::uint64_t brute_order(const GF2m& x) {
  GF2m y = x;
  std::uint64_t k = 1;
  while (!y.is_one()) {
    y *= x;
    ++k;
  }
  return k;
}

}  // namespace

TEST(Valuation, TwoAdic) {
  EXPECT_EQ(nu(1), 0);
  EXPECT_EQ(nu(168), 3);
  EXPECT_EQ(nu(-40), 3);
  EXPECT_EQ(nu(2520), 3);
  EXPECT_ANY_THROW(nu(0));
}

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(4), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::zeta(6, 2), Cyclotomic::zeta(3));
  EXPECT_EQ(Cyclotomic::zeta(8, 8), Cyclotomic(1));
  Cyclotomic r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);  // sqrt 2
  EXPECT_EQ(r2 * r2, Cyclotomic(2));
  EXPECT_TRUE(r2.is_real());
  EXPECT_FALSE(r2.is_rational());
}

TEST(Cyclotomic, SumOfAllRootsVanishes) {
  for (int e : {5, 7, 9, 12, 15}) {
    Cyclotomic s;
    for (int k = 0; k < e; ++k) s += Cyclotomic::zeta(e, k);
    EXPECT_TRUE(s.is_zero()) << e;
  }
}

TEST(Cyclotomic, RationalValues) {
  Cyclotomic x = Cyclotomic(Rational(3, 4));
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(x.rational_value(), Rational(3, 4));
  EXPECT_ANY_THROW(Cyclotomic::zeta(3).rational_value());
}

TEST(Cyclotomic, ArithmeticAgreesWithComplexEvaluation) {
  std::mt19937_64 rng(7);
  for (int e : {3, 4, 7, 8, 12, 21, 24}) {
    for (int rep = 0; rep < 30; ++rep) {
      Cyclotomic a = random_cyclotomic(rng, e), b = random_cyclotomic(rng, e);
      EXPECT_LT(std::abs(approx(a * b) - approx(a) * approx(b)), 1e-9);
      EXPECT_LT(std::abs(approx(a + b) - (approx(a) + approx(b))), 1e-9);
      EXPECT_LT(std::abs(approx(a.conj()) - std::conj(approx(a))), 1e-9);
    }
  }
}

TEST(Cyclotomic, GaloisIsARingAutomorphism) {
  std::mt19937_64 rng(11);
  const int e = 20;
  for (int rep = 0; rep < 50; ++rep) {
    Cyclotomic a = random_cyclotomic(rng, e), b = random_cyclotomic(rng, e);
    for (long long r : {3, 7, 9, 11, 19}) {
      EXPECT_EQ((a * b).galois(r), a.galois(r) * b.galois(r));
      EXPECT_EQ((a + b).galois(r), a.galois(r) + b.galois(r));
    }
    EXPECT_EQ(a.galois(e - 1), a.conj());
  }
}

TEST(Cyclotomic, MixedConductors) {
  Cyclotomic i = Cyclotomic::zeta(4), w = Cyclotomic::zeta(3);
  Cyclotomic p = i * w;
  EXPECT_EQ(p, Cyclotomic::zeta(12, 7));
  EXPECT_EQ(p - i * w, Cyclotomic(0));
}

TEST(CyclotomicPolynomial, Degrees) {
  for (int n = 1; n <= 60; ++n) {
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n)) << n;
    int phi = 0;
    for (int k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++phi;
    EXPECT_EQ(euler_phi(n), phi);
  }
}

TEST(GF2m, ConwayGeneratorsArePrimitive) {
  for (int f = 1; f <= 12; ++f) {
    GF2m g = GF2m::generator(f);
    EXPECT_EQ(brute_order(g), (std::uint64_t{1} << f) - 1) << f;
  }
}

TEST(GF2m, FieldAxioms) {
  std::mt19937_64 rng(3);
  for (int f : {1, 2, 3, 4, 6, 8}) {
    std::uniform_int_distribution<std::uint32_t> v(0, (1u << f) - 1);
    for (int rep = 0; rep < 200; ++rep) {
      GF2m a(f, v(rng)), b(f, v(rng)), c(f, v(rng));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a + a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(GF2m, EmbeddingIsAHomomorphism) {
  std::mt19937_64 rng(5);
  for (auto [f, F] : {std::pair{1, 4}, {2, 4}, {2, 6}, {3, 6}, {4, 8}, {6, 12}}) {
    std::uniform_int_distribution<std::uint32_t> v(0, (1u << f) - 1);
    for (int rep = 0; rep < 100; ++rep) {
      GF2m a(f, v(rng)), b(f, v(rng));
      EXPECT_EQ((a * b).embed(F), a.embed(F) * b.embed(F));
      EXPECT_EQ((a + b).embed(F), a.embed(F) + b.embed(F));
    }
    // Conway compatibility: the generator of the subfield is g^((2^F-1)/(2^f-1)).
    std::uint64_t k = ((1ull << F) - 1) / ((1ull << f) - 1);
    EXPECT_EQ(GF2m::generator(f).embed(F), GF2m::generator(F).pow(k));
  }
}

TEST(ReduceMod2, ResidueDegree) {
  EXPECT_EQ(residue_degree(1), 1);
  EXPECT_EQ(residue_degree(8), 1);
  EXPECT_EQ(residue_degree(3), 2);
  EXPECT_EQ(residue_degree(7), 3);
  EXPECT_EQ(residue_degree(84), 6);  // lcm(ord_3 2, ord_7 2)
  EXPECT_EQ(residue_degree(5), 4);
}

TEST(ReduceMod2, KnownImages) {
  EXPECT_TRUE(reduce_mod2(Cyclotomic(2)).is_zero());
  EXPECT_TRUE(reduce_mod2(Cyclotomic(Rational(3, 5))).is_one());
  EXPECT_TRUE(reduce_mod2(Cyclotomic::zeta(8)).is_one());
  EXPECT_TRUE(reduce_mod2(Cyclotomic::zeta(4) + 1).is_zero());
  EXPECT_ANY_THROW(reduce_mod2(Cyclotomic(Rational(1, 2))));
  // b = (-1 + sqrt(-7))/2 is a root of x^2 + x + 2, which splits mod 2, so b
  // lands in GF(2) while zeta_7 itself does not.
  Cyclotomic b = Cyclotomic::zeta(7) + Cyclotomic::zeta(7, 2) + Cyclotomic::zeta(7, 4);
  EXPECT_TRUE((b * b + b + 2).is_zero());
  EXPECT_TRUE(reduce_mod2(b).in_prime_field());
  EXPECT_FALSE(reduce_mod2(Cyclotomic::zeta(7)).in_prime_field());
}

TEST(ReduceMod2, HomomorphismOnIntegralElements) {
  std::mt19937_64 rng(17);
  for (int e : {3, 5, 12, 21, 24}) {
    for (int rep = 0; rep < 200; ++rep) {
      Cyclotomic a = random_cyclotomic(rng, e), b = random_cyclotomic(rng, e);
      int F = residue_degree(e);
      EXPECT_EQ(reduce_mod2(a * b).embed(F), reduce_mod2(a).embed(F) * reduce_mod2(b).embed(F));
      EXPECT_EQ(reduce_mod2(a + b).embed(F), reduce_mod2(a).embed(F) + reduce_mod2(b).embed(F));
    }
  }
}
