#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wb {

using BigInt = mpz_class;
using Rational = mpq_class;

constexpr int kMaxConductor = 1000;
constexpr int kMaxFieldDegree = 20;

// 2-adic valuation; nu(0) is undefined and throws.
int nu(long long n);
int nu(const BigInt& n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
// Smallest f >= 1 with 2^f = 1 mod m, for odd m.
int mult_order_2(long long m);

// An element of Q(zeta_e), stored as its coefficient vector in Q[x]/(Phi_e).
// Equality of two values is coefficient equality after lifting to a common
// conductor, so no further canonicalisation is needed.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long long n);  // NOLINT: integers embed implicitly
  explicit Cyclotomic(const Rational& q);
  // zeta_e^k with zeta_e = exp(2 pi i / e).
  static Cyclotomic zeta(int e, long long k = 1);
  // Sum of coefficient * zeta_e^exponent.
  static Cyclotomic from_terms(int e, const std::vector<std::pair<long long, Rational>>& terms);

  int conductor() const { return cond_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Cyclotomic lifted(int n) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()
  bool is_real() const;

  Cyclotomic conj() const;
  Cyclotomic galois(long long r) const;  // zeta -> zeta^r, gcd(r, e) = 1

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);
  Cyclotomic& operator/=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& q) { return a /= q; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Nonzero power-basis terms (exponent, coefficient).
  std::vector<std::pair<int, Rational>> terms() const;
  // Total order used only for deterministic sorting.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);
  std::string str() const;

 private:
  Cyclotomic(int cond, std::vector<Rational> c) : cond_(cond), c_(std::move(c)) {}
  int cond_;
  std::vector<Rational> c_;  // size phi(cond_)
};

// Phi_n as integer coefficients, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

// Bit-encoded Conway polynomial over GF(2) of degree f (bit k = coefficient of x^k).
std::uint32_t conway_polynomial(int f);

// An element of GF(2^f) = GF(2)[x]/(C_f(x)), C_f the Conway polynomial.
// The tower of Conway polynomials is compatible, so embed() is canonical.
class GF2m {
 public:
  GF2m() = default;
  GF2m(int f, std::uint32_t v);
  static GF2m zero(int f = 1) { return GF2m(f, 0); }
  static GF2m one(int f = 1) { return GF2m(f, 1); }
  static GF2m generator(int f);  // the class of x, a primitive element

  int degree() const { return f_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool in_prime_field() const { return v_ <= 1; }

  GF2m embed(int f) const;  // requires degree() | f
  GF2m inverse() const;
  GF2m pow(std::uint64_t e) const;

  friend GF2m operator+(const GF2m& a, const GF2m& b);
  friend GF2m operator*(const GF2m& a, const GF2m& b);
  GF2m& operator+=(const GF2m& b) { return *this = *this + b; }
  GF2m& operator*=(const GF2m& b) { return *this = *this * b; }
  friend bool operator==(const GF2m& a, const GF2m& b);
  friend bool operator!=(const GF2m& a, const GF2m& b) { return !(a == b); }
  std::string str() const;

 private:
  int f_ = 1;
  std::uint32_t v_ = 0;
};

// Ring homomorphism from the 2-integral elements of Q(zeta_e) onto a subfield
// of GF(2^f): 2-power roots of unity go to 1, zeta_m (m odd) goes to
// g^((2^f-1)/m) with g the Conway generator of GF(2^f), f = ord_m(2).
GF2m reduce_mod2(const Cyclotomic& x);
// Degree of the residue field reached by values of conductor e.
int residue_degree(int e);

}  // namespace wb
