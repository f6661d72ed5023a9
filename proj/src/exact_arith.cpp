#include "workbench/exact_arith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "workbench/errors.hpp"

namespace wb {

int nu(long long n) {
  if (n == 0) throw std::invalid_argument("nu(0)");
  if (n < 0) n = -n;
  int k = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

int nu(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("nu(0)");
  return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
}

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

int mult_order_2(long long m) {
  if (m <= 0 || m % 2 == 0) throw std::invalid_argument("mult_order_2: m must be odd and positive");
  if (m == 1) return 1;
  long long x = 2 % m;
  int f = 1;
  while (x != 1) {
    x = (x * 2) % m;
    ++f;
  }
  return f;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

using IPoly = std::vector<long long>;

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact quotient a / b for monic b.
IPoly ipoly_div_exact(IPoly a, const IPoly& b) {
  size_t db = b.size() - 1;
  IPoly q(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    long long c = a[k];
    q[k - db] = c;
    if (!c) continue;
    for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  for (size_t j = 0; j < db; ++j)
    if (a[j] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

struct CycloData {
  int n = 1;
  int phi = 1;
  IPoly poly;                     // Phi_n, constant term first, monic
  std::vector<IPoly> xpow;        // x^k mod Phi_n for 0 <= k < n, each of length phi
};

std::unique_ptr<CycloData> build_cyclo(int n) {
  auto d = std::make_unique<CycloData>();
  d->n = n;
  IPoly num{1}, den{1};
  for (int k = 1; k <= n; ++k) {
    if (n % k) continue;
    int mu = mobius(n / k);
    if (mu == 0) continue;
    IPoly f(k + 1, 0);
    f[0] = -1;
    f[k] = 1;
    if (mu > 0)
      num = ipoly_mul(num, f);
    else
      den = ipoly_mul(den, f);
  }
  d->poly = ipoly_div_exact(num, den);
  d->phi = static_cast<int>(d->poly.size()) - 1;
  d->xpow.assign(n, IPoly(d->phi, 0));
  IPoly cur(d->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    d->xpow[k] = cur;
    // multiply by x and fold x^phi back using the monic relation.
    long long top = cur[d->phi - 1];
    for (int i = d->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top)
      for (int i = 0; i < d->phi; ++i) cur[i] -= top * d->poly[i];
  }
  return d;
}

const CycloData& cyclo(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloData>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  if (n < 1 || n > kMaxConductor)
    throw ConductorOverflow("conductor " + std::to_string(n) + " exceeds " + std::to_string(kMaxConductor));
  auto built = build_cyclo(n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return *it->second;
}

long long mod_pos(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

void add_scaled(std::vector<Rational>& out, const IPoly& p, const Rational& c) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (p[i] == 1)
      out[i] += c;
    else if (p[i] == -1)
      out[i] -= c;
    else
      out[i] += c * Rational(static_cast<long>(p[i]));
  }
}

int common_conductor(int a, int b) {
  long long l = lcm_ll(a, b);
  if (l > kMaxConductor) throw ConductorOverflow("lcm conductor " + std::to_string(l));
  return static_cast<int>(l);
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) { return cyclo(n).poly; }

Cyclotomic::Cyclotomic() : cond_(1), c_{Rational(0)} {}

Cyclotomic::Cyclotomic(long long n) : cond_(1), c_{Rational(static_cast<long>(n))} {}

Cyclotomic::Cyclotomic(const Rational& q) : cond_(1), c_{q} {}

Cyclotomic Cyclotomic::zeta(int e, long long k) {
  const CycloData& d = cyclo(e);
  std::vector<Rational> c(d.phi);
  add_scaled(c, d.xpow[mod_pos(k, e)], Rational(1));
  return Cyclotomic(e, std::move(c));
}

Cyclotomic Cyclotomic::from_terms(int e, const std::vector<std::pair<long long, Rational>>& terms) {
  const CycloData& d = cyclo(e);
  std::vector<Rational> c(d.phi);
  for (auto& [k, q] : terms)
    if (q != 0) add_scaled(c, d.xpow[mod_pos(k, e)], q);
  return Cyclotomic(e, std::move(c));
}

Cyclotomic Cyclotomic::lifted(int n) const {
  if (n == cond_) return *this;
  if (n % cond_) throw std::invalid_argument("lift target is not a multiple of the conductor");
  const CycloData& d = cyclo(n);
  int m = n / cond_;
  std::vector<Rational> c(d.phi);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) add_scaled(c, d.xpow[(i * m) % n], c_[i]);
  return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_[0];
}

bool Cyclotomic::is_real() const { return *this == conj(); }

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long long r) const {
  if (cond_ <= 2) return *this;
  if (gcd_ll(r, cond_) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
  const CycloData& d = cyclo(cond_);
  std::vector<Rational> c(d.phi);
  long long rr = mod_pos(r, cond_);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) add_scaled(c, d.xpow[(i * rr) % cond_], c_[i]);
  return Cyclotomic(cond_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.cond_ == cond_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  int n = common_conductor(cond_, o.cond_);
  Cyclotomic a = lifted(n);
  Cyclotomic b = o.lifted(n);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a0, const Cyclotomic& b0) {
  if (a0.cond_ == 1) return b0 * a0.c_[0];
  if (b0.cond_ == 1) return a0 * b0.c_[0];
  int n = common_conductor(a0.cond_, b0.cond_);
  Cyclotomic a = a0.lifted(n);
  Cyclotomic b = b0.lifted(n);
  const CycloData& d = cyclo(n);
  std::vector<Rational> prod(2 * d.phi - 1);
  for (int i = 0; i < d.phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d.phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + d.phi);
  for (int k = d.phi; k < 2 * d.phi - 1; ++k)
    if (prod[k] != 0) add_scaled(c, d.xpow[k % n], prod[k]);
  return Cyclotomic(n, std::move(c));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& q) {
  if (q == 0) throw std::domain_error("division by zero");
  for (auto& c : c_) c /= q;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.cond_ == b.cond_) return a.c_ == b.c_;
  int n = common_conductor(a.cond_, b.cond_);
  return a.lifted(n).c_ == b.lifted(n).c_;
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<int, Rational>> t;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) t.emplace_back(static_cast<int>(i), c_[i]);
  return t;
}

int Cyclotomic::compare(const Cyclotomic& a0, const Cyclotomic& b0) {
  int n = common_conductor(a0.cond_, b0.cond_);
  Cyclotomic a = a0.lifted(n), b = b0.lifted(n);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (auto& [k, q] : terms()) {
    Rational a = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "E(" << cond_ << ")";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

// Lexicographically least primitive polynomials satisfying the Conway
// compatibility conditions; bit k is the coefficient of x^k.
static const std::uint32_t kConway[kMaxFieldDegree + 1] = {
    0,       0x3,     0x7,     0xb,     0x13,    0x25,    0x5b,
    0x83,    0x11d,   0x211,   0x46f,   0x805,   0x10eb,  0x201b,
    0x40a9,  0x8035,  0x1002d, 0x20009, 0x41403, 0x80027, 0x1006f3};

std::uint32_t conway_polynomial(int f) {
  if (f < 1 || f > kMaxFieldDegree) throw FieldTooSmall("no Conway polynomial for degree " + std::to_string(f));
  return kConway[f];
}

namespace {

std::uint32_t gf_mul_raw(std::uint32_t a, std::uint32_t b, int f) {
  if (f == 1) return a & b;
  std::uint64_t r = 0;
  std::uint64_t aa = a;
  while (b) {
    if (b & 1) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  std::uint64_t m = kConway[f];
  for (int k = 2 * f - 2; k >= f; --k)
    if ((r >> k) & 1) r ^= m << (k - f);
  return static_cast<std::uint32_t>(r);
}

std::uint32_t gf_pow_raw(std::uint32_t a, std::uint64_t e, int f) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = gf_mul_raw(r, a, f);
    a = gf_mul_raw(a, a, f);
    e >>= 1;
  }
  return r;
}

int common_degree(int a, int b) {
  long long l = lcm_ll(a, b);
  if (l > kMaxFieldDegree) throw FieldTooSmall("GF(2^" + std::to_string(l) + ") beyond table");
  return static_cast<int>(l);
}

}  // namespace

GF2m::GF2m(int f, std::uint32_t v) : f_(f), v_(v) {
  if (f < 1 || f > kMaxFieldDegree) throw FieldTooSmall("GF(2^" + std::to_string(f) + ")");
  if (f < 32 && (v >> f) != 0) throw std::invalid_argument("GF2m value exceeds field degree");
}

GF2m GF2m::generator(int f) { return f == 1 ? GF2m(1, 1) : GF2m(f, 2); }

GF2m GF2m::embed(int f) const {
  if (f == f_) return *this;
  if (f % f_) throw std::invalid_argument("GF2m embed: degree does not divide target");
  if (v_ <= 1) return GF2m(f, v_);
  std::uint64_t big = (std::uint64_t{1} << f) - 1, small = (std::uint64_t{1} << f_) - 1;
  std::uint32_t h = gf_pow_raw(generator(f).v_, big / small, f);
  std::uint32_t r = 0;
  for (int k = f_ - 1; k >= 0; --k) {
    r = gf_mul_raw(r, h, f);
    if ((v_ >> k) & 1) r ^= 1;
  }
  return GF2m(f, r);
}

GF2m GF2m::pow(std::uint64_t e) const { return GF2m(f_, gf_pow_raw(v_, e, f_)); }

GF2m GF2m::inverse() const {
  if (v_ == 0) throw std::domain_error("GF2m inverse of zero");
  return pow((std::uint64_t{1} << f_) - 2);
}

GF2m operator+(const GF2m& a, const GF2m& b) {
  if (a.f_ == b.f_) return GF2m(a.f_, a.v_ ^ b.v_);
  int f = common_degree(a.f_, b.f_);
  return GF2m(f, a.embed(f).v_ ^ b.embed(f).v_);
}

GF2m operator*(const GF2m& a, const GF2m& b) {
  if (a.f_ == b.f_) return GF2m(a.f_, gf_mul_raw(a.v_, b.v_, a.f_));
  int f = common_degree(a.f_, b.f_);
  return GF2m(f, gf_mul_raw(a.embed(f).v_, b.embed(f).v_, f));
}

bool operator==(const GF2m& a, const GF2m& b) {
  if (a.f_ == b.f_) return a.v_ == b.v_;
  if (a.v_ <= 1 || b.v_ <= 1) return a.v_ == b.v_;
  int f = common_degree(a.f_, b.f_);
  return a.embed(f).v_ == b.embed(f).v_;
}

std::string GF2m::str() const {
  if (v_ <= 1) return std::to_string(v_);
  std::ostringstream os;
  os << "GF(2^" << f_ << "):0x" << std::hex << v_;
  return os.str();
}

int residue_degree(int e) {
  long long m = e;
  while (m % 2 == 0) m /= 2;
  return mult_order_2(m);
}

GF2m reduce_mod2(const Cyclotomic& x) {
  int e = x.conductor();
  long long m = e;
  int a = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++a;
  }
  int f = mult_order_2(m);
  std::uint64_t field_order = (std::uint64_t{1} << f) - 1;
  // image of zeta_e: beta with beta^(2^a) = image of zeta_m = g^((2^f-1)/m)
  GF2m zm = GF2m::generator(f).pow(field_order / m);
  long long two_a = 1 % m;
  for (int i = 0; i < a; ++i) two_a = (two_a * 2) % m;
  long long u = 1;
  if (m > 1) {
    while ((u * two_a) % m != 1) ++u;
  }
  GF2m beta = zm.pow(u);
  GF2m acc = GF2m::zero(f);
  GF2m power = GF2m::one(f);
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      if (mpz_even_p(c[i].get_den_mpz_t()))
        throw NotTwoIntegral("coefficient " + c[i].get_str() + " of " + x.str());
      if (mpz_odd_p(c[i].get_num_mpz_t())) acc += power;
    }
    power *= beta;
  }
  return acc;
}

}  // namespace wb
