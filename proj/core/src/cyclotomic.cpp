#include "cfa/cyclotomic.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cfa/errors.hpp"
#include "interval.hpp"

namespace cfa {

long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

long mod_inverse(long a, long m) {
  long old_r = a % m, r = m;
  long old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && old_r != -1)
    fail(ErrorCode::internal, "mod_inverse: not coprime");
  long x = old_r == -1 ? -old_s : old_s;
  x %= m;
  if (x < 0) x += m;
  return x;
}

std::vector<std::pair<long, long>> prime_power_split(long n) {
  std::vector<std::pair<long, long>> out;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      long q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      out.emplace_back(p, q);
    }
  }
  if (m > 1) out.emplace_back(m, m);
  return out;
}

struct PrimePart {
  long p;      // prime
  long q;      // p^a
  long pa1;    // p^(a-1)
  long phi_q;  // q - pa1
  long m;      // n / q
  long minv;   // (m mod q)^-1 mod q
};

}  // namespace

struct CycloBasis {
  long n;
  std::vector<PrimePart> parts;

  explicit CycloBasis(long conductor) : n(conductor) {
    for (auto [p, q] : prime_power_split(n))
      parts.push_back({p, q, q / p, q - q / p, 0, 0});
    for (auto& pp : parts) {
      pp.m = n / pp.q;
      pp.minv = mod_inverse(pp.m % pp.q, pp.q);
    }
  }

  // Accumulates coeff * zeta_n^e, reduced to basis form, into acc.
  void accumulate(std::map<long, Rational>& acc, long e,
                  const Rational& coeff) const {
    if (coeff == 0) return;
    e %= n;
    if (e < 0) e += n;
    std::vector<std::pair<long, int>> terms{{e, 1}};
    std::vector<std::pair<long, int>> next;
    for (const auto& pp : parts) {
      next.clear();
      for (auto [ex, sign] : terms) {
        long c = (ex % pp.q) * pp.minv % pp.q;
        if (c < pp.phi_q) {
          next.emplace_back(ex, sign);
          continue;
        }
        long r = c - pp.phi_q;
        for (long t = 0; t + 2 <= pp.p; ++t) {
          long c2 = r + t * pp.pa1;
          long delta = (c2 - c) % pp.q;
          if (delta < 0) delta += pp.q;
          long ex2 = (ex + pp.m % n * delta) % n;
          next.emplace_back(ex2, -sign);
        }
      }
      terms.swap(next);
    }
    for (auto [ex, sign] : terms) {
      auto it = acc.find(ex);
      if (it == acc.end()) it = acc.emplace(ex, Rational(0)).first;
      if (sign > 0)
        it->second += coeff;
      else
        it->second -= coeff;
      if (it->second == 0) acc.erase(it);
    }
  }

  static std::shared_ptr<const CycloBasis> get(long n) {
    static std::mutex mu;
    static std::unordered_map<long, std::shared_ptr<const CycloBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<const CycloBasis>(n);
    cache.emplace(n, b);
    return b;
  }
};

Cyclotomic::Cyclotomic(const Rational& r) : n_(1) {
  if (r != 0) c_.emplace(0, r);
}

Cyclotomic::Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

Cyclotomic Cyclotomic::root_of_unity(long n, long exponent) {
  if (n <= 0) fail(ErrorCode::bad_param, "root_of_unity: conductor must be positive");
  Cyclotomic z;
  z.n_ = n;
  CycloBasis::get(n)->accumulate(z.c_, exponent, Rational(1));
  return z;
}

bool Cyclotomic::is_rational() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (c_.empty()) return Rational(0);
  if (c_.size() == 1 && c_.begin()->first == 0) return c_.begin()->second;
  return std::nullopt;
}

Cyclotomic Cyclotomic::to_conductor(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0)
    fail(ErrorCode::internal, "to_conductor: old conductor must divide new");
  Cyclotomic z;
  z.n_ = m;
  long scale = m / n_;
  auto basis = CycloBasis::get(m);
  for (const auto& [e, co] : c_) basis->accumulate(z.c_, e * scale, co);
  return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = lcm_long(n_, o.n_);
  Cyclotomic a = to_conductor(m);
  Cyclotomic b = o.to_conductor(m);
  for (const auto& [e, co] : b.c_) {
    auto it = a.c_.find(e);
    if (it == a.c_.end())
      a.c_.emplace(e, co);
    else {
      it->second += co;
      if (it->second == 0) a.c_.erase(it);
    }
  }
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z(*this);
  for (auto& [e, co] : z.c_) co = -co;
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long m = lcm_long(n_, o.n_);
  Cyclotomic a = to_conductor(m);
  Cyclotomic b = o.to_conductor(m);
  Cyclotomic z;
  z.n_ = m;
  auto basis = CycloBasis::get(m);
  for (const auto& [e1, c1] : a.c_)
    for (const auto& [e2, c2] : b.c_)
      basis->accumulate(z.c_, e1 + e2, c1 * c2);
  return z;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic z;
  z.n_ = n_;
  if (r == 0) return z;
  z.c_ = c_;
  for (auto& [e, co] : z.c_) co *= r;
  return z;
}

Cyclotomic Cyclotomic::galois(long t) const {
  t %= n_;
  if (t < 0) t += n_;
  if (std::gcd(t, n_) != 1)
    fail(ErrorCode::bad_param, "galois: exponent not coprime to conductor");
  Cyclotomic z;
  z.n_ = n_;
  auto basis = CycloBasis::get(n_);
  for (const auto& [e, co] : c_) basis->accumulate(z.c_, e * t % n_, co);
  return z;
}

Cyclotomic Cyclotomic::conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  long m = lcm_long(n_, o.n_);
  return to_conductor(m).c_ == o.to_conductor(m).c_;
}

std::complex<double> Cyclotomic::embed_double() const {
  std::complex<double> z(0.0, 0.0);
  const double tau = 6.283185307179586476925286766559;
  for (const auto& [e, co] : c_) {
    double c = co.get_d();
    double ang = tau * (double)e / (double)n_;
    z += std::complex<double>(c * std::cos(ang), c * std::sin(ang));
  }
  return z;
}

std::string Cyclotomic::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, co] : c_) {
    Rational a = co;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      out << rational_str(a);
    } else {
      if (a != 1) out << rational_str(a) << "*";
      out << "z" << n_;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// embeddings and magnitude

namespace {

// box enclosure of the canonical embedding zeta_n -> exp(2*pi*i/n)
void embed_box(const Cyclotomic& z, mpfr_prec_t prec, RealInterval& re,
               RealInterval& im) {
  re = RealInterval(prec);
  im = RealInterval(prec);
  re.set_zero();
  im.set_zero();
  RealInterval t(prec);
  for (const auto& [e, co] : z.coeffs()) {
    Rational angle = make_rational(e, z.conductor());
    t.set_cos2pi(angle);
    t.mul_rational(co);
    re.add(t);
    t.set_sin2pi(angle);
    t.mul_rational(co);
    im.add(t);
  }
}

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1 << 22;

}  // namespace

const Rational& default_magnitude_tol() {
  static const Rational tol =
      make_rational(Integer(1), int_pow(Integer(10), 30));
  return tol;
}

int Cyclotomic::real_sign(const Cyclotomic& z) {
  if (auto q = z.as_rational()) return sgn(*q);
  if (z != z.conj())
    fail(ErrorCode::internal, "real_sign: value is not real");
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    RealInterval re(prec), im(prec);
    embed_box(z, prec, re, im);
    int s = re.sign();
    if (s != 0) return s;
  }
  fail(ErrorCode::internal, "real_sign: could not separate from zero");
}

int Cyclotomic::embedding_compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a == b) return 0;
  Cyclotomic d = a - b;
  Cyclotomic re2 = d + d.conj();  // 2*Re(a-b), real
  if (!re2.is_zero()) return -real_sign(re2);
  // equal real parts: compare imaginary parts via -i*(z - conj z) = 2*Im
  Cyclotomic im2 = (d - d.conj()) * Cyclotomic::root_of_unity(4, 3);
  if (im2.is_zero())
    fail(ErrorCode::internal, "embedding_compare: distinct values, zero difference");
  return -real_sign(im2);
}

MagnitudeResult magnitude(const Cyclotomic& z, const Rational& rel_tol) {
  MagnitudeResult res;
  Cyclotomic w = z * z.conj();  // real, nonnegative
  if (auto q = w.as_rational()) {
    if (*q < 0)
      fail(ErrorCode::internal, "magnitude: negative square");
    if (auto root = exact_sqrt(*q)) {
      res.exact = *root;
      res.lo = *root;
      res.hi = *root;
      return res;
    }
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
      RealInterval iv(prec);
      iv.set_rational(*q);
      iv.sqrt_inplace();
      Rational lo = iv.lo_rational(), hi = iv.hi_rational();
      if (lo > 0 && hi - lo <= rel_tol * lo) {
        res.lo = lo;
        res.hi = hi;
        return res;
      }
    }
    fail(ErrorCode::internal, "magnitude: sqrt enclosure did not converge");
  }
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    RealInterval re(prec), im(prec);
    embed_box(w, prec, re, im);
    re.sqrt_inplace();
    Rational lo = re.lo_rational(), hi = re.hi_rational();
    if (lo > 0 && hi - lo <= rel_tol * lo) {
      res.lo = lo;
      res.hi = hi;
      return res;
    }
  }
  fail(ErrorCode::internal, "magnitude: enclosure did not converge");
}

long extend_coprime_residue(long j, long o, long lcm_target) {
  j %= o;
  if (j < 0) j += o;
  if (std::gcd(j, o) != 1)
    fail(ErrorCode::internal, "extend_coprime_residue: gcd(j, o) != 1");
  if (lcm_target == 1) return 0;
  // CRT over the prime powers of lcm_target: follow j where the prime
  // divides o, pin 1 elsewhere
  long t = 0, mod = 1;
  for (auto [p, q] : prime_power_split(lcm_target)) {
    long r = (o % p == 0) ? (j % q) : 1;
    long diff = ((r - t) % q + q) % q;
    long k = diff * mod_inverse(mod % q, q) % q;
    t += mod * k;
    mod *= q;
  }
  return t;
}

}  // namespace cfa
