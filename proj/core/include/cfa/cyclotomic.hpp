#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfa/rational.hpp"

namespace cfa {

// Exact element of Q(zeta_n), n the conductor.
//
// Representation: sum of coeff * zeta_n^e over a fixed integral basis.
// The basis is the tensor product over the prime powers q = p^a dividing n
// of the power bases {zeta_q^c : 0 <= c < phi(q)}; an exponent e belongs to
// the basis iff each of its CRT components lies in that range.  Reduction
// uses the sparse relation zeta_q^{phi(q)} = -(1 + zeta_q^{p^{a-1}} + ...),
// so every value has exactly one stored form and zero-testing is a map
// emptiness check.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  explicit Cyclotomic(const Rational& r);
  explicit Cyclotomic(long integer_value);

  static Cyclotomic root_of_unity(long n, long exponent);

  long conductor() const { return n_; }
  const std::map<long, Rational>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic scaled(const Rational& r) const;
  Cyclotomic conj() const;
  // Galois automorphism zeta_n -> zeta_n^t, gcd(t, n) = 1.
  Cyclotomic galois(long t) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Rewrites into the basis of conductor m (n | m). Value is unchanged.
  Cyclotomic to_conductor(long m) const;

  std::complex<double> embed_double() const;
  std::string str() const;

  // Strict total order used for canonical character ordering: descending
  // real part, then descending imaginary part, decided exactly (equality
  // by canonical form, signs by refined enclosures).
  static int embedding_compare(const Cyclotomic& a, const Cyclotomic& b);

  // Sign of a value known to be real (z == conj(z)); exact.
  static int real_sign(const Cyclotomic& z);

 private:
  friend struct CycloBasis;
  friend class CycloEmbedding;
  long n_;
  std::map<long, Rational> c_;
};

struct MagnitudeResult {
  std::optional<Rational> exact;
  Rational lo;
  Rational hi;
};

// |z| as an exact rational when z * conj(z) is the square of a rational,
// and always a certified enclosure with relative width below rel_tol.
MagnitudeResult magnitude(const Cyclotomic& z,
                          const Rational& rel_tol = default_magnitude_tol());

const Rational& default_magnitude_tol();  // 10^-30

// t = j (mod o) extended to a residue coprime to lcm_target (o | lcm_target
// not required; every prime of lcm_target dividing o follows j, the rest
// are fixed at 1). Requires gcd(j, o) = 1.
long extend_coprime_residue(long j, long o, long lcm_target);

long lcm_long(long a, long b);
long euler_phi(long n);

}  // namespace cfa
