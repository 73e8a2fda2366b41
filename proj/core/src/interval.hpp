#pragma once

// Directed-rounding real intervals on top of MPFR. Internal to the core
// library; only rational endpoints ever cross a public interface.

#include <mpfr.h>

#include <utility>

#include "cfa/rational.hpp"

namespace cfa {

class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec);
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  ~RealInterval();

  mpfr_prec_t prec() const { return prec_; }

  void set_zero();
  void set_rational(const Rational& q);
  // enclosure of cos(2*pi*t) resp. sin(2*pi*t) for exact rational t
  void set_cos2pi(const Rational& t);
  void set_sin2pi(const Rational& t);

  void add(const RealInterval& o);
  void sub(const RealInterval& o);
  void mul(const RealInterval& o);
  void mul_rational(const Rational& q);
  void add_sq(const RealInterval& o);  // += o*o
  void sqrt_inplace();                 // requires lo >= 0 (clamped)

  bool contains_zero() const;
  int sign() const;  // +1 / -1 when 0 is excluded, else 0

  Rational lo_rational() const;
  Rational hi_rational() const;
  Rational width() const;

 private:
  static void trig2pi(mpfr_t out_lo, mpfr_t out_hi, const Rational& t,
                      mpfr_prec_t prec, bool want_sin);
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

Rational mpfr_to_rational(const mpfr_t x);

}  // namespace cfa
