#include "interval.hpp"

#include "cfa/errors.hpp"

namespace cfa {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void RealInterval::set_zero() {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

void RealInterval::set_rational(const Rational& q) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

void RealInterval::trig2pi(mpfr_t out_lo, mpfr_t out_hi, const Rational& t,
                           mpfr_prec_t prec, bool want_sin) {
  // angle = 2*pi*t with t in [0,1); evaluate at both endpoints of the
  // angle enclosure and pad by the enclosure width (|cos'|,|sin'| <= 1).
  mpfr_t pi_lo, pi_hi, a_lo, a_hi, v1, v2, v3, v4, pad;
  mpfr_inits2(prec, pi_lo, pi_hi, a_lo, a_hi, v1, v2, v3, v4, pad,
              (mpfr_ptr) nullptr);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  mpfr_set_q(a_lo, t.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(a_hi, t.get_mpq_t(), MPFR_RNDU);
  // t >= 0 so directed products stay ordered
  mpfr_mul(a_lo, a_lo, pi_lo, MPFR_RNDD);
  mpfr_mul_ui(a_lo, a_lo, 2, MPFR_RNDD);
  mpfr_mul(a_hi, a_hi, pi_hi, MPFR_RNDU);
  mpfr_mul_ui(a_hi, a_hi, 2, MPFR_RNDU);
  mpfr_sub(pad, a_hi, a_lo, MPFR_RNDU);
  if (want_sin) {
    mpfr_sin(v1, a_lo, MPFR_RNDD);
    mpfr_sin(v2, a_lo, MPFR_RNDU);
    mpfr_sin(v3, a_hi, MPFR_RNDD);
    mpfr_sin(v4, a_hi, MPFR_RNDU);
  } else {
    mpfr_cos(v1, a_lo, MPFR_RNDD);
    mpfr_cos(v2, a_lo, MPFR_RNDU);
    mpfr_cos(v3, a_hi, MPFR_RNDD);
    mpfr_cos(v4, a_hi, MPFR_RNDU);
  }
  mpfr_min(out_lo, v1, v3, MPFR_RNDD);
  mpfr_sub(out_lo, out_lo, pad, MPFR_RNDD);
  mpfr_max(out_hi, v2, v4, MPFR_RNDU);
  mpfr_add(out_hi, out_hi, pad, MPFR_RNDU);
  mpfr_clears(pi_lo, pi_hi, a_lo, a_hi, v1, v2, v3, v4, pad,
              (mpfr_ptr) nullptr);
}

void RealInterval::set_cos2pi(const Rational& t) { trig2pi(lo_, hi_, t, prec_, false); }
void RealInterval::set_sin2pi(const Rational& t) { trig2pi(lo_, hi_, t, prec_, true); }

void RealInterval::add(const RealInterval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
}

void RealInterval::sub(const RealInterval& o) {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  mpfr_set(lo_, t, MPFR_RNDD);
  mpfr_clear(t);
}

void RealInterval::mul(const RealInterval& o) {
  mpfr_t c[4], nlo, nhi;
  for (auto& x : c) mpfr_init2(x, prec_);
  mpfr_init2(nlo, prec_);
  mpfr_init2(nhi, prec_);
  mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
  mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
  mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
  mpfr_min(nlo, c[0], c[1], MPFR_RNDD);
  mpfr_min(nlo, nlo, c[2], MPFR_RNDD);
  mpfr_min(nlo, nlo, c[3], MPFR_RNDD);
  mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
  mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
  mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
  mpfr_max(nhi, c[0], c[1], MPFR_RNDU);
  mpfr_max(nhi, nhi, c[2], MPFR_RNDU);
  mpfr_max(nhi, nhi, c[3], MPFR_RNDU);
  mpfr_set(lo_, nlo, MPFR_RNDD);
  mpfr_set(hi_, nhi, MPFR_RNDU);
  for (auto& x : c) mpfr_clear(x);
  mpfr_clear(nlo);
  mpfr_clear(nhi);
}

void RealInterval::mul_rational(const Rational& q) {
  RealInterval o(prec_);
  o.set_rational(q);
  mul(o);
}

void RealInterval::add_sq(const RealInterval& o) {
  RealInterval sq(o);
  sq.mul(o);
  add(sq);
}

void RealInterval::sqrt_inplace() {
  if (mpfr_sgn(lo_) < 0) mpfr_set_zero(lo_, 1);  // rounding slack below 0
  if (mpfr_sgn(hi_) < 0)
    fail(ErrorCode::internal, "sqrt of negative interval");
  mpfr_sqrt(lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(hi_, hi_, MPFR_RNDU);
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int RealInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

Rational mpfr_to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) fail(ErrorCode::internal, "non-finite interval endpoint");
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational r(mant);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(),
                 (mp_bitcnt_t)e);
  } else {
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(),
                 (mp_bitcnt_t)(-e));
  }
  r.canonicalize();
  return r;
}

Rational RealInterval::lo_rational() const { return mpfr_to_rational(lo_); }
Rational RealInterval::hi_rational() const { return mpfr_to_rational(hi_); }

Rational RealInterval::width() const {
  return hi_rational() - lo_rational();
}

}  // namespace cfa
