#include "cfa/rational.hpp"

#include "cfa/errors.hpp"

namespace cfa {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::spec_parse: return "E_SPEC_PARSE";
    case ErrorCode::bad_param: return "E_BAD_PARAM";
    case ErrorCode::order_cap: return "E_ORDER_CAP";
    case ErrorCode::io: return "E_IO";
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::validate: return "E_VALIDATE";
    case ErrorCode::not_normal: return "E_NOT_NORMAL";
    case ErrorCode::degenerate: return "E_DEGENERATE";
    case ErrorCode::inconsistent: return "E_INCONSISTENT";
    case ErrorCode::internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) fail(ErrorCode::internal, "rat_pow: 0 to negative power");
    return rat_pow(1 / base, -e);
  }
  return make_rational(int_pow(base.get_num(), (unsigned long)e),
                       int_pow(base.get_den(), (unsigned long)e));
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) fail(ErrorCode::parse, "rational with zero denominator: " + s);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::parse, "malformed rational: " + s);
  }
}

std::string rational_repr(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return rational_repr(q);
}

std::string to_decimal(const Rational& q, int places) {
  bool neg = q < 0;
  Rational a = neg ? Rational(-q) : q;
  Integer scale = int_pow(Integer(10), (unsigned long)places);
  Integer num = a.get_num() * scale;
  Integer den = a.get_den();
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // round half to even
  Integer twice = rem * 2;
  int cmp = mpz_cmp(twice.get_mpz_t(), den.get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;
  Integer ip = quot / scale;
  Integer fp = quot % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), (size_t)places - frac.size(), '0');
  std::string out = ip.get_str() + "." + frac;
  if (neg && quot != 0) out = "-" + out;
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return make_rational(sn, sd);
}

}  // namespace cfa
