#include "ulc/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace ulc {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!valid_integer_text(num_part))
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  Integer num(num_part);
  if (slash == std::string::npos) return Rational(num);
  const std::string den_part = text.substr(slash + 1);
  if (!valid_integer_text(den_part))
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  Integer den(den_part);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  return Rational(num) / Rational(den);
}

std::string rat_str(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long integer_value(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorCode::NonIntegerExponent, rat_str(r));
  Integer n = r.get_num();
  if (!n.fits_slong_p())
    throw Error(ErrorCode::CapExceeded, "integer out of range: " + rat_str(r));
  return n.get_si();
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (sgn(base) == 0 && e < 0)
    throw Error(ErrorCode::InvalidInput, "0 raised to a negative power");
  const unsigned long k =
      e > 0 ? static_cast<unsigned long>(e)
            : (static_cast<unsigned long>(-(e + 1)) + 1ul);
  Integer pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), base.get_den().get_mpz_t(), k);
  return e > 0 ? Rational(pn) / Rational(pd) : Rational(pd) / Rational(pn);
}

Integer factorial(unsigned long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::string ext_str(const ExtValue& v) {
  return v.finite() ? rat_str(v.value()) : std::string("-inf");
}

ExtValue parse_ext(const std::string& text) {
  if (text == "-inf") return ExtValue::neg_infinity();
  return ExtValue(parse_rat(text));
}

Rational q_neg_pow(const Rational& q, const ExtValue& v, EvalMode mode) {
  if (sgn(q) <= 0 || q > 1)
    throw Error(ErrorCode::InvalidInput, "q must lie in (0,1], got " + rat_str(q));
  if (!v.finite()) return Rational(0);
  if (q == 1) return Rational(1);
  if (mode == EvalMode::Exact) {
    if (!is_integer(v.value()))
      throw Error(ErrorCode::NonIntegerExponent,
                  "exact mode needs an integer exponent, got " + rat_str(v.value()));
    return pow_int(q, -integer_value(v.value()));
  }
  const double r = std::pow(q.get_d(), -v.value().get_d());
  if (!std::isfinite(r))
    throw Error(ErrorCode::CapExceeded, "float-mode power overflow");
  return Rational(r);  // binary64 values are exact dyadic rationals
}

Rational float_tolerance() { return Rational(1, 1000000000); }

}  // namespace ulc
