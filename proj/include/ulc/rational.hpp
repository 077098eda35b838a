#pragma once

/**
 * @file rational.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision rationals, the extended
 *        value -inf, and the q-power coefficient map.
 *
 * Rationals are GMP mpq_class values, always kept in lowest terms with a
 * positive denominator (GMP arithmetic preserves canonical form; every
 * construction site canonicalizes). ExtValue adjoins -inf, which absorbs
 * addition and is the least element under comparison.
 */

#include <gmpxx.h>

#include <string>

#include "ulc/errors.hpp"

namespace ulc {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; throws on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rat(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string rat_str(const Rational& r);

bool is_integer(const Rational& r);

/// Exact integer value; throws unless is_integer and the value fits a long.
long integer_value(const Rational& r);

/// base^e exact; throws on 0^negative.
Rational pow_int(const Rational& base, long e);

Integer factorial(unsigned long k);
Rational binomial(unsigned long n, unsigned long k);

/// Finite rational or -inf. -inf absorbs +; max(-inf, x) = x.
class ExtValue {
 public:
  ExtValue() : finite_(true), value_(0) {}
  ExtValue(Rational v) : finite_(true), value_(std::move(v)) {}
  ExtValue(long v) : finite_(true), value_(v) {}
  ExtValue(int v) : finite_(true), value_(v) {}

  static ExtValue neg_infinity() {
    ExtValue e;
    e.finite_ = false;
    e.value_ = 0;
    return e;
  }

  bool finite() const { return finite_; }

  const Rational& value() const {
    if (!finite_) throw Error(ErrorCode::InvalidInput, "value() on -inf");
    return value_;
  }

  ExtValue operator+(const ExtValue& o) const {
    if (!finite_ || !o.finite_) return neg_infinity();
    return ExtValue(value_ + o.value_);
  }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }

  /// Total order with -inf least.
  friend bool operator<=(const ExtValue& a, const ExtValue& b) {
    if (!a.finite_) return true;
    if (!b.finite_) return false;
    return a.value_ <= b.value_;
  }
  friend bool operator<(const ExtValue& a, const ExtValue& b) {
    return a <= b && a != b;
  }

  friend ExtValue max(const ExtValue& a, const ExtValue& b) { return a <= b ? b : a; }

 private:
  bool finite_;
  Rational value_;
};

/// "-inf" or the rational form.
std::string ext_str(const ExtValue& v);
ExtValue parse_ext(const std::string& text);

enum class EvalMode { Exact, Float64 };

/// q^(-v) with q in (0,1]; q^inf = 0, so v = -inf maps to 0. Exact mode
/// requires an integer exponent (NonIntegerExponent otherwise); Float64 mode
/// evaluates in binary64 and returns the exact dyadic rational of the result.
Rational q_neg_pow(const Rational& q, const ExtValue& v,
                   EvalMode mode = EvalMode::Exact);

/// Comparison slack used by Float64-mode verdicts (exact mode uses 0).
Rational float_tolerance();

}  // namespace ulc
