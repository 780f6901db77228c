#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace sunada {

/// Exact arbitrary-precision rational. mpq_class keeps values canonical
/// (reduced, positive denominator), which is the invariant we rely on.
using Rational = mpq_class;

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Minimal RAII wrapper for an mpfr float at a fixed precision. Only what
/// hyperbolic_length needs: set from rational, acosh, ln, scalar ops.
class BigFloat {
 public:
  explicit BigFloat(int prec_bits = 128) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_rational(const Rational& q, int prec_bits = 128) {
    BigFloat f(prec_bits);
    mpfr_set_q(f.v_, q.get_mpq_t(), MPFR_RNDN);
    return f;
  }

  BigFloat sqrt() const { BigFloat r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  BigFloat acosh() const { BigFloat r(prec()); mpfr_acosh(r.v_, v_, MPFR_RNDN); return r; }
  BigFloat log() const { BigFloat r(prec()); mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
  BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }

  BigFloat operator*(const BigFloat& o) const { BigFloat r(prec()); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  BigFloat operator/(const BigFloat& o) const { BigFloat r(prec()); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  BigFloat operator-(const BigFloat& o) const { BigFloat r(prec()); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  BigFloat mul_ui(unsigned long k) const { BigFloat r(prec()); mpfr_mul_ui(r.v_, v_, k, MPFR_RNDN); return r; }

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int prec() const { return static_cast<int>(mpfr_get_prec(v_)); }

  /// Decimal rendering with the given number of significant digits.
  std::string str(int digits = 40) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

}  // namespace sunada
