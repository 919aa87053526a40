#ifndef FDZETA_NUMCTX_HPP
#define FDZETA_NUMCTX_HPP

// Precision management and semantic numeric types. Everything downstream
// computes in HPReal at a context's working precision (requested digits plus
// guard digits) and uses ExactInteger/ExactRational wherever exactness is the
// contract (Bernoulli numbers, recovered coefficients).

#include <algorithm>
#include <ios>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "fdzeta/errors.hpp"

namespace fdzeta {

// Arbitrary-precision real; precision is set per thread via precision_guard.
// mpfr arithmetic is correctly rounded, so each operation loses at most one
// unit in the last working digit.
using HPReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;
using ExactInteger = boost::multiprecision::mpz_int;
// Canonicalized by GMP: always lowest terms, denominator > 0.
using ExactRational = boost::multiprecision::mpq_rational;

// Sets the thread-local default HPReal precision (decimal digits) for the
// lifetime of the guard. All public operations install one for their context.
class precision_guard {
 public:
  explicit precision_guard(unsigned digits10)
      : saved_(HPReal::default_precision()) {
    HPReal::default_precision(digits10);
  }
  ~precision_guard() { HPReal::default_precision(saved_); }
  precision_guard(const precision_guard&) = delete;
  precision_guard& operator=(const precision_guard&) = delete;

 private:
  unsigned saved_;
};

struct PrecisionContext {
  unsigned digits = 0;        // requested decimal digits
  unsigned guard_digits = 0;  // extra working digits, >= 10
  HPReal pi;                  // cached at working precision
  HPReal ln2;                 // cached at working precision

  unsigned working_digits() const { return digits + guard_digits; }

  precision_guard activate() const { return precision_guard(working_digits()); }

  // 10^-(digits - offset) at working precision.
  HPReal eps(int offset = 0) const {
    precision_guard g(working_digits());
    return pow(HPReal(10), -(static_cast<int>(digits) - offset));
  }
};

inline constexpr unsigned min_context_digits = 10;
inline constexpr unsigned max_context_digits = 10000;

inline PrecisionContext make_context(unsigned digits) {
  if (digits < min_context_digits || digits > max_context_digits)
    throw usage_error("make_context: digits must be in [10, 10000], got " +
                      std::to_string(digits));
  PrecisionContext ctx;
  ctx.digits = digits;
  ctx.guard_digits = std::max(10u, digits / 10);
  precision_guard g(ctx.working_digits());
  ctx.pi = boost::math::constants::pi<HPReal>();
  ctx.ln2 = boost::math::constants::ln_two<HPReal>();
  return ctx;
}

// A context with the same requested digits but extra guard room, for
// internal evaluations whose intermediate magnitudes exceed O(1).
inline PrecisionContext elevated_context(const PrecisionContext& ctx, unsigned extra_digits) {
  PrecisionContext out;
  out.digits = ctx.digits;
  out.guard_digits = ctx.guard_digits + extra_digits;
  precision_guard g(out.working_digits());
  out.pi = boost::math::constants::pi<HPReal>();
  out.ln2 = boost::math::constants::ln_two<HPReal>();
  return out;
}

inline bool is_finite(const HPReal& x) {
  return !boost::multiprecision::isnan(x) && !boost::multiprecision::isinf(x);
}

inline HPReal to_real(const ExactRational& q) {
  return HPReal(ExactInteger(boost::multiprecision::numerator(q))) /
         HPReal(ExactInteger(boost::multiprecision::denominator(q)));
}

inline ExactInteger factorial_exact(unsigned n) {
  ExactInteger f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// "num/den", or just "num" when den == 1.
inline std::string rational_string(const ExactRational& q) {
  const ExactInteger num = boost::multiprecision::numerator(q);
  const ExactInteger den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Exactly `digits` significant digits, scientific form, round to nearest.
// (Stream-style scientific precision counts digits after the mantissa point.)
inline std::string decimal_string(const HPReal& x, unsigned digits) {
  return x.str(digits > 1 ? digits - 1 : 1, std::ios_base::scientific);
}

}  // namespace fdzeta

#endif
