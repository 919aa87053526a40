#ifndef FDZETA_SPECIAL_HPP
#define FDZETA_SPECIAL_HPP

// Zeta and eta values, integer-order polylogarithms on [-1, 1], and the
// classical polylogarithm identities (Lewin 7.48/7.61, 7.62, 7.65 and the
// inversion formula) exposed as residual functions: each returns |lhs - rhs|
// with the two sides evaluated by independent routes, so a residual near zero
// is evidence for the identity rather than a tautology.

#include <string>
#include <utility>
#include <vector>

#include "fdzeta/bernoulli.hpp"
#include "fdzeta/quadrature.hpp"

namespace fdzeta {

enum class ZetaMethod { BERNOULLI_CLOSED_FORM, EULER_MACLAURIN, MELLIN_QUADRATURE };

struct ZetaValue {
  HPReal argument;
  HPReal value;
  ZetaMethod method;
};

struct PolylogPoint {
  int order = 0;
  HPReal argument;
  HPReal value;
};

struct ZetaEvenValue {
  ExactRational pi_coefficient;  // zeta(2k) = pi_coefficient * pi^(2k)
  unsigned pi_power = 0;
  HPReal value;
};

// zeta(2k) = |B_2k| (2 pi)^(2k) / (2 (2k)!), returned as the exact rational
// multiple of pi^(2k) together with its value at working precision.
inline ZetaEvenValue zeta_even(unsigned two_k, const PrecisionContext& ctx) {
  if (two_k % 2 != 0 || two_k < 2 || two_k > 200)
    throw usage_error("zeta_even: argument must be even and in [2, 200], got " +
                      std::to_string(two_k));
  auto guard = ctx.activate();
  ExactRational b = bernoulli_number(two_k);
  if (b < 0) b = -b;
  ExactRational coeff = b * ExactRational(ExactInteger(1) << two_k) /
                        ExactRational(2 * factorial_exact(two_k));
  ZetaEvenValue out;
  out.pi_coefficient = coeff;
  out.pi_power = two_k;
  out.value = to_real(coeff) * pow(ctx.pi, static_cast<int>(two_k));
  return out;
}

namespace detail {

// Remainder bound for the Euler-Maclaurin tail with n correction terms from
// split point N: |R| <= (s)_n/n! * |B_n| * N^(1-s-n)/(s+n-1).
inline HPReal em_remainder_bound(const HPReal& s, unsigned n, unsigned long split) {
  HPReal poch = 1;
  for (unsigned i = 0; i < n; ++i) poch *= s + i;
  ExactRational bn = bernoulli_number(n);
  if (bn < 0) bn = -bn;
  const HPReal nsplit(split);
  return poch / HPReal(factorial_exact(n)) * to_real(bn) *
         pow(nsplit, 1 - s - static_cast<int>(n)) / (s + static_cast<int>(n) - 1);
}

inline constexpr unsigned long em_split_cap = 1ul << 26;

}  // namespace detail

// zeta(s) for real s > 1 by the Euler-Maclaurin formula: direct partial sum
// up to the split point, then the standard correction terms, with the
// remainder integral int_N^inf B_n({x}) x^(-s-n) dx bounded rather than
// integrated. N names the minimum split point; it is raised (doubling) until
// the remainder bound meets 10^-(digits)/2. With auto_split disabled the
// given split is used as-is and an insufficient bound is an accuracy_error.
inline HPReal zeta_euler_maclaurin(const HPReal& s, unsigned n, unsigned long N,
                                   const PrecisionContext& ctx, bool auto_split = true) {
  if (!(s > 1)) throw usage_error("zeta_euler_maclaurin: requires s > 1");
  if (n < 2 || n > 60 || n % 2 != 0)
    throw usage_error("zeta_euler_maclaurin: n must be even and in [2, 60]");
  if (N < 1) throw usage_error("zeta_euler_maclaurin: N must be >= 1");
  auto guard = ctx.activate();

  const HPReal target = ctx.eps() / 2;
  unsigned long split = N;
  HPReal bound = detail::em_remainder_bound(s, n, split);
  while (bound > target) {
    if (!auto_split || split >= detail::em_split_cap)
      throw accuracy_error(
          "zeta_euler_maclaurin: remainder bound " + bound.str(3) +
          " exceeds target at split " + std::to_string(split) +
          "; a larger N (or larger n) is required");
    split *= 2;
    bound = detail::em_remainder_bound(s, n, split);
  }

  HPReal total = 0;
  for (unsigned long j = 1; j < split; ++j) total += pow(HPReal(j), -s);
  const HPReal nsplit(split);
  total += pow(nsplit, 1 - s) / (s - 1);
  total += pow(nsplit, -s) / 2;
  HPReal poch = s;  // s(s+1)...(s+k-2), seeded for k = 2
  for (unsigned k = 2; k <= n; k += 2) {
    total += to_real(bernoulli_number(k)) / HPReal(factorial_exact(k)) * poch *
             pow(nsplit, 1 - s - static_cast<int>(k));
    poch *= (s + k - 1) * (s + k);
  }
  return total;
}

// zeta(m) for integer m >= 2 by the cheapest adequate route.
inline HPReal zeta_integer(unsigned m, const PrecisionContext& ctx) {
  if (m < 2) throw usage_error("zeta_integer: requires m >= 2");
  if (m % 2 == 0 && m <= 200) return zeta_even(m, ctx).value;
  auto guard = ctx.activate();
  const unsigned w = ctx.working_digits();
  const unsigned n = std::min(60u, 2 * (w / 5 + 4));
  return zeta_euler_maclaurin(HPReal(m), n, std::max<unsigned long>(16, n), ctx);
}

// Dirichlet eta: eta(n) = (1 - 2^(1-n)) zeta(n).
inline HPReal eta(unsigned n, const PrecisionContext& ctx) {
  if (n < 2) throw usage_error("eta: requires n >= 2");
  auto guard = ctx.activate();
  const ExactRational factor(ExactInteger((ExactInteger(1) << (n - 1)) - 1),
                             ExactInteger(ExactInteger(1) << (n - 1)));
  return to_real(factor) * zeta_integer(n, ctx);
}

// Exact rational f with eta(n) = f * zeta(n).
inline ExactRational eta_over_zeta(unsigned n) {
  return ExactRational(ExactInteger((ExactInteger(1) << (n - 1)) - 1),
                       ExactInteger(ExactInteger(1) << (n - 1)));
}

// Li_s(z) for integer s >= 1 and real z in [-1, 1]. Direct series with an
// explicit geometric tail bound; endpoints are exact: Li_s(1) = zeta(s),
// Li_s(-1) = -eta(s). Li_1(1) diverges.
inline HPReal polylog(int s, const HPReal& z, const PrecisionContext& ctx) {
  if (s < 1) throw usage_error("polylog: order must be >= 1");
  if (z < -1 || z > 1) throw usage_error("polylog: argument must lie in [-1, 1]");
  if (s == 1 && z == 1) throw divergence_error("polylog: Li_1(1) diverges");
  auto guard = ctx.activate();
  if (z == 0) return HPReal(0);
  if (s == 1) return -log1p(-z);
  if (z == 1) return zeta_integer(static_cast<unsigned>(s), ctx);
  if (z == -1) return -eta(static_cast<unsigned>(s), ctx);

  const HPReal eps = pow(HPReal(10), -static_cast<int>(ctx.working_digits() + 2));
  const HPReal az = abs(z);
  const HPReal tail_factor = 1 / (1 - az);  // sum_{k>K} |z|^k/k^s <= |z|^(K+1)/((K+1)^s (1-|z|))
  HPReal sum = 0;
  HPReal zk = 1;
  for (unsigned long k = 1;; ++k) {
    zk *= z;
    sum += zk / pow(HPReal(k), s);
    const HPReal tail = pow(az, static_cast<unsigned long>(k + 1)) /
                        pow(HPReal(k + 1), s) * tail_factor;
    if (tail < eps) break;
  }
  return sum;
}

inline PolylogPoint polylog_point(int s, const HPReal& z, const PrecisionContext& ctx) {
  return PolylogPoint{s, z, polylog(s, z, ctx)};
}

namespace detail {

// Li_n(-y) for y > 0 by the Mellin-type integral
//   Li_n(-y) = -y/(n-1)! * int_0^inf t^(n-1)/(e^t + y) dt,
// an evaluation route independent of both the defining series and the
// inversion formula (used as the second route in inversion residuals).
inline HPReal polylog_neg_quad(int n, const HPReal& y, const PrecisionContext& ctx) {
  auto guard = ctx.activate();
  auto integrand = [&](const HPReal& t) { return pow(t, n - 1) / (exp(t) + y); };
  const QuadResult q = integrate_half_line(integrand, ctx);
  return -y / HPReal(factorial_exact(static_cast<unsigned>(n - 1))) * q.value;
}

// Li_n at arguments <= 0, choosing series for [-1, 0] and quadrature below -1.
inline HPReal polylog_negative_arg(int n, const HPReal& y, const PrecisionContext& ctx) {
  // argument is -y, y > 0
  if (y <= 1) return polylog(n, -y, ctx);
  return polylog_neg_quad(n, y, ctx);
}

}  // namespace detail

// Residual of the inversion formula
//   Li_n(-x) + (-1)^n Li_n(-1/x) = -ln^n(x)/n! + 2 sum_{r=1}^{floor(n/2)}
//                                   ln^(n-2r)(x)/(n-2r)! * Li_{2r}(-1).
// Arguments outside [-1, 0] are evaluated by quadrature, so the two sides
// never share the formula under test.
inline HPReal polylog_inversion_residual(int n, const HPReal& x, const PrecisionContext& ctx) {
  if (n < 2) throw usage_error("polylog_inversion_residual: requires n >= 2");
  if (!(x > 0)) throw usage_error("polylog_inversion_residual: requires x > 0");
  auto guard = ctx.activate();
  const HPReal lx = log(x);
  const HPReal li_minus_x = detail::polylog_negative_arg(n, x, ctx);
  const HPReal li_minus_inv = detail::polylog_negative_arg(n, 1 / x, ctx);
  HPReal rhs_sum = 0;
  for (int r = 1; 2 * r <= n; ++r) {
    const int k = n - 2 * r;
    rhs_sum += pow(lx, k) / HPReal(factorial_exact(static_cast<unsigned>(k))) *
               (-eta(static_cast<unsigned>(2 * r), ctx));
  }
  const int sign = (n % 2 == 0) ? 1 : -1;
  return abs(li_minus_x + sign * li_minus_inv +
             pow(lx, n) / HPReal(factorial_exact(static_cast<unsigned>(n))) - 2 * rhs_sum);
}

// Residual of Lewin 7.48/7.61:
//   Li_4(x) = ln(x) Li_3(x) - ln^2(x)/2 Li_2(x) - 1/2 int_0^x ln^2(t) ln(1-t)/t dt.
inline HPReal li4_lewin_residual(const HPReal& x, const PrecisionContext& ctx) {
  if (!(x > 0 && x < 1)) throw usage_error("li4_lewin_residual: requires 0 < x < 1");
  auto guard = ctx.activate();
  auto integrand = [](const HPReal& t, const HPReal& tc) {
    const HPReal lt = tc > 0 ? log(tc) : log(t);
    return lt * lt * log1p(-t) / t;
  };
  const QuadResult q = integrate_finite(integrand, HPReal(0), x, ctx);
  const HPReal lx = log(x);
  return abs(polylog(4, x, ctx) - lx * polylog(3, x, ctx) +
             lx * lx / 2 * polylog(2, x, ctx) + q.value / 2);
}

// Residual of Lewin 7.62 (7.61 after one more integration by parts):
//   Li_4(x) = ln(x) Li_3(x) - ln^2(x)/2 Li_2(x) - ln^3(x) ln(1-x)/6
//             - 1/6 int_0^x ln^3(t)/(1-t) dt.
inline HPReal li4_lewin2_residual(const HPReal& x, const PrecisionContext& ctx) {
  if (!(x > 0 && x < 1)) throw usage_error("li4_lewin2_residual: requires 0 < x < 1");
  auto guard = ctx.activate();
  auto integrand = [](const HPReal& t, const HPReal& tc) {
    const HPReal lt = tc > 0 ? log(tc) : log(t);
    return lt * lt * lt / (1 - t);
  };
  const QuadResult q = integrate_finite(integrand, HPReal(0), x, ctx);
  const HPReal lx = log(x);
  return abs(polylog(4, x, ctx) - lx * polylog(3, x, ctx) +
             lx * lx / 2 * polylog(2, x, ctx) + lx * lx * lx * log1p(-x) / 6 +
             q.value / 6);
}

// Residual of Lewin 7.65:
//   int_0^x ln^2(t) ln(1-t)/(1-t) dt
//     = -2 [ Li_4(-x/(1-x)) + Li_4(x) - Li_4(1-x) + Li_4(1) ]
//       + 2 [ ln(1-x) Li_3(x) - ln(x) Li_3(1-x) ]
//       + 2 ln(x) ln(1-x) Li_2(1-x) - pi^2/6 ln^2(1-x)
//       + 1/12 ln^2(1-x) [ 6 ln^2(x) + 4 ln(x) ln(1-x) - ln^2(1-x) ]
//       + 2 Li_3(1) ln(x/(1-x)).
// Li_4 at -x/(1-x) < -1 (x > 1/2) is reduced into [-1, 0) by the inversion
// formula before the series is applied.
inline HPReal li4_landen_residual(const HPReal& x, const PrecisionContext& ctx) {
  if (!(x > 0 && x < 1)) throw usage_error("li4_landen_residual: requires 0 < x < 1");
  auto guard = ctx.activate();
  auto integrand = [](const HPReal& t, const HPReal& tc) {
    const HPReal lt = tc > 0 ? log(tc) : log(t);
    return lt * lt * log1p(-t) / (1 - t);
  };
  const QuadResult q = integrate_finite(integrand, HPReal(0), x, ctx);

  const HPReal lx = log(x);
  const HPReal l1 = log1p(-x);  // ln(1-x)
  const HPReal u = x / (1 - x);
  HPReal li4_neg;  // Li_4(-x/(1-x))
  if (u <= 1) {
    li4_neg = polylog(4, -u, ctx);
  } else {
    // Inversion with n = 4: Li_4(-u) = -Li_4(-1/u) - ln^4(u)/24
    //                                  + ln^2(u) Li_2(-1) + 2 Li_4(-1).
    const HPReal lu = lx - l1;
    li4_neg = -polylog(4, -1 / u, ctx) - pow(lu, 4) / 24 -
              lu * lu * eta(2, ctx) - 2 * eta(4, ctx);
  }

  const HPReal zeta3 = zeta_integer(3, ctx);
  const HPReal rhs =
      -2 * (li4_neg + polylog(4, x, ctx) - polylog(4, 1 - x, ctx) +
            zeta_even(4, ctx).value) +
      2 * (l1 * polylog(3, x, ctx) - lx * polylog(3, 1 - x, ctx)) +
      2 * lx * l1 * polylog(2, 1 - x, ctx) - ctx.pi * ctx.pi / 6 * l1 * l1 +
      l1 * l1 * (6 * lx * lx + 4 * lx * l1 - l1 * l1) / 12 +
      2 * zeta3 * (lx - l1);
  return abs(q.value - rhs);
}

}  // namespace fdzeta

#endif
