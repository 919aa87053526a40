#ifndef FDZETA_TESTS_ORACLE_HPP
#define FDZETA_TESTS_ORACLE_HPP

// Test-side oracles, independent of the library paths they check.

#include <random>

#include "fdzeta/numctx.hpp"

namespace oracle {

using fdzeta::ExactInteger;
using fdzeta::ExactRational;
using fdzeta::HPReal;
using fdzeta::PrecisionContext;

// Reference literals (60+ digits).
inline constexpr const char* zeta3_60 =
    "1.2020569031595942853997381615114499907649862923404988817922716";
inline constexpr const char* zeta25_60 =
    "1.3414872572509171797567696933486121366230376295059865112537967";
inline constexpr const char* partial4_10_30 = "1.08203658349375654678507742132";

// pi by Machin's formula, 16 atan(1/5) - 4 atan(1/239), with the arctangent
// series summed directly; shares no code with the cached constant.
inline HPReal machin_pi(const PrecisionContext& ctx) {
  auto guard = ctx.activate();
  auto atan_inv = [&](unsigned long m) {
    const HPReal m2(static_cast<unsigned long>(m) * m);
    HPReal power = HPReal(1) / HPReal(m);  // 1/m^(2k+1)
    HPReal sum = 0;
    const HPReal eps = pow(HPReal(10), -static_cast<int>(ctx.working_digits() + 5));
    for (unsigned long k = 0;; ++k) {
      const HPReal term = power / HPReal(2 * k + 1);
      sum += (k % 2 == 0) ? term : HPReal(-term);
      power /= m2;
      if (term < eps) break;
    }
    return sum;
  };
  return 16 * atan_inv(5) - 4 * atan_inv(239);
}

// Deterministic uniform draw in [lo, hi) with ~18 decimal digits of entropy.
inline HPReal uniform(std::mt19937_64& rng, const HPReal& lo, const HPReal& hi) {
  const unsigned long long r = rng();
  return lo + (hi - lo) * HPReal(r) / HPReal("18446744073709551616");
}

}  // namespace oracle

#endif
