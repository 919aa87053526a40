#ifndef FDZETA_BERNOULLI_HPP
#define FDZETA_BERNOULLI_HPP

// Exact Bernoulli numbers (convention B_1 = -1/2) and periodic Bernoulli
// polynomials. Exact rationals are required downstream: zeta(2k) closed forms
// and coefficient recovery both build on them.

#include <mutex>
#include <vector>

#include "fdzeta/numctx.hpp"

namespace fdzeta {

namespace detail {

struct BernoulliCache {
  std::mutex mutex;
  std::vector<ExactRational> values;  // values[k] = B_k once computed
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace detail

// B_n by the exact recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1.
// Computing B_n fills the cache for all k <= n; safe for concurrent callers.
inline ExactRational bernoulli_number(unsigned n) {
  auto& cache = detail::bernoulli_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  if (cache.values.empty()) cache.values.emplace_back(1);
  while (cache.values.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.values.size());
    // sum_{k=0}^{m-1} C(m+1, k) B_k, binomials built incrementally.
    ExactInteger binom = 1;  // C(m+1, 0)
    ExactRational sum(0);
    for (unsigned k = 0; k < m; ++k) {
      sum += ExactRational(binom) * cache.values[k];
      binom = binom * (m + 1 - k) / (k + 1);  // exact division
    }
    // binom is now C(m+1, m) = m+1.
    cache.values.push_back(-sum / ExactRational(binom));
  }
  return cache.values[n];
}

// B_n({x}) with {x} = x - floor(x), via B_n(t) = sum_k C(n,k) B_k t^(n-k).
inline HPReal bernoulli_polynomial_periodic(unsigned n, const HPReal& x,
                                            const PrecisionContext& ctx) {
  if (n < 1) throw usage_error("bernoulli_polynomial_periodic: n must be >= 1");
  if (!is_finite(x))
    throw usage_error("bernoulli_polynomial_periodic: x must be finite");
  auto guard = ctx.activate();
  const HPReal frac = x - floor(x);
  bernoulli_number(n);  // fill cache once, outside the loop
  ExactInteger binom = 1;  // C(n, 0)
  HPReal acc = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const ExactRational bk = bernoulli_number(k);
    if (bk != 0) {
      acc += HPReal(ExactInteger(binom)) * to_real(bk) * pow(frac, static_cast<int>(n - k));
    }
    if (k < n) binom = binom * (n - k) / (k + 1);
  }
  return acc;
}

}  // namespace fdzeta

#endif
