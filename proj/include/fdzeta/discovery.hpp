#ifndef FDZETA_DISCOVERY_HPP
#define FDZETA_DISCOVERY_HPP

// The moment family I(p) = int_{-inf}^{inf} z^(2p) ln(1+e^z)/(1+e^z) dz:
// evaluation in three equivalent representations, exact-coefficient recovery
// against the zeta and eta bases, a ratio-polynomial fit over the recovered
// eta-basis coefficients, and validation of the resulting closed form
// c_p = A (p+1) (2p)! beyond the fitting range.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fdzeta/special.hpp"

namespace fdzeta {

enum class MomentForm { REAL_LINE, HALF_LINE, UNIT };

inline constexpr int default_moment_ceiling = 12;

// Stabilized integrand of the REAL_LINE form. For z > 0 the softplus factor
// is computed as z + ln1p(e^-z) and 1/(1+e^z) as e^-z/(1+e^-z), keeping every
// intermediate bounded. Strictly positive for all finite z.
inline HPReal moment_integrand_real_line(int p, const HPReal& z) {
  HPReal base;
  if (z > 0) {
    const HPReal w = exp(-z);
    base = (z + log1p(w)) * w / (1 + w);
  } else {
    const HPReal w = exp(z);
    base = log1p(w) / (1 + w);
  }
  if (p == 0) return base;
  return pow(z, 2 * p) * base;
}

namespace detail {

// Extra guard digits for the dynamic range of z^(2p): the integral's
// magnitude grows like (2p+2)!, which absolute-error targets must absorb.
inline unsigned moment_extra_guard(int p) {
  double lg = 0;
  for (int k = 2; k <= 2 * p + 2; ++k) lg += std::log10(static_cast<double>(k));
  return static_cast<unsigned>(lg) + 8;
}

}  // namespace detail

// I(p) in the requested representation. Evaluation runs at an elevated
// working precision matched to the integrand's dynamic range; the default
// target is still 10^-(digits) absolute.
inline QuadResult moment_integral(int p, MomentForm form, const PrecisionContext& ctx,
                                  const QuadConfig* overrides = nullptr,
                                  int ceiling = default_moment_ceiling) {
  if (p < 0 || p > ceiling)
    throw usage_error("moment_integral: p must be in [0, " + std::to_string(ceiling) +
                      "], got " + std::to_string(p));
  const PrecisionContext work = elevated_context(ctx, detail::moment_extra_guard(p));
  auto guard = work.activate();
  const QuadConfig cfg = overrides ? *overrides : QuadConfig::defaults(ctx);

  switch (form) {
    case MomentForm::REAL_LINE: {
      auto f = [p](const HPReal& z) { return moment_integrand_real_line(p, z); };
      return integrate_real_line(f, cfg, work);
    }
    case MomentForm::HALF_LINE: {
      // u = e^z: I(p) = int_0^inf ln^(2p)(u) ln(1+u) / (u (1+u)) du
      auto f = [p](const HPReal& u) {
        const HPReal lu = log(u);
        const HPReal base = log1p(u) / (u * (1 + u));
        if (p == 0) return base;
        return HPReal(pow(lu, 2 * p) * base);
      };
      return integrate_half_line(f, cfg, work);
    }
    case MomentForm::UNIT: {
      // u = t/(1-t): I(p) = -int_0^1 [ln t - ln(1-t)]^(2p) ln(1-t)/t dt
      auto f = [p](const HPReal& t, const HPReal& tc) {
        HPReal lt, l1t;
        if (tc > 0) {  // near 0: t = tc exactly
          lt = log(tc);
          l1t = log1p(-t);
        } else {  // near 1: 1 - t = -tc exactly
          lt = log1p(tc);
          l1t = log(-tc);
        }
        const HPReal base = -l1t / t;
        if (p == 0) return HPReal(base);
        return HPReal(pow(lt - l1t, 2 * p) * base);
      };
      return integrate_finite(f, HPReal(0), HPReal(1), cfg, work);
    }
  }
  throw usage_error("moment_integral: unknown form");
}

// Continued-fraction rational recognition: the convergent p/q of x with the
// smallest q such that |x - p/q| <= tol and q <= max_denominator. Throws
// recognition_error when no convergent qualifies.
inline ExactRational rationalize(const HPReal& x, const ExactInteger& max_denominator,
                                 const HPReal& tol) {
  if (!is_finite(x)) throw usage_error("rationalize: x must be finite");
  if (max_denominator < 1) throw usage_error("rationalize: max_denominator must be >= 1");
  if (!(tol > 0)) throw usage_error("rationalize: tol must be positive");

  ExactInteger h_prev = 0, h = 1;  // numerator recurrence seeds (h_{-2}, h_{-1})
  ExactInteger k_prev = 1, k = 0;  // denominator recurrence seeds
  HPReal y = x;
  for (int iter = 0; iter < 20000; ++iter) {
    const HPReal fl = floor(y);
    const ExactInteger a = fl.convert_to<ExactInteger>();
    const ExactInteger h_next = a * h + h_prev;
    const ExactInteger k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
    if (abs(x - to_real(ExactRational(h, k))) <= tol) return ExactRational(h, k);
    const HPReal frac = y - fl;
    if (frac == 0) break;  // exact expansion ended without meeting tol
    y = 1 / frac;
  }
  throw recognition_error("rationalize: no rational with denominator <= " +
                          max_denominator.str() + " within tolerance");
}

struct MomentRecord {
  int p = 0;
  HPReal value;  // I(p), REAL_LINE form
  std::optional<ExactRational> coeff_zeta;  // I(p)/zeta(2p+2) if recognized
  std::optional<ExactRational> coeff_eta;   // I(p)/eta(2p+2) if recognized
  HPReal residual_zeta;
  HPReal residual_eta;
  bool recognized() const { return coeff_zeta.has_value() && coeff_eta.has_value(); }
};

// Rows p = 0..p_max: I(p) by quadrature, both basis coefficients recovered
// with max_denominator 10^9 and tol 10^-(digits-12). Recognition failures are
// recorded per row; the table is still returned.
inline std::vector<MomentRecord> coefficient_table(int p_max, const PrecisionContext& ctx,
                                                   int ceiling = default_moment_ceiling) {
  if (p_max < 0 || p_max > ceiling)
    throw usage_error("coefficient_table: p_max must be in [0, " + std::to_string(ceiling) + "]");
  std::vector<MomentRecord> table;
  const ExactInteger max_den = ExactInteger(1000000000);
  for (int p = 0; p <= p_max; ++p) {
    const PrecisionContext work = elevated_context(ctx, detail::moment_extra_guard(p));
    auto guard = work.activate();
    MomentRecord row;
    row.p = p;
    row.value = moment_integral(p, MomentForm::REAL_LINE, ctx, nullptr, ceiling).value;
    const HPReal tol = ctx.eps(12);
    const HPReal zeta_basis = zeta_even(static_cast<unsigned>(2 * p + 2), work).value;
    const HPReal eta_basis = eta(static_cast<unsigned>(2 * p + 2), work);
    try {
      row.coeff_zeta = rationalize(row.value / zeta_basis, max_den, tol);
      row.residual_zeta = abs(row.value - to_real(*row.coeff_zeta) * zeta_basis);
    } catch (const recognition_error&) {
    }
    try {
      row.coeff_eta = rationalize(row.value / eta_basis, max_den, tol);
      row.residual_eta = abs(row.value - to_real(*row.coeff_eta) * eta_basis);
    } catch (const recognition_error&) {
    }
    table.push_back(std::move(row));
  }
  return table;
}

struct RatioPolynomial {
  std::vector<ExactRational> coeffs;  // ascending powers of p

  ExactRational operator()(const ExactRational& p) const {
    ExactRational acc(0), ppow(1);
    for (const auto& c : coeffs) {
      acc += c * ppow;
      ppow *= p;
    }
    return acc;
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Closed form of the eta-basis coefficients: c_p = A (p+1) (2p)!.
struct MomentClosedForm {
  ExactRational A;

  ExactRational coefficient(int p) const {
    return A * ExactRational(ExactInteger(p + 1) *
                             factorial_exact(static_cast<unsigned>(2 * p)));
  }
  // I(p) predicted from the closed form at working precision.
  HPReal predict(int p, const PrecisionContext& ctx) const {
    return to_real(coefficient(p)) * eta(static_cast<unsigned>(2 * p + 2), ctx);
  }
  std::string display() const {
    return rational_string(A) + " * (p+1) * (2p)! * eta(2p+2)";
  }
};

struct FitResult {
  bool pattern_found = false;
  std::optional<RatioPolynomial> ratio_polynomial;
  std::optional<MomentClosedForm> closed_form;
  std::vector<int> fit_range;
  std::vector<int> validated_range;
  std::vector<std::pair<int, ExactRational>> ratios;  // (p, c_p/c_{p-1}) for inspection
};

namespace detail {

// Exact Gaussian elimination; the Vandermonde systems here are tiny.
inline std::optional<std::vector<ExactRational>> solve_exact(
    std::vector<std::vector<ExactRational>> m, std::vector<ExactRational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const ExactRational f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<ExactRational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    ExactRational acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return x;
}

}  // namespace detail

// Fits the lowest-degree exact rational polynomial q with
// q(p) = c_p/c_{p-1} on the table's eta-basis coefficients, then checks the
// telescoped closed form c_p = A (p+1) (2p)! (A = c_0) against every row.
// The degree search is capped so that at least one ratio beyond those used to
// determine q remains as verification. No exact fit is a result, not an
// error: the ratios are returned for inspection.
inline FitResult fit_ratio_pattern(const std::vector<MomentRecord>& table, int degree_max = 4) {
  FitResult out;
  std::vector<ExactRational> coeffs;  // eta-basis coefficients, p = 0..
  for (const auto& row : table) {
    if (!row.coeff_eta.has_value()) break;  // require a contiguous prefix
    coeffs.push_back(*row.coeff_eta);
    out.fit_range.push_back(row.p);
  }
  if (coeffs.size() < 4)
    throw usage_error("fit_ratio_pattern: need at least 4 successful eta-basis rows");
  for (std::size_t p = 1; p < coeffs.size(); ++p) {
    if (coeffs[p - 1] == 0) return out;
    out.ratios.emplace_back(static_cast<int>(p), coeffs[p] / coeffs[p - 1]);
  }

  const int n_ratios = static_cast<int>(out.ratios.size());
  const int search_max = std::min(degree_max, n_ratios - 2);
  for (int d = 0; d <= search_max; ++d) {
    // Determine q from the first d+1 ratios.
    std::vector<std::vector<ExactRational>> m(d + 1, std::vector<ExactRational>(d + 1));
    std::vector<ExactRational> rhs(d + 1);
    for (int i = 0; i <= d; ++i) {
      const ExactRational p(out.ratios[i].first);
      ExactRational ppow(1);
      for (int j = 0; j <= d; ++j) {
        m[i][j] = ppow;
        ppow *= p;
      }
      rhs[i] = out.ratios[i].second;
    }
    auto sol = detail::solve_exact(std::move(m), std::move(rhs));
    if (!sol) continue;
    RatioPolynomial q{*sol};
    bool all_match = true;
    for (const auto& [p, r] : out.ratios) {
      if (q(ExactRational(p)) != r) {
        all_match = false;
        break;
      }
    }
    if (!all_match) continue;

    out.pattern_found = true;
    out.ratio_polynomial = std::move(q);
    // Telescoped template check: c_p == A (p+1) (2p)! exactly on all rows.
    MomentClosedForm cf{coeffs[0]};
    bool template_ok = true;
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      if (cf.coefficient(static_cast<int>(p)) != coeffs[p]) {
        template_ok = false;
        break;
      }
    }
    if (template_ok) out.closed_form = cf;
    return out;
  }
  return out;  // pattern_found = false, ratios available
}

struct ConjectureCheckRow {
  int p = 0;
  HPReal integral;   // freshly computed I(p)
  HPReal predicted;  // closed-form value
  HPReal residual;
  bool passed = false;
};

// Checks |I(p) - closed_form(p)| <= 10^-(digits-10) with I(p) freshly
// computed (REAL_LINE form).
inline std::vector<ConjectureCheckRow> conjecture_check(const MomentClosedForm& cf,
                                                        const std::vector<int>& p_list,
                                                        const PrecisionContext& ctx,
                                                        int ceiling = default_moment_ceiling) {
  std::vector<ConjectureCheckRow> rows;
  for (int p : p_list) {
    const PrecisionContext work = elevated_context(ctx, detail::moment_extra_guard(p));
    auto guard = work.activate();
    ConjectureCheckRow row;
    row.p = p;
    row.integral = moment_integral(p, MomentForm::REAL_LINE, ctx, nullptr, ceiling).value;
    row.predicted = cf.predict(p, work);
    row.residual = abs(row.integral - row.predicted);
    row.passed = row.residual <= ctx.eps(10);
    rows.push_back(std::move(row));
  }
  return rows;
}

struct DiscoveryOutcome {
  std::vector<MomentRecord> table;
  FitResult fit;
  std::vector<ConjectureCheckRow> checks;
  bool success() const {
    if (!fit.pattern_found || !fit.closed_form.has_value()) return false;
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Full pipeline: table to p_fit, ratio fit, fresh validation to p_check.
inline DiscoveryOutcome discover(int p_fit, int p_check, const PrecisionContext& ctx,
                                 int ceiling = default_moment_ceiling) {
  if (p_fit < 4) throw usage_error("discover: p_fit must be >= 4 (need 5 table rows)");
  if (p_check <= p_fit) throw usage_error("discover: p_check must exceed p_fit");
  if (p_check > ceiling) throw usage_error("discover: p_check exceeds the ceiling");
  DiscoveryOutcome out;
  out.table = coefficient_table(p_fit, ctx, ceiling);
  out.fit = fit_ratio_pattern(out.table);
  if (out.fit.pattern_found && out.fit.closed_form.has_value()) {
    std::vector<int> ps;
    for (int p = p_fit + 1; p <= p_check; ++p) ps.push_back(p);
    out.fit.validated_range = ps;
    out.checks = conjecture_check(*out.fit.closed_form, ps, ctx, ceiling);
  }
  return out;
}

}  // namespace fdzeta

#endif
