#ifndef FDZETA_IDENTITIES_HPP
#define FDZETA_IDENTITIES_HPP

// A fixed catalog of integral identities for zeta values. Each row pairs a
// quadrature-evaluated left-hand side with a closed form over rationals,
// powers of pi and zeta values; verify() fills a pass/fail report with the
// absolute residual. The catalog has 17 rows (ids listed in catalog()).

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdzeta/discovery.hpp"
#include "fdzeta/special.hpp"

namespace fdzeta {

// Closed form: coeff * pi^k, coeff * zeta(k), or plain coeff.
struct ClosedForm {
  enum class Basis { UNIT, PI_POWER, ZETA_VALUE };
  ExactRational coeff;
  Basis basis = Basis::UNIT;
  unsigned k = 0;

  HPReal value(const PrecisionContext& ctx) const {
    auto guard = ctx.activate();
    switch (basis) {
      case Basis::UNIT:
        return to_real(coeff);
      case Basis::PI_POWER:
        return to_real(coeff) * pow(ctx.pi, static_cast<int>(k));
      case Basis::ZETA_VALUE:
        return to_real(coeff) * zeta_integer(k, ctx);
    }
    return to_real(coeff);
  }
  std::string display() const {
    switch (basis) {
      case Basis::UNIT:
        return rational_string(coeff);
      case Basis::PI_POWER:
        return "(" + rational_string(coeff) + ")*pi^" + std::to_string(k);
      case Basis::ZETA_VALUE:
        return "(" + rational_string(coeff) + ")*zeta(" + std::to_string(k) + ")";
    }
    return rational_string(coeff);
  }
};

struct LhsOutcome {
  HPReal value;
  long evaluations = 0;
};

using LhsRecipe = std::function<LhsOutcome(const PrecisionContext&, const QuadConfig&)>;

// One verifiable check: a quadrature recipe against a closed form.
struct IdentityCheck {
  LhsRecipe lhs;
  ClosedForm rhs;
};

struct Identity {
  std::string id;
  std::string description;
  IdentityCheck primary;                  // reported lhs/rhs pair
  std::vector<IdentityCheck> extra;       // residual = max over primary+extra
  int tolerance_offset = 8;               // default tolerance 10^-(digits-offset)
  std::optional<ExactRational> absolute_tolerance;  // overrides the offset rule

  HPReal default_tolerance(const PrecisionContext& ctx) const {
    if (absolute_tolerance.has_value()) {
      auto guard = ctx.activate();
      return to_real(*absolute_tolerance);
    }
    return ctx.eps(tolerance_offset);
  }
};

struct VerificationReport {
  std::string id;
  HPReal lhs_value;
  HPReal rhs_value;
  HPReal abs_residual;
  HPReal tolerance;
  bool passed = false;
  long evaluations = 0;
  double elapsed = 0.0;  // seconds
  std::string note;      // failure detail (convergence errors etc.)
};

namespace detail {

inline LhsOutcome quad_outcome(const QuadResult& q) { return {q.value, q.evaluations}; }

// ln(t) that stays accurate against both endpoints of (0, 1).
inline HPReal log_unit_left(const HPReal& t, const HPReal& tc) {
  return tc > 0 ? log(tc) : log1p(tc);  // tc < 0: t = 1 + tc
}
inline HPReal log_unit_right(const HPReal& t, const HPReal& tc) {
  return tc > 0 ? log1p(-t) : log(-tc);  // ln(1-t); near 1: 1-t = -tc
}

inline Identity make_euler_rep() {
  Identity row;
  row.id = "EULER_REP";
  row.description =
      "Euler's representation zeta(s) = 1/Gamma(s) int_0^1 (-ln u)^(s-1)/(1-u) du, "
      "checked for s = 2, 3, 4 (reported values: s = 4; residual: max over s)";
  auto make = [](int s) -> IdentityCheck {
    IdentityCheck chk;
    chk.lhs = [s](const PrecisionContext& ctx, const QuadConfig& cfg) {
      auto f = [s](const HPReal& u, const HPReal& uc) {
        const HPReal neg_log_u = -log_unit_left(u, uc);
        const HPReal one_minus_u = uc > 0 ? HPReal(1 - u) : HPReal(-uc);
        return pow(neg_log_u, s - 1) / one_minus_u;
      };
      const QuadResult q = integrate_finite(f, HPReal(0), HPReal(1), cfg, ctx);
      return LhsOutcome{q.value / HPReal(factorial_exact(static_cast<unsigned>(s - 1))),
                        q.evaluations};
    };
    chk.rhs = ClosedForm{ExactRational(1), ClosedForm::Basis::ZETA_VALUE,
                         static_cast<unsigned>(s)};
    return chk;
  };
  row.primary = make(4);
  row.extra.push_back(make(2));
  row.extra.push_back(make(3));
  return row;
}

inline Identity make_mellin_rep() {
  Identity row;
  row.id = "MELLIN_REP";
  row.description =
      "Mellin representation zeta(s) = 1/Gamma(s) int_0^inf t^(s-1)/(e^t - 1) dt, "
      "checked for s = 2, 3, 4 (reported values: s = 4; residual: max over s)";
  auto make = [](int s) -> IdentityCheck {
    IdentityCheck chk;
    chk.lhs = [s](const PrecisionContext& ctx, const QuadConfig& cfg) {
      auto f = [s](const HPReal& t) { return pow(t, s - 1) / expm1(t); };
      const QuadResult q = integrate_half_line(f, cfg, ctx);
      return LhsOutcome{q.value / HPReal(factorial_exact(static_cast<unsigned>(s - 1))),
                        q.evaluations};
    };
    chk.rhs = ClosedForm{ExactRational(1), ClosedForm::Basis::ZETA_VALUE,
                         static_cast<unsigned>(s)};
    return chk;
  };
  row.primary = make(4);
  row.extra.push_back(make(2));
  row.extra.push_back(make(3));
  return row;
}

inline Identity make_borwein() {
  Identity row;
  row.id = "BORWEIN_Z4";
  row.description =
      "Borwein & Borwein (1995): zeta(4) = 2/(11 pi) int_0^pi th^2 ln^2(2 cos(th/2)) dth";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    auto f = [&ctx](const HPReal& th, const HPReal& thc) {
      // near pi: 2 cos(th/2) = 2 sin((pi - th)/2), with pi - th = -thc exact
      const HPReal arg = thc < 0 ? HPReal(2 * sin(-thc / 2)) : HPReal(2 * cos(th / 2));
      const HPReal l = log(arg);
      return th * th * l * l;
    };
    const QuadResult q = integrate_finite(f, HPReal(0), ctx.pi, cfg, ctx);
    return LhsOutcome{2 / (11 * ctx.pi) * q.value, q.evaluations};
  };
  row.primary.rhs = ClosedForm{ExactRational(1, 90), ClosedForm::Basis::PI_POWER, 4};
  return row;
}

// Building blocks of the expansion of the UNIT form.
inline Identity make_block_a() {
  Identity row;
  row.id = "BLOCK_A";
  row.description =
      "int_0^1 ln^2(t) ln(1-t)/t dt = -2 zeta(4) (x -> 1 limit of Lewin 7.48/7.61)";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    auto f = [](const HPReal& t, const HPReal& tc) {
      const HPReal lt = log_unit_left(t, tc);
      return lt * lt * log_unit_right(t, tc) / t;
    };
    return quad_outcome(integrate_finite(f, HPReal(0), HPReal(1), cfg, ctx));
  };
  row.primary.rhs = ClosedForm{ExactRational(-2, 90), ClosedForm::Basis::PI_POWER, 4};
  return row;
}

inline Identity make_block_a_printed() {
  Identity row;
  row.id = "BLOCK_A_PRINTED";
  row.description =
      "int_0^1 ln^2(t) ln(1-t)/(1-t) dt = -zeta(4)/2 (the (1-t)-denominator variant; "
      "equals BLOCK_C by the t <-> 1-t symmetry)";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    auto f = [](const HPReal& t, const HPReal& tc) {
      const HPReal lt = log_unit_left(t, tc);
      const HPReal one_minus_t = tc > 0 ? HPReal(1 - t) : HPReal(-tc);
      return lt * lt * log_unit_right(t, tc) / one_minus_t;
    };
    return quad_outcome(integrate_finite(f, HPReal(0), HPReal(1), cfg, ctx));
  };
  row.primary.rhs = ClosedForm{ExactRational(-1, 180), ClosedForm::Basis::PI_POWER, 4};
  return row;
}

inline Identity make_block_b() {
  Identity row;
  row.id = "BLOCK_B";
  row.description = "int_0^1 ln^3(1-t)/t dt = -6 zeta(4)";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    auto f = [](const HPReal& t, const HPReal& tc) {
      const HPReal l = log_unit_right(t, tc);
      return l * l * l / t;
    };
    return quad_outcome(integrate_finite(f, HPReal(0), HPReal(1), cfg, ctx));
  };
  row.primary.rhs = ClosedForm{ExactRational(-6, 90), ClosedForm::Basis::PI_POWER, 4};
  return row;
}

inline Identity make_block_c() {
  Identity row;
  row.id = "BLOCK_C";
  row.description = "int_0^1 ln(t) ln^2(1-t)/t dt = -zeta(4)/2 (Connon 2008)";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    auto f = [](const HPReal& t, const HPReal& tc) {
      const HPReal l = log_unit_right(t, tc);
      return log_unit_left(t, tc) * l * l / t;
    };
    return quad_outcome(integrate_finite(f, HPReal(0), HPReal(1), cfg, ctx));
  };
  row.primary.rhs = ClosedForm{ExactRational(-1, 180), ClosedForm::Basis::PI_POWER, 4};
  return row;
}

inline Identity make_symmetry_b() {
  Identity row;
  row.id = "SYMMETRY_B";
  row.description =
      "int_0^1 ln^3(t)/(1-t) dt = -6 zeta(4), the t <-> 1-t mirror of BLOCK_B";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    auto f = [](const HPReal& t, const HPReal& tc) {
      const HPReal lt = log_unit_left(t, tc);
      const HPReal one_minus_t = tc > 0 ? HPReal(1 - t) : HPReal(-tc);
      return lt * lt * lt / one_minus_t;
    };
    return quad_outcome(integrate_finite(f, HPReal(0), HPReal(1), cfg, ctx));
  };
  row.primary.rhs = ClosedForm{ExactRational(-6, 90), ClosedForm::Basis::PI_POWER, 4};
  return row;
}

inline Identity make_main(const char* id, MomentForm form, const char* desc) {
  Identity row;
  row.id = id;
  row.description = desc;
  row.primary.lhs = [form](const PrecisionContext& ctx, const QuadConfig& cfg) {
    return quad_outcome(moment_integral(1, form, ctx, &cfg));
  };
  row.primary.rhs = ClosedForm{ExactRational(7, 90), ClosedForm::Basis::PI_POWER, 4};
  return row;
}

inline Identity make_z2() {
  Identity row;
  row.id = "Z2_REP";
  row.description = "zeta(2) = int_{-inf}^{inf} ln(1+e^z)/(1+e^z) dz";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    return quad_outcome(moment_integral(0, MomentForm::REAL_LINE, ctx, &cfg));
  };
  row.primary.rhs = ClosedForm{ExactRational(1, 6), ClosedForm::Basis::PI_POWER, 2};
  return row;
}

inline Identity make_moment(const char* id, int p, const ExactRational& coeff) {
  Identity row;
  row.id = id;
  row.description = "int_{-inf}^{inf} z^" + std::to_string(2 * p) +
                    " ln(1+e^z)/(1+e^z) dz = " + rational_string(coeff) + " * zeta(" +
                    std::to_string(2 * p + 2) + ")";
  row.primary.lhs = [p](const PrecisionContext& ctx, const QuadConfig& cfg) {
    return quad_outcome(moment_integral(p, MomentForm::REAL_LINE, ctx, &cfg));
  };
  row.primary.rhs =
      ClosedForm{coeff, ClosedForm::Basis::ZETA_VALUE, static_cast<unsigned>(2 * p + 2)};
  return row;
}

inline Identity make_fourier() {
  Identity row;
  row.id = "FOURIER_N2";
  row.description =
      "Fourier coefficient of t^2 on (-pi, pi): 1/(2 pi) int t^2 cos(2t) dt = 1/2";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig& cfg) {
    auto f = [](const HPReal& t) { return t * t * cos(2 * t); };
    const QuadResult q = integrate_finite(f, -ctx.pi, ctx.pi, cfg, ctx);
    return LhsOutcome{q.value / (2 * ctx.pi), q.evaluations};
  };
  row.primary.rhs = ClosedForm{ExactRational(1, 2), ClosedForm::Basis::UNIT, 0};
  return row;
}

inline Identity make_parseval() {
  Identity row;
  row.id = "PARSEVAL_1000";
  row.description =
      "Parseval route: sum_{n<=1000} n^-4 vs pi^4/90, within the tail bound 1/(3*1000^3)";
  row.primary.lhs = [](const PrecisionContext& ctx, const QuadConfig&) {
    auto guard = ctx.activate();
    HPReal sum = 0;
    for (unsigned long n = 1; n <= 1000; ++n) sum += 1 / pow(HPReal(n), 4);
    return LhsOutcome{sum, 1000};
  };
  row.primary.rhs = ClosedForm{ExactRational(1, 90), ClosedForm::Basis::PI_POWER, 4};
  row.absolute_tolerance = ExactRational(1, ExactInteger(3) * 1000 * 1000 * 1000);
  return row;
}

}  // namespace detail

// The fixed catalog. Row order is the build order; verify_all reports sort by id.
inline const std::vector<Identity>& catalog() {
  static const std::vector<Identity> rows = [] {
    std::vector<Identity> v;
    v.push_back(detail::make_euler_rep());
    v.push_back(detail::make_mellin_rep());
    v.push_back(detail::make_borwein());
    v.push_back(detail::make_block_a());
    v.push_back(detail::make_block_a_printed());
    v.push_back(detail::make_block_b());
    v.push_back(detail::make_block_c());
    v.push_back(detail::make_symmetry_b());
    v.push_back(detail::make_main(
        "MAIN_Z4_REAL_LINE", MomentForm::REAL_LINE,
        "7 zeta(4) = int_{-inf}^{inf} z^2 ln(1+e^z)/(1+e^z) dz"));
    v.push_back(detail::make_main(
        "MAIN_Z4_HALF_LINE", MomentForm::HALF_LINE,
        "7 zeta(4) = int_0^inf ln^2(u) ln(1+u)/(u(1+u)) du (u = e^z)"));
    v.push_back(detail::make_main(
        "MAIN_Z4_UNIT", MomentForm::UNIT,
        "7 zeta(4) = -int_0^1 [ln t - ln(1-t)]^2 ln(1-t)/t dt (u = t/(1-t))"));
    v.push_back(detail::make_z2());
    v.push_back(detail::make_moment("MOMENT_P2", 2, ExactRational(279, 2)));
    v.push_back(detail::make_moment("MOMENT_P3", 3, ExactRational(5715)));
    v.push_back(detail::make_moment("MOMENT_P4", 4, ExactRational(804825, 2)));
    v.push_back(detail::make_fourier());
    v.push_back(detail::make_parseval());
    return v;
  }();
  return rows;
}

inline const Identity* find_identity(const std::string& id) {
  for (const auto& row : catalog())
    if (row.id == id) return &row;
  return nullptr;
}

// Evaluates one catalog row. Quadrature convergence failures produce a report
// with passed = false and a note rather than an exception.
inline VerificationReport verify(const std::string& id, const PrecisionContext& ctx,
                                 const std::optional<QuadConfig>& overrides = std::nullopt) {
  const Identity* row = find_identity(id);
  if (!row) throw usage_error("verify: unknown identity id '" + id + "'");
  auto guard = ctx.activate();
  const QuadConfig cfg = overrides.value_or(QuadConfig::defaults(ctx));

  VerificationReport rep;
  rep.id = row->id;
  rep.tolerance = row->default_tolerance(ctx);
  const auto start = std::chrono::steady_clock::now();

  HPReal max_residual = 0;
  bool all_evaluated = true;
  auto run_check = [&](const IdentityCheck& chk, bool is_primary) {
    HPReal lhs, rhs;
    try {
      const LhsOutcome out = chk.lhs(ctx, cfg);
      rep.evaluations += out.evaluations;
      lhs = out.value;
      rhs = chk.rhs.value(ctx);
    } catch (const convergence_error& e) {
      rep.evaluations += e.best_result.evaluations;
      all_evaluated = false;
      if (!rep.note.empty()) rep.note += "; ";
      rep.note += e.what();
      if (is_primary) {
        rep.lhs_value = e.best_result.value;
        rep.rhs_value = chk.rhs.value(ctx);
      }
      return;
    }
    const HPReal residual = abs(lhs - rhs);
    if (residual > max_residual) max_residual = residual;
    if (is_primary) {
      rep.lhs_value = lhs;
      rep.rhs_value = rhs;
    }
  };
  run_check(row->primary, true);
  for (const auto& chk : row->extra) run_check(chk, false);

  rep.abs_residual = max_residual;
  rep.passed = all_evaluated && rep.abs_residual <= rep.tolerance;
  rep.elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Runs every catalog row; reports ordered by id. Per-row failures are
// aggregated into reports, never thrown.
inline std::vector<VerificationReport> verify_all(
    const PrecisionContext& ctx, const std::optional<QuadConfig>& overrides = std::nullopt) {
  std::vector<VerificationReport> reports;
  for (const auto& row : catalog()) reports.push_back(verify(row.id, ctx, overrides));
  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
  return reports;
}

// (1/2 pi) int_{-pi}^{pi} t^2 cos(n t) dt by quadrature (real cosine form of
// the complex Fourier coefficient; closed forms: c_0 = pi^2/3, c_n = 2(-1)^n/n^2).
inline HPReal fourier_coefficient(int n, const PrecisionContext& ctx) {
  if (n < 0) throw usage_error("fourier_coefficient: n must be >= 0");
  auto guard = ctx.activate();
  auto f = [n](const HPReal& t) {
    return n == 0 ? HPReal(t * t) : HPReal(t * t * cos(n * t));
  };
  const QuadResult q = integrate_finite(f, -ctx.pi, ctx.pi, QuadConfig::defaults(ctx), ctx);
  return q.value / (2 * ctx.pi);
}

// Partial sum sum_{n=1}^{N} n^-4 (the Parseval/Plancherel route to zeta(4);
// tail below 1/(3 N^3)).
inline HPReal parseval_partial(unsigned long N, const PrecisionContext& ctx) {
  if (N < 1) throw usage_error("parseval_partial: N must be >= 1");
  auto guard = ctx.activate();
  HPReal sum = 0;
  for (unsigned long n = 1; n <= N; ++n) sum += 1 / pow(HPReal(n), 4);
  return sum;
}

}  // namespace fdzeta

#endif
