#ifndef FDZETA_REPORT_HPP
#define FDZETA_REPORT_HPP

// Batch-run envelope and TEXT/JSON/CSV renderers. Numeric payload values are
// rendered once (exactly `digits` significant decimal digits, round to
// nearest) and the identical strings appear in every format. JSON field names
// match the library type definitions; timing fields live in the envelope plus
// the per-row `elapsed` and are the only run-to-run variable content.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdzeta/discovery.hpp"
#include "fdzeta/identities.hpp"
#include "fdzeta/version.hpp"

namespace fdzeta {

enum class OutputFormat { TEXT, JSON, CSV };

inline std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::TEXT: return "text";
    case OutputFormat::JSON: return "json";
    case OutputFormat::CSV: return "csv";
  }
  return "text";
}

struct RunConfig {
  unsigned digits = 50;
  int max_level = 12;
  OutputFormat output_format = OutputFormat::TEXT;
  std::string output_path;  // empty: stdout

  void validate() const {
    if (digits < min_context_digits || digits > max_context_digits)
      throw usage_error("digits must be in [10, 10000]");
    if (max_level < 3 || max_level > 20)
      throw usage_error("max-level must be in [3, 20]");
  }
  QuadConfig quad_config(const PrecisionContext& ctx) const {
    QuadConfig cfg = QuadConfig::defaults(ctx);
    cfg.max_level = max_level;
    return cfg;
  }
};

using json = nlohmann::ordered_json;

namespace detail {

inline std::string iso_utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

inline std::string seconds_string(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", s);
  return buf;
}

inline std::string optional_rational(const std::optional<ExactRational>& q) {
  return q.has_value() ? rational_string(*q) : std::string("-");
}

}  // namespace detail

inline json make_envelope(const std::string& command, const RunConfig& cfg,
                          const std::string& started_at, double elapsed_s, json payload) {
  json env;
  env["tool_version"] = version_string;
  env["command"] = command;
  env["config"] = {{"digits", cfg.digits},
                   {"max_level", cfg.max_level},
                   {"output_format", format_name(cfg.output_format)},
                   {"output_path", cfg.output_path}};
  env["started_at"] = started_at;
  env["elapsed_s"] = elapsed_s;
  env["payload"] = std::move(payload);
  return env;
}

// ---- verify ----

inline json verify_payload(const std::vector<VerificationReport>& reports, unsigned digits) {
  json rows = json::array();
  for (const auto& r : reports) {
    json row;
    row["id"] = r.id;
    row["lhs_value"] = decimal_string(r.lhs_value, digits);
    row["rhs_value"] = decimal_string(r.rhs_value, digits);
    row["abs_residual"] = decimal_string(r.abs_residual, digits);
    row["tolerance"] = decimal_string(r.tolerance, digits);
    row["passed"] = r.passed;
    row["evaluations"] = r.evaluations;
    row["elapsed"] = detail::seconds_string(r.elapsed);
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render_verify_text(const std::vector<VerificationReport>& reports,
                                      unsigned digits) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "\n"
       << "      lhs          " << decimal_string(r.lhs_value, digits) << "\n"
       << "      rhs          " << decimal_string(r.rhs_value, digits) << "\n"
       << "      abs_residual " << decimal_string(r.abs_residual, digits) << "\n"
       << "      tolerance    " << decimal_string(r.tolerance, digits) << "\n"
       << "      evaluations  " << r.evaluations << "   elapsed "
       << detail::seconds_string(r.elapsed) << " s\n";
    if (!r.note.empty()) os << "      note         " << r.note << "\n";
  }
  int passed = 0;
  for (const auto& r : reports) passed += r.passed ? 1 : 0;
  os << passed << "/" << reports.size() << " identities passed\n";
  return os.str();
}

inline std::string render_verify_csv(const std::vector<VerificationReport>& reports,
                                     unsigned digits) {
  std::ostringstream os;
  os << "id,lhs_value,rhs_value,abs_residual,tolerance,passed,evaluations,elapsed\n";
  for (const auto& r : reports) {
    os << r.id << ',' << decimal_string(r.lhs_value, digits) << ','
       << decimal_string(r.rhs_value, digits) << ','
       << decimal_string(r.abs_residual, digits) << ','
       << decimal_string(r.tolerance, digits) << ',' << (r.passed ? "true" : "false")
       << ',' << r.evaluations << ',' << detail::seconds_string(r.elapsed) << "\n";
  }
  return os.str();
}

// ---- table ----

inline json table_payload(const std::vector<MomentRecord>& table, unsigned digits) {
  json rows = json::array();
  for (const auto& r : table) {
    json row;
    row["p"] = r.p;
    row["value"] = decimal_string(r.value, digits);
    row["coeff_zeta"] = detail::optional_rational(r.coeff_zeta);
    row["coeff_eta"] = detail::optional_rational(r.coeff_eta);
    row["residual_zeta"] =
        r.coeff_zeta.has_value() ? decimal_string(r.residual_zeta, digits) : "-";
    row["residual_eta"] =
        r.coeff_eta.has_value() ? decimal_string(r.residual_eta, digits) : "-";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render_table_text(const std::vector<MomentRecord>& table, unsigned digits) {
  std::ostringstream os;
  for (const auto& r : table) {
    os << "p=" << r.p << "\n"
       << "  value         " << decimal_string(r.value, digits) << "\n"
       << "  coeff_zeta    " << detail::optional_rational(r.coeff_zeta) << "\n"
       << "  coeff_eta     " << detail::optional_rational(r.coeff_eta) << "\n";
    if (r.coeff_zeta.has_value())
      os << "  residual_zeta " << decimal_string(r.residual_zeta, digits) << "\n";
    if (r.coeff_eta.has_value())
      os << "  residual_eta  " << decimal_string(r.residual_eta, digits) << "\n";
    if (!r.recognized()) os << "  recognition FAILED\n";
  }
  return os.str();
}

inline std::string render_table_csv(const std::vector<MomentRecord>& table, unsigned digits) {
  std::ostringstream os;
  os << "p,value,coeff_zeta,coeff_eta,residual_zeta,residual_eta\n";
  for (const auto& r : table) {
    os << r.p << ',' << decimal_string(r.value, digits) << ','
       << detail::optional_rational(r.coeff_zeta) << ','
       << detail::optional_rational(r.coeff_eta) << ','
       << (r.coeff_zeta.has_value() ? decimal_string(r.residual_zeta, digits) : "-") << ','
       << (r.coeff_eta.has_value() ? decimal_string(r.residual_eta, digits) : "-") << "\n";
  }
  return os.str();
}

// ---- discover ----

inline std::string ratio_polynomial_display(const RatioPolynomial& q) {
  // Canonical "a_d p^d + ... + a_0".
  std::ostringstream os;
  for (int d = q.degree(); d >= 0; --d) {
    const ExactRational& c = q.coeffs[d];
    if (c == 0 && q.degree() > 0) continue;
    if (os.tellp() > 0) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const ExactRational a = c < 0 ? ExactRational(-c) : c;
    if (d == 0 || a != 1) os << rational_string(a);
    if (d >= 1) os << (d == 1 ? "p" : "p^" + std::to_string(d));
  }
  return os.str();
}

inline json discover_payload(const DiscoveryOutcome& out, unsigned digits) {
  json payload;
  json ratios = json::array();
  for (const auto& [p, r] : out.fit.ratios)
    ratios.push_back({{"p", p}, {"ratio", rational_string(r)}});
  payload["ratios"] = std::move(ratios);
  payload["pattern_found"] = out.fit.pattern_found;
  if (out.fit.ratio_polynomial.has_value()) {
    json coeffs = json::array();
    for (const auto& c : out.fit.ratio_polynomial->coeffs)
      coeffs.push_back(rational_string(c));
    payload["ratio_polynomial"] = {
        {"coeffs", std::move(coeffs)},
        {"display", ratio_polynomial_display(*out.fit.ratio_polynomial)}};
  }
  if (out.fit.closed_form.has_value()) {
    payload["closed_form"] = {{"A", rational_string(out.fit.closed_form->A)},
                              {"display", out.fit.closed_form->display()}};
  }
  payload["fit_range"] = out.fit.fit_range;
  payload["validated_range"] = out.fit.validated_range;
  json checks = json::array();
  for (const auto& c : out.checks) {
    checks.push_back({{"p", c.p},
                      {"integral", decimal_string(c.integral, digits)},
                      {"predicted", decimal_string(c.predicted, digits)},
                      {"residual", decimal_string(c.residual, digits)},
                      {"passed", c.passed}});
  }
  payload["checks"] = std::move(checks);
  payload["table"] = table_payload(out.table, digits);
  return json::array({payload});
}

inline std::string render_discover_text(const DiscoveryOutcome& out, unsigned digits) {
  std::ostringstream os;
  os << "ratios c_p/c_(p-1) (eta basis):";
  for (const auto& [p, r] : out.fit.ratios) os << "  p=" << p << ": " << rational_string(r);
  os << "\n";
  if (!out.fit.pattern_found) {
    os << "no exact ratio polynomial found (inspect the ratios above)\n";
    return os.str();
  }
  os << "ratio polynomial: q(p) = " << ratio_polynomial_display(*out.fit.ratio_polynomial)
     << "\n";
  if (out.fit.closed_form.has_value())
    os << "closed form: c_p = " << out.fit.closed_form->display() << "\n";
  for (const auto& c : out.checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  p=" << c.p << "\n"
       << "      integral  " << decimal_string(c.integral, digits) << "\n"
       << "      predicted " << decimal_string(c.predicted, digits) << "\n"
       << "      residual  " << decimal_string(c.residual, digits) << "\n";
  }
  return os.str();
}

inline std::string render_discover_csv(const DiscoveryOutcome& out, unsigned digits) {
  std::ostringstream os;
  os << "p,integral,predicted,residual,passed\n";
  for (const auto& c : out.checks) {
    os << c.p << ',' << decimal_string(c.integral, digits) << ','
       << decimal_string(c.predicted, digits) << ',' << decimal_string(c.residual, digits)
       << ',' << (c.passed ? "true" : "false") << "\n";
  }
  return os.str();
}

// ---- zeta ----

struct ZetaRunResult {
  std::string s_display;
  std::string method;
  HPReal value;
  std::optional<ExactRational> pi_coefficient;
  unsigned pi_power = 0;
};

inline json zeta_payload(const ZetaRunResult& zr, unsigned digits) {
  json row;
  row["s"] = zr.s_display;
  row["method"] = zr.method;
  row["value"] = decimal_string(zr.value, digits);
  if (zr.pi_coefficient.has_value()) {
    row["pi_coefficient"] = rational_string(*zr.pi_coefficient);
    row["pi_power"] = zr.pi_power;
  }
  return json::array({row});
}

inline std::string render_zeta_text(const ZetaRunResult& zr, unsigned digits) {
  std::ostringstream os;
  os << "zeta(" << zr.s_display << ") [" << zr.method << "]";
  if (zr.pi_coefficient.has_value())
    os << " = " << rational_string(*zr.pi_coefficient) << " * pi^" << zr.pi_power;
  os << "\n= " << decimal_string(zr.value, digits) << "\n";
  return os.str();
}

inline std::string render_zeta_csv(const ZetaRunResult& zr, unsigned digits) {
  std::ostringstream os;
  os << "s,method,value,pi_coefficient,pi_power\n";
  os << zr.s_display << ',' << zr.method << ',' << decimal_string(zr.value, digits) << ','
     << (zr.pi_coefficient.has_value() ? rational_string(*zr.pi_coefficient) : "-") << ','
     << (zr.pi_coefficient.has_value() ? std::to_string(zr.pi_power) : "-") << "\n";
  return os.str();
}

// ---- output ----

inline void emit_output(const std::string& body, const RunConfig& cfg) {
  if (cfg.output_path.empty()) {
    std::fputs(body.c_str(), stdout);
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw usage_error("cannot open output path: " + cfg.output_path);
  out << body;
}

}  // namespace fdzeta

#endif
