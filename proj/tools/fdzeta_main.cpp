// fdzeta: batch verification of integral representations of zeta values,
// moment-integral coefficient tables, and closed-form discovery runs.
// Exit codes: 0 all checks passed, 1 verification/fit failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdzeta/fdzeta.hpp"

namespace {

using namespace fdzeta;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::TEXT;
  if (name == "json") return OutputFormat::JSON;
  if (name == "csv") return OutputFormat::CSV;
  throw usage_error("unknown format: " + name);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::string started_at = detail::iso_utc_now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void emit(const std::string& command, const RunConfig& cfg, const Timer& timer,
          json payload, const std::string& text_body, const std::string& csv_body) {
  switch (cfg.output_format) {
    case OutputFormat::JSON: {
      const json env =
          make_envelope(command, cfg, timer.started_at, timer.elapsed(), std::move(payload));
      emit_output(env.dump(2) + "\n", cfg);
      break;
    }
    case OutputFormat::CSV:
      emit_output(csv_body, cfg);
      break;
    case OutputFormat::TEXT:
      emit_output(text_body, cfg);
      break;
  }
}

int cmd_verify(const std::vector<std::string>& ids, const RunConfig& cfg) {
  cfg.validate();
  const PrecisionContext ctx = make_context(cfg.digits);
  const QuadConfig qcfg = cfg.quad_config(ctx);

  std::vector<VerificationReport> reports;
  Timer timer;
  if (ids.size() == 1 && ids[0] == "all") {
    reports = verify_all(ctx, qcfg);
  } else {
    for (const auto& id : ids)
      if (!find_identity(id)) throw usage_error("unknown identity id '" + id + "'");
    for (const auto& id : ids) reports.push_back(verify(id, ctx, qcfg));
  }
  emit("verify", cfg, timer, verify_payload(reports, cfg.digits),
       render_verify_text(reports, cfg.digits), render_verify_csv(reports, cfg.digits));
  for (const auto& r : reports)
    if (!r.passed) return 1;
  return 0;
}

int cmd_table(int p_max, const RunConfig& cfg) {
  cfg.validate();
  const PrecisionContext ctx = make_context(cfg.digits);
  Timer timer;
  const auto table = coefficient_table(p_max, ctx);
  emit("table", cfg, timer, table_payload(table, cfg.digits),
       render_table_text(table, cfg.digits), render_table_csv(table, cfg.digits));
  for (const auto& row : table)
    if (!row.recognized()) return 1;
  return 0;
}

int cmd_discover(int p_fit, int p_check, const RunConfig& cfg) {
  cfg.validate();
  const PrecisionContext ctx = make_context(cfg.digits);
  Timer timer;
  const DiscoveryOutcome out = discover(p_fit, p_check, ctx);
  emit("discover", cfg, timer, discover_payload(out, cfg.digits),
       render_discover_text(out, cfg.digits), render_discover_csv(out, cfg.digits));
  return out.success() ? 0 : 1;
}

int cmd_zeta(const std::string& s_arg, const std::string& method, unsigned em_n,
             unsigned long em_split, const RunConfig& cfg) {
  cfg.validate();
  const PrecisionContext ctx = make_context(cfg.digits);
  auto guard = ctx.activate();
  Timer timer;
  ZetaRunResult zr;
  zr.s_display = s_arg;
  zr.method = method;

  auto integer_s = [&]() -> long {
    try {
      std::size_t pos = 0;
      const long v = std::stol(s_arg, &pos);
      if (pos != s_arg.size()) throw usage_error("");
      return v;
    } catch (...) {
      throw usage_error("method '" + method + "' requires an integer s, got " + s_arg);
    }
  };

  if (method == "bernoulli") {
    const long s = integer_s();
    if (s < 2 || s % 2 != 0)
      throw usage_error("bernoulli method requires even s >= 2, got " + s_arg);
    const ZetaEvenValue z = zeta_even(static_cast<unsigned>(s), ctx);
    zr.value = z.value;
    zr.pi_coefficient = z.pi_coefficient;
    zr.pi_power = z.pi_power;
  } else if (method == "euler-maclaurin") {
    HPReal s;
    try {
      s = HPReal(s_arg);
    } catch (...) {
      throw usage_error("cannot parse s: " + s_arg);
    }
    if (!(s > 1)) throw usage_error("euler-maclaurin requires s > 1");
    const unsigned n = em_n > 0 ? em_n : std::min(60u, 2 * (ctx.working_digits() / 5 + 4));
    zr.value = zeta_euler_maclaurin(s, n, em_split, ctx);
  } else if (method == "mellin") {
    const long s = integer_s();
    if (s < 2 || s > 4)
      throw usage_error("mellin method supports s in {2, 3, 4}, got " + s_arg);
    auto f = [s](const HPReal& t) { return pow(t, static_cast<int>(s - 1)) / expm1(t); };
    const QuadResult q = integrate_half_line(f, cfg.quad_config(ctx), ctx);
    zr.value = q.value / HPReal(factorial_exact(static_cast<unsigned>(s - 1)));
  } else {
    throw usage_error("unknown method: " + method +
                      " (expected bernoulli, euler-maclaurin or mellin)");
  }
  emit("zeta", cfg, timer, zeta_payload(zr, cfg.digits), render_zeta_text(zr, cfg.digits),
       render_zeta_csv(zr, cfg.digits));
  return 0;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& format) {
  cmd->add_option("--digits", cfg.digits, "working decimal digits (10..10000)");
  cmd->add_option("--max-level", cfg.max_level, "quadrature refinement ceiling (3..20)");
  cmd->add_option("--format", format, "output format: text, json or csv");
  cmd->add_option("--out", cfg.output_path, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"high-precision verification of integral representations of zeta values"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  if (const char* env = std::getenv("FDZETA_DIGITS")) {
    try {
      cfg.digits = static_cast<unsigned>(std::stoul(env));
    } catch (...) {
      std::cerr << "error: FDZETA_DIGITS is not a valid digit count: " << env << "\n";
      return 2;
    }
  }

  std::vector<std::string> ids;
  auto* verify_cmd = app.add_subcommand("verify", "verify catalog identities");
  verify_cmd->add_option("--id", ids, "identity id (repeatable), or 'all'")->required();
  add_common_flags(verify_cmd, cfg, format);

  int p_max = 4;
  auto* table_cmd = app.add_subcommand("table", "moment-integral coefficient table");
  table_cmd->add_option("--pmax", p_max, "largest p (ceiling 12)")->required();
  add_common_flags(table_cmd, cfg, format);

  int p_fit = 4, p_check = 8;
  auto* discover_cmd =
      app.add_subcommand("discover", "fit and validate the coefficient closed form");
  discover_cmd->add_option("--pfit", p_fit, "table rows 0..pfit feed the fit (pfit >= 4)")
      ->required();
  discover_cmd->add_option("--pcheck", p_check, "validate through this p (> pfit)")
      ->required();
  add_common_flags(discover_cmd, cfg, format);

  std::string s_arg, method;
  unsigned em_n = 0;
  unsigned long em_split = 16;
  auto* zeta_cmd = app.add_subcommand("zeta", "evaluate zeta(s) by a chosen method");
  zeta_cmd->add_option("--s", s_arg, "argument (integer, or real > 1 for euler-maclaurin)")
      ->required();
  zeta_cmd->add_option("--method", method, "bernoulli, euler-maclaurin or mellin")
      ->required();
  zeta_cmd->add_option("--em-n", em_n, "Euler-Maclaurin correction order (default: auto)");
  zeta_cmd->add_option("--em-split", em_split, "Euler-Maclaurin minimum split point");
  add_common_flags(zeta_cmd, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    cfg.output_format = parse_format(format);
    if (verify_cmd->parsed()) return cmd_verify(ids, cfg);
    if (table_cmd->parsed()) return cmd_table(p_max, cfg);
    if (discover_cmd->parsed()) return cmd_discover(p_fit, p_check, cfg);
    if (zeta_cmd->parsed()) return cmd_zeta(s_arg, method, em_n, em_split, cfg);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
