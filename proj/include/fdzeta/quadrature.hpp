#ifndef FDZETA_QUADRATURE_HPP
#define FDZETA_QUADRATURE_HPP

// Double-exponential quadrature: the trapezoid rule after a variable change
// that makes the transformed integrand decay double-exponentially, so halving
// the step roughly doubles the number of correct digits.
//
//   tanh-sinh, (a,b):      x = m + r*tanh(u),  u = (pi/2) sinh t,  m=(a+b)/2, r=(b-a)/2
//   exp-sinh,  (0,inf):    x = exp(u)
//   sinh-sinh, (-inf,inf): x = sinh(u)
//
// Levels: level L uses step h = 2^-L. Abscissas/weights are generated at the
// working precision and cached per (transform, precision, level); refinement
// from level L to L+1 reuses all previous evaluations (new nodes are the odd
// multiples of the new step).
//
// For tanh-sinh the node position is represented by its distance to the
// nearer interval endpoint, r*s with s = 2/(1 + exp(2|u|)), which stays
// accurate long after m + r*tanh(u) would round to the endpoint itself.
// Integrands with endpoint singularities should take a second argument to
// receive that signed distance:
//
//   f(x)       plain integrand
//   f(x, xc)   xc = x - a on the left half (xc > 0), x - b on the right (xc < 0)
//
// Stopping: a level sweep terminates when the magnitude of the term
// (weight * f * h) has fallen below target_abs_err/100 for 3 consecutive
// nodes; level doubling stops when two successive level values agree within
// target_abs_err. err_estimate is the last level difference.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "fdzeta/numctx.hpp"

namespace fdzeta {

struct QuadConfig {
  HPReal target_abs_err;  // default 10^-digits, set by defaults(ctx)
  int max_level = 12;
  int initial_level = 3;

  static QuadConfig defaults(const PrecisionContext& ctx) {
    QuadConfig cfg;
    cfg.target_abs_err = ctx.eps();
    return cfg;
  }

  void validate() const {
    if (initial_level < 1 || initial_level > max_level || max_level > 20)
      throw usage_error("QuadConfig: need 1 <= initial_level <= max_level <= 20");
    if (!(target_abs_err > 0))
      throw usage_error("QuadConfig: target_abs_err must be positive");
  }
};

struct QuadResult {
  HPReal value;
  HPReal err_estimate;  // |S_L - S_{L-1}| at the final level
  int levels_used = 0;
  long evaluations = 0;
};

// Non-convergence at max_level; carries the best value seen.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_result(std::move(best)) {}
  QuadResult best_result;
};

// Observer invoked with (level, S_level) after each completed level.
using LevelObserver = std::function<void(int, const HPReal&)>;

namespace detail {

enum class Transform { TanhSinh, ExpSinh, SinhSinh };

// Node data for t = j*h > 0; quantities for -t follow by symmetry.
//   TanhSinh: a = s(t) in (0,1], the endpoint-distance factor; w = (pi/2) cosh t * s * (2-s)
//   ExpSinh:  a = x(t) = exp(u); w = (pi/2) cosh t (weight factor shared by x and 1/x)
//   SinhSinh: a = x(t) = sinh(u); w = (pi/2) cosh t * cosh(u)
struct Node {
  HPReal a;
  HPReal w;
};

// Nodes of one dyadic level: level 0 holds t = 0, 1, 2, ...; level l >= 1
// holds t = (2i+1)*2^-l. Grown on demand under the table mutex.
struct LevelNodes {
  std::vector<Node> nodes;
};

struct NodeTable {
  std::mutex mutex;
  std::vector<LevelNodes> levels;
};

inline NodeTable& node_table(Transform tf, unsigned digits10) {
  static std::mutex registry_mutex;
  static std::map<std::pair<int, unsigned>, std::unique_ptr<NodeTable>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(static_cast<int>(tf), digits10);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::make_unique<NodeTable>()).first;
  return *it->second;
}

inline Node make_node(Transform tf, const HPReal& t, const HPReal& half_pi) {
  const HPReal u = half_pi * sinh(t);
  const HPReal cht = cosh(t);
  Node n;
  switch (tf) {
    case Transform::TanhSinh: {
      // s = 2/(1+e^{2u}) computed from v = e^{-u} <= 1 to avoid overflow.
      const HPReal v = exp(-abs(u));
      const HPReal v2 = v * v;
      const HPReal s = 2 * v2 / (1 + v2);
      n.a = s;
      n.w = half_pi * cht * s * (2 - s);  // (pi/2) cosh t * sech^2(u)
      break;
    }
    case Transform::ExpSinh: {
      n.a = exp(u);
      n.w = half_pi * cht;
      break;
    }
    case Transform::SinhSinh: {
      n.a = sinh(u);
      n.w = half_pi * cht * cosh(u);
      break;
    }
  }
  return n;
}

// t value of node i at dyadic level l (level 0: t = i; level l: (2i+1)*2^-l).
inline HPReal node_t(int level, std::size_t i, const HPReal& h_level) {
  if (level == 0) return HPReal(static_cast<unsigned long>(i));
  return HPReal(static_cast<unsigned long>(2 * i + 1)) * h_level;
}

// Ensures nodes[0..count) exist for the given dyadic level and appends the
// ones `out` is missing, so evaluation happens outside the lock.
inline void ensure_nodes(Transform tf, unsigned digits10, int level, std::size_t count,
                         std::vector<Node>& out, const HPReal& half_pi) {
  NodeTable& table = node_table(tf, digits10);
  std::lock_guard<std::mutex> lock(table.mutex);
  if (table.levels.size() <= static_cast<std::size_t>(level))
    table.levels.resize(level + 1);
  auto& nodes = table.levels[level].nodes;
  const HPReal h_level = level == 0 ? HPReal(1) : ldexp(HPReal(1), -level);
  while (nodes.size() < count)
    nodes.push_back(make_node(tf, node_t(level, nodes.size(), h_level), half_pi));
  out.insert(out.end(), nodes.begin() + out.size(), nodes.begin() + count);
}

// Hard cap on |u| = (pi/2) sinh t: far beyond the point where any integrand
// satisfying the documented decay preconditions still contributes. A sweep
// that reaches the cap without meeting the small-term rule is reported as
// truncated and treated as non-convergent rather than silently cut off.
inline double u_cap(unsigned working_digits) {
  return 12.0 * 2.302585092994046 * static_cast<double>(working_digits) + 400.0;
}

inline double t_cap(Transform tf, unsigned working_digits) {
  const double y = u_cap(working_digits);
  // TanhSinh decay is driven by 2u; for SinhSinh the integrand argument
  // x = sinh(u) outruns u, so y is generous there (far nodes underflow to
  // zero cheaply and the small-term rule needs slack at coarse levels).
  const double u_max = tf == Transform::TanhSinh ? y / 2 : y;
  // t = asinh(2 u_max / pi)
  const double z = 2 * u_max / 3.141592653589793;
  return std::log(z + std::sqrt(z * z + 1));
}

template <typename F>
inline constexpr bool takes_complement_v = std::is_invocable_v<F, const HPReal&, const HPReal&>;

// Engine shared by the three transforms. Evaluator is called as
// eval(node, positive_side, sum, evals, finite) and returns the term
// magnitude added (without the h factor applied later).
class Sweeper {
 public:
  Sweeper(Transform tf, const PrecisionContext& ctx, const QuadConfig& cfg)
      : tf_(tf), ctx_(ctx), cfg_(cfg), half_pi_(ctx.pi / 2) {
    small_term_ = cfg.target_abs_err / 100;
    t_cap_ = t_cap(tf, ctx.working_digits());
  }

  // Sweeps one dyadic level: evaluates term(node, side) for every node of the
  // level until the small-term rule fires on each side (or the t cap).
  // term() returns the contribution without the step factor h.
  template <typename Term>
  HPReal sweep_level(int level, Term&& term, long& evaluations, bool& truncated) {
    const HPReal h_level = level == 0 ? HPReal(1) : ldexp(HPReal(1), -level);
    const HPReal h_sum = ldexp(HPReal(1), -std::max(level, cfg_.initial_level));
    // Effective h multiplying this level's terms at the time it is swept.
    HPReal positive_sum = 0, negative_sum = 0, center = 0;
    const double h_level_d = level == 0 ? 1.0 : std::ldexp(1.0, -level);
    const double t0 = level == 0 ? 0.0 : h_level_d;
    const double t_step = level == 0 ? 1.0 : 2 * h_level_d;
    const std::size_t max_nodes =
        static_cast<std::size_t>((t_cap_ - t0) / t_step) + 4;

    std::vector<Node> nodes;
    constexpr std::size_t chunk = 32;
    std::size_t have = 0;
    int small_pos = 0, small_neg = 0;
    bool done_pos = false, done_neg = false;
    const bool has_center = level == 0;

    for (std::size_t i = 0; !(done_pos && done_neg); ++i) {
      if (i >= max_nodes) {
        truncated = true;
        break;
      }
      if (i >= have) {
        const std::size_t want = std::min(max_nodes, have + chunk);
        ensure_nodes(tf_, ctx_.working_digits(), level, want, nodes, half_pi_);
        have = nodes.size();
        if (i >= have) {
          truncated = true;
          break;
        }
      }
      if (has_center && i == 0) {
        // t = 0 contributes once.
        center = term(nodes[0], /*positive=*/true, /*center=*/true);
        ++evaluations;
        continue;
      }
      if (!done_pos) {
        const HPReal contrib = term(nodes[i], true, false);
        ++evaluations;
        positive_sum += contrib;
        if (abs(contrib) * h_sum < small_term_) {
          if (++small_pos >= 3) done_pos = true;
        } else {
          small_pos = 0;
        }
      }
      if (!done_neg) {
        const HPReal contrib = term(nodes[i], false, false);
        ++evaluations;
        negative_sum += contrib;
        if (abs(contrib) * h_sum < small_term_) {
          if (++small_neg >= 3) done_neg = true;
        } else {
          small_neg = 0;
        }
      }
    }
    // Fixed combination order keeps results deterministic.
    return center + positive_sum + negative_sum;
  }

  // Level-doubling driver. P(l) are per-dyadic-level sums; the trapezoid
  // value at level L is 2^-L * sum_{l<=L} P(l).
  template <typename Term>
  QuadResult run(Term&& term, const LevelObserver& observer) {
    cfg_.validate();
    QuadResult result;
    bool truncated = false;
    std::vector<HPReal> partial;  // P(0..L)
    HPReal prev_value = 0;
    bool have_prev = false;

    for (int level = 0; level <= cfg_.max_level; ++level) {
      partial.push_back(sweep_level(level, term, result.evaluations, truncated));
      if (level < cfg_.initial_level - 1) continue;

      HPReal sum = 0;
      for (const HPReal& p : partial) sum += p;
      const HPReal value = ldexp(sum, -level);
      if (level >= cfg_.initial_level) {
        ++result.levels_used;
        if (observer) observer(level, value);
        result.value = value;
        if (have_prev) {
          result.err_estimate = abs(value - prev_value);
          if (!truncated && result.err_estimate <= cfg_.target_abs_err) return result;
        }
      }
      prev_value = value;
      have_prev = true;
    }
    if (result.levels_used == 0) result.levels_used = 1;
    if (truncated)
      throw convergence_error(
          "quadrature: sweep hit the abscissa cap before terms became negligible "
          "(integrand decays too slowly for this transform)",
          result);
    throw convergence_error("quadrature: no convergence at max_level " +
                                std::to_string(cfg_.max_level),
                            result);
  }

  const QuadConfig& config() const { return cfg_; }

 private:
  Transform tf_;
  const PrecisionContext& ctx_;
  QuadConfig cfg_;
  HPReal half_pi_;
  HPReal small_term_;
  double t_cap_;
};

inline void check_finite(const HPReal& fx, const char* where) {
  if (!is_finite(fx))
    throw integrand_error(std::string("integrand returned a non-finite value (") + where + ")");
}

}  // namespace detail

// Integral of f over (a, b) by tanh-sinh. f may have integrable endpoint
// singularities (logarithmic, or power of order < 1); it is never called with
// x exactly equal to a or b. Two-argument integrands receive the signed
// distance to the nearest endpoint as the second argument.
template <typename F>
QuadResult integrate_finite(F&& f, const HPReal& a, const HPReal& b,
                            const QuadConfig& cfg, const PrecisionContext& ctx,
                            const LevelObserver& observer = {}) {
  if (!(a < b)) throw usage_error("integrate_finite: requires a < b");
  auto guard = ctx.activate();
  const HPReal mid = (a + b) / 2;
  const HPReal rad = (b - a) / 2;
  detail::Sweeper sweeper(detail::Transform::TanhSinh, ctx, cfg);

  auto term = [&](const detail::Node& node, bool positive, bool center) -> HPReal {
    // center node: s = 1, x = mid, distance rad from both endpoints.
    const HPReal dist = rad * node.a;
    HPReal fx;
    if constexpr (detail::takes_complement_v<F>) {
      const HPReal xc = (positive && !center) ? HPReal(-dist) : dist;
      const HPReal x = (positive && !center) ? HPReal(b - dist) : HPReal(a + dist);
      fx = f(x, xc);
    } else {
      const HPReal x = (positive && !center) ? HPReal(b - dist) : HPReal(a + dist);
      if (x == a || x == b) return HPReal(0);  // collapsed tail node, skip
      fx = f(x);
    }
    detail::check_finite(fx, "tanh-sinh");
    return fx * node.w * rad;
  };
  return sweeper.run(term, observer);
}

template <typename F>
QuadResult integrate_finite(F&& f, const HPReal& a, const HPReal& b,
                            const PrecisionContext& ctx) {
  return integrate_finite(std::forward<F>(f), a, b, QuadConfig::defaults(ctx), ctx);
}

// Integral of f over (0, inf) by exp-sinh. f must decay at least
// exponentially at infinity (up to polynomial factors) and be integrable at 0.
template <typename F>
QuadResult integrate_half_line(F&& f, const QuadConfig& cfg, const PrecisionContext& ctx,
                               const LevelObserver& observer = {}) {
  auto guard = ctx.activate();
  detail::Sweeper sweeper(detail::Transform::ExpSinh, ctx, cfg);
  auto term = [&](const detail::Node& node, bool positive, bool center) -> HPReal {
    // node.a = exp(u) for t >= 0; the mirrored node is 1/node.a.
    const HPReal x = (positive || center) ? node.a : HPReal(1 / node.a);
    const HPReal fx = f(x);
    detail::check_finite(fx, "exp-sinh");
    return fx * node.w * x;  // dx/dt = (pi/2) cosh t * x
  };
  return sweeper.run(term, observer);
}

template <typename F>
QuadResult integrate_half_line(F&& f, const PrecisionContext& ctx) {
  return integrate_half_line(std::forward<F>(f), QuadConfig::defaults(ctx), ctx);
}

// Integral of f over (-inf, inf) by sinh-sinh. f must decay at least
// exponentially in both tails (up to polynomial factors).
template <typename F>
QuadResult integrate_real_line(F&& f, const QuadConfig& cfg, const PrecisionContext& ctx,
                               const LevelObserver& observer = {}) {
  auto guard = ctx.activate();
  detail::Sweeper sweeper(detail::Transform::SinhSinh, ctx, cfg);
  auto term = [&](const detail::Node& node, bool positive, bool center) -> HPReal {
    const HPReal x = (positive || center) ? node.a : HPReal(-node.a);
    const HPReal fx = f(x);
    detail::check_finite(fx, "sinh-sinh");
    return fx * node.w;
  };
  return sweeper.run(term, observer);
}

template <typename F>
QuadResult integrate_real_line(F&& f, const PrecisionContext& ctx) {
  return integrate_real_line(std::forward<F>(f), QuadConfig::defaults(ctx), ctx);
}

}  // namespace fdzeta

#endif
