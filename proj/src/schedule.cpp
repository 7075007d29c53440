#include "adia/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "adia/errors.hpp"
#include "adia/hamiltonian.hpp"
#include "adia/quadrature.hpp"
#include "adia/spectrum.hpp"

namespace adia {

std::string kind_name(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Global:
      return "global";
    case ScheduleKind::LocalExact:
      return "local-exact";
    case ScheduleKind::LocalEnvelope:
      return "local-envelope";
  }
  return "unknown";
}

ScheduleKind parse_kind(const std::string& name) {
  if (name == "global") return ScheduleKind::Global;
  if (name == "local-exact") return ScheduleKind::LocalExact;
  if (name == "local-envelope") return ScheduleKind::LocalEnvelope;
  throw ArgumentError("unknown schedule kind: " + name +
                      " (expected global | local-exact | local-envelope)");
}

GapModel exact_gap_model(const ProblemInstance& inst) {
  auto cache = std::make_shared<GapFunction>(inst);
  return {[cache](double s) { return (*cache)(s); }, {}, ScheduleKind::LocalExact};
}

GapModel envelope_gap_model(const GapEnvelope& env) {
  return {[env](double s) { return env(s); },
          {env.a, env.b},
          ScheduleKind::LocalEnvelope};
}

GapModel constant_gap_model(double g0) {
  if (!(g0 > 0.0)) throw ArgumentError("constant gap must be positive");
  return {[g0](double) { return g0; }, {}, ScheduleKind::LocalExact};
}

namespace {

// 1/g^2 with the positivity precondition enforced at every evaluation.
std::function<double(double)> inverse_square(const GapModel& model) {
  return [g = model.g](double s) {
    const double gs = g(s);
    if (!(gs > 0.0)) {
      throw ArgumentError("gap model is not positive at s = " +
                          std::to_string(s) + " (non-integrable singularity)");
    }
    return 1.0 / (gs * gs);
  };
}

// Integral of the quadratic through (0,fa), (1/2,fm), (1,fb) from 0 to u,
// times the panel width h.  At u = 1 this is the plain Simpson value.
double quad_cumulative(double h, double fa, double fm, double fb, double u) {
  const double u2 = u * u;
  const double u3 = u2 * u;
  return h * (fa * (2.0 * u3 / 3.0 - 1.5 * u2 + u) +
              fm * (2.0 * u2 - 4.0 * u3 / 3.0) +
              fb * (2.0 * u3 / 3.0 - 0.5 * u2));
}

double quad_value(double fa, double fm, double fb, double u) {
  const double u2 = u * u;
  return fa * (2.0 * u2 - 3.0 * u + 1.0) + fm * (4.0 * u - 4.0 * u2) +
         fb * (2.0 * u2 - u);
}

// Solve cumulative(u) = target within one converged panel.  The cumulative
// is rescaled so the full-panel mass equals the Richardson-corrected panel
// value; Newton with a bisection bracket, always terminates.
double invert_in_panel(const QuadPanel& p, double target) {
  const double h = p.b - p.a;
  const double simpson = h / 6.0 * (p.fa + 4.0 * p.fm + p.fb);
  const double r = simpson > 0.0 ? p.value / simpson : 1.0;
  double lo = 0.0, hi = 1.0;
  double u = std::clamp(target / p.value, 0.0, 1.0);
  for (int it = 0; it < 100; ++it) {
    const double fu = r * quad_cumulative(h, p.fa, p.fm, p.fb, u) - target;
    if (fu > 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    const double du = r * h * quad_value(p.fa, p.fm, p.fb, u);
    double un = du > 0.0 ? u - fu / du : 0.5 * (lo + hi);
    if (!(un > lo && un < hi)) un = 0.5 * (lo + hi);
    if (std::abs(un - u) <= 1e-15) {
      u = un;
      break;
    }
    u = un;
  }
  return p.a + u * h;
}

Schedule finish_schedule(ScheduleKind kind, double epsilon, double big_d,
                         std::vector<double> t, std::vector<double> s,
                         std::vector<double> g) {
  Schedule sched;
  sched.kind = kind;
  sched.epsilon = epsilon;
  sched.D = big_d;
  sched.T = t.back();
  sched.s_interp_ = MonotoneCubic(t, s);
  sched.t_interp_ = MonotoneCubic(s, t);
  sched.t = std::move(t);
  sched.s = std::move(s);
  sched.g = std::move(g);
  return sched;
}

}  // namespace

double total_time(const GapModel& model, double big_d, double epsilon,
                  double rel_tol) {
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  if (!(big_d > 0.0)) throw ArgumentError("D must be positive");
  const auto rho = inverse_square(model);
  const auto q = integrate(rho, 0.0, 1.0, rel_tol, model.breakpoints);
  return big_d / epsilon * q.value;
}

Schedule global_schedule(const ProblemInstance& inst, double epsilon,
                         double g_min) {
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  if (!(g_min > 0.0)) throw ArgumentError("g_min must be positive");
  const double big_d = dhds_spectral_norm(inst).value;
  const double big_t = big_d / (epsilon * g_min * g_min);
  constexpr int kNodes = 257;
  std::vector<double> t(kNodes), s(kNodes), g(kNodes);
  for (int j = 0; j < kNodes; ++j) {
    s[j] = static_cast<double>(j) / (kNodes - 1);
    t[j] = big_t * s[j];
    g[j] = g_min;
  }
  s.back() = 1.0;
  t.back() = big_t;
  return finish_schedule(ScheduleKind::Global, epsilon, big_d, std::move(t),
                         std::move(s), std::move(g));
}

Schedule local_schedule(const ProblemInstance& inst, const GapModel& model,
                        double epsilon, int nodes) {
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  if (nodes < 128) throw ArgumentError("local schedule needs >= 128 nodes");
  const double big_d = dhds_spectral_norm(inst).value;

  const auto rho = inverse_square(model);
  const auto q = integrate(rho, 0.0, 1.0, 1e-10, model.breakpoints);

  // Cumulative mass at panel edges; the sum order fixes T so node targets
  // land exactly on [0, T].
  const auto& panels = q.panels;
  std::vector<double> cum(panels.size() + 1, 0.0);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    cum[i + 1] = cum[i] + panels[i].value;
  }
  const double mass = cum.back();
  const double scale = big_d / epsilon;

  std::vector<double> t(nodes), s(nodes), g(nodes);
  std::size_t panel = 0;
  for (int j = 0; j < nodes; ++j) {
    const double frac = static_cast<double>(j) / (nodes - 1);
    const double target = frac * mass;
    if (j == 0) {
      s[j] = 0.0;
    } else if (j == nodes - 1) {
      s[j] = 1.0;
    } else {
      while (panel + 1 < panels.size() && cum[panel + 1] < target) ++panel;
      s[j] = invert_in_panel(panels[panel], target - cum[panel]);
      if (s[j] <= s[j - 1]) {
        // duplicate node from an ulp-level tie; nudge keeps the table strict
        s[j] = std::nextafter(s[j - 1], 1.0);
      }
    }
    t[j] = scale * target;
    g[j] = model.g(s[j]);
  }
  return finish_schedule(model.kind, epsilon, big_d, std::move(t), std::move(s),
                         std::move(g));
}

}  // namespace adia
