#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adia/bounds.hpp"
#include "adia/instance.hpp"
#include "adia/interp.hpp"

namespace adia {

enum class ScheduleKind { Global, LocalExact, LocalEnvelope };

std::string kind_name(ScheduleKind kind);
ScheduleKind parse_kind(const std::string& name);

/// Gap model g(s) driving a schedule, with the locations where it is only
/// piecewise smooth (quadrature splits there) and the schedule kind a local
/// schedule built from it should report.
struct GapModel {
  std::function<double(double)> g;
  std::vector<double> breakpoints;
  ScheduleKind kind = ScheduleKind::LocalExact;
};

GapModel exact_gap_model(const ProblemInstance& inst);
GapModel envelope_gap_model(const GapEnvelope& env);
GapModel constant_gap_model(double g0);

/// Delay schedule s(t): a strictly monotone (t, s) table with monotone-cubic
/// interpolants both ways.  s(0) = 0, s(T) = 1.
struct Schedule {
  ScheduleKind kind;
  double epsilon;
  double T;
  double D;
  std::vector<double> t, s, g;  // table nodes; g = gap model at s

  double s_of_t(double time) const { return s_interp_(time); }
  double t_of_s(double ss) const { return t_interp_(ss); }

  MonotoneCubic s_interp_;  // t -> s
  MonotoneCubic t_interp_;  // s -> t
};

/// T = (1/epsilon) * integral of D / g(s)^2 over [0, 1].
double total_time(const GapModel& model, double big_d, double epsilon,
                  double rel_tol = 1e-8);

/// Constant-rate schedule with T = D / (epsilon g_min^2); s(t) = t/T.
Schedule global_schedule(const ProblemInstance& inst, double epsilon,
                         double g_min);

/// Locally adapted schedule: t(s) = (1/epsilon) int_0^s D/g^2, tabulated at
/// `nodes` points equally spaced in t (so s-spacing follows 1/g^2) and
/// inverted monotonically.
Schedule local_schedule(const ProblemInstance& inst, const GapModel& model,
                        double epsilon, int nodes = 1025);

}  // namespace adia
