#include "adia/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adia/errors.hpp"
#include "adia/hamiltonian.hpp"
#include "adia/spectrum.hpp"

namespace adia {

namespace {

constexpr double kMaxStepPhase = 0.5;   // ||H|| dt ceiling for series accuracy
constexpr double kStepUnitarity = 1e-10;
constexpr double kDriftBudget = 1e-8;

double norm(const StateVector& v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

// psi <- exp(-i dt H(s)) psi, truncated Taylor series.  With the step-phase
// ceiling the terms decay factorially; 30 terms exceed double precision.
void exp_step(const StructuredHamiltonian& h, double s, double dt,
              StateVector& psi, StateVector& term, StateVector& scratch) {
  const std::size_t n = psi.size();
  term = psi;
  const std::complex<double> factor(0.0, -dt);
  for (int k = 1; k <= 30; ++k) {
    h.apply(s, term, scratch);
    const std::complex<double> c = factor / static_cast<double>(k);
    double term_norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      term[i] = c * scratch[i];
      psi[i] += term[i];
      term_norm2 += std::norm(term[i]);
    }
    if (term_norm2 <= 1e-36) return;  // ||term|| <= 1e-18
  }
}

}  // namespace

EvolveResult evolve_path(const ProblemInstance& inst,
                         const std::function<double(double)>& s_of_t, double T,
                         int steps, int trace_points) {
  if (!(T >= 0.0)) throw ArgumentError("evolution requires T >= 0");
  if (steps < 1) throw ArgumentError("evolution requires at least one step");
  if (trace_points < 2 || trace_points > 1024) {
    throw ArgumentError("trace_points must lie in [2, 1024]");
  }
  const StructuredHamiltonian h(inst);
  const std::size_t n = inst.size();

  EvolveResult out;
  out.state.assign(n, std::complex<double>(1.0 / std::sqrt(double(n)), 0.0));
  out.total_drift = 0.0;

  auto sample_s = [&](double t) {
    const double s = s_of_t(t);
    return std::clamp(s, 0.0, 1.0);
  };
  auto record = [&](double t) {
    const double s = sample_s(t);
    out.trace.t.push_back(t);
    out.trace.s.push_back(s);
    out.trace.ground_overlap.push_back(instantaneous_overlap(out.state, inst, s));
    out.trace.norm_drift.push_back(out.total_drift);
  };

  if (T == 0.0) {
    out.steps_used = 0;
    record(0.0);
    return out;
  }

  // Stability auto-raise: crude uniform bound max(1, f_max) + 1 >= ||H(s)||.
  const double h_bound = std::max(1.0, inst.f_max()) + 1.0;
  const int min_steps =
      static_cast<int>(std::ceil(T * h_bound / kMaxStepPhase));
  steps = std::max(steps, min_steps);
  out.steps_used = steps;
  const double dt = T / steps;

  const int rows = std::min<long long>(trace_points, steps + 1);
  StateVector term(n), scratch(n);
  record(0.0);
  int next_row = 1;
  for (int step = 0; step < steps; ++step) {
    const double s_mid = sample_s((step + 0.5) * dt);
    exp_step(h, s_mid, dt, out.state, term, scratch);

    const double nrm = norm(out.state);
    const double dev = std::abs(nrm - 1.0);
    if (dev > kStepUnitarity) {
      throw NormDriftError("step " + std::to_string(step) +
                           " lost unitarity: |norm - 1| = " + std::to_string(dev));
    }
    out.total_drift += dev;
    if (out.total_drift > kDriftBudget) {
      throw NormDriftError("accumulated norm drift " +
                           std::to_string(out.total_drift) +
                           " exceeds budget at step " + std::to_string(step));
    }
    const double inv = 1.0 / nrm;
    for (auto& x : out.state) x *= inv;

    // emit trace rows at evenly spread step boundaries
    while (next_row < rows &&
           static_cast<long long>(next_row) * steps <=
               static_cast<long long>(rows - 1) * (step + 1)) {
      record((step + 1) * dt);
      ++next_row;
    }
  }
  return out;
}

EvolveResult evolve(const ProblemInstance& inst, const Schedule& schedule,
                    int steps, int trace_points) {
  return evolve_path(
      inst, [&schedule](double t) { return schedule.s_of_t(t); }, schedule.T,
      steps, trace_points);
}

double fidelity(const StateVector& state, const ProblemInstance& inst) {
  if (state.size() != inst.size()) {
    throw DimensionError("fidelity: state length mismatch");
  }
  return std::norm(state[inst.marked()]);
}

double instantaneous_overlap(const StateVector& state,
                             const ProblemInstance& inst, double s) {
  if (state.size() != inst.size()) {
    throw DimensionError("overlap: state length mismatch");
  }
  const std::vector<double> g = ground_state(inst, s);
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < state.size(); ++k) acc += g[k] * state[k];
  return std::norm(acc);
}

}  // namespace adia
