#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "adia/instance.hpp"
#include "adia/schedule.hpp"

namespace adia {

using StateVector = std::vector<std::complex<double>>;

/// Diagnostics sampled along a trajectory (at most 1024 rows).
struct EvolutionTrace {
  std::vector<double> t;
  std::vector<double> s;
  std::vector<double> ground_overlap;  // |<ground(s) | psi>|^2
  std::vector<double> norm_drift;      // accumulated |1 - ||psi||| so far
};

struct EvolveResult {
  StateVector state;
  EvolutionTrace trace;
  int steps_used;        // after the stability auto-raise
  double total_drift;    // accumulated norm drift over the whole run
};

/// Integrate the Schrodinger equation along an arbitrary path s(t) from the
/// uniform superposition (the s = 0 ground state).  Propagation uses the
/// midpoint-Hamiltonian exponential per step, expanded as a truncated series
/// on the O(N) structured matvec; steps is raised until ||H|| dt <= 0.5.
/// A per-step unitarity breach beyond 1e-10, or accumulated drift beyond
/// 1e-8, aborts with NormDriftError.
EvolveResult evolve_path(const ProblemInstance& inst,
                         const std::function<double(double)>& s_of_t, double T,
                         int steps, int trace_points = 257);

/// Evolve along a synthesized schedule.
EvolveResult evolve(const ProblemInstance& inst, const Schedule& schedule,
                    int steps, int trace_points = 257);

/// Success probability: squared amplitude on the marked item.
double fidelity(const StateVector& state, const ProblemInstance& inst);

/// Squared overlap with the instantaneous ground state of H(s).
double instantaneous_overlap(const StateVector& state,
                             const ProblemInstance& inst, double s);

}  // namespace adia
