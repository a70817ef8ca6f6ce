#pragma once

#include <utility>
#include <vector>

#include "qgc/extension.hpp"

namespace qgc {

/// Snapshot of the spectral flow; the central component is the (constant)
/// rotation strength.
struct FlowState {
  HatVector u;
  double t = 0.0;
};

struct DynamicsConfig {
  MetricContext ctx;
  const StructureTable* table = nullptr;
  int lmax = 0;                ///< Galerkin band of the truncated system
  double blowup_bound = 1e6;   ///< guard on max |coefficient|
};

/// Per-step invariant diagnostics.
struct StepDiagnostics {
  double t = 0.0;
  double energy = 0.0;     ///< <<(u,a),(u,a)>>, conserved up to integrator error
  double central = 0.0;    ///< exactly constant along the flow
  double reality = 0.0;    ///< conjugation-symmetry residual
  double enstrophy = 0.0;  ///< integral of q^2, q = (Delta - alpha^2) f + a mu; monitored only
  double max_abs = 0.0;    ///< largest coefficient modulus
};

struct Trajectory {
  std::vector<FlowState> states;
  std::vector<StepDiagnostics> diagnostics;
};

/// Spectral velocity du/dt = -(ad*_u u - a T u), Galerkin-projected to the
/// configured band; the central derivative is identically zero.
HatVector rhs(const FlowState& state, const DynamicsConfig& cfg);

StepDiagnostics diagnose(const FlowState& state, const DynamicsConfig& cfg);

/// Classical fixed-step RK4. When the initial data is real-symmetric, each
/// step is projected back onto the real subspace so roundoff cannot leak
/// into the asymmetric directions. Throws BlowupError when a coefficient
/// passes the guard. `record_stride` thins the stored snapshots (the final
/// state is always kept).
Trajectory integrate(const FlowState& state0, double dt, int n_steps,
                     const DynamicsConfig& cfg, int record_stride = 1);

/// Runs the base trajectory and a perturbed twin, and reports the metric
/// separation ||u1 - u2|| against time.
std::vector<std::pair<double, double>> twin_divergence(const FlowState& state0,
                                                       const HatVector& perturbation,
                                                       double dt, int n_steps,
                                                       const DynamicsConfig& cfg);

}  // namespace qgc
