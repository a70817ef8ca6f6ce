#include "qgc/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgc/errors.hpp"
#include "qgc/harmonics.hpp"

namespace qgc {

namespace {

double max_abs_coeff(const HatVector& u) {
  double m = 0.0;
  for (const auto& [mode, v] : u.coeffs) m = std::max(m, std::abs(v));
  return m;
}

// Projection onto the real subspace: c_{l,-m} = (-1)^m conj(c_{lm}),
// real m = 0 and central components. Applied per step when the initial
// data is real, so roundoff cannot leak into the asymmetric directions.
void symmetrize_real(HatVector& u) {
  u.central = Complex{u.central.real(), 0.0};
  for (auto& [mode, v] : u.coeffs) {
    if (mode.m < 0) continue;
    if (mode.m == 0) {
      v = Complex{v.real(), 0.0};
      continue;
    }
    const auto it = u.coeffs.find({mode.l, -mode.m});
    const Complex mirror = (it == u.coeffs.end()) ? Complex{0.0} : it->second;
    const Complex avg = 0.5 * (v + parity(mode.m) * std::conj(mirror));
    v = avg;
    u.coeffs[{mode.l, -mode.m}] = parity(mode.m) * std::conj(avg);
  }
}

struct Stepper {
  const DynamicsConfig* cfg;
  bool enforce_real;

  void advance(FlowState& s, double dt, const char* who) const {
    const HatVector k1 = rhs(s, *cfg);
    const HatVector k2 = rhs({axpy(s.u, k1, 0.5 * dt), s.t + 0.5 * dt}, *cfg);
    const HatVector k3 = rhs({axpy(s.u, k2, 0.5 * dt), s.t + 0.5 * dt}, *cfg);
    const HatVector k4 = rhs({axpy(s.u, k3, dt), s.t + dt}, *cfg);
    HatVector incr = axpy(k1, k2, 2.0);
    incr = axpy(incr, k3, 2.0);
    incr = axpy(incr, k4, 1.0);
    s.u = axpy(s.u, incr, dt / 6.0);
    s.t += dt;
    if (enforce_real) symmetrize_real(s.u);
    if (max_abs_coeff(s.u) > cfg->blowup_bound)
      throw BlowupError(std::string(who) + ": coefficient exceeded blow-up guard");
  }
};

}  // namespace

HatVector rhs(const FlowState& state, const DynamicsConfig& cfg) {
  if (cfg.table == nullptr) throw std::invalid_argument("rhs: missing table");
  // coad_hat(u,u) already carries the -a T u term through u's central part
  HatVector d = coad_hat(state.u, state.u, cfg.ctx, *cfg.table,
                         {TruncationMode::galerkin, cfg.lmax});
  d = scaled(d, Complex{-1.0});
  d.central = 0.0;
  return d;
}

StepDiagnostics diagnose(const FlowState& state, const DynamicsConfig& cfg) {
  StepDiagnostics d;
  d.t = state.t;
  d.energy = metric(state.u, state.u, cfg.ctx).real();
  d.central = state.u.central.real();
  d.reality = reality_residual(state.u);
  d.max_abs = max_abs_coeff(state.u);
  // potential vorticity spectrum q = (Delta - alpha^2) f + a mu
  CoeffMap q;
  for (const auto& [mode, v] : state.u.coeffs) q[mode] = -cfg.ctx.weight(mode.l) * v;
  q[{1, 0}] += state.u.central * std::sqrt(4.0 * std::numbers::pi / 3.0);
  d.enstrophy = pair(q, q).real();
  return d;
}

Trajectory integrate(const FlowState& state0, double dt, int n_steps,
                     const DynamicsConfig& cfg, int record_stride) {
  if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
  if (record_stride < 1) record_stride = 1;
  Trajectory traj;
  FlowState s = state0;
  const Stepper stepper{&cfg, reality_residual(state0.u) < 1e-12};
  traj.states.push_back(s);
  traj.diagnostics.push_back(diagnose(s, cfg));
  for (int step = 0; step < n_steps; ++step) {
    stepper.advance(s, dt, "integrate");
    if ((step + 1) % record_stride == 0 || step + 1 == n_steps) {
      traj.states.push_back(s);
      traj.diagnostics.push_back(diagnose(s, cfg));
    }
  }
  return traj;
}

std::vector<std::pair<double, double>> twin_divergence(const FlowState& state0,
                                                       const HatVector& perturbation,
                                                       double dt, int n_steps,
                                                       const DynamicsConfig& cfg) {
  FlowState a = state0;
  FlowState b{axpy(state0.u, perturbation, 1.0), state0.t};
  const Stepper stepper{&cfg, reality_residual(a.u) < 1e-12 && reality_residual(b.u) < 1e-12};
  std::vector<std::pair<double, double>> out;
  const auto separation = [&]() {
    const HatVector diff = axpy(a.u, b.u, Complex{-1.0});
    return std::sqrt(std::max(0.0, metric(diff, diff, cfg.ctx).real()));
  };
  out.emplace_back(a.t, separation());
  for (int step = 0; step < n_steps; ++step) {
    stepper.advance(a, dt, "twin_divergence");
    stepper.advance(b, dt, "twin_divergence");
    out.emplace_back(a.t, separation());
  }
  return out;
}

}  // namespace qgc
