#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "seasonal/params.hpp"

namespace seasonal {

struct State {
    double u = 0.0;
    double v = 0.0;
};

enum class Phase : int { Dry = 1, Growth = 2, Grazing = 3 };

struct Sample {
    double t;
    State state;
};

// Densely sampled piecewise solution over whole periods. Sample times are
// strictly increasing and every phase boundary n*T + tau1, n*T + tau2,
// (n+1)*T coincides with a sample.
struct Trajectory {
    std::vector<Sample> samples;
    Schedule schedule;
    int periods = 0;
};

// CSV with header "t,u,v", one row per sample, 17 significant digits.
void write_csv(const Trajectory& traj, std::ostream& out);

// A non-finite value appeared during integration.
class BlowupError : public std::runtime_error {
public:
    BlowupError(Phase phase, double t, const State& last);
    Phase phase;
    double t;
    State last_finite;
};

// The period-map iteration hit its cap without meeting the tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const State& previous, const State& last, long iterations);
    State previous;
    State last;
    long iterations;
};

// Steps per phase: max(64, ceil(duration / (period/4096))); 0 for an empty
// phase. The step then divides the duration exactly, so phase boundaries
// are hit without event detection.
int default_step_count(double duration, double period);

// Classical fixed-step 4th-order integration of one phase vector field.
// `step` must divide `duration` (up to rounding); duration 0 is exact.
State step_phase(State state, const ModelParameters& p, Phase phase,
                 double duration, double step);

// One full season cycle: dry over tau1, growth over tau2-tau1, grazing over
// T-tau2, at the default per-phase resolution. Fixes (0,0) exactly and
// leaves each coordinate axis invariant.
State period_map_2d(State state, const ModelParameters& p, const Schedule& s);

// Trajectory over `periods` cycles recording every `sample_stride`-th step
// (phase boundaries are always recorded).
Trajectory simulate(const ModelParameters& p, const Schedule& s, State start,
                    int periods, int sample_stride = 1);

struct OrbitOptions {
    double tolerance = 1e-10;   // sup norm on successive period-map returns
    long max_iterations = 100000;
    int sample_stride = 1;      // for the returned one-period trajectory
};

struct PeriodicOrbit {
    State fixed_point;
    Trajectory orbit;   // one period starting at the fixed point
};

// Iterates the period map from `start` until successive returns agree to
// opts.tolerance. Returns the fixed point and one period of dense samples;
// nullopt when the orbit has collapsed to the origin. Throws
// NonConvergenceError when the cap is exceeded.
std::optional<PeriodicOrbit> find_periodic_orbit(const ModelParameters& p,
                                                 const Schedule& s, State start,
                                                 const OrbitOptions& opts = {});

// Jacobian of the period map: the fundamental solution of the variational
// equations over one period.
struct Monodromy {
    double m11, m12, m21, m22;

    double trace() const noexcept { return m11 + m22; }
    double determinant() const noexcept { return m11 * m22 - m12 * m21; }
    std::array<std::complex<double>, 2> eigenvalues() const;
};

// Integrates dV/dt = Df_k(U(t)) V with V(0) = I alongside the state through
// all three phases; the result is the chain-rule product V3 V2 V1. At a
// point on a coordinate axis the matrix is triangular.
Monodromy monodromy_at(const State& omega, const ModelParameters& p,
                       const Schedule& s);

}  // namespace seasonal
