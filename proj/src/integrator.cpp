#include "seasonal/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "seasonal/format.hpp"

namespace seasonal {

namespace {

// A fixed point this small after convergence is the collapsed origin, not a
// genuine periodic orbit; orbits this small occur only within ~1e-7 of a
// persistence boundary.
constexpr double kZeroStateTol = 1e-7;

template <std::size_t N, class F>
std::array<double, N> rk4_step(const std::array<double, N>& y, double h, F&& f) {
    std::array<double, N> k1, k2, k3, k4, tmp;
    f(y, k1);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(tmp, k3);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
    f(tmp, k4);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    }
    return out;
}

void vector_field(const ModelParameters& p, Phase phase, double u, double v,
                  double& du, double& dv) {
    switch (phase) {
        case Phase::Dry:
            du = -p.d1 * u;
            dv = -p.d2 * v;
            return;
        case Phase::Growth:
            du = u * (1.0 - u - p.b1 * v);
            dv = p.r * v * (1.0 - v - p.b2 * u);
            return;
        case Phase::Grazing:
            du = u * (1.0 - u - p.b1 * v) - p.c1 * u;
            dv = p.r * v * (1.0 - v - p.b2 * u) - p.c2 * v;
            return;
    }
    du = dv = 0.0;
}

// Jacobian of the phase vector field at (u, v).
void jacobian(const ModelParameters& p, Phase phase, double u, double v,
              double& j11, double& j12, double& j21, double& j22) {
    switch (phase) {
        case Phase::Dry:
            j11 = -p.d1;
            j12 = 0.0;
            j21 = 0.0;
            j22 = -p.d2;
            return;
        case Phase::Growth:
            j11 = 1.0 - 2.0 * u - p.b1 * v;
            j12 = -p.b1 * u;
            j21 = -p.r * p.b2 * v;
            j22 = p.r * (1.0 - 2.0 * v - p.b2 * u);
            return;
        case Phase::Grazing:
            j11 = 1.0 - 2.0 * u - p.b1 * v - p.c1;
            j12 = -p.b1 * u;
            j21 = -p.r * p.b2 * v;
            j22 = p.r * (1.0 - 2.0 * v - p.b2 * u) - p.c2;
            return;
    }
    j11 = j12 = j21 = j22 = 0.0;
}

// Integrates one phase from t_start to t_end in `steps` equal RK4 steps,
// optionally recording every `stride`-th step plus the phase end into
// `sink`. The end sample uses t_end exactly.
State integrate_phase(State state, const ModelParameters& p, Phase phase,
                      double t_start, double t_end, int steps,
                      std::vector<Sample>* sink, int stride) {
    const double duration = t_end - t_start;
    if (!(duration > 0.0) || steps <= 0) {
        return state;
    }
    const double h = duration / steps;
    std::array<double, 2> y{state.u, state.v};
    auto f = [&](const std::array<double, 2>& z, std::array<double, 2>& dz) {
        vector_field(p, phase, z[0], z[1], dz[0], dz[1]);
    };
    for (int i = 1; i <= steps; ++i) {
        const std::array<double, 2> prev = y;
        y = rk4_step(y, h, f);
        if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
            throw BlowupError(phase, t_start + i * h, State{prev[0], prev[1]});
        }
        if (sink && (i == steps || i % stride == 0)) {
            const double t = (i == steps) ? t_end : t_start + i * h;
            sink->push_back({t, State{y[0], y[1]}});
        }
    }
    return {y[0], y[1]};
}

// One season cycle starting at time t0 = n*T, hitting the phase boundaries
// t0 + tau1, t0 + tau2, t_end exactly.
State run_period(State state, const ModelParameters& p, const Schedule& s,
                 double t0, double t_end, std::vector<Sample>* sink, int stride) {
    state = integrate_phase(state, p, Phase::Dry, t0, t0 + s.tau1,
                            default_step_count(s.tau1, s.T), sink, stride);
    state = integrate_phase(state, p, Phase::Growth, t0 + s.tau1, t0 + s.tau2,
                            default_step_count(s.tau2 - s.tau1, s.T), sink, stride);
    state = integrate_phase(state, p, Phase::Grazing, t0 + s.tau2, t_end,
                            default_step_count(s.T - s.tau2, s.T), sink, stride);
    return state;
}

std::string state_str(const State& s) {
    return "(" + format_number(s.u) + ", " + format_number(s.v) + ")";
}

}  // namespace

BlowupError::BlowupError(Phase phase_, double t_, const State& last)
    : std::runtime_error("integration blow-up in phase " +
                         std::to_string(static_cast<int>(phase_)) + " near t = " +
                         format_number(t_) + ", last finite state " + state_str(last)),
      phase(phase_), t(t_), last_finite(last) {}

NonConvergenceError::NonConvergenceError(const State& previous_, const State& last_,
                                         long iterations_)
    : std::runtime_error("period-map iteration did not converge after " +
                         std::to_string(iterations_) + " returns; last iterates " +
                         state_str(previous_) + " -> " + state_str(last_)),
      previous(previous_), last(last_), iterations(iterations_) {}

int default_step_count(double duration, double period) {
    if (!(duration > 0.0)) {
        return 0;
    }
    const double h0 = period / 4096.0;
    return std::max(64, static_cast<int>(std::ceil(duration / h0)));
}

State step_phase(State state, const ModelParameters& p, Phase phase,
                 double duration, double step) {
    if (duration < 0.0) {
        throw std::invalid_argument("step_phase: duration must be nonnegative");
    }
    if (duration == 0.0) {
        return state;
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("step_phase: step must be positive");
    }
    const long steps = std::lround(duration / step);
    if (steps < 1 || std::abs(steps * step - duration) > 1e-9 * duration) {
        throw std::invalid_argument("step_phase: step must divide duration");
    }
    return integrate_phase(state, p, phase, 0.0, duration,
                           static_cast<int>(steps), nullptr, 1);
}

State period_map_2d(State state, const ModelParameters& p, const Schedule& s) {
    return run_period(state, p, s, 0.0, s.T, nullptr, 1);
}

Trajectory simulate(const ModelParameters& p, const Schedule& s, State start,
                    int periods, int sample_stride) {
    if (periods < 0) {
        throw std::invalid_argument("simulate: periods must be nonnegative");
    }
    if (sample_stride < 1) {
        throw std::invalid_argument("simulate: sample_stride must be at least 1");
    }
    if (!(start.u >= 0.0) || !(start.v >= 0.0)) {
        throw std::invalid_argument("simulate: start state must be nonnegative");
    }
    Trajectory traj;
    traj.schedule = s;
    traj.periods = periods;
    traj.samples.push_back({0.0, start});
    State state = start;
    for (int n = 0; n < periods; ++n) {
        state = run_period(state, p, s, n * s.T, (n + 1) * s.T, &traj.samples,
                           sample_stride);
    }
    return traj;
}

std::optional<PeriodicOrbit> find_periodic_orbit(const ModelParameters& p,
                                                 const Schedule& s, State start,
                                                 const OrbitOptions& opts) {
    if (!(start.u >= 0.0) || !(start.v >= 0.0)) {
        throw std::invalid_argument(
            "find_periodic_orbit: start state must be nonnegative");
    }
    State current = start;
    for (long it = 0; it < opts.max_iterations; ++it) {
        const State next = period_map_2d(current, p, s);
        const double diff = std::max(std::abs(next.u - current.u),
                                     std::abs(next.v - current.v));
        if (diff < opts.tolerance) {
            if (next.u < kZeroStateTol && next.v < kZeroStateTol) {
                return std::nullopt;
            }
            PeriodicOrbit orbit;
            orbit.fixed_point = next;
            orbit.orbit.schedule = s;
            orbit.orbit.periods = 1;
            orbit.orbit.samples.push_back({0.0, next});
            run_period(next, p, s, 0.0, s.T, &orbit.orbit.samples,
                       opts.sample_stride);
            return orbit;
        }
        current = next;
    }
    throw NonConvergenceError(current, period_map_2d(current, p, s),
                              opts.max_iterations);
}

std::array<std::complex<double>, 2> Monodromy::eigenvalues() const {
    const double half_tr = 0.5 * trace();
    const double disc = half_tr * half_tr - determinant();
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        return {std::complex<double>(half_tr - root, 0.0),
                std::complex<double>(half_tr + root, 0.0)};
    }
    const double imag = std::sqrt(-disc);
    return {std::complex<double>(half_tr, -imag),
            std::complex<double>(half_tr, imag)};
}

Monodromy monodromy_at(const State& omega, const ModelParameters& p,
                       const Schedule& s) {
    // y = (u, v, V11, V12, V21, V22), dV/dt = Df(u, v) V.
    std::array<double, 6> y{omega.u, omega.v, 1.0, 0.0, 0.0, 1.0};

    struct Leg {
        Phase phase;
        double duration;
        double end;
    };
    const std::array<Leg, 3> legs{{
        {Phase::Dry, s.tau1, s.tau1},
        {Phase::Growth, s.tau2 - s.tau1, s.tau2},
        {Phase::Grazing, s.T - s.tau2, s.T},
    }};
    for (const auto& [phase, duration, leg_end] : legs) {
        const int steps = default_step_count(duration, s.T);
        if (steps == 0) continue;
        const double h = duration / steps;
        auto f = [&](const std::array<double, 6>& z, std::array<double, 6>& dz) {
            vector_field(p, phase, z[0], z[1], dz[0], dz[1]);
            double j11, j12, j21, j22;
            jacobian(p, phase, z[0], z[1], j11, j12, j21, j22);
            dz[2] = j11 * z[2] + j12 * z[4];
            dz[3] = j11 * z[3] + j12 * z[5];
            dz[4] = j21 * z[2] + j22 * z[4];
            dz[5] = j21 * z[3] + j22 * z[5];
        };
        for (int i = 0; i < steps; ++i) {
            y = rk4_step(y, h, f);
        }
        for (double value : y) {
            if (!std::isfinite(value)) {
                throw BlowupError(phase, leg_end, State{y[0], y[1]});
            }
        }
    }
    return Monodromy{y[2], y[3], y[4], y[5]};
}

void write_csv(const Trajectory& traj, std::ostream& out) {
    out << "t,u,v\n";
    for (const Sample& sample : traj.samples) {
        out << format_number(sample.t) << ',' << format_number(sample.state.u)
            << ',' << format_number(sample.state.v) << '\n';
    }
}

}  // namespace seasonal
