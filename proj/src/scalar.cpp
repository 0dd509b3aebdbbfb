#include "seasonal/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace seasonal {

MobiusGrowthMap compose(const MobiusGrowthMap& first,
                        const MobiusGrowthMap& second) noexcept {
    return {second.p * first.p, second.q * first.p + first.q};
}

ScalarPhase ScalarPhase::decay(double rate, double duration) {
    return {Kind::Decay, rate, 0.0, duration};
}

ScalarPhase ScalarPhase::logistic(double rate, double duration) {
    return {Kind::Logistic, rate, 0.0, duration};
}

ScalarPhase ScalarPhase::logistic_harvest(double rate, double harvest,
                                          double duration) {
    return {Kind::LogisticHarvest, rate, harvest, duration};
}

MobiusGrowthMap phase_map(const ScalarPhase& phase) {
    const double dt = phase.duration;
    switch (phase.kind) {
        case ScalarPhase::Kind::Decay:
            return {std::exp(-phase.rate * dt), 0.0};
        case ScalarPhase::Kind::Logistic: {
            const double p = std::exp(phase.rate * dt);
            return {p, p - 1.0};
        }
        case ScalarPhase::Kind::LogisticHarvest: {
            const double s = phase.rate - phase.harvest;
            // (e^{s dt} - 1)/s cancels catastrophically as s -> 0; the
            // harvest == rate flow is x' = -rate x^2 with map p = 1,
            // q = rate*dt.
            if (std::abs(s) < kExponentTol * std::max(phase.rate, phase.harvest)) {
                return {1.0, phase.rate * dt};
            }
            const double p = std::exp(s * dt);
            return {p, (p - 1.0) * phase.rate / s};
        }
    }
    throw std::logic_error("phase_map: unknown phase kind");
}

std::array<ScalarPhase, 3> season_phases(const ModelParameters& p,
                                         const Schedule& s, Species species) {
    const double decay_rate = species == Species::U ? p.d1 : p.d2;
    const double growth_rate = species == Species::U ? 1.0 : p.r;
    const double harvest_rate = species == Species::U ? p.c1 : p.c2;
    return {
        ScalarPhase::decay(decay_rate, s.tau1),
        ScalarPhase::logistic(growth_rate, s.tau2 - s.tau1),
        ScalarPhase::logistic_harvest(growth_rate, harvest_rate, s.T - s.tau2),
    };
}

MobiusGrowthMap period_map(const ModelParameters& p, const Schedule& s,
                           Species species) {
    MobiusGrowthMap m;
    for (const ScalarPhase& phase : season_phases(p, s, species)) {
        m = compose(m, phase_map(phase));
    }
    return m;
}

double period_log_gain(const ModelParameters& p, const Schedule& s,
                       Species species) {
    const double decay_rate = species == Species::U ? p.d1 : p.d2;
    const double growth_rate = species == Species::U ? 1.0 : p.r;
    const double harvest_rate = species == Species::U ? p.c1 : p.c2;
    return -decay_rate * s.tau1 + growth_rate * (s.tau2 - s.tau1) +
           (growth_rate - harvest_rate) * (s.T - s.tau2);
}

double map_limit_ratio(const MobiusGrowthMap& m) noexcept { return m.p; }

std::optional<double> fixed_point(const MobiusGrowthMap& m) {
    if (m.p <= 1.0) {
        return std::nullopt;
    }
    if (!(m.q > 0.0)) {
        throw std::domain_error(
            "fixed_point: gain > 1 with no saturation (pure exponential growth); "
            "such a map cannot arise from a valid schedule");
    }
    return (m.p - 1.0) / m.q;
}

std::vector<double> iterate_sequence(const MobiusGrowthMap& m, double x, int n) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("iterate_sequence: x must be positive");
    }
    if (n < 1) {
        throw std::invalid_argument("iterate_sequence: n must be at least 1");
    }
    std::vector<double> seq;
    seq.reserve(static_cast<size_t>(n) + 1);
    seq.push_back(x);
    for (int i = 0; i < n; ++i) {
        seq.push_back(m(seq.back()));
    }
    return seq;
}

ScalarRegime scalar_classify(const ModelParameters& p, const Schedule& s,
                             Species species) {
    const MobiusGrowthMap m = period_map(p, s, species);
    const double log_gain = period_log_gain(p, s, species);

    ScalarRegime regime;
    regime.multiplier_at_zero = m.p;
    regime.boundary = std::abs(log_gain) <= kExponentTol;
    if (log_gain > kExponentTol) {
        regime.label = ScalarRegime::Label::PersistentPeriodic;
        regime.fixed_point = fixed_point(m);
    } else {
        regime.label = ScalarRegime::Label::Extinct;
    }
    return regime;
}

}  // namespace seasonal
