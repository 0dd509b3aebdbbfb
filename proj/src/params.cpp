#include "seasonal/params.hpp"

#include <cmath>
#include <stdexcept>

namespace seasonal {

namespace {

void require_positive(ValidationReport& report, const char* field, double value) {
    if (!(value > 0.0)) {
        report.errors.push_back({field, "must be strictly positive"});
    }
}

void require_nonnegative(ValidationReport& report, const char* field, double value) {
    if (!(value >= 0.0)) {
        report.errors.push_back({field, "must be nonnegative"});
    }
}

}  // namespace

std::string ValidationReport::summary() const {
    std::string out;
    auto append = [&out](const ValidationIssue& issue, const char* tag) {
        if (!out.empty()) out += "; ";
        out += issue.field;
        out += ": ";
        out += issue.message;
        out += tag;
    };
    for (const auto& issue : errors) append(issue, "");
    for (const auto& issue : warnings) append(issue, " (warning)");
    return out;
}

ValidationReport validate(const RawParameters& raw) {
    ValidationReport report;
    require_positive(report, "r1", raw.r1);
    require_positive(report, "r2", raw.r2);
    require_positive(report, "K1", raw.K1);
    require_positive(report, "K2", raw.K2);
    require_nonnegative(report, "b1_raw", raw.b1_raw);
    require_nonnegative(report, "b2_raw", raw.b2_raw);
    require_positive(report, "d1_raw", raw.d1_raw);
    require_positive(report, "d2_raw", raw.d2_raw);
    require_positive(report, "q1E1", raw.q1E1);
    require_positive(report, "q2E2", raw.q2E2);
    require_positive(report, "T_raw", raw.T_raw);
    if (!(raw.tau1_raw >= 0.0)) {
        report.errors.push_back({"tau1_raw", "must be nonnegative"});
    }
    if (!(raw.tau2_raw >= raw.tau1_raw)) {
        report.errors.push_back({"tau2_raw", "tau2_raw >= tau1_raw required"});
    }
    if (!(raw.T_raw >= raw.tau2_raw)) {
        report.errors.push_back({"T_raw", "T_raw >= tau2_raw required"});
    }
    return report;
}

ValidationReport validate(const ModelParameters& p, const Schedule& s) {
    ValidationReport report;
    require_positive(report, "d1", p.d1);
    require_positive(report, "d2", p.d2);
    require_positive(report, "r", p.r);
    require_nonnegative(report, "b1", p.b1);
    require_nonnegative(report, "b2", p.b2);
    require_positive(report, "c1", p.c1);
    require_positive(report, "c2", p.c2);
    require_positive(report, "T", s.T);
    if (!(s.tau1 >= 0.0)) {
        report.errors.push_back({"tau1", "must be nonnegative"});
    }
    if (!(s.tau2 >= s.tau1)) {
        report.errors.push_back({"tau2", "tau2 >= tau1 required"});
    }
    if (!(s.T >= s.tau2)) {
        report.errors.push_back({"T", "T >= tau2 required"});
    }
    if (report.ok()) {
        if (s.tau1 == s.tau2) {
            report.warnings.push_back({"tau2", "growth phase empty (tau1 == tau2)"});
        }
        if (s.tau2 == s.T) {
            report.warnings.push_back({"tau2", "grazing phase empty (tau2 == T)"});
        }
    }
    return report;
}

std::pair<ModelParameters, Schedule> rescale(const RawParameters& raw) {
    const ValidationReport report = validate(raw);
    if (!report.ok()) {
        throw std::invalid_argument("invalid raw parameters: " + report.summary());
    }
    ModelParameters p;
    p.d1 = raw.d1_raw / raw.r1;
    p.d2 = raw.d2_raw / raw.r1;
    p.r = raw.r2 / raw.r1;
    p.b1 = raw.b1_raw * raw.K2;
    p.b2 = raw.b2_raw * raw.K1;
    p.c1 = raw.q1E1 / raw.r1;
    p.c2 = raw.q2E2 / raw.r1;
    Schedule s;
    s.tau1 = raw.r1 * raw.tau1_raw;
    s.tau2 = raw.r1 * raw.tau2_raw;
    s.T = raw.r1 * raw.T_raw;
    return {p, s};
}

RawParameters unrescale(const ModelParameters& p, const Schedule& s,
                        double r1, double K1, double K2) {
    if (!(r1 > 0.0) || !(K1 > 0.0) || !(K2 > 0.0)) {
        throw std::invalid_argument("unrescale: scale factors must be strictly positive");
    }
    RawParameters raw;
    raw.r1 = r1;
    raw.r2 = p.r * r1;
    raw.K1 = K1;
    raw.K2 = K2;
    raw.b1_raw = p.b1 / K2;
    raw.b2_raw = p.b2 / K1;
    raw.d1_raw = p.d1 * r1;
    raw.d2_raw = p.d2 * r1;
    raw.q1E1 = p.c1 * r1;
    raw.q2E2 = p.c2 * r1;
    raw.tau1_raw = s.tau1 / r1;
    raw.tau2_raw = s.tau2 / r1;
    raw.T_raw = s.T / r1;
    return raw;
}

}  // namespace seasonal
