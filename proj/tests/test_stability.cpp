#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "seasonal/integrator.hpp"
#include "seasonal/scalar.hpp"
#include "seasonal/stability.hpp"
#include "reference_sets.hpp"

using namespace seasonal;

namespace {

ModelParameters draw_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(0.05, 1.0);
    std::uniform_real_distribution<double> growth(0.4, 2.5);
    std::uniform_real_distribution<double> comp(0.05, 1.5);
    std::uniform_real_distribution<double> graze(0.05, 1.5);
    return {d(rng), d(rng), growth(rng), comp(rng), comp(rng), graze(rng), graze(rng)};
}

Schedule draw_schedule(std::mt19937& rng) {
    std::uniform_real_distribution<double> period(6.0, 14.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Schedule s;
    s.T = period(rng);
    s.tau1 = unit(rng) * 0.6 * s.T;
    s.tau2 = s.tau1 + unit(rng) * (s.T - s.tau1);
    return s;
}

}  // namespace

TEST_CASE("threshold values on the reference sets") {
    SUBCASE("grazed-out u set") {
        const auto& c = refsets::collapse_grazed_u_dry_v;
        CHECK(thresholds(c.p, c.s).tau2_star == doctest::Approx(7.5).epsilon(1e-12));
    }
    SUBCASE("grazed-out v set") {
        const auto& c = refsets::collapse_dry_u_grazed_v;
        CHECK(thresholds(c.p, c.s).tau2_star2 == doctest::Approx(8.875).epsilon(1e-12));
    }
    SUBCASE("coexistence set") {
        const auto& c = refsets::coexistence;
        const Thresholds t = thresholds(c.p, c.s);
        CHECK(t.tau2_star == doctest::Approx(10.0 / 3.0).epsilon(1e-12));
        CHECK(t.tau2_star2 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(t.tau1_star == doctest::Approx(10.0 / 1.5).epsilon(1e-12));
        CHECK(t.tau1_star2 == doctest::Approx(100.0 / 11.0).epsilon(1e-12));
    }
    SUBCASE("formula degenerations") {
        ModelParameters p = refsets::coexistence.p;
        Schedule s = refsets::coexistence.s;
        p.c1 = 1.0;
        s.tau1 = 0.0;
        CHECK(thresholds(p, s).tau2_star == 0.0);
        p = refsets::coexistence.p;
        p.d1 = 0.0;  // formula degeneration only; validate() would reject it
        CHECK(thresholds(p, refsets::coexistence.s).tau1_star ==
              refsets::coexistence.s.T);
    }
}

TEST_CASE("tau1 below its critical length iff tau2_star below T") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParameters p = draw_params(rng);
        const Schedule s = draw_schedule(rng);
        const Thresholds t = thresholds(p, s);
        CHECK((s.tau1 < t.tau1_star) == (t.tau2_star < s.T));
        CHECK((s.tau1 < t.tau1_star2) == (t.tau2_star2 < s.T));
    }
}

TEST_CASE("multiplier values") {
    SUBCASE("coexistence set: lambda5 = e^{2.2}") {
        const auto& c = refsets::coexistence;
        const Multipliers m = multipliers(c.p, c.s);
        CHECK(m.lambda5 == doctest::Approx(std::exp(2.2)).epsilon(1e-12));
        CHECK(m.lambda6 == doctest::Approx(std::exp(3.8)).epsilon(1e-12));
        CHECK(m.lambda2 == doctest::Approx(std::exp(3.36)).epsilon(1e-12));
        CHECK(m.lambda4 == doctest::Approx(std::exp(1.44)).epsilon(1e-12));
    }
    SUBCASE("bistable set: lambda2 = e^{-0.6} < 1") {
        const auto& c = refsets::bistable;
        const Multipliers m = multipliers(c.p, c.s);
        CHECK(m.lambda2 == doctest::Approx(std::exp(-0.6)).epsilon(1e-12));
        CHECK(m.lambda4 == doctest::Approx(std::exp(-5.4)).epsilon(1e-12));
    }
    SUBCASE("reciprocal pairs") {
        std::mt19937 rng(59);
        for (int trial = 0; trial < 50; ++trial) {
            const Multipliers m = multipliers(draw_params(rng), draw_schedule(rng));
            CHECK(m.lambda1 * m.lambda5 == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(m.lambda3 * m.lambda6 == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
    SUBCASE("unit multipliers on the threshold") {
        const ModelParameters p{0.5, 0.5, 1.0, 0.2, 0.2, 0.8, 0.8};
        const Schedule s{4.0, 5.0, 10.0};  // u gain exponent is exactly 0
        const Multipliers m = multipliers(p, s);
        CHECK(m.lambda1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.lambda5 == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("multipliers agree with monodromy eigenvalues on the reference sets") {
    SUBCASE("at the origin") {
        const auto& c = refsets::coexistence;
        const Multipliers m = multipliers(c.p, c.s);
        const Monodromy dp = monodromy_at(State{0.0, 0.0}, c.p, c.s);
        CHECK(dp.m11 == doctest::Approx(m.lambda5).epsilon(1e-6));
        CHECK(dp.m22 == doctest::Approx(m.lambda6).epsilon(1e-6));
    }
    SUBCASE("at the u-only orbit of the bistable set") {
        const auto& c = refsets::bistable;
        const double x0 = *fixed_point(period_map(c.p, c.s, Species::U));
        const Multipliers m = multipliers(c.p, c.s);
        const Monodromy dp = monodromy_at(State{x0, 0.0}, c.p, c.s);
        CHECK(dp.m11 == doctest::Approx(m.lambda1).epsilon(1e-5));
        CHECK(dp.m22 == doctest::Approx(m.lambda2).epsilon(1e-5));
    }
}

TEST_CASE("regime classification on the reference sets") {
    CHECK(classify(refsets::collapse_long_dry.p, refsets::collapse_long_dry.s).region ==
          Region::I_Collapse);
    CHECK(classify(refsets::collapse_dry_u_grazed_v.p,
                   refsets::collapse_dry_u_grazed_v.s).region == Region::I_Collapse);
    CHECK(classify(refsets::collapse_grazed_u_dry_v.p,
                   refsets::collapse_grazed_u_dry_v.s).region == Region::I_Collapse);
    CHECK(classify(refsets::collapse_grazed_both.p,
                   refsets::collapse_grazed_both.s).region == Region::I_Collapse);
    CHECK(classify(refsets::u_wins.p, refsets::u_wins.s).region == Region::II_UWins);
    CHECK(classify(refsets::v_wins.p, refsets::v_wins.s).region == Region::III_VWins);
    CHECK(classify(refsets::coexistence.p, refsets::coexistence.s).region ==
          Region::IV_Coexist);
    CHECK(classify(refsets::bistable.p, refsets::bistable.s).region ==
          Region::VII_Bistable);
}

TEST_CASE("one-sided local stability yields the unresolved regions") {
    // Both species persist; only b1/b2 differ from the coexistence set.
    ModelParameters p = refsets::coexistence.p;
    const Schedule s = refsets::coexistence.s;
    p.b1 = 0.2;
    p.b2 = 2.0;  // lambda2 exponent 3.8 - 2*2.2 < 0, lambda4 exponent > 0
    CHECK(classify(p, s).region == Region::V_ULAS_Unresolved);
    p.b1 = 2.0;
    p.b2 = 0.2;
    CHECK(classify(p, s).region == Region::VI_VLAS_Unresolved);
}

TEST_CASE("zero deciding exponent classifies as Boundary") {
    const ModelParameters p{0.5, 0.5, 1.0, 0.2, 0.2, 0.8, 0.8};
    const Schedule s{4.0, 5.0, 10.0};
    const RegimeClassification rc = classify(p, s);
    CHECK(rc.region == Region::Boundary);
    CHECK(rc.notes.find("threshold") != std::string::npos);
}

TEST_CASE("condition ratios") {
    SUBCASE("coexistence window: lower < ratio < upper") {
        const auto& c = refsets::coexistence;
        const ConditionRatios cr = condition_ratios(c.p, c.s);
        REQUIRE(cr.ratio_defined);
        CHECK(cr.lower == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(cr.upper == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(cr.ratio == doctest::Approx(19.0 / 11.0).epsilon(1e-12));
        CHECK(cr.lower < cr.ratio);
        CHECK(cr.ratio < cr.upper);
    }
    SUBCASE("bistable window is inverted") {
        const auto& c = refsets::bistable;
        const ConditionRatios cr = condition_ratios(c.p, c.s);
        REQUIRE(cr.ratio_defined);
        CHECK(cr.lower == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(cr.upper == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(cr.upper < cr.ratio);
        CHECK(cr.ratio < cr.lower);
    }
    SUBCASE("symmetric species collapse the window to a point") {
        const ModelParameters p{0.5, 0.5, 1.0, 1.0, 1.0, 0.6, 0.6};
        const Schedule s{4.0, 7.0, 10.0};
        const ConditionRatios cr = condition_ratios(p, s);
        CHECK(cr.lower == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cr.upper == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("undefined exactly on the threshold") {
        ModelParameters p = refsets::coexistence.p;
        Schedule s = refsets::coexistence.s;
        s.tau2 = thresholds(p, s).tau2_star;
        const ConditionRatios cr = condition_ratios(p, s);
        CHECK_FALSE(cr.ratio_defined);
        CHECK(std::isnan(cr.ratio));
    }
}

TEST_CASE("exponent test agrees with the ratio test where the latter applies") {
    std::mt19937 rng(61);
    int both = 0;
    for (int trial = 0; trial < 400 && both < 60; ++trial) {
        const ModelParameters p = draw_params(rng);
        const Schedule s = draw_schedule(rng);
        const StabilityExponents e = stability_exponents(p, s);
        if (e.u_gain <= kExponentTol || e.v_gain <= kExponentTol) continue;
        ++both;
        const ConditionRatios cr = condition_ratios(p, s);
        REQUIRE(cr.ratio_defined);
        CHECK((e.lambda2 < 0.0) == (cr.ratio < cr.lower));
        // the v-side criterion uses the reciprocal ratio, so the comparison flips
        CHECK((e.lambda4 < 0.0) == (cr.ratio > cr.upper));
    }
    CHECK(both >= 30);
}

TEST_CASE("every draw receives exactly one region label, consistent with b1*b2") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        const ModelParameters p = draw_params(rng);
        const Schedule s = draw_schedule(rng);
        const RegimeClassification rc = classify(p, s);
        CHECK(region_name(rc.region) != "?");
        if (rc.region == Region::IV_Coexist) CHECK(p.b1 * p.b2 < 1.0);
        if (rc.region == Region::VII_Bistable) CHECK(p.b1 * p.b2 > 1.0);
        CHECK_FALSE(rc.notes.empty());
    }
}

TEST_CASE("region names and codes") {
    CHECK(region_name(Region::II_UWins) == "II_UWins");
    CHECK(region_code(Region::Boundary) == 0);
    CHECK(region_code(Region::I_Collapse) == 1);
    CHECK(region_code(Region::VII_Bistable) == 7);
}
