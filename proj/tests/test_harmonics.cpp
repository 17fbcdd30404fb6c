#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rayspace/harmonics.hpp"
#include "rayspace/rng.hpp"

using namespace rayspace;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("harmonics") {

TEST_CASE("psi_1_1 literal values") {
    CHECK(psi_1_1({0.0, 0.0}, 1.0) == Complex{0.0, 0.0});
    CHECK(psi_1_1({0.0, 0.0}, 7.3) == Complex{0.0, 0.0});

    const double c = 3.0 / (8.0 * kPi);
    CHECK(psi_1_1({1.0, 0.0}, 1.0) == Complex{-c, 0.0});
    CHECK(psi_1_m1({1.0, 0.0}, 1.0) == Complex{c, 0.0});
}

TEST_CASE("the pair is an exact conjugate pair") {
    Rng rng(401);
    for (int trial = 0; trial < 200; ++trial) {
        const PlanePoint p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const double r = rng.uniform(0.1, 10.0);
        CHECK(psi_1_m1(p, r) == -std::conj(psi_1_1(p, r)));
    }
}

TEST_CASE("nonpositive radial coordinate is rejected") {
    CHECK_THROWS_AS((void)psi_1_1({1.0, 0.0}, 0.0), DomainError);
    CHECK_THROWS_AS((void)psi_1_1({1.0, 0.0}, -2.0), DomainError);
    CHECK_THROWS_AS((void)psi_1_m1({1.0, 0.0}, 0.0), DomainError);
    CHECK_THROWS_AS(validate(LocusSpec{-1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate(LocusSpec{1.0, 1.0, -0.5}), DomainError);
}

TEST_CASE("level-set radius") {
    const double c = default_harmonic_coefficient();
    CHECK(level_set_radius({c, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(level_set_radius({c, 2.0, c}) == doctest::Approx(2.0).epsilon(1e-15));
    // R scales as k*r/c.
    CHECK(level_set_radius({2.0, 3.0, 0.5}) ==
          doctest::Approx(12.0).epsilon(1e-15));
}

TEST_CASE("the level set is exactly the computed circle") {
    for (const LocusSpec spec :
         {LocusSpec{0.25, 1.0}, LocusSpec{1.0, 2.0}, LocusSpec{0.7, 0.3, 0.9}}) {
        const double radius = level_set_radius(spec);
        const double k_sq = spec.k * spec.k;
        for (int i = 0; i < 1000; ++i) {
            const double theta = 2.0 * kPi * i / 1000.0;
            const PlanePoint p{radius * std::cos(theta),
                               radius * std::sin(theta)};
            const Complex psi = psi_1_1(p, spec.r, spec.coefficient());
            CHECK(std::abs(std::norm(psi) - k_sq) <= 1e-12);
        }
    }
}

TEST_CASE("|psi|^2 depends only on the radius") {
    Rng rng(402);
    for (int trial = 0; trial < 200; ++trial) {
        const double rho = rng.uniform(0.1, 4.0);
        const double t1 = rng.uniform(0.0, 2.0 * kPi);
        const double t2 = rng.uniform(0.0, 2.0 * kPi);
        const double r = rng.uniform(0.5, 2.0);
        const double m1 = std::norm(
            psi_1_1({rho * std::cos(t1), rho * std::sin(t1)}, r));
        const double m2 = std::norm(
            psi_1_1({rho * std::cos(t2), rho * std::sin(t2)}, r));
        CHECK(std::abs(m1 - m2) <= 1e-15 * std::max(1.0, m1));
    }
}

TEST_CASE("unit locus matches the plain four-chart atlas") {
    const LocusSpec spec{default_harmonic_coefficient(), 1.0};
    const Atlas locus = locus_as_manifold(spec);
    const Atlas plain = four_chart_atlas();
    REQUIRE(locus.charts().size() == plain.charts().size());
    for (std::size_t i = 0; i < locus.charts().size(); ++i) {
        CHECK(locus.charts()[i].name() == plain.charts()[i].name());
        CHECK(std::abs(locus.charts()[i].codomain().hi -
                       plain.charts()[i].codomain().hi) <= 1e-15);
    }
}

TEST_CASE("the locus atlas passes the chart and coverage checks") {
    const LocusSpec spec{1.0, 2.0}; // R = 2/c, around 16.76
    const Atlas locus = locus_as_manifold(spec);
    for (const auto& chart : locus.charts()) {
        const auto report = verify_homeomorphism(chart, 1000);
        // Round trips pick up a few ulps of the radius scale.
        CHECK(report.max_roundtrip_error <= 1e-12 * locus.radius());
    }
    CHECK(verify_coverage(locus, 100000).uncovered_points.empty());

    const auto top = locate(locus, {0.0, locus.radius()});
    REQUIRE(top.size() == 1);
    CHECK(top[0].first == "U1");
    CHECK(top[0].second == 0.0);
}

TEST_CASE("locus radius 2.5 round trips") {
    const Atlas locus = four_chart_atlas(2.5);
    for (const auto& chart : locus.charts()) {
        CHECK(verify_homeomorphism(chart, 1000).max_roundtrip_error <= 1e-12);
    }
}

} // TEST_SUITE
