// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rsv/immersions.hpp"
#include "rsv/soliton.hpp"

using namespace rsv;

namespace {

std::vector<ChartPoint> tensor_grid(const std::vector<std::pair<double, double>>& box,
                                    int per_axis) {
    std::vector<ChartPoint> pts{ChartPoint{}};
    for (const auto& [lo, hi] : box) {
        std::vector<ChartPoint> next;
        for (const ChartPoint& p : pts)
            for (int i = 0; i < per_axis; ++i) {
                ChartPoint q = p;
                q.coords.push_back(lo + (hi - lo) * (i + 0.5) / per_axis);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    return pts;
}

std::vector<SolitonSample> sample_grid(const MapSpec& spec,
                                       const std::vector<ChartPoint>& pts) {
    std::vector<SolitonSample> out;
    out.reserve(pts.size());
    for (const ChartPoint& p : pts) out.push_back(sample(spec, p));
    return out;
}

} // namespace

TEST_CASE("hyperplane sample is the trivial soliton at lambda 1") {
    const SolitonSample s = sample(hyperplane_immersion(2), ChartPoint{{0.7, -0.3}});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(s.lie_half.at(i, j) == doctest::Approx(s.g.at(i, j)).epsilon(1e-12));
            CHECK(std::fabs(s.ricci.at(i, j)) <= 1e-14);
            CHECK(std::fabs(s.h_xperp.at(i, j)) <= 1e-14);
        }
    for (double l : s.lambda_local) CHECK(l == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.identity_gap <= 1e-12);
}

TEST_CASE("hypersphere of radius two samples at lambda one quarter") {
    const SolitonSample s = sample(hypersphere_immersion(2, 2.0), ChartPoint{{0.4, -0.8}});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(std::fabs(s.lie_half.at(i, j)) <= 1e-10);
            CHECK(s.ricci.at(i, j) == doctest::Approx(0.25 * s.g.at(i, j)).epsilon(1e-10));
        }
    for (double l : s.lambda_local) CHECK(l == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("spherical hypercylinder samples at lambda one") {
    // S^2(1) x E^1 in E^4
    const SolitonSample s =
        sample(hypercylinder_immersion(3, 2, 1.0), ChartPoint{{0.3, -0.5, 1.2}});
    for (double l : s.lambda_local) CHECK(l == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s.identity_gap <= 1e-10);
}

TEST_CASE("concurrent identity holds on random graphs") {
    SplitMix64 rng(101);
    const MapSpec spec = graph_immersion(2, [](const std::vector<Jet>& u) {
        return std::vector<Jet>{sin(u[0]) * cos(u[1]) + u[0] * u[1]};
    });
    for (int trial = 0; trial < 50; ++trial) {
        const ChartPoint p{{rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)}};
        CHECK(identity_check(spec, p) <= 1e-7);
    }
}

TEST_CASE("fit over the soliton hypercylinder certifies lambda one") {
    // S^2(1) x E^2 in E^5
    const MapSpec spec = hypercylinder_immersion(4, 2, 1.0);
    const auto pts = tensor_grid({{-0.6, 0.6}, {-0.6, 0.6}, {-1.0, 1.0}, {-1.0, 1.0}}, 3);
    const SolitonReport r = fit_lambda(sample_grid(spec, pts));
    CHECK(r.lambda_star == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.residual_max < 1e-6);
    CHECK(r.verdict == Verdict::Soliton);
    CHECK(r.classification == Classification::Shrinking);
}

TEST_CASE("rotational family rejects with a large best-lambda residual") {
    const MapSpec spec =
        rotational_family_immersion(RotationalFamily::HyperbolicProfile, 3, 1.0, 0.0);
    const auto pts = tensor_grid({{0.1, 1.5}, {-0.5, 0.5}, {-0.5, 0.5}}, 3);
    const SolitonReport r = fit_lambda(sample_grid(spec, pts));
    CHECK(r.residual_max > 1e-2);
    CHECK(r.verdict == Verdict::NotSoliton);
    CHECK(r.identity_max <= 1e-7);
}

TEST_CASE("sphere grid degenerates to the pointwise constant") {
    const MapSpec spec = hypersphere_immersion(2, 2.0);
    const auto pts = tensor_grid({{-0.5, 0.5}, {-0.5, 0.5}}, 2);
    const SolitonReport r = fit_lambda(sample_grid(spec, pts));
    CHECK(r.lambda_star == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.verdict == Verdict::Soliton);
}

TEST_CASE("principal curvature roots at certified solitons") {
    SUBCASE("hypercylinder with two clusters") {
        const MapSpec spec = hypercylinder_immersion(3, 2, 1.0);
        const auto pts = tensor_grid({{-0.5, 0.5}, {-0.5, 0.5}, {-1.0, 1.0}}, 3);
        const auto samples = sample_grid(spec, pts);
        SolitonReport r = fit_lambda(samples);
        REQUIRE(r.verdict == Verdict::Soliton);
        prop_principal_roots(r, samples);
        CHECK(r.principal_ok);
        CHECK(r.principal_max_clusters == 2);
        CHECK(r.principal_root_err <= 1e-6);
        CHECK(r.principal_product_err <= 1e-6);
    }
    SUBCASE("umbilic hypersphere pairs the cluster with the spare root") {
        const MapSpec spec = hypersphere_immersion(3, std::sqrt(2.0));
        const auto pts = tensor_grid({{-0.5, 0.5}, {-0.5, 0.5}, {-0.5, 0.5}}, 2);
        const auto samples = sample_grid(spec, pts);
        SolitonReport r = fit_lambda(samples);
        REQUIRE(r.verdict == Verdict::Soliton);
        CHECK(r.lambda_star == doctest::Approx(1.0).epsilon(1e-10));
        prop_principal_roots(r, samples);
        CHECK(r.principal_ok);
        CHECK(r.principal_max_clusters == 1);
    }
    SUBCASE("hyperplane double root at zero") {
        const MapSpec spec = hyperplane_immersion(2);
        const auto pts = tensor_grid({{-1.0, 1.0}, {-1.0, 1.0}}, 2);
        const auto samples = sample_grid(spec, pts);
        SolitonReport r = fit_lambda(samples);
        REQUIRE(r.verdict == Verdict::Soliton);
        prop_principal_roots(r, samples);
        CHECK(r.principal_ok);
        CHECK(r.principal_product_err <= 1e-10);
    }
}

TEST_CASE("rotational closed forms and the elected sign convention") {
    SUBCASE("hyperbolic profile values") {
        CHECK(rotational_closed_form(RotationalFamily::HyperbolicProfile, 1.0, 0.0, 0.0) ==
              doctest::Approx(-1.0));
        CHECK(rotational_closed_form(RotationalFamily::HyperbolicProfile, 1.0, 0.0, 1.0) ==
              doctest::Approx(-1.0 / 9.0));
        const RotationalCrosscheck cc = formula_crosscheck_rotational(
            RotationalFamily::HyperbolicProfile, 1.0, 0.0, {0.0, 0.25, 0.5, 0.75, 1.0});
        CHECK(cc.best_err <= 1e-6);
        CHECK(cc.best_n == 3);
        CHECK(cc.best_sign == +1);
    }
    SUBCASE("circular profile is constant exactly when centered") {
        CHECK(rotational_closed_form(RotationalFamily::CircularProfile, 2.0, 0.0, 0.3) ==
              doctest::Approx(-0.5));
        CHECK(rotational_closed_form(RotationalFamily::CircularProfile, 2.0, 0.0, 1.4) ==
              doctest::Approx(-0.5));
        CHECK(rotational_closed_form(RotationalFamily::CircularProfile, 2.0, 1.0, 0.0) ==
              doctest::Approx(-0.25));
        CHECK(rotational_closed_form(RotationalFamily::CircularProfile, 2.0, 1.0, 1.0) ==
              doctest::Approx(-0.5));
        const RotationalCrosscheck cc = formula_crosscheck_rotational(
            RotationalFamily::CircularProfile, 2.0, 1.0, {0.0, 0.3, 0.6, 1.0});
        CHECK(cc.best_err <= 1e-6);
        CHECK(cc.best_n == 3);
        CHECK(cc.best_sign == +1);
    }
}

TEST_CASE("circular hypercylinder probe splits the direction requirements") {
    // S^1(1) x E^2 in E^4: the circle direction wants lambda 0, the flat
    // directions want lambda 1; no constant fits.
    const MapSpec spec = hypercylinder_immersion(3, 1, 1.0);
    const auto pts = tensor_grid({{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}, 3);
    const auto samples = sample_grid(spec, pts);
    const SolitonReport r = fit_lambda(samples);
    CHECK(r.verdict == Verdict::NotSoliton);
    CHECK(r.identity_max <= 1e-8);
    CHECK(r.direction_lambda_min[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.direction_lambda_max[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.direction_lambda_min[2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.direction_lambda_max[2] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("hypercylinder away from the soliton radius rejects") {
    // S^2(2) x E^1: sphere directions want 1/4, flat direction wants 1
    const MapSpec spec = hypercylinder_immersion(3, 2, 2.0);
    const auto pts = tensor_grid({{-0.5, 0.5}, {-0.5, 0.5}, {-1.0, 1.0}}, 3);
    const SolitonReport r = fit_lambda(sample_grid(spec, pts));
    CHECK(r.verdict == Verdict::NotSoliton);
    CHECK(r.residual_max > 1e-2);
}

TEST_CASE("residuals are chart invariant") {
    // Same rotational surface in the native chart and a reparametrized one;
    // matched geometric points, compared in orthonormal frames.
    const MapSpec base =
        rotational_family_immersion(RotationalFamily::HyperbolicProfile, 2, 1.0, 0.0);
    MapSpec repar = base;
    repar.label = "rotational-repar";
    repar.domain.intervals[0] = {0.05, 1.2};
    repar.eval = [inner = base.eval](const std::vector<Jet>& u) {
        std::vector<Jet> v = u;
        v[0] = u[0] * (1.0 + u[0] * u[0] / 10.0);
        return inner(v);
    };

    std::vector<ChartPoint> pts_b = tensor_grid({{0.1, 1.1}, {-0.5, 0.5}}, 3);
    std::vector<ChartPoint> pts_a;
    for (const ChartPoint& p : pts_b) {
        ChartPoint q = p;
        q.coords[0] = p.coords[0] * (1.0 + p.coords[0] * p.coords[0] / 10.0);
        pts_a.push_back(q);
    }
    const SolitonReport ra = fit_lambda(sample_grid(base, pts_a));
    const SolitonReport rb = fit_lambda(sample_grid(repar, pts_b));
    CHECK(std::fabs(ra.lambda_star - rb.lambda_star) <= 1e-8);
    CHECK(std::fabs(ra.residual_max - rb.residual_max) <= 1e-8);
}

TEST_CASE("fit requires a grid") {
    CHECK_THROWS_AS(fit_lambda({}), Error);
}
