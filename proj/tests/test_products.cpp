// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rsv/products.hpp"
#include "rsv/soliton.hpp"

using namespace rsv;

namespace {

JetMapFn flat_block(int dim, int n) {
    return [dim, n](const std::vector<Jet>&) {
        std::vector<Jet> out(static_cast<std::size_t>(dim) * dim, Jet::constant(n, 0.0));
        for (int i = 0; i < dim; ++i) out[static_cast<std::size_t>(i) * dim + i] = Jet::constant(n, 1.0);
        return out;
    };
}

JetMapFn const_scaling(int n, double v) {
    return [n, v](const std::vector<Jet>&) { return std::vector<Jet>{Jet::constant(n, v)}; };
}

ProductSpec flat_product(int p, int q) {
    ProductSpec s;
    s.p = p;
    s.q = q;
    s.label = "flat-product";
    const int n = p + q;
    for (int i = 0; i < n; ++i) s.domain.intervals.push_back({-3.0, 3.0});
    s.g1_components = flat_block(p, n);
    s.g2_components = flat_block(q, n);
    s.f1 = const_scaling(n, 1.0);
    s.f2 = const_scaling(n, 1.0);
    return s;
}

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

} // namespace

TEST_CASE("direct product block metric") {
    const ProductSpec s = flat_product(2, 2);
    const MetricData m = build_product_metric(s, ChartPoint{{0.1, -0.5, 1.1, 0.3}});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(m.g.at(i, j) == (i == j ? 1.0 : 0.0));
    for (double v : m.dg.a) CHECK(v == 0.0);
}

TEST_CASE("warped plane metric and leaf form") {
    // du^2 + e^{2u} dv^2
    ProductSpec s = flat_product(1, 1);
    s.label = "warped-plane";
    s.f2 = [](const std::vector<Jet>& u) { return std::vector<Jet>{exp(u[0])}; };

    const ChartPoint p{{0.0, 0.7}};
    const MetricData m = build_product_metric(s, p);
    CHECK(m.g.at(0, 0) == doctest::Approx(1.0));
    CHECK(m.g.at(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.g.at(0, 1) == 0.0);

    const FoliationData f = leaf_analysis(s, p, 2);
    // the single normal component of leaf_h(dv,dv) is Gamma^u_{vv} = -e^{2u}
    CHECK(f.leaf_h.at(0, 0, 0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(f.umbilic_residual <= 1e-12);
}

TEST_CASE("mixed blocks are exactly zero") {
    SplitMix64 rng(17);
    ProductSpec s = seeded_product_spec(ProductKind::DoublyTwisted, rng);
    const MetricData m = build_product_metric(s, ChartPoint{{0.3, -0.2, 0.8, -1.1}});
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j) {
            CHECK(m.g.at(i, j) == 0.0);
            for (int k = 0; k < 4; ++k) CHECK(m.dg.at(k, i, j) == 0.0);
        }
}

TEST_CASE("totally geodesic leaves for unit scaling") {
    ProductSpec s = flat_product(2, 2);
    const FoliationData f = leaf_analysis(s, ChartPoint{{0.2, 0.4, -0.3, 0.9}}, 2);
    CHECK(f.geodesic_residual <= 1e-14);
}

TEST_CASE("classification of the polar plane chart") {
    // ds^2 + s^2 dtheta^2 as a product of the ray and the circle
    ProductSpec s = flat_product(1, 1);
    s.label = "polar-plane";
    s.domain.intervals[0] = {0.2, 3.0};
    s.domain.intervals[1] = {-3.0, 3.0};
    s.f2 = [](const std::vector<Jet>& u) { return std::vector<Jet>{u[0]}; };
    const auto grid = tensor_grid({{0.4, 2.0}, {-1.0, 1.0}}, 3);
    CHECK(classify_product(s, grid) == ProductKind::Warped);
}

TEST_CASE("non separable twist is twisted but not warped") {
    SplitMix64 rng(23);
    const ProductSpec s = seeded_product_spec(ProductKind::Twisted, rng);
    const auto grid = tensor_grid({{-0.8, 0.8}, {-0.8, 0.8}, {-0.8, 0.8}, {-0.8, 0.8}}, 2);
    CHECK(classify_product(s, grid) == ProductKind::Twisted);

    // sphericity residual strictly positive on factor 2
    double par = 0.0;
    for (const ChartPoint& p : grid)
        par = std::max(par, leaf_analysis(s, p, 2).h_parallel_residual);
    CHECK(par > 1e-4);
}

TEST_CASE("seeded classes round trip through the classifier") {
    const auto grid = tensor_grid({{-0.8, 0.8}, {-0.8, 0.8}, {-0.8, 0.8}, {-0.8, 0.8}}, 2);
    const ProductKind kinds[] = {ProductKind::Direct, ProductKind::Warped, ProductKind::Twisted,
                                 ProductKind::DoublyWarped, ProductKind::TwistedWarped,
                                 ProductKind::WarpedTwisted, ProductKind::DoublyTwisted};
    SplitMix64 rng(4242);
    for (ProductKind want : kinds)
        for (int draw = 0; draw < 10; ++draw) {
            const ProductSpec s = seeded_product_spec(want, rng);
            CHECK(classify_product(s, grid) == want);
        }
}

TEST_CASE("eigenfunction family probe") {
    const auto grid = tensor_grid({{-1.0, 1.0}, {-1.0, 1.0}}, 4);

    SUBCASE("sine member on the circle chart") {
        const GFamily fam(1, {0.0, 1.0});
        const auto grid1 = tensor_grid({{-1.2, 1.2}}, 8);
        const GProbeResult r = g_family_probe(fam, grid1);
        CHECK(r.hess_residual <= 1e-10);
        // |grad G|^2 = cos^2 x against c(2G - c) = 0
        CHECK(r.eikonal_min > 0.0);
        double expect_min = 1e300;
        for (const ChartPoint& p : grid1) {
            const double c2 = std::cos(p.coords[0]) * std::cos(p.coords[0]);
            expect_min = std::min(expect_min, c2);
        }
        CHECK(r.eikonal_min == doctest::Approx(expect_min).epsilon(1e-10));
    }
    SUBCASE("constant member fails the eikonal equation by its own square") {
        const GFamily fam(2, {1.0, 0.0, 0.0, 0.0});
        const GProbeResult r = g_family_probe(fam, grid);
        CHECK(r.hess_residual <= 1e-10);
        CHECK(r.eikonal_min == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("fifty random unit tuples never satisfy the eikonal equation") {
        SplitMix64 rng(99);
        for (int t = 0; t < 50; ++t) {
            std::vector<double> cs(4);
            double norm = 0.0;
            for (double& v : cs) {
                v = rng.uniform(-1.0, 1.0);
                norm += v * v;
            }
            for (double& v : cs) v /= std::sqrt(norm);
            const GProbeResult r = g_family_probe(GFamily(2, cs), grid);
            CHECK(r.hess_residual <= 1e-9);
            CHECK(r.eikonal_min > 0.0);
        }
    }
    SUBCASE("all-zero tuple is rejected") {
        CHECK_THROWS_AS(GFamily(2, {0.0, 0.0, 0.0, 0.0}), Error);
    }
}

TEST_CASE("sphere sweep fixture") {
    const SweepFixture fx = sweep_fixture(
        3, [](const Jet& s) { return Jet::constant(s.nvars(), 2.0) + 0.0 * s; },
        [](double) { return 2.0; });

    SUBCASE("induced metric matches the closed block form") {
        SplitMix64 rng(7);
        for (int t = 0; t < 10; ++t) {
            const ChartPoint p{{rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5),
                                rng.uniform(-0.5, 0.5)}};
            const MetricData mi = induced_metric(lift_immersion(fx.immersion, p));
            const MetricData mc = fx.closed_metric.at(p);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK(std::fabs(mi.g.at(i, j) - mc.g.at(i, j)) <= 1e-10);
        }
    }
    SUBCASE("block values at the equatorial section") {
        const ChartPoint p{{0.7, 0.0, 0.0}};
        const MetricData mi = induced_metric(lift_immersion(fx.immersion, p));
        CHECK(mi.g.at(0, 0) == doctest::Approx(9.0).epsilon(1e-12));
        CHECK(mi.g.at(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mi.g.at(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("fiber Ricci value at the equatorial section") {
        const ChartPoint p{{0.4, 0.0, 0.0}};
        const MetricData m = fx.closed_metric.at(p);
        const ChristoffelData c = christoffel(m);
        const CurvatureData cur = curvature(m, c);
        CHECK(cur.ricci.at(1, 1) == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
    }
    SUBCASE("sweep is not a soliton") {
        const auto grid = tensor_grid({{-1.0, 1.0}, {-0.45, 0.45}, {-0.45, 0.45}}, 3);
        std::vector<SolitonSample> samples;
        for (const ChartPoint& p : grid) samples.push_back(sample(fx.immersion, p));
        const SolitonReport r = fit_lambda(samples);
        CHECK(r.verdict == Verdict::NotSoliton);
        CHECK(r.residual_max > 1e-2);
        CHECK(r.identity_max <= 1e-7);
    }
}

TEST_CASE("fixture tables stay under tolerance") {
    const Tolerances tol;
    const auto rows = run_fixture_tables(tol, 42);
    REQUIRE(rows.size() == 13);
    for (const FixtureResult& r : rows) {
        INFO(r.id, " disc=", r.max_discrepancy);
        CHECK(r.pass);
        if (!r.informational) CHECK(r.max_discrepancy <= tol.fixture_tol);
    }
}

TEST_CASE("scaling guard raises NonPositiveScaling") {
    ProductSpec s = flat_product(1, 1);
    s.f2 = [](const std::vector<Jet>& u) { return std::vector<Jet>{u[0]}; };
    CHECK_THROWS_AS(build_product_metric(s, ChartPoint{{-1.0, 0.0}}), Error);
    try {
        build_product_metric(s, ChartPoint{{-1.0, 0.0}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositiveScaling);
    }
}
