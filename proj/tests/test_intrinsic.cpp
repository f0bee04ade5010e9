// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rsv/intrinsic.hpp"
#include "test_util.hpp"

using namespace rsv;
using namespace rsv::test;

TEST_CASE("flat metric has vanishing connection and curvature") {
    const MetricFamily fam = euclidean_metric(3);
    const MetricData m = fam.at(ChartPoint{{0.2, -0.4, 1.0}});
    const ChristoffelData c = christoffel(m);
    for (double v : c.gamma.a) CHECK(v == 0.0);
    const CurvatureData cur = curvature(m, c);
    for (double v : cur.riemann.a) CHECK(v == 0.0);
    for (double v : cur.ricci.a) CHECK(v == 0.0);
    CHECK(cur.scalar == 0.0);
    CHECK(sectional(m, cur, 0, 1) == 0.0);
}

TEST_CASE("round sphere connection entry at a probe latitude") {
    const MetricFamily fam = round_sphere_metric(3);
    const MetricData m = fam.at(ChartPoint{{M_PI / 6.0, 0.3, -0.2}});
    const ChristoffelData c = christoffel(m);
    // Gamma^{x1}_{x2 x2} = sin(2 x1)/2 = sqrt(3)/4 at x1 = pi/6
    CHECK(c.gamma.at(0, 1, 1) == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
    CHECK(c.gamma.at(0, 1, 1) == doctest::Approx(0.43301).epsilon(1e-4));
    // matches the difference oracle
    const Ten3 fd = fd_christoffel(fam, ChartPoint{{M_PI / 6.0, 0.3, -0.2}}, 1e-5);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(std::fabs(c.gamma.at(k, i, j) - fd.at(k, i, j)) <= 1e-8);
}

TEST_CASE("warped shell connection entry") {
    // P == 1, f(s) = s: Gamma^s_{y2 y2} = -f f'/P^2 = -s
    const MetricFamily fam = shell_metric(
        3, [](const std::vector<Jet>& u) { return Jet::constant(static_cast<int>(u.size()), 1.0); },
        [](const Jet& s) { return s; }, "warped-shell");
    const MetricData m = fam.at(ChartPoint{{2.0, 0.1, 0.4}});
    const ChristoffelData c = christoffel(m);
    CHECK(c.gamma.at(0, 1, 1) == doctest::Approx(-2.0).epsilon(1e-12));
    // Gamma^{y_b}_{s y_b} = f'/f = 1/s
    CHECK(c.gamma.at(1, 0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("warped shell sectional curvatures at the unit-curvature profile") {
    // P == 1, f = sin s: both plane families have curvature 1 (n = 3)
    const MetricFamily fam = shell_metric(
        3, [](const std::vector<Jet>& u) { return Jet::constant(static_cast<int>(u.size()), 1.0); },
        [](const Jet& s) { return sin(s); }, "unit-shell");
    const MetricData m = fam.at(ChartPoint{{1.0, 0.2, -0.3}});
    const ChristoffelData c = christoffel(m);
    const CurvatureData cur = curvature(m, c);
    CHECK(sectional(m, cur, 0, 1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sectional(m, cur, 0, 2) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sectional(m, cur, 1, 2) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("unit sphere Ricci equals the metric") {
    const MetricFamily fam = round_sphere_metric(2);
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const ChartPoint p{{rng.uniform(-1.2, 1.2), rng.uniform(-1.5, 1.5)}};
        const MetricData m = fam.at(p);
        const ChristoffelData c = christoffel(m);
        const CurvatureData cur = curvature(m, c);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(std::fabs(cur.ricci.at(i, j) - m.g.at(i, j)) <= 1e-8);
        // independent stencil oracle for the same quantity
        const Mat oracle = fd_ricci(fam, p, 1e-4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(std::fabs(cur.ricci.at(i, j) - oracle.at(i, j)) <= 1e-5);
        CHECK(cur.scalar == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(sectional(m, cur, 0, 1) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("curvature symmetries and Bianchi identity") {
    const MetricFamily fam = shell_metric(
        3,
        [](const std::vector<Jet>& u) {
            return 2.0 + sin(u[1]) * (0.5 + 0.25 * sin(u[0]));
        },
        [](const Jet& s) { return 1.5 + 0.5 * sin(s); }, "generic-shell");
    SplitMix64 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const ChartPoint p{{rng.uniform(0.5, 1.5), rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)}};
        const MetricData m = fam.at(p);
        const ChristoffelData c = christoffel(m);
        const CurvatureData cur = curvature(m, c);

        double scale = 0.0;
        for (double v : cur.riemann.a) scale = std::max(scale, std::fabs(v));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        const double r = cur.lowered(m.g, i, j, k, l);
                        CHECK(std::fabs(r + cur.lowered(m.g, j, i, k, l)) <= 1e-8 * (1 + scale));
                        CHECK(std::fabs(r + cur.lowered(m.g, i, j, l, k)) <= 1e-8 * (1 + scale));
                        CHECK(std::fabs(r - cur.lowered(m.g, k, l, i, j)) <= 1e-8 * (1 + scale));
                    }
        CHECK(bianchi_residual(m, cur) <= 1e-8);
        CHECK(metric_compatibility_residual(m, c) <= 1e-9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(cur.ricci.at(i, j) == cur.ricci.at(j, i));
    }
}

TEST_CASE("Lie derivative of the metric") {
    SUBCASE("zero field") {
        const MetricData m = round_sphere_metric(2).at(ChartPoint{{0.4, 0.3}});
        const Mat lie = lie_derivative_metric(m, {0.0, 0.0}, Mat(2, 2));
        for (double v : lie.a) CHECK(v == 0.0);
    }
    SUBCASE("position field on flat space doubles the metric") {
        const MetricData m = euclidean_metric(3).at(ChartPoint{{0.3, -1.0, 0.7}});
        Mat dV(3, 3);
        for (int i = 0; i < 3; ++i) dV.at(i, i) = 1.0;
        const Mat lie = lie_derivative_metric(m, {0.3, -1.0, 0.7}, dV);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(lie.at(i, j) == doctest::Approx(2.0 * m.g.at(i, j)).epsilon(1e-14));
    }
    SUBCASE("output is exactly symmetric") {
        const MetricFamily fam = round_sphere_metric(3);
        const MetricData m = fam.at(ChartPoint{{0.2, 0.5, -0.4}});
        Mat dV(3, 3);
        SplitMix64 rng(3);
        std::vector<double> V(3);
        for (int i = 0; i < 3; ++i) {
            V[static_cast<std::size_t>(i)] = rng.uniform(-1, 1);
            for (int j = 0; j < 3; ++j) dV.at(i, j) = rng.uniform(-1, 1);
        }
        const Mat lie = lie_derivative_metric(m, V, dV);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(lie.at(i, j) == lie.at(j, i));
    }
}

TEST_CASE("scalar calculus on chart fields") {
    SUBCASE("constant field") {
        const MetricData m = round_sphere_metric(2).at(ChartPoint{{0.4, 0.3}});
        const ChristoffelData c = christoffel(m);
        ScalarFieldJet f;
        f.value = 3.0;
        f.grad_coords = {0.0, 0.0};
        f.hess_coords = Mat(2, 2);
        const ScalarCalculus sc = scalar_calculus(m, c, f);
        for (double v : sc.gradient) CHECK(v == 0.0);
        for (double v : sc.hessian.a) CHECK(v == 0.0);
    }
    SUBCASE("half square norm on flat space has unit Hessian") {
        const ChartPoint p{{1.2, -0.3}};
        const MetricData m = euclidean_metric(2).at(p);
        const ChristoffelData c = christoffel(m);
        const Jet j = lift_scalar(
            [](const std::vector<Jet>& u) {
                return std::vector<Jet>{0.5 * (u[0] * u[0] + u[1] * u[1])};
            },
            p);
        const ScalarCalculus sc = scalar_calculus(m, c, ScalarFieldJet::from_jet(j));
        CHECK(sc.gradient[0] == doctest::Approx(1.2));
        CHECK(sc.gradient[1] == doctest::Approx(-0.3));
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                CHECK(sc.hessian.at(i, k) == doctest::Approx(m.g.at(i, k)).epsilon(1e-14));
    }
    SUBCASE("closing harmonic on the circle") {
        // G = cos x1 on the one-dimensional round chart: H^G(dx1,dx1) = -cos x1 = -G
        const MetricFamily fam = round_sphere_metric(1);
        SplitMix64 rng(5);
        for (int trial = 0; trial < 5; ++trial) {
            const ChartPoint p{{rng.uniform(-1.2, 1.2)}};
            const MetricData m = fam.at(p);
            const ChristoffelData c = christoffel(m);
            const Jet j = lift_scalar(
                [](const std::vector<Jet>& u) { return std::vector<Jet>{cos(u[0])}; }, p);
            const ScalarCalculus sc = scalar_calculus(m, c, ScalarFieldJet::from_jet(j));
            const double G = std::cos(p.coords[0]);
            CHECK(sc.hessian.at(0, 0) == doctest::Approx(-G).epsilon(1e-12));
        }
    }
    SUBCASE("first eigenfunctions on the sphere satisfy H^G = -G g") {
        const MetricFamily fam = round_sphere_metric(2);
        SplitMix64 rng(5);
        auto harmonic_sin = [](const std::vector<Jet>& u) {
            return std::vector<Jet>{sin(u[0])};
        };
        auto harmonic_closing = [](const std::vector<Jet>& u) {
            return std::vector<Jet>{cos(u[0]) * cos(u[1])};
        };
        for (int trial = 0; trial < 5; ++trial) {
            const ChartPoint p{{rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)}};
            const MetricData m = fam.at(p);
            const ChristoffelData c = christoffel(m);
            for (const JetMapFn& fn : {JetMapFn(harmonic_sin), JetMapFn(harmonic_closing)}) {
                const Jet j = lift_scalar(fn, p);
                const ScalarCalculus sc = scalar_calculus(m, c, ScalarFieldJet::from_jet(j));
                for (int i = 0; i < 2; ++i)
                    for (int k = 0; k < 2; ++k)
                        CHECK(std::fabs(sc.hessian.at(i, k) + j.val * m.g.at(i, k)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("guards raise typed errors") {
    SUBCASE("singular metric") {
        MetricFamily fam = diagonal_metric(2, "degenerate", [](const std::vector<Jet>& u, int i) {
            return i == 0 ? Jet::constant(2, 1.0) : Jet::constant(2, 1e-12);
        });
        const MetricData m = fam.at(ChartPoint{{0.0, 0.0}});
        CHECK_THROWS_AS(christoffel(m), Error);
        try {
            christoffel(m);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SingularMetric);
        }
    }
    SUBCASE("degenerate plane") {
        const MetricData m = euclidean_metric(2).at(ChartPoint{{0.0, 0.0}});
        const ChristoffelData c = christoffel(m);
        const CurvatureData cur = curvature(m, c);
        CHECK_THROWS_AS(sectional(m, cur, 0, 0), Error);
    }
}
