// SPDX-License-Identifier: Apache-2.0
#include "rsv/soliton.hpp"

#include <algorithm>
#include <cmath>

#include "rsv/immersions.hpp"

namespace rsv {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Soliton: return "soliton";
        case Verdict::NotSoliton: return "not-soliton";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Shrinking: return "shrinking";
        case Classification::Steady: return "steady";
        case Classification::Expanding: return "expanding";
        case Classification::None: return "none";
    }
    return "?";
}

SolitonSample sample(const MapSpec& spec, const ChartPoint& p, const Tolerances& tol) {
    const ExtrinsicData e = extrinsic_data(spec, p, tol);
    const int n = e.n;

    SolitonSample s;
    s.point = p;
    s.n = n;
    s.g = e.metric.g;
    s.kappas = e.kappas;
    s.alpha = e.alpha;
    s.rho = e.rho;

    const ChristoffelData c = christoffel(e.metric, tol);
    const CurvatureData cur = curvature(e.metric, c, tol);
    s.ricci = cur.ricci;

    const Mat lie = lie_derivative_metric(e.metric, e.xT, e.dxT);
    s.lie_half = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.lie_half.at(i, j) = 0.5 * lie.at(i, j);

    s.h_xperp = Mat(n, n);
    s.lie_ident = Mat(n, n);
    double gap = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s.h_xperp.at(i, j) = e.rho * e.h.at(i, j);
            s.lie_ident.at(i, j) = s.g.at(i, j) + s.h_xperp.at(i, j);
            gap = std::max(gap, std::fabs(s.lie_half.at(i, j) - s.lie_ident.at(i, j)));
        }
    s.identity_gap = gap;

    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = s.lie_half.at(i, j) + s.ricci.at(i, j);

    const Mat chol = cholesky(s.g, tol.eps_posdef);
    s.m_ortho = pull_to_orthonormal(m, chol);
    s.lambda_directions = jacobi_eigenvalues(s.m_ortho);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::fabs(s.g.at(i, j)) >= 1e-10)
                s.lambda_local.push_back(m.at(i, j) / s.g.at(i, j));

    return s;
}

double identity_check(const MapSpec& spec, const ChartPoint& p, const Tolerances& tol) {
    return sample(spec, p, tol).identity_gap;
}

SolitonReport fit_lambda(const std::vector<SolitonSample>& samples, const Tolerances& tol) {
    if (samples.size() < 2) fail(ErrorKind::EmptyGrid, "soliton fit needs at least two samples");

    SolitonReport r;
    r.sample_count = static_cast<int>(samples.size());

    // Least squares over a constant: in the orthonormal frame the normal
    // equations reduce to the mean of trace(M)/n over the grid.
    double tr_sum = 0.0;
    std::size_t weight = 0;
    for (const SolitonSample& s : samples) {
        for (int i = 0; i < s.n; ++i) tr_sum += s.m_ortho.at(i, i);
        weight += static_cast<std::size_t>(s.n);
    }
    r.lambda_star = tr_sum / static_cast<double>(weight);

    double res = 0.0, ident = 0.0;
    for (const SolitonSample& s : samples) {
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j) {
                const double d = s.m_ortho.at(i, j) - (i == j ? r.lambda_star : 0.0);
                res = std::max(res, std::fabs(d));
            }
        ident = std::max(ident, s.identity_gap);
    }
    r.residual_max = res;
    r.identity_max = ident;

    const int n = samples.front().n;
    r.direction_lambda_min.assign(static_cast<std::size_t>(n), 1e300);
    r.direction_lambda_max.assign(static_cast<std::size_t>(n), -1e300);
    for (const SolitonSample& s : samples)
        for (int i = 0; i < n; ++i) {
            const double v = s.lambda_directions[static_cast<std::size_t>(i)];
            r.direction_lambda_min[static_cast<std::size_t>(i)] =
                std::min(r.direction_lambda_min[static_cast<std::size_t>(i)], v);
            r.direction_lambda_max[static_cast<std::size_t>(i)] =
                std::max(r.direction_lambda_max[static_cast<std::size_t>(i)], v);
        }

    if (res < tol.tau_accept)
        r.verdict = Verdict::Soliton;
    else if (res > tol.tau_reject)
        r.verdict = Verdict::NotSoliton;
    else
        r.verdict = Verdict::Inconclusive;

    if (r.verdict == Verdict::Soliton) {
        if (r.lambda_star > tol.steady_band)
            r.classification = Classification::Shrinking;
        else if (r.lambda_star < -tol.steady_band)
            r.classification = Classification::Expanding;
        else
            r.classification = Classification::Steady;
    }
    return r;
}

namespace {

PrincipalRootCheck check_roots_at(const SolitonSample& s, double lambda, const Tolerances& tol) {
    PrincipalRootCheck c;
    c.clusters = cluster_curvatures(s.kappas, tol.cluster_tol);
    c.cluster_count_ok = c.clusters.size() <= 2;

    const double nar = s.n * s.alpha + s.rho;
    const double disc = nar * nar + 4.0 - 4.0 * lambda;
    const double sq = std::sqrt(std::max(disc, 0.0));
    c.root_plus = 0.5 * (nar + sq);
    c.root_minus = 0.5 * (nar - sq);

    double root_err = 0.0;
    double product = 0.0;
    if (c.clusters.size() == 1) {
        const double k = c.clusters[0];
        const double ep = std::fabs(k - c.root_plus), em = std::fabs(k - c.root_minus);
        // the umbilic value matches one root; the product pairs it with the other
        if (ep <= em) {
            root_err = ep;
            product = k * c.root_minus;
        } else {
            root_err = em;
            product = k * c.root_plus;
        }
    } else if (c.clusters.size() == 2) {
        const double a = c.clusters[0], b = c.clusters[1];
        const double assign1 = std::max(std::fabs(a - c.root_minus), std::fabs(b - c.root_plus));
        const double assign2 = std::max(std::fabs(a - c.root_plus), std::fabs(b - c.root_minus));
        root_err = std::min(assign1, assign2);
        product = a * b;
    } else {
        root_err = 1e300;
        product = 1e300;
    }
    c.root_err = root_err;
    c.product_err = std::fabs(product - (lambda - 1.0));
    c.ok = c.cluster_count_ok && disc > -tol.cluster_tol && c.root_err <= tol.cluster_tol &&
           c.product_err <= tol.cluster_tol;
    return c;
}

} // namespace

void prop_principal_roots(SolitonReport& report, const std::vector<SolitonSample>& samples,
                          const Tolerances& tol) {
    report.principal_checks.clear();
    report.principal_ok = true;
    report.principal_max_clusters = 0;
    report.principal_root_err = 0.0;
    report.principal_product_err = 0.0;
    for (const SolitonSample& s : samples) {
        PrincipalRootCheck c = check_roots_at(s, report.lambda_star, tol);
        report.principal_ok = report.principal_ok && c.ok;
        report.principal_max_clusters =
            std::max(report.principal_max_clusters, static_cast<int>(c.clusters.size()));
        report.principal_root_err = std::max(report.principal_root_err, c.root_err);
        report.principal_product_err = std::max(report.principal_product_err, c.product_err);
        report.principal_checks.push_back(std::move(c));
    }
}

double rotational_closed_form(RotationalFamily fam, double b, double c, double x1) {
    if (fam == RotationalFamily::HyperbolicProfile) {
        const double d = 1.0 + b * b * x1 * x1 * (1.0 + b * b);
        return -b * b / (d * d);
    }
    return (2.0 - b * b + c * c - c * x1) / (b * b);
}

MapSpec rotational_family_immersion(RotationalFamily fam, int n, double b, double c) {
    if (b == 0.0) fail(ErrorKind::BadParameter, "rotational family needs b != 0");
    if (fam == RotationalFamily::HyperbolicProfile) {
        return rotational_immersion(
            n, [b](const Jet& x) { return sqrt(1.0 + b * b * x * x); }, {-10.0, 10.0},
            "rotational-case-i");
    }
    // circular profile: keep the chart inside the open cap where f > 0
    const double lo = c - std::fabs(b) + 1e-2, hi = c + std::fabs(b) - 1e-2;
    return rotational_immersion(
        n, [b, c](const Jet& x) { return sqrt(b * b - (x - c) * (x - c)); }, {lo, hi},
        "rotational-case-ii");
}

RotationalCrosscheck formula_crosscheck_rotational(RotationalFamily fam, double b, double c,
                                                   const std::vector<double>& x1_grid,
                                                   const Tolerances& tol) {
    RotationalCrosscheck out;
    out.best_err = 1e300;
    for (int n = 2; n <= 4; ++n) {
        const MapSpec spec = rotational_family_immersion(fam, n, b, c);
        for (int sign : {+1, -1}) {
            double worst = 0.0;
            for (double x1 : x1_grid) {
                ChartPoint p;
                p.coords.assign(static_cast<std::size_t>(n), 0.3);
                p.coords[0] = x1;
                const ExtrinsicData e = extrinsic_data(spec, p, tol);
                const ChristoffelData ch = christoffel(e.metric, tol);
                const CurvatureData cur = curvature(e.metric, ch, tol);
                const double q =
                    (cur.ricci.at(0, 0) + sign * e.rho * e.h.at(0, 0)) / e.metric.g.at(0, 0);
                worst = std::max(worst, std::fabs(q - rotational_closed_form(fam, b, c, x1)));
            }
            out.rows.push_back({n, sign, worst});
            if (worst < out.best_err) {
                out.best_err = worst;
                out.best_n = n;
                out.best_sign = sign;
            }
        }
    }
    return out;
}

} // namespace rsv
