// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_TEST_UTIL_HPP
#define RSV_TEST_UTIL_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "rsv/intrinsic.hpp"

namespace rsv::test {

/// Diagonal metric family from per-axis scalar jet expressions.
inline MetricFamily diagonal_metric(int n, std::string label,
                                    std::function<Jet(const std::vector<Jet>&, int)> entry) {
    MetricFamily fam;
    fam.n = n;
    fam.label = std::move(label);
    fam.components = [n, entry](const std::vector<Jet>& u) {
        std::vector<Jet> out(static_cast<std::size_t>(n) * n, Jet::constant(n, 0.0));
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i) * n + i] = entry(u, i);
        return out;
    };
    return fam;
}

inline MetricFamily euclidean_metric(int n) {
    return diagonal_metric(n, "euclidean", [](const std::vector<Jet>& u, int) {
        return Jet::constant(static_cast<int>(u.size()), 1.0);
    });
}

/// Round unit sphere in nested polar coordinates:
/// g_ii = prod_{k<i} cos^2 x_k.
inline MetricFamily round_sphere_metric(int p) {
    return diagonal_metric(p, "round-sphere", [](const std::vector<Jet>& u, int i) {
        Jet e = Jet::constant(static_cast<int>(u.size()), 1.0);
        for (int k = 0; k < i; ++k) e = e * cos(u[static_cast<std::size_t>(k)]) * cos(u[static_cast<std::size_t>(k)]);
        return e;
    });
}

/// Shell metric P(s,y)^2 ds^2 + f(s)^2 (round sphere in y_2..y_n).
inline MetricFamily shell_metric(int n, std::function<Jet(const std::vector<Jet>&)> P,
                                 std::function<Jet(const Jet&)> f, std::string label) {
    return diagonal_metric(n, std::move(label), [P, f](const std::vector<Jet>& u, int i) {
        if (i == 0) {
            const Jet Pv = P(u);
            return Pv * Pv;
        }
        Jet e = f(u[0]);
        e = e * e;
        for (int k = 1; k < i; ++k)
            e = e * cos(u[static_cast<std::size_t>(k)]) * cos(u[static_cast<std::size_t>(k)]);
        return e;
    });
}

/// Finite-difference Christoffel oracle: symbols from metric values alone.
inline Ten3 fd_christoffel(const MetricFamily& fam, const ChartPoint& p, double h,
                           double eps_posdef = 1e-10) {
    const int n = fam.n;
    const Mat g = fam.at(p).g;
    const Mat ginv = inverse_spd(g, eps_posdef);

    auto g_at = [&](ChartPoint q) { return fam.at(q).g; };
    Ten3 dg(n, n, n);
    for (int k = 0; k < n; ++k) {
        ChartPoint qp = p, qm = p;
        qp.coords[static_cast<std::size_t>(k)] += h;
        qm.coords[static_cast<std::size_t>(k)] -= h;
        const Mat gp = g_at(qp), gm = g_at(qm);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg.at(k, i, j) = (gp.at(i, j) - gm.at(i, j)) / (2.0 * h);
    }

    Ten3 gamma(n, n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l)
                    s += ginv.at(k, l) * (dg.at(i, j, l) + dg.at(j, i, l) - dg.at(l, i, j));
                gamma.at(k, i, j) = 0.5 * s;
            }
    return gamma;
}

/// Finite-difference Ricci oracle stacked on the Christoffel oracle.
inline Mat fd_ricci(const MetricFamily& fam, const ChartPoint& p, double h) {
    const int n = fam.n;
    const Ten3 gamma = fd_christoffel(fam, p, h);

    Ten4 dgamma(n, n, n, n);
    for (int m = 0; m < n; ++m) {
        ChartPoint qp = p, qm = p;
        qp.coords[static_cast<std::size_t>(m)] += h;
        qm.coords[static_cast<std::size_t>(m)] -= h;
        const Ten3 gp = fd_christoffel(fam, qp, h);
        const Ten3 gm = fd_christoffel(fam, qm, h);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    dgamma.at(m, k, i, j) = (gp.at(k, i, j) - gm.at(k, i, j)) / (2.0 * h);
    }

    Mat ric(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) {
                s += dgamma.at(l, l, j, k) - dgamma.at(j, l, l, k);
                for (int m = 0; m < n; ++m)
                    s += gamma.at(l, l, m) * gamma.at(m, j, k) -
                         gamma.at(l, j, m) * gamma.at(m, l, k);
            }
            ric.at(j, k) = s;
        }
    return ric;
}

} // namespace rsv::test

#endif
