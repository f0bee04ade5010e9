// SPDX-License-Identifier: Apache-2.0
#include "rsv/extrinsic.hpp"

#include <cmath>
#include <map>

namespace rsv {

namespace {

// Determinant of a square jet matrix by Laplace expansion with
// column-subset memoization. Division-free, so points where a minor's
// value vanishes still carry correct derivative data.
class JetDet {
public:
    JetDet(const std::vector<std::vector<Jet>>& rows, int nvars)
        : rows_(rows), nvars_(nvars), k_(static_cast<int>(rows.size())) {}

    Jet det() { return expand(0, (1u << k_) - 1u); }

private:
    Jet expand(int r, unsigned mask) {
        if (r == k_) return Jet::constant(nvars_, 1.0);
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Jet acc = Jet::constant(nvars_, 0.0);
        int pos = 0;
        for (int c = 0; c < k_; ++c) {
            if (!(mask & (1u << c))) continue;
            const Jet sub = expand(r + 1, mask & ~(1u << c));
            const Jet term = rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * sub;
            acc = (pos % 2 == 0) ? acc + term : acc - term;
            ++pos;
        }
        memo_.emplace(mask, acc);
        return acc;
    }

    const std::vector<std::vector<Jet>>& rows_;
    int nvars_;
    int k_;
    std::map<unsigned, Jet> memo_;
};

Jet jet_matrix_det(const std::vector<std::vector<Jet>>& rows, int nvars) {
    return JetDet(rows, nvars).det();
}

} // namespace

double ExtrinsicData::split_residual() const {
    const int m = n + 1;
    double worst = 0.0;
    for (int a = 0; a < m; ++a) {
        double rec = rho * normal[static_cast<std::size_t>(a)];
        for (int i = 0; i < n; ++i) rec += xT[static_cast<std::size_t>(i)] * jacobian.at(a, i);
        worst = std::max(worst, std::fabs(rec - position[static_cast<std::size_t>(a)]));
    }
    return worst;
}

ExtrinsicData extrinsic_data(const MapSpec& spec, const ChartPoint& p, const Tolerances& tol) {
    if (spec.dim_out != spec.dim_in + 1)
        fail(ErrorKind::BadParameter, spec.label + ": not a hypersurface immersion");
    if (spec.dim_in < 2)
        fail(ErrorKind::BadParameter, spec.label + ": hypersurface chart needs dimension >= 2");

    const Jet3 jet = lift_immersion(spec, p);
    const int n = jet.dim_in, m = jet.dim_out;

    ExtrinsicData e;
    e.n = n;
    e.position = jet.value;
    e.jacobian = Mat(m, n);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i) e.jacobian.at(a, i) = jet.d1.at(a, i);

    e.metric = induced_metric(jet);
    {
        const std::vector<double> eig = jacobi_eigenvalues(e.metric.g);
        if (eig.front() <= tol.rank_sigma_min * tol.rank_sigma_min)
            fail(ErrorKind::RankDeficient, spec.label + ": immersion degenerate at point");
    }

    // Tangent columns as jets one order down: value = dL, gradient = d2L,
    // hessian = d3L. The normal inherits exact value and first derivatives.
    std::vector<std::vector<Jet>> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cols[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a) {
            Jet ja(n, jet.d1.at(a, i));
            for (int k = 0; k < n; ++k) {
                ja.g[static_cast<std::size_t>(k)] = jet.d2.at(a, i, k);
                for (int l = 0; l < n; ++l) ja.H(k, l) = jet.d3.at(a, i, k, l);
            }
            cols[static_cast<std::size_t>(i)].push_back(std::move(ja));
        }
    }

    // w_a = (-1)^(n+a) det(jacobian with row a removed) completes the frame
    // so that (dL_1, ..., dL_n, w) is positively oriented.
    std::vector<Jet> w;
    w.reserve(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        std::vector<std::vector<Jet>> minor;
        minor.reserve(static_cast<std::size_t>(n));
        for (int b = 0; b < m; ++b) {
            if (b == a) continue;
            std::vector<Jet> row;
            row.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) row.push_back(cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]);
            minor.push_back(std::move(row));
        }
        Jet d = jet_matrix_det(minor, n);
        if ((n + a) % 2 != 0) d = -d;
        w.push_back(std::move(d));
    }

    Jet norm2 = Jet::constant(n, 0.0);
    for (const Jet& wa : w) norm2 = norm2 + wa * wa;
    const Jet norm = sqrt(norm2);

    e.normal.resize(static_cast<std::size_t>(m));
    e.dnormal = Mat(n, m);
    for (int a = 0; a < m; ++a) {
        const Jet na = w[static_cast<std::size_t>(a)] / norm;
        e.normal[static_cast<std::size_t>(a)] = na.val;
        for (int i = 0; i < n; ++i) e.dnormal.at(i, a) = na.g[static_cast<std::size_t>(i)];
    }

    e.h = Mat(n, n);
    e.dh = Ten3(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double hij = 0.0;
            for (int a = 0; a < m; ++a)
                hij += jet.d2.at(a, i, j) * e.normal[static_cast<std::size_t>(a)];
            e.h.at(i, j) = e.h.at(j, i) = hij;
            for (int k = 0; k < n; ++k) {
                double dk = 0.0;
                for (int a = 0; a < m; ++a)
                    dk += jet.d3.at(a, k, i, j) * e.normal[static_cast<std::size_t>(a)] +
                          jet.d2.at(a, i, j) * e.dnormal.at(k, a);
                e.dh.at(k, i, j) = e.dh.at(k, j, i) = dk;
            }
        }

    const Mat ginv = e.metric.inverse(tol.eps_posdef);
    e.shape = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += ginv.at(i, k) * e.h.at(k, j);
            e.shape.at(i, j) = s;
        }

    e.kappas = generalized_eigenvalues(e.h, e.metric.g, tol.eps_posdef, &e.principal_dirs);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += e.shape.at(i, i);
    e.alpha = tr / n;

    double rho = 0.0;
    for (int a = 0; a < m; ++a)
        rho += jet.value[static_cast<std::size_t>(a)] * e.normal[static_cast<std::size_t>(a)];
    e.rho = rho;
    e.xPerp_norm = rho;

    // xT^i = g^{ik} <dL_k, x>; the derivative uses
    // d_j <dL_k, x> = <d2L_jk, x> + g_jk and d_j g^{ik} = -g^{ia} d_j g_ab g^{bk}.
    std::vector<double> t(static_cast<std::size_t>(n), 0.0);
    Mat dt(n, n); // dt.at(j,k) = d_j t_k
    for (int k = 0; k < n; ++k) {
        double tk = 0.0;
        for (int a = 0; a < m; ++a) tk += jet.d1.at(a, k) * jet.value[static_cast<std::size_t>(a)];
        t[static_cast<std::size_t>(k)] = tk;
        for (int j = 0; j < n; ++j) {
            double d = e.metric.g.at(j, k);
            for (int a = 0; a < m; ++a)
                d += jet.d2.at(a, j, k) * jet.value[static_cast<std::size_t>(a)];
            dt.at(j, k) = d;
        }
    }
    e.xT.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += ginv.at(i, k) * t[static_cast<std::size_t>(k)];
        e.xT[static_cast<std::size_t>(i)] = s;
    }
    e.dxT = Mat(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                double dginv_jik = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        dginv_jik -= ginv.at(i, a) * e.metric.dg.at(j, a, b) * ginv.at(b, k);
                s += dginv_jik * t[static_cast<std::size_t>(k)] + ginv.at(i, k) * dt.at(j, k);
            }
            e.dxT.at(j, i) = s;
        }

    return e;
}

Mat gauss_equation_ricci(const ExtrinsicData& e, const Tolerances& tol) {
    const int n = e.n;
    const Mat ginv = e.metric.inverse(tol.eps_posdef);
    double trA = 0.0;
    for (int i = 0; i < n; ++i) trA += e.shape.at(i, i);

    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double hgh = 0.0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) hgh += e.h.at(i, k) * ginv.at(k, l) * e.h.at(l, j);
            const double v = trA * e.h.at(i, j) - hgh;
            out.at(i, j) = out.at(j, i) = v;
        }
    return out;
}

double codazzi_residual(const ExtrinsicData& e, const ChristoffelData& c, int i, int j, int k) {
    const int n = e.n;
    auto covariant = [&](int a, int b, int d) {
        double s = e.dh.at(a, b, d);
        for (int l = 0; l < n; ++l)
            s -= c.gamma.at(l, a, b) * e.h.at(l, d) + c.gamma.at(l, a, d) * e.h.at(b, l);
        return s;
    };
    return std::fabs(covariant(i, j, k) - covariant(j, i, k));
}

double codazzi_residual_max(const ExtrinsicData& e, const ChristoffelData& c) {
    double worst = 0.0;
    for (int i = 0; i < e.n; ++i)
        for (int j = i + 1; j < e.n; ++j)
            for (int k = 0; k < e.n; ++k)
                worst = std::max(worst, codazzi_residual(e, c, i, j, k));
    return worst;
}

std::pair<std::vector<double>, double> position_split(const MapSpec& spec, const ChartPoint& p,
                                                      const Tolerances& tol) {
    const ExtrinsicData e = extrinsic_data(spec, p, tol);
    return {e.xT, e.rho};
}

std::vector<double> cluster_curvatures(const std::vector<double>& kappas, double width) {
    std::vector<double> clusters;
    std::size_t i = 0;
    while (i < kappas.size()) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < kappas.size() && kappas[j] - kappas[i] <= width) sum += kappas[j++];
        clusters.push_back(sum / static_cast<double>(j - i));
        i = j;
    }
    return clusters;
}

} // namespace rsv
