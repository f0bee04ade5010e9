// SPDX-License-Identifier: Apache-2.0
#include "rsv/intrinsic.hpp"

#include <cmath>

namespace rsv {

double CurvatureData::lowered(const Mat& g, int i, int j, int k, int l) const {
    double s = 0.0;
    for (int m = 0; m < n; ++m) s += g.at(l, m) * riemann.at(m, i, j, k);
    return s;
}

ScalarFieldJet ScalarFieldJet::from_jet(const Jet& j) {
    const int n = j.nvars();
    ScalarFieldJet f;
    f.value = j.val;
    f.grad_coords = j.g;
    f.hess_coords = Mat(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) f.hess_coords.at(a, b) = j.H(a, b);
    return f;
}

MetricData metric_from_component_jets(int n, const std::vector<Jet>& comps,
                                      const std::string& label) {
    if (static_cast<int>(comps.size()) != n * n)
        fail(ErrorKind::Internal, label + ": metric family arity");

    MetricData m;
    m.n = n;
    m.g = Mat(n, n);
    m.dg = Ten3(n, n, n);
    m.d2g = Ten4(n, n, n, n);
    // fill from the upper triangle so symmetry in (i,j) is bitwise
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Jet& c = comps[static_cast<std::size_t>(i) * n + j];
            if (!c.finite()) fail(ErrorKind::DomainViolation, label + ": non-finite metric entry");
            m.g.at(i, j) = m.g.at(j, i) = c.val;
            for (int k = 0; k < n; ++k) {
                m.dg.at(k, i, j) = m.dg.at(k, j, i) = c.g[static_cast<std::size_t>(k)];
                for (int l = 0; l < n; ++l)
                    m.d2g.at(l, k, i, j) = m.d2g.at(l, k, j, i) = c.H(l, k);
            }
        }
    return m;
}

MetricData MetricFamily::at(const ChartPoint& p) const {
    if (p.dim() != n) fail(ErrorKind::BadParameter, label + ": chart dimension mismatch");
    if (domain.dim() == n && !domain.contains(p))
        fail(ErrorKind::DomainViolation, label + ": point outside metric domain");
    return metric_from_component_jets(n, components(seed_point(p)), label);
}

MetricData induced_metric(const Jet3& jet) {
    const int n = jet.dim_in, m = jet.dim_out;
    MetricData out;
    out.n = n;
    out.g = Mat(n, n);
    out.dg = Ten3(n, n, n);
    out.d2g = Ten4(n, n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double gij = 0.0;
            for (int a = 0; a < m; ++a) gij += jet.d1.at(a, i) * jet.d1.at(a, j);
            out.g.at(i, j) = out.g.at(j, i) = gij;
            for (int k = 0; k < n; ++k) {
                double dk = 0.0;
                for (int a = 0; a < m; ++a)
                    dk += jet.d2.at(a, k, i) * jet.d1.at(a, j) +
                          jet.d1.at(a, i) * jet.d2.at(a, k, j);
                out.dg.at(k, i, j) = out.dg.at(k, j, i) = dk;
                for (int l = 0; l < n; ++l) {
                    double dlk = 0.0;
                    for (int a = 0; a < m; ++a)
                        dlk += jet.d3.at(a, l, k, i) * jet.d1.at(a, j) +
                               jet.d2.at(a, k, i) * jet.d2.at(a, l, j) +
                               jet.d2.at(a, l, i) * jet.d2.at(a, k, j) +
                               jet.d1.at(a, i) * jet.d3.at(a, l, k, j);
                    out.d2g.at(l, k, i, j) = out.d2g.at(l, k, j, i) = dlk;
                }
            }
        }
    return out;
}

ChristoffelData christoffel(const MetricData& m, const Tolerances& tol) {
    const int n = m.n;
    const Mat ginv = m.inverse(tol.eps_posdef);

    ChristoffelData c;
    c.n = n;
    c.gamma = Ten3(n, n, n);
    c.dgamma = Ten4(n, n, n, n);

    // d_m g^{kl} = -g^{ka} (d_m g_ab) g^{bl}
    Ten3 dginv(n, n, n);
    for (int mm = 0; mm < n; ++mm)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                double s = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        s -= ginv.at(k, a) * m.dg.at(mm, a, b) * ginv.at(b, l);
                dginv.at(mm, k, l) = s;
            }

    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l)
                    s += ginv.at(k, l) *
                         (m.dg.at(i, j, l) + m.dg.at(j, i, l) - m.dg.at(l, i, j));
                s *= 0.5;
                c.gamma.at(k, i, j) = s;
                c.gamma.at(k, j, i) = s;
            }

    for (int mm = 0; mm < n; ++mm)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    double s = 0.0;
                    for (int l = 0; l < n; ++l) {
                        s += dginv.at(mm, k, l) *
                             (m.dg.at(i, j, l) + m.dg.at(j, i, l) - m.dg.at(l, i, j));
                        s += ginv.at(k, l) *
                             (m.d2g.at(mm, i, j, l) + m.d2g.at(mm, j, i, l) -
                              m.d2g.at(mm, l, i, j));
                    }
                    s *= 0.5;
                    c.dgamma.at(mm, k, i, j) = s;
                    c.dgamma.at(mm, k, j, i) = s;
                }
    return c;
}

CurvatureData curvature(const MetricData& m, const ChristoffelData& c, const Tolerances& tol) {
    const int n = m.n;
    CurvatureData cur;
    cur.n = n;
    cur.riemann = Ten4(n, n, n, n);

    // R^l_ijk = d_i Gamma^l_jk - d_j Gamma^l_ik
    //         + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
    // Sign fixed so the unit round two-sphere has sectional curvature +1.
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double s = c.dgamma.at(i, l, j, k) - c.dgamma.at(j, l, i, k);
                    for (int mm = 0; mm < n; ++mm)
                        s += c.gamma.at(l, i, mm) * c.gamma.at(mm, j, k) -
                             c.gamma.at(l, j, mm) * c.gamma.at(mm, i, k);
                    cur.riemann.at(l, i, j, k) = s;
                }

    cur.ricci = Mat(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) s += cur.riemann.at(l, l, j, k);
            cur.ricci.at(j, k) = s;
            cur.ricci.at(k, j) = s;
        }

    const Mat ginv = m.inverse(tol.eps_posdef);
    double sc = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) sc += ginv.at(j, k) * cur.ricci.at(j, k);
    cur.scalar = sc;
    return cur;
}

double sectional(const MetricData& m, const CurvatureData& cur, int X, int Y,
                 const Tolerances& tol) {
    if (X == Y) fail(ErrorKind::BadParameter, "sectional plane needs distinct directions");
    const double den =
        m.g.at(X, X) * m.g.at(Y, Y) - m.g.at(X, Y) * m.g.at(X, Y);
    if (den < tol.plane_tol) fail(ErrorKind::DegeneratePlane, "degenerate coordinate plane");
    return cur.lowered(m.g, X, Y, Y, X) / den;
}

Mat lie_derivative_metric(const MetricData& m, const std::vector<double>& V, const Mat& dV) {
    const int n = m.n;
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += m.g.at(k, j) * dV.at(i, k) + m.g.at(i, k) * dV.at(j, k) +
                     V[static_cast<std::size_t>(k)] * m.dg.at(k, i, j);
            out.at(i, j) = s;
            out.at(j, i) = s;
        }
    return out;
}

ScalarCalculus scalar_calculus(const MetricData& m, const ChristoffelData& c,
                               const ScalarFieldJet& f, const Tolerances& tol) {
    const int n = m.n;
    ScalarCalculus out;
    out.gradient = solve_spd(m.g, f.grad_coords, tol.eps_posdef);
    out.hessian = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = f.hess_coords.at(i, j);
            for (int k = 0; k < n; ++k)
                s -= c.gamma.at(k, i, j) * f.grad_coords[static_cast<std::size_t>(k)];
            out.hessian.at(i, j) = s;
            out.hessian.at(j, i) = s;
        }
    return out;
}

double metric_compatibility_residual(const MetricData& m, const ChristoffelData& c) {
    const int n = m.n;
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = m.dg.at(k, i, j);
                for (int l = 0; l < n; ++l)
                    s -= c.gamma.at(l, k, i) * m.g.at(l, j) + c.gamma.at(l, k, j) * m.g.at(i, l);
                worst = std::max(worst, std::fabs(s));
            }
    return worst;
}

double bianchi_residual(const MetricData& m, const CurvatureData& cur) {
    const int n = m.n;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const double s = cur.lowered(m.g, i, j, k, l) +
                                     cur.lowered(m.g, i, k, l, j) +
                                     cur.lowered(m.g, i, l, j, k);
                    worst = std::max(worst, std::fabs(s));
                }
    return worst;
}

} // namespace rsv
