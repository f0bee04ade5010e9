// SPDX-License-Identifier: Apache-2.0
#include "rsv/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace rsv {

Mat cholesky(const Mat& g, double eps) {
    const int n = g.rows;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::fabs(g.at(i, i)));
    if (scale == 0.0) scale = 1.0;
    Mat L(n, n);
    for (int j = 0; j < n; ++j) {
        double d = g.at(j, j);
        for (int k = 0; k < j; ++k) d -= L.at(j, k) * L.at(j, k);
        if (d <= eps * scale) fail(ErrorKind::SingularMetric, "metric not positive definite");
        L.at(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = g.at(i, j);
            for (int k = 0; k < j; ++k) s -= L.at(i, k) * L.at(j, k);
            L.at(i, j) = s / L.at(j, j);
        }
    }
    return L;
}

std::vector<double> forward_subst(const Mat& L, const std::vector<double>& b) {
    const int n = L.rows;
    std::vector<double> y(b);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k) y[i] -= L.at(i, k) * y[k];
        y[i] /= L.at(i, i);
    }
    return y;
}

std::vector<double> back_subst_t(const Mat& L, const std::vector<double>& y) {
    const int n = L.rows;
    std::vector<double> x(y);
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) x[i] -= L.at(k, i) * x[k];
        x[i] /= L.at(i, i);
    }
    return x;
}

std::vector<double> solve_spd(const Mat& g, const std::vector<double>& b, double eps) {
    const Mat L = cholesky(g, eps);
    return back_subst_t(L, forward_subst(L, b));
}

Mat inverse_spd(const Mat& g, double eps) {
    const int n = g.rows;
    const Mat L = cholesky(g, eps);
    Mat inv(n, n);
    std::vector<double> e(n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        const std::vector<double> col = back_subst_t(L, forward_subst(L, e));
        for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    // mirror to remove roundoff asymmetry
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (inv.at(i, j) + inv.at(j, i));
            inv.at(i, j) = inv.at(j, i) = v;
        }
    return inv;
}

std::vector<double> jacobi_eigenvalues(const Mat& s, Mat* vecs) {
    const int n = s.rows;
    Mat a = s;
    Mat v(n, n);
    for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sgn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - sgn * akq;
                    a.at(k, q) = sgn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - sgn * aqk;
                    a.at(q, k) = sgn * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - sgn * vkq;
                    v.at(k, q) = sgn * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.at(x, x) < a.at(y, y); });

    std::vector<double> eig(n);
    Mat sorted_v(n, n);
    for (int j = 0; j < n; ++j) {
        eig[j] = a.at(order[j], order[j]);
        for (int i = 0; i < n; ++i) sorted_v.at(i, j) = v.at(i, order[j]);
    }
    if (vecs) *vecs = sorted_v;
    return eig;
}

std::vector<double> generalized_eigenvalues(const Mat& h, const Mat& g, double eps, Mat* vecs) {
    const int n = g.rows;
    const Mat L = cholesky(g, eps);
    // B = L^{-1} h L^{-T}
    Mat B(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = h.at(i, j);
        col = forward_subst(L, col);
        for (int i = 0; i < n; ++i) B.at(i, j) = col[i];
    }
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(n);
        for (int j = 0; j < n; ++j) row[j] = B.at(i, j);
        row = forward_subst(L, row);
        for (int j = 0; j < n; ++j) B.at(i, j) = row[j];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (B.at(i, j) + B.at(j, i));
            B.at(i, j) = B.at(j, i) = v;
        }
    Mat y;
    const std::vector<double> eig = jacobi_eigenvalues(B, vecs ? &y : nullptr);
    if (vecs) {
        Mat out(n, n);
        for (int j = 0; j < n; ++j) {
            std::vector<double> col(n);
            for (int i = 0; i < n; ++i) col[i] = y.at(i, j);
            col = back_subst_t(L, col);
            for (int i = 0; i < n; ++i) out.at(i, j) = col[i];
        }
        *vecs = out;
    }
    return eig;
}

double determinant(Mat m) {
    const int n = m.rows;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(m.at(r, col)) > std::fabs(m.at(piv, col))) piv = r;
        if (m.at(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = m.at(r, col) / m.at(col, col);
            for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

Mat pull_to_orthonormal(const Mat& m, const Mat& chol_g) {
    const int n = m.rows;
    Mat out(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = m.at(i, j);
        col = forward_subst(chol_g, col);
        for (int i = 0; i < n; ++i) out.at(i, j) = col[i];
    }
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(n);
        for (int j = 0; j < n; ++j) row[j] = out.at(i, j);
        row = forward_subst(chol_g, row);
        for (int j = 0; j < n; ++j) out.at(i, j) = row[j];
    }
    return out;
}

} // namespace rsv
