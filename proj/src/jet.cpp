// SPDX-License-Identifier: Apache-2.0
#include "rsv/jet.hpp"

#include <cmath>

namespace rsv {

namespace {

constexpr double kDomainGuard = 1e-9;

void check_same(const Jet& a, const Jet& b) {
    if (a.nvars() != b.nvars())
        fail(ErrorKind::Internal, "jet arity mismatch");
}

} // namespace

bool Jet::finite() const {
    if (!std::isfinite(val)) return false;
    for (double x : g)
        if (!std::isfinite(x)) return false;
    for (double x : h)
        if (!std::isfinite(x)) return false;
    for (double x : t)
        if (!std::isfinite(x)) return false;
    return true;
}

Jet operator+(const Jet& a, const Jet& b) {
    check_same(a, b);
    Jet r = a;
    r.val += b.val;
    for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] += b.g[i];
    for (std::size_t i = 0; i < r.h.size(); ++i) r.h[i] += b.h[i];
    for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] += b.t[i];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    check_same(a, b);
    Jet r = a;
    r.val -= b.val;
    for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] -= b.g[i];
    for (std::size_t i = 0; i < r.h.size(); ++i) r.h[i] -= b.h[i];
    for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] -= b.t[i];
    return r;
}

Jet operator-(const Jet& a) {
    Jet r = a;
    r.val = -r.val;
    for (double& x : r.g) x = -x;
    for (double& x : r.h) x = -x;
    for (double& x : r.t) x = -x;
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    check_same(a, b);
    const int n = a.nvars();
    Jet r(n, a.val * b.val);
    for (int i = 0; i < n; ++i) r.g[i] = a.g[i] * b.val + a.val * b.g[i];
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = a.H(i, j) * b.val + a.g[i] * b.g[j] + a.g[j] * b.g[i] +
                             a.val * b.H(i, j);
            r.H(i, j) = v;
            r.H(j, i) = v;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                const double v = a.T(i, j, k) * b.val + a.H(i, j) * b.g[k] +
                                 a.H(i, k) * b.g[j] + a.H(j, k) * b.g[i] +
                                 a.g[i] * b.H(j, k) + a.g[j] * b.H(i, k) +
                                 a.g[k] * b.H(i, j) + a.val * b.T(i, j, k);
                r.T(i, j, k) = v;
                r.T(i, k, j) = v;
                r.T(j, i, k) = v;
                r.T(j, k, i) = v;
                r.T(k, i, j) = v;
                r.T(k, j, i) = v;
            }
    return r;
}

Jet compose(const Jet& a, double c0, double c1, double c2, double c3) {
    const int n = a.nvars();
    Jet r(n, c0);
    for (int i = 0; i < n; ++i) r.g[i] = c1 * a.g[i];
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = c2 * a.g[i] * a.g[j] + c1 * a.H(i, j);
            r.H(i, j) = v;
            r.H(j, i) = v;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                const double v = c3 * a.g[i] * a.g[j] * a.g[k] +
                                 c2 * (a.H(i, j) * a.g[k] + a.H(i, k) * a.g[j] +
                                       a.H(j, k) * a.g[i]) +
                                 c1 * a.T(i, j, k);
                r.T(i, j, k) = v;
                r.T(i, k, j) = v;
                r.T(j, i, k) = v;
                r.T(j, k, i) = v;
                r.T(k, i, j) = v;
                r.T(k, j, i) = v;
            }
    return r;
}

Jet reciprocal(const Jet& a) {
    const double v = a.val;
    if (std::fabs(v) < kDomainGuard)
        fail(ErrorKind::DomainViolation, "division by near-zero value");
    return compose(a, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v), -6.0 / (v * v * v * v));
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet operator+(const Jet& a, double c) {
    Jet r = a;
    r.val += c;
    return r;
}
Jet operator+(double c, const Jet& a) { return a + c; }
Jet operator-(const Jet& a, double c) { return a + (-c); }
Jet operator-(double c, const Jet& a) { return (-a) + c; }

Jet operator*(const Jet& a, double c) {
    Jet r = a;
    r.val *= c;
    for (double& x : r.g) x *= c;
    for (double& x : r.h) x *= c;
    for (double& x : r.t) x *= c;
    return r;
}
Jet operator*(double c, const Jet& a) { return a * c; }
Jet operator/(const Jet& a, double c) {
    if (std::fabs(c) < kDomainGuard)
        fail(ErrorKind::DomainViolation, "division by near-zero constant");
    return a * (1.0 / c);
}
Jet operator/(double c, const Jet& a) { return reciprocal(a) * c; }

Jet sin(const Jet& a) {
    const double s = std::sin(a.val), c = std::cos(a.val);
    return compose(a, s, c, -s, -c);
}

Jet cos(const Jet& a) {
    const double s = std::sin(a.val), c = std::cos(a.val);
    return compose(a, c, -s, -c, s);
}

Jet tan(const Jet& a) {
    const double c = std::cos(a.val);
    if (std::fabs(c) < kDomainGuard) fail(ErrorKind::DomainViolation, "tan near pole");
    const double tn = std::tan(a.val);
    const double sec2 = 1.0 / (c * c);
    // tan' = sec^2, tan'' = 2 tan sec^2, tan''' = sec^2 (4 tan^2 sec^0 + 2 sec^2) form
    return compose(a, tn, sec2, 2.0 * tn * sec2, sec2 * (4.0 * tn * tn + 2.0 * sec2));
}

Jet exp(const Jet& a) {
    const double e = std::exp(a.val);
    return compose(a, e, e, e, e);
}

Jet log(const Jet& a) {
    const double v = a.val;
    if (v < kDomainGuard) fail(ErrorKind::DomainViolation, "log of non-positive value");
    return compose(a, std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet sqrt(const Jet& a) {
    const double v = a.val;
    if (v < kDomainGuard) fail(ErrorKind::DomainViolation, "sqrt below domain guard");
    const double s = std::sqrt(v);
    return compose(a, s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}

Jet pow_int(const Jet& a, int k) {
    if (k == 0) return Jet::constant(a.nvars(), 1.0);
    if (k < 0) return reciprocal(pow_int(a, -k));
    Jet r = a;
    for (int i = 1; i < k; ++i) r = r * a;
    return r;
}

void Jet3::ensure_valid(const std::string& label) const {
    if (!valid) fail(ErrorKind::DomainViolation, "non-finite jet from " + label);
}

bool DomainBox::contains(const ChartPoint& p, double margin) const {
    if (p.dim() != dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        const auto& [lo, hi] = intervals[static_cast<std::size_t>(i)];
        const double x = p.coords[static_cast<std::size_t>(i)];
        if (!(x > lo + margin && x < hi - margin)) return false;
    }
    return true;
}

std::vector<Jet> seed_point(const ChartPoint& p) {
    const int n = p.dim();
    std::vector<Jet> vars;
    vars.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        vars.push_back(Jet::variable(n, i, p.coords[static_cast<std::size_t>(i)]));
    return vars;
}

Jet lift_scalar(const JetMapFn& f, const ChartPoint& p, const std::string& label) {
    std::vector<Jet> out;
    try {
        out = f(seed_point(p));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DomainViolation)
            fail(ErrorKind::DomainViolation, label + ": " + e.what());
        throw;
    }
    if (out.size() != 1) fail(ErrorKind::Internal, label + ": scalar family arity");
    return out[0];
}

Jet3 MapSpec::jet3(const ChartPoint& p) const {
    if (p.dim() != dim_in) fail(ErrorKind::BadParameter, label + ": chart dimension mismatch");
    if (domain.dim() == dim_in && !domain.contains(p))
        fail(ErrorKind::DomainViolation, label + ": point outside chart domain");

    std::vector<Jet> comps;
    try {
        comps = eval(seed_point(p));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DomainViolation)
            fail(ErrorKind::DomainViolation, label + ": " + e.what());
        throw;
    }
    if (static_cast<int>(comps.size()) != dim_out)
        fail(ErrorKind::Internal, label + ": evaluator arity mismatch");

    const int n = dim_in, m = dim_out;
    Jet3 out;
    out.dim_in = n;
    out.dim_out = m;
    out.value.resize(static_cast<std::size_t>(m));
    out.d1 = Mat(m, n);
    out.d2 = Ten3(m, n, n);
    out.d3 = Ten4(m, n, n, n);
    for (int a = 0; a < m; ++a) {
        const Jet& c = comps[static_cast<std::size_t>(a)];
        if (!c.finite()) out.valid = false;
        out.value[static_cast<std::size_t>(a)] = c.val;
        for (int i = 0; i < n; ++i) out.d1.at(a, i) = c.g[static_cast<std::size_t>(i)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.d2.at(a, i, j) = c.H(i, j);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) out.d3.at(a, i, j, k) = c.T(i, j, k);
    }
    return out;
}

Jet3 lift_immersion(const MapSpec& spec, const ChartPoint& p) {
    Jet3 j = spec.jet3(p);
    j.ensure_valid(spec.label);
    return j;
}

namespace {

std::vector<double> map_value(const MapSpec& spec, ChartPoint p) {
    const Jet3 j = spec.jet3(p);
    return j.value;
}

} // namespace

std::array<double, 3> fd_crosscheck(const MapSpec& spec, const ChartPoint& p, double step) {
    const int n = spec.dim_in, m = spec.dim_out;
    const Jet3 jet = lift_immersion(spec, p);

    // Central-difference operator along one coordinate, applied recursively.
    // Each application is O(step^2) accurate, which is all this cross-check
    // needs; the jet side is the precise one.
    std::function<std::vector<double>(ChartPoint, const std::vector<int>&)> diff =
        [&](ChartPoint q, const std::vector<int>& idx) -> std::vector<double> {
        if (idx.empty()) return map_value(spec, q);
        std::vector<int> rest(idx.begin() + 1, idx.end());
        ChartPoint qp = q, qm = q;
        qp.coords[static_cast<std::size_t>(idx[0])] += step;
        qm.coords[static_cast<std::size_t>(idx[0])] -= step;
        if (spec.domain.dim() == n && (!spec.domain.contains(qp) || !spec.domain.contains(qm)))
            fail(ErrorKind::DomainViolation, spec.label + ": stencil leaves domain");
        const std::vector<double> fp = diff(qp, rest);
        const std::vector<double> fm = diff(qm, rest);
        std::vector<double> out(fp.size());
        for (std::size_t a = 0; a < out.size(); ++a) out[a] = (fp[a] - fm[a]) / (2.0 * step);
        return out;
    };

    std::array<double, 3> worst = {0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const std::vector<double> d = diff(p, {i});
        for (int a = 0; a < m; ++a)
            worst[0] = std::max(worst[0], std::fabs(d[static_cast<std::size_t>(a)] - jet.d1.at(a, i)));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const std::vector<double> d = diff(p, {i, j});
            for (int a = 0; a < m; ++a)
                worst[1] = std::max(worst[1],
                                    std::fabs(d[static_cast<std::size_t>(a)] - jet.d2.at(a, i, j)));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                const std::vector<double> d = diff(p, {i, j, k});
                for (int a = 0; a < m; ++a)
                    worst[2] = std::max(
                        worst[2], std::fabs(d[static_cast<std::size_t>(a)] - jet.d3.at(a, i, j, k)));
            }
    return worst;
}

} // namespace rsv
