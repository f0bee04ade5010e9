// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_INTRINSIC_HPP
#define RSV_INTRINSIC_HPP

#include "rsv/jet.hpp"
#include "rsv/linalg.hpp"

namespace rsv {

/// Metric components with first and second partials at one chart point.
struct MetricData {
    int n = 0;
    Mat g;    // n x n, symmetric positive definite
    Ten3 dg;  // dg.at(k,i,j) = d_k g_ij
    Ten4 d2g; // d2g.at(l,k,i,j) = d_l d_k g_ij

    Mat inverse(double eps_posdef) const { return inverse_spd(g, eps_posdef); }
};

/// Christoffel symbols and their first partials.
struct ChristoffelData {
    int n = 0;
    Ten3 gamma;  // gamma.at(k,i,j) = Gamma^k_ij, symmetric in (i,j)
    Ten4 dgamma; // dgamma.at(m,k,i,j) = d_m Gamma^k_ij
};

struct CurvatureData {
    int n = 0;
    Ten4 riemann; // riemann.at(l,i,j,k) = R^l_ijk
    Mat ricci;
    double scalar = 0.0;

    /// Fully lowered tensor R_ijkl = g_lm R^m_ijk.
    double lowered(const Mat& g, int i, int j, int k, int l) const;
};

/// Value, coordinate gradient and coordinate Hessian of a scalar field.
struct ScalarFieldJet {
    double value = 0.0;
    std::vector<double> grad_coords;
    Mat hess_coords;

    static ScalarFieldJet from_jet(const Jet& j);
};

/// A chart-parametrized family of metric components, evaluated in jet
/// arithmetic so first and second metric partials come out exactly.
/// The evaluator returns the full n x n component list, row-major.
struct MetricFamily {
    int n = 0;
    DomainBox domain;
    std::string label;
    JetMapFn components;

    MetricData at(const ChartPoint& p) const;
};

/// Induced metric of an immersion from its order-3 jet. This is the single
/// code path producing metric data from jets; extrinsic consumers reuse it.
MetricData induced_metric(const Jet3& jet);

/// Pack a row-major list of component jets into metric data with exact
/// symmetry, validating finiteness.
MetricData metric_from_component_jets(int n, const std::vector<Jet>& comps,
                                      const std::string& label);

/// Koszul formula and its derivative. Throws SingularMetric below the
/// positive-definiteness guard.
ChristoffelData christoffel(const MetricData& m, const Tolerances& tol = {});

CurvatureData curvature(const MetricData& m, const ChristoffelData& c,
                        const Tolerances& tol = {});

/// Sectional curvature of the coordinate plane (X, Y).
double sectional(const MetricData& m, const CurvatureData& cur, int X, int Y,
                 const Tolerances& tol = {});

/// (L_V g)_ij from the field's chart components and their first partials
/// (dV.at(j,i) = d_j V^i). Exactly symmetric by construction.
Mat lie_derivative_metric(const MetricData& m, const std::vector<double>& V, const Mat& dV);

struct ScalarCalculus {
    std::vector<double> gradient; // contravariant components
    Mat hessian;                  // covariant Hessian, symmetric
};

ScalarCalculus scalar_calculus(const MetricData& m, const ChristoffelData& c,
                               const ScalarFieldJet& f, const Tolerances& tol = {});

/// Max |d_k g_ij - Gamma^l_ki g_lj - Gamma^l_kj g_il| over all indices;
/// metric compatibility of the computed connection.
double metric_compatibility_residual(const MetricData& m, const ChristoffelData& c);

/// Max |R_ijkl + R_iklj + R_iljk| over all indices (first Bianchi identity).
double bianchi_residual(const MetricData& m, const CurvatureData& cur);

} // namespace rsv

#endif
