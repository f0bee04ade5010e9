// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_SOLITON_HPP
#define RSV_SOLITON_HPP

#include "rsv/extrinsic.hpp"

namespace rsv {

enum class Verdict { Soliton, NotSoliton, Inconclusive };
enum class Classification { Shrinking, Steady, Expanding, None };

const char* to_string(Verdict v);
const char* to_string(Classification c);

/// Everything the soliton fit needs from one chart point. The half Lie
/// derivative of the metric along the tangential position field is computed
/// two independent ways: through the intrinsic Lie-derivative pipeline and
/// through the concurrent-field identity g + rho h. Both are kept so the
/// identity gap is observable.
struct SolitonSample {
    ChartPoint point;
    int n = 0;

    Mat g;
    Mat lie_half;  // intrinsic route
    Mat lie_ident; // g + rho h route
    Mat ricci;
    Mat h_xperp; // rho * h

    Mat m_ortho; // (lie_half + ricci) pulled to a g-orthonormal frame
    std::vector<double> lambda_local;
    std::vector<double> lambda_directions; // eigenvalues of m_ortho, ascending
    double identity_gap = 0.0;

    // shape snapshot for the principal-curvature checks
    std::vector<double> kappas;
    double alpha = 0.0;
    double rho = 0.0;
};

/// Per-point result of the two-curvature root check.
struct PrincipalRootCheck {
    std::vector<double> clusters;
    double root_plus = 0.0;
    double root_minus = 0.0;
    bool cluster_count_ok = false;
    double root_err = 0.0;    // worst cluster-vs-root mismatch
    double product_err = 0.0; // |kappa1 kappa2 - (lambda - 1)|
    bool ok = false;
};

struct SolitonReport {
    double lambda_star = 0.0;
    double residual_max = 0.0;
    double identity_max = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    Classification classification = Classification::None;

    // spread of per-direction lambda requirements across the grid
    std::vector<double> direction_lambda_min;
    std::vector<double> direction_lambda_max;

    std::vector<PrincipalRootCheck> principal_checks;
    bool principal_ok = true;
    int principal_max_clusters = 0;
    double principal_root_err = 0.0;
    double principal_product_err = 0.0;

    int sample_count = 0;
};

SolitonSample sample(const MapSpec& spec, const ChartPoint& p, const Tolerances& tol = {});

/// Max-abs gap between the two Lie-derivative routes at one point; holds at
/// every point of every Euclidean hypersurface, soliton or not.
double identity_check(const MapSpec& spec, const ChartPoint& p, const Tolerances& tol = {});

/// Least-squares constant fit and residual verdict over a sample grid.
SolitonReport fit_lambda(const std::vector<SolitonSample>& samples, const Tolerances& tol = {});

/// Two-curvature root check against the fitted constant; results are
/// recorded in the report, never thrown.
void prop_principal_roots(SolitonReport& report, const std::vector<SolitonSample>& samples,
                          const Tolerances& tol = {});

enum class RotationalFamily {
    HyperbolicProfile, // f = sqrt(1 + b^2 x1^2)
    CircularProfile,   // f = sqrt(b^2 - (x1 - c)^2)
};

/// Closed-form soliton quantity of the rotational families, as printed.
double rotational_closed_form(RotationalFamily fam, double b, double c, double x1);

/// Immersion of a rotational family member in dimension n.
MapSpec rotational_family_immersion(RotationalFamily fam, int n, double b, double c);

struct RotationalCrosscheckRow {
    int n = 0;
    int sign = 0; // +1: (Ric + rho h)/g, -1: (Ric - rho h)/g
    double max_err = 0.0;
};

struct RotationalCrosscheck {
    std::vector<RotationalCrosscheckRow> rows;
    int best_n = 0;
    int best_sign = 0;
    double best_err = 0.0;
};

/// Compares the closed forms against the numeric quantity
/// (Ric_11 +/- <h, x^perp>_11)/g_11 for both signs and a range of
/// dimensions, reporting which convention agrees.
RotationalCrosscheck formula_crosscheck_rotational(RotationalFamily fam, double b, double c,
                                                   const std::vector<double>& x1_grid,
                                                   const Tolerances& tol = {});

} // namespace rsv

#endif
