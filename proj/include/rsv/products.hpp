// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_PRODUCTS_HPP
#define RSV_PRODUCTS_HPP

#include <cstdint>

#include "rsv/intrinsic.hpp"

namespace rsv {

/// Two-factor product chart with positive scaling functions on the whole
/// product: g = f1^2 g1 (+) f2^2 g2, mixed blocks identically zero.
/// Factor metric components and scalings are evaluated in jet arithmetic
/// over the full product coordinates.
struct ProductSpec {
    int p = 0, q = 0;
    JetMapFn g1_components; // p*p entries, row-major, functions of coords 0..p-1
    JetMapFn g2_components; // q*q entries, functions of coords p..p+q-1
    JetMapFn f1, f2;        // one positive entry each
    DomainBox domain;
    std::string label;
    std::string kind_declared;

    int dim() const { return p + q; }
};

MetricData build_product_metric(const ProductSpec& spec, const ChartPoint& point,
                                const Tolerances& tol = {});

/// Second fundamental form data of one canonical foliation's leaf through a
/// point, computed from the product connection.
struct FoliationData {
    int which = 1;              // factor 1 or 2
    Ten3 leaf_h;                // (normal local a, leaf local i, leaf local j)
    std::vector<double> leaf_H; // mean curvature components, normal block
    double geodesic_residual = 0.0;
    double umbilic_residual = 0.0;    // trace-free part of leaf_h
    double h_parallel_residual = 0.0; // normal derivative of H off its own direction
};

FoliationData leaf_analysis(const ProductSpec& spec, const ChartPoint& point, int which,
                            const Tolerances& tol = {});

enum class ProductKind {
    Direct,
    Warped,
    Twisted,
    DoublyWarped,
    TwistedWarped,
    WarpedTwisted,
    DoublyTwisted,
};

const char* to_string(ProductKind k);

/// Decide both foliations' umbilical/spherical/geodesic statuses over a
/// grid and map them through the product-structure tables. Residuals
/// landing between the accept and reject thresholds raise
/// InconclusiveClassification.
ProductKind classify_product(const ProductSpec& spec, const std::vector<ChartPoint>& grid,
                             const Tolerances& tol = {});

/// Seeded construction of a product chart in a given class (p = q = 2,
/// flat factors). Scalings are drawn with enough coupling that the
/// classifier's thresholds are decisive.
ProductSpec seeded_product_spec(ProductKind kind, SplitMix64& rng);

/// Sphere-valued function family on the round chart: constant plus a member
/// of the first eigenfunction space,
/// G = c + sum_k c_k sin x_k prod_{j<k} cos x_j + c_last prod_j cos x_j.
struct GFamily {
    int p = 0;
    std::vector<double> coeffs; // size p+2: c, c_1..c_p, c_last

    GFamily(int dim, std::vector<double> cs);

    Jet evaluate(const std::vector<Jet>& x) const;
    double c() const { return coeffs[0]; }
};

struct GProbeResult {
    double hess_residual = 0.0;        // orthonormal-frame Hessian equation residual
    double hess_residual_coords = 0.0; // coordinate-form residual
    double eikonal_min = 0.0;          // min over grid of |  |grad G|^2 - c(2G - c) |
    double eikonal_max = 0.0;
};

GProbeResult g_family_probe(const GFamily& fam, const std::vector<ChartPoint>& grid,
                            const Tolerances& tol = {});

/// Sweep of unit spheres centered along a planar curve whose tangent angle
/// is the chart parameter and whose speed is the profile A; the induced
/// metric has the closed block form with P = A(s) + prod cos y.
struct SweepFixture {
    int n = 0;
    MapSpec immersion;         // chart (s, y_2, ..., y_n)
    MetricFamily closed_metric;
    std::function<double(const ChartPoint&)> kappa_profile; // closed kappa_1
};

SweepFixture sweep_fixture(int n, std::function<Jet(const Jet&)> profile_jet,
                           std::function<double(double)> profile_value,
                           const std::string& label = "sphere-sweep");

/// One row of the closed-form fixture comparison suite.
struct FixtureResult {
    std::string id;
    double max_discrepancy = 0.0;
    double tolerance = 0.0;
    bool informational = false;
    bool pass = false;
};

/// Every connection/sectional/metric fixture evaluated both ways on seeded
/// grids, plus the eigenfunction-family probe rows.
std::vector<FixtureResult> run_fixture_tables(const Tolerances& tol, std::uint64_t seed);

} // namespace rsv

#endif
