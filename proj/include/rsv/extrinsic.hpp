// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_EXTRINSIC_HPP
#define RSV_EXTRINSIC_HPP

#include "rsv/intrinsic.hpp"

namespace rsv {

/// Hypersurface data of an immersion into Euclidean (n+1)-space at a point.
/// The unit normal completes the coordinate frame to a positively oriented
/// ambient basis; h and everything derived from it refer to that normal.
struct ExtrinsicData {
    int n = 0;

    std::vector<double> position; // ambient coordinates of the point
    Mat jacobian;                 // (n+1) x n, columns are coordinate tangents
    MetricData metric;            // induced metric with partials

    std::vector<double> normal; // unit, ambient components
    Mat dnormal;                // dnormal.at(i,a) = d_i N^a

    Mat h;                      // scalar second fundamental form against N
    Ten3 dh;                    // dh.at(k,i,j) = d_k h_ij
    Mat shape;                  // A = g^{-1} h
    std::vector<double> kappas; // principal curvatures, ascending
    Mat principal_dirs;         // generalized eigenvectors, g-orthonormal columns
    double alpha = 0.0;         // mean curvature, trace(A)/n
    double rho = 0.0;           // support function <x, N>

    std::vector<double> xT; // tangential position, chart components
    Mat dxT;                // dxT.at(j,i) = d_j xT^i
    double xPerp_norm = 0.0;

    /// Ambient reconstruction residual of x = sum xT^i dL_i + rho N.
    double split_residual() const;
};

ExtrinsicData extrinsic_data(const MapSpec& spec, const ChartPoint& p,
                             const Tolerances& tol = {});

/// Ricci tensor from shape data alone: (trace A) h - h g^{-1} h.
Mat gauss_equation_ricci(const ExtrinsicData& e, const Tolerances& tol = {});

/// |(nabla_i h)(j,k) - (nabla_j h)(i,k)| for one index triple.
double codazzi_residual(const ExtrinsicData& e, const ChristoffelData& c, int i, int j, int k);

/// Max Codazzi residual over all index triples.
double codazzi_residual_max(const ExtrinsicData& e, const ChristoffelData& c);

/// Tangential chart components and support function of the position vector.
std::pair<std::vector<double>, double> position_split(const MapSpec& spec, const ChartPoint& p,
                                                      const Tolerances& tol = {});

/// Principal curvatures merged into clusters of nearby values.
std::vector<double> cluster_curvatures(const std::vector<double>& kappas, double width);

} // namespace rsv

#endif
