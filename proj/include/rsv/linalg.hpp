// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_LINALG_HPP
#define RSV_LINALG_HPP

#include "rsv/core.hpp"

namespace rsv {

// Small dense symmetric kernels. Chart dimensions never exceed 8, so
// explicit solves and Jacobi iteration are used throughout; no external
// factorization library is linked.

/// Cholesky factor L (lower) of a symmetric positive definite matrix.
/// Throws SingularMetric when a pivot falls below eps * scale.
Mat cholesky(const Mat& g, double eps);

/// Solve L y = b with L lower triangular.
std::vector<double> forward_subst(const Mat& L, const std::vector<double>& b);

/// Solve L^T x = y with L lower triangular.
std::vector<double> back_subst_t(const Mat& L, const std::vector<double>& y);

/// Solve g x = b via Cholesky for symmetric positive definite g.
std::vector<double> solve_spd(const Mat& g, const std::vector<double>& b, double eps);

/// Inverse of a symmetric positive definite matrix.
Mat inverse_spd(const Mat& g, double eps);

/// All eigenvalues (ascending) of a symmetric matrix by cyclic Jacobi.
/// When vecs is non-null it receives the matching orthonormal eigenvectors
/// as columns.
std::vector<double> jacobi_eigenvalues(const Mat& s, Mat* vecs = nullptr);

/// Generalized symmetric eigenvalues of (h, g) with g positive definite,
/// via Cholesky reduction to a standard symmetric problem. Eigenvalues
/// ascending; vecs (optional) receives generalized eigenvectors v with
/// h v = kappa g v, g-orthonormal.
std::vector<double> generalized_eigenvalues(const Mat& h, const Mat& g, double eps,
                                            Mat* vecs = nullptr);

/// Determinant by Gaussian elimination with partial pivoting.
double determinant(Mat m);

/// Congruence transform L^{-1} M L^{-T} used to express symmetric bilinear
/// forms in a g-orthonormal frame (g = L L^T).
Mat pull_to_orthonormal(const Mat& m, const Mat& chol_g);

} // namespace rsv

#endif
