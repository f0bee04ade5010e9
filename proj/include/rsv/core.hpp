// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_CORE_HPP
#define RSV_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsv {

/// Failure categories surfaced by the geometry pipeline. Every throwing path
/// in the library uses Error with one of these kinds; the C API maps them to
/// status codes and the CLI maps those to exit codes.
enum class ErrorKind {
    DomainViolation,
    SingularMetric,
    RankDeficient,
    DegeneratePlane,
    BadParameter,
    EmptyGrid,
    NonPositiveScaling,
    InconclusiveClassification,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Central tolerance record. Defaults are the values the verification
/// pipeline was calibrated with; suites may tighten or loosen uniformly.
struct Tolerances {
    double eps_domain = 1e-9;     // guard for division, sqrt, tan near singularities
    double eps_posdef = 1e-10;    // smallest admissible metric eigenvalue
    double rank_sigma_min = 1e-8; // smallest admissible Jacobian singular value
    double tau_accept = 1e-6;     // soliton residual below this certifies
    double tau_reject = 1e-2;     // best-lambda residual above this rejects
    double fixture_tol = 1e-8;    // closed-form vs numeric fixture agreement
    double cluster_tol = 1e-6;    // principal-curvature cluster merge width
    double steady_band = 1e-9;    // |lambda| below this counts as steady
    double umbilic_tol = 1e-8;    // foliation residual below: property holds
    double umbilic_reject = 1e-4; // foliation residual above: property fails
    double plane_tol = 1e-12;     // sectional-curvature plane degeneracy
};

/// splitmix64: the one PRNG used by every randomized suite. 64-bit state,
/// identical stream on every platform for a fixed seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

/// Dense row-major matrix, sized for chart dimensions (n <= 8).
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

struct Ten3 {
    int n1 = 0, n2 = 0, n3 = 0;
    std::vector<double> a;

    Ten3() = default;
    Ten3(int a1, int a2, int a3)
        : n1(a1), n2(a2), n3(a3), a(static_cast<std::size_t>(a1) * a2 * a3, 0.0) {}

    double& at(int i, int j, int k) {
        return a[(static_cast<std::size_t>(i) * n2 + j) * n3 + k];
    }
    double at(int i, int j, int k) const {
        return a[(static_cast<std::size_t>(i) * n2 + j) * n3 + k];
    }
};

struct Ten4 {
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    std::vector<double> a;

    Ten4() = default;
    Ten4(int a1, int a2, int a3, int a4)
        : n1(a1), n2(a2), n3(a3), n4(a4),
          a(static_cast<std::size_t>(a1) * a2 * a3 * a4, 0.0) {}

    double& at(int i, int j, int k, int l) {
        return a[((static_cast<std::size_t>(i) * n2 + j) * n3 + k) * n4 + l];
    }
    double at(int i, int j, int k, int l) const {
        return a[((static_cast<std::size_t>(i) * n2 + j) * n3 + k) * n4 + l];
    }
};

} // namespace rsv

#endif
