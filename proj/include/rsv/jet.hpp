// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_JET_HPP
#define RSV_JET_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "rsv/core.hpp"

namespace rsv {

/// Truncated Taylor data of a scalar expression in `nvars` chart variables,
/// carried to total derivative order 3. All arithmetic below propagates the
/// full third-order data exactly (to roundoff), which is what curvature of an
/// induced metric ultimately consumes: second derivatives of the metric need
/// third derivatives of the immersion.
///
/// Storage is dense with both symmetric mirrors written, so index swaps in
/// the second- and third-order blocks compare bit-identically.
class Jet {
public:
    Jet() = default;

    Jet(int nvars, double value)
        : n_(nvars), val(value), g(static_cast<std::size_t>(nvars), 0.0),
          h(static_cast<std::size_t>(nvars) * nvars, 0.0),
          t(static_cast<std::size_t>(nvars) * nvars * nvars, 0.0) {}

    static Jet constant(int nvars, double value) { return Jet(nvars, value); }

    /// Seed coordinate `index` at `value`: first derivative e_index, rest zero.
    static Jet variable(int nvars, int index, double value) {
        Jet j(nvars, value);
        j.g[static_cast<std::size_t>(index)] = 1.0;
        return j;
    }

    int nvars() const { return n_; }

    double val = 0.0;
    std::vector<double> g; // gradient, n entries
    std::vector<double> h; // second partials, n*n, symmetric
    std::vector<double> t; // third partials, n*n*n, symmetric

    double& H(int i, int j) { return h[static_cast<std::size_t>(i) * n_ + j]; }
    double H(int i, int j) const { return h[static_cast<std::size_t>(i) * n_ + j]; }
    double& T(int i, int j, int k) {
        return t[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    double T(int i, int j, int k) const {
        return t[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }

    bool finite() const;

private:
    int n_ = 0;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);

Jet operator+(const Jet& a, double c);
Jet operator+(double c, const Jet& a);
Jet operator-(const Jet& a, double c);
Jet operator-(double c, const Jet& a);
Jet operator*(const Jet& a, double c);
Jet operator*(double c, const Jet& a);
Jet operator/(const Jet& a, double c);
Jet operator/(double c, const Jet& a);

/// Chain rule for a univariate map applied to a jet; c0..c3 are the map's
/// value and first three derivatives at a.val.
Jet compose(const Jet& a, double c0, double c1, double c2, double c3);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet tan(const Jet& a);  // DomainViolation near poles
Jet exp(const Jet& a);
Jet log(const Jet& a);  // DomainViolation at or below the domain guard
Jet sqrt(const Jet& a); // DomainViolation at or below the domain guard
Jet pow_int(const Jet& a, int k);
Jet reciprocal(const Jet& a);

/// Order-3 Taylor data of a vector-valued map at a chart point.
struct Jet3 {
    int dim_in = 0, dim_out = 0;
    std::vector<double> value; // dim_out
    Mat d1;                    // dim_out x n
    Ten3 d2;                   // dim_out x n x n, symmetric in the chart pair
    Ten4 d3;                   // dim_out x n^3, symmetric in all chart indices
    bool valid = true;

    void ensure_valid(const std::string& label) const;
};

/// Chart coordinates of an evaluation point.
struct ChartPoint {
    std::vector<double> coords;

    int dim() const { return static_cast<int>(coords.size()); }
};

/// Per-coordinate open interval box.
struct DomainBox {
    std::vector<std::pair<double, double>> intervals;

    int dim() const { return static_cast<int>(intervals.size()); }
    bool contains(const ChartPoint& p, double margin = 0.0) const;
};

using JetMapFn = std::function<std::vector<Jet>(const std::vector<Jet>&)>;

/// A chart-parametrized map (immersion, scaling function, metric entry
/// family) carried as an evaluator in jet arithmetic. Evaluation is a pure
/// function of the point; identical points produce bit-identical jets.
struct MapSpec {
    int dim_in = 0;
    int dim_out = 0;
    DomainBox domain;
    std::string label;
    JetMapFn eval;

    /// Full order-3 jet of the map at `p`.
    Jet3 jet3(const ChartPoint& p) const;
};

/// Seed one jet variable per coordinate of `p`.
std::vector<Jet> seed_point(const ChartPoint& p);

/// Lift a scalar family (single-output evaluator) at a point.
Jet lift_scalar(const JetMapFn& f, const ChartPoint& p, const std::string& label = "scalar");

/// Lift an immersion; checks domain membership and output arity.
Jet3 lift_immersion(const MapSpec& spec, const ChartPoint& p);

/// Max |jet - central difference| per derivative order 1..3, the independent
/// cross-check of the jet kernel. Step must keep the stencil inside the
/// domain.
std::array<double, 3> fd_crosscheck(const MapSpec& spec, const ChartPoint& p, double step);

} // namespace rsv

#endif
