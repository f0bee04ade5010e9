// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_IMMERSIONS_HPP
#define RSV_IMMERSIONS_HPP

#include <cmath>

#include "rsv/jet.hpp"

namespace rsv {

/// Nested polar chart of a sphere of the given radius jet:
/// (r sin a_1, r cos a_1 sin a_2, ..., r prod cos a_i).
/// Returns k+1 components for k angles.
inline std::vector<Jet> sphere_chain(const std::vector<Jet>& angles, const Jet& radius) {
    std::vector<Jet> out;
    Jet chain = radius;
    for (const Jet& a : angles) {
        out.push_back(chain * sin(a));
        chain = chain * cos(a);
    }
    out.push_back(chain);
    return out;
}

/// Latitude box trimmed away from polar degeneracy.
inline DomainBox trimmed_angles(int k, double half_width = M_PI / 2.0 - 1e-2) {
    DomainBox box;
    for (int i = 0; i < k; ++i) box.intervals.push_back({-half_width, half_width});
    return box;
}

/// Hyperplane through the origin: (u_1, ..., u_n, 0).
inline MapSpec hyperplane_immersion(int n) {
    MapSpec s;
    s.dim_in = n;
    s.dim_out = n + 1;
    s.label = "hyperplane";
    for (int i = 0; i < n; ++i) s.domain.intervals.push_back({-10.0, 10.0});
    s.eval = [n](const std::vector<Jet>& u) {
        std::vector<Jet> out(u.begin(), u.end());
        out.push_back(Jet::constant(n, 0.0));
        return out;
    };
    return s;
}

/// Hypersphere of radius r centered at the origin, nested polar chart.
inline MapSpec hypersphere_immersion(int n, double r) {
    MapSpec s;
    s.dim_in = n;
    s.dim_out = n + 1;
    s.label = "hypersphere";
    s.domain = trimmed_angles(n);
    s.eval = [n, r](const std::vector<Jet>& u) {
        return sphere_chain(u, Jet::constant(n, r));
    };
    return s;
}

/// S^k(r) x E^(n-k) inside E^(n+1).
inline MapSpec hypercylinder_immersion(int n, int k, double r) {
    MapSpec s;
    s.dim_in = n;
    s.dim_out = n + 1;
    s.label = "hypercylinder";
    s.domain = trimmed_angles(k);
    for (int i = k; i < n; ++i) s.domain.intervals.push_back({-10.0, 10.0});
    s.eval = [n, k, r](const std::vector<Jet>& u) {
        std::vector<Jet> angles(u.begin(), u.begin() + k);
        std::vector<Jet> out = sphere_chain(angles, Jet::constant(n, r));
        for (int i = k; i < n; ++i) out.push_back(u[static_cast<std::size_t>(i)]);
        return out;
    };
    return s;
}

/// Flat cone over a circle of half-angle beta, crossed with a Euclidean
/// factor for n > 2: (t sin(b) cos u, t sin(b) sin u, t cos b, z_3, ..., z_n).
inline MapSpec cone_immersion(int n, double beta, double t_min = 0.1) {
    MapSpec s;
    s.dim_in = n;
    s.dim_out = n + 1;
    s.label = "cone";
    s.domain.intervals.push_back({t_min, 10.0});
    s.domain.intervals.push_back({-M_PI, M_PI});
    for (int i = 2; i < n; ++i) s.domain.intervals.push_back({-10.0, 10.0});
    s.eval = [n, beta](const std::vector<Jet>& u) {
        std::vector<Jet> out;
        out.push_back(u[0] * std::sin(beta) * cos(u[1]));
        out.push_back(u[0] * std::sin(beta) * sin(u[1]));
        out.push_back(u[0] * std::cos(beta));
        for (int i = 2; i < n; ++i) out.push_back(u[static_cast<std::size_t>(i)]);
        return out;
    };
    return s;
}

/// Rotational hypersurface over a profile f(x_1):
/// (x_1, f sin x_2, f cos x_2 sin x_3, ..., f prod cos x_i).
inline MapSpec rotational_immersion(int n, std::function<Jet(const Jet&)> profile,
                                    std::pair<double, double> x1_range,
                                    const std::string& label) {
    MapSpec s;
    s.dim_in = n;
    s.dim_out = n + 1;
    s.label = label;
    s.domain.intervals.push_back(x1_range);
    for (int i = 1; i < n; ++i)
        s.domain.intervals.push_back({-M_PI / 2.0 + 1e-2, M_PI / 2.0 - 1e-2});
    s.eval = [n, profile](const std::vector<Jet>& u) {
        const Jet f = profile(u[0]);
        std::vector<Jet> angles(u.begin() + 1, u.end());
        std::vector<Jet> out{u[0]};
        for (Jet& c : sphere_chain(angles, f)) out.push_back(std::move(c));
        return out;
    };
    return s;
}

/// Graph hypersurface (u_1, ..., u_n, height(u)).
inline MapSpec graph_immersion(int n, JetMapFn height, const std::string& label = "graph") {
    MapSpec s;
    s.dim_in = n;
    s.dim_out = n + 1;
    s.label = label;
    for (int i = 0; i < n; ++i) s.domain.intervals.push_back({-10.0, 10.0});
    s.eval = [height](const std::vector<Jet>& u) {
        std::vector<Jet> out(u.begin(), u.end());
        out.push_back(height(u)[0]);
        return out;
    };
    return s;
}

/// Seeded family of smooth graph hypersurfaces used by the identity suites.
inline MapSpec random_graph_immersion(int n, SplitMix64& rng, const std::string& label) {
    struct Term {
        double amp;
        std::vector<double> freq;
        double phase;
    };
    std::vector<Term> terms;
    for (int t = 0; t < 3; ++t) {
        Term term;
        term.amp = rng.uniform(-0.4, 0.4);
        for (int i = 0; i < n; ++i) term.freq.push_back(rng.uniform(-1.2, 1.2));
        term.phase = rng.uniform(0.0, 2.0 * M_PI);
        terms.push_back(std::move(term));
    }
    return graph_immersion(
        n,
        [n, terms](const std::vector<Jet>& u) {
            Jet acc = Jet::constant(n, 0.0);
            for (const auto& t : terms) {
                Jet arg = Jet::constant(n, t.phase);
                for (int i = 0; i < n; ++i) arg = arg + t.freq[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
                acc = acc + t.amp * sin(arg);
            }
            return std::vector<Jet>{acc};
        },
        label);
}

} // namespace rsv

#endif
