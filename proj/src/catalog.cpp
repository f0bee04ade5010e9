// SPDX-License-Identifier: Apache-2.0
#include "rsv/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsv/immersions.hpp"
#include "rsv/products.hpp"

namespace rsv {

namespace {

int as_int(double v) { return static_cast<int>(std::llround(v)); }

std::vector<std::pair<double, double>> angle_box(int count, double half) {
    return std::vector<std::pair<double, double>>(static_cast<std::size_t>(count), {-half, half});
}

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> es;

    {
        CatalogEntry e;
        e.id = "hyperplane";
        e.description = "hyperplane through the origin";
        e.params = {{"n", 2, 2, 6, true}};
        e.build = [](const ParamMap& p) { return hyperplane_immersion(as_int(p.at("n"))); };
        e.expected = [](const ParamMap&) {
            return ExpectedBehavior{ExpectedBehavior::Kind::Soliton, 1.0,
                                    Classification::Shrinking,
                                    "flat trivial case, constant 1"};
        };
        e.safe_box = [](const ParamMap& p) {
            return std::vector<std::pair<double, double>>(static_cast<std::size_t>(as_int(p.at("n"))),
                                                          {-1.0, 1.0});
        };
        es.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "hypersphere";
        e.description = "hypersphere of radius r centered at the origin";
        e.params = {{"n", 2, 2, 5, true}, {"r", 1.0, 1e-3, 100.0, false}};
        e.build = [](const ParamMap& p) {
            return hypersphere_immersion(as_int(p.at("n")), p.at("r"));
        };
        e.expected = [](const ParamMap& p) {
            const double n = p.at("n"), r = p.at("r");
            return ExpectedBehavior{ExpectedBehavior::Kind::Soliton, (n - 1.0) / (r * r),
                                    Classification::Shrinking,
                                    "round soliton, constant (n-1)/r^2"};
        };
        e.safe_box = [](const ParamMap& p) { return angle_box(as_int(p.at("n")), 0.6); };
        es.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "cone-flat";
        e.description = "flat cone over a circle crossed with a Euclidean factor";
        e.params = {{"n", 2, 2, 5, true}, {"beta", M_PI / 4.0, 0.05, 1.47, false}};
        e.build = [](const ParamMap& p) {
            return cone_immersion(as_int(p.at("n")), p.at("beta"));
        };
        e.expected = [](const ParamMap&) {
            return ExpectedBehavior{ExpectedBehavior::Kind::Soliton, 1.0,
                                    Classification::Shrinking,
                                    "ruled witness through the origin, constant 1"};
        };
        e.safe_box = [](const ParamMap& p) {
            std::vector<std::pair<double, double>> box{{0.1, 2.0}, {-1.0, 1.0}};
            for (int i = 2; i < as_int(p.at("n")); ++i) box.push_back({-1.0, 1.0});
            return box;
        };
        es.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "circular-hypercylinder";
        e.description = "circle of radius r crossed with a Euclidean factor";
        e.params = {{"n", 3, 2, 5, true}, {"r", 1.0, 1e-3, 100.0, false}};
        e.build = [](const ParamMap& p) {
            return hypercylinder_immersion(as_int(p.at("n")), 1, p.at("r"));
        };
        e.expected = [](const ParamMap&) {
            return ExpectedBehavior{ExpectedBehavior::Kind::Probe, std::nullopt,
                                    Classification::None,
                                    "claimed trivial soliton for every radius; the oracle "
                                    "measures the per-direction requirements"};
        };
        e.safe_box = [](const ParamMap& p) {
            std::vector<std::pair<double, double>> box{{-1.0, 1.0}};
            for (int i = 1; i < as_int(p.at("n")); ++i) box.push_back({-1.0, 1.0});
            return box;
        };
        es.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "spherical-hypercylinder";
        e.description = "sphere factor crossed with a Euclidean factor; the soliton "
                        "variant locks the radius to sqrt(k-1)";
        e.params = {{"n", 4, 3, 6, true},
                    {"k", 2, 2, 5, true},
                    {"r", 0.0, 0.0, 100.0, false, true}};
        auto resolve_r = [](const ParamMap& p) {
            const double r = p.at("r");
            return r > 0.0 ? r : std::sqrt(p.at("k") - 1.0);
        };
        e.build = [resolve_r](const ParamMap& p) {
            const int n = as_int(p.at("n")), k = as_int(p.at("k"));
            if (k > n - 1) fail(ErrorKind::BadParameter, "k must satisfy 2 <= k <= n-1");
            return hypercylinder_immersion(n, k, resolve_r(p));
        };
        e.expected = [resolve_r](const ParamMap& p) {
            const double r = resolve_r(p), k = p.at("k");
            if (std::fabs(r - std::sqrt(k - 1.0)) <= 1e-12)
                return ExpectedBehavior{ExpectedBehavior::Kind::Soliton, 1.0,
                                        Classification::Shrinking,
                                        "product soliton at constant 1"};
            return ExpectedBehavior{ExpectedBehavior::Kind::NotSoliton, std::nullopt,
                                    Classification::None,
                                    "sphere and flat directions disagree away from the "
                                    "locked radius"};
        };
        e.safe_box = [](const ParamMap& p) {
            const int n = as_int(p.at("n")), k = as_int(p.at("k"));
            std::vector<std::pair<double, double>> box = angle_box(k, 0.5);
            for (int i = k; i < n; ++i) box.push_back({-1.0, 1.0});
            return box;
        };
        es.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "rotational-case-i";
        e.description = "rotational hypersurface over the profile sqrt(1 + b^2 x1^2)";
        e.params = {{"n", 3, 2, 4, true}, {"b", 1.0, 0.05, 5.0, false}};
        e.build = [](const ParamMap& p) {
            return rotational_family_immersion(RotationalFamily::HyperbolicProfile,
                                               as_int(p.at("n")), p.at("b"), 0.0);
        };
        e.expected = [](const ParamMap&) {
            return ExpectedBehavior{ExpectedBehavior::Kind::NotSoliton, std::nullopt,
                                    Classification::None,
                                    "soliton quantity varies along the profile"};
        };
        e.safe_box = [](const ParamMap& p) {
            std::vector<std::pair<double, double>> box{{0.1, 1.5}};
            for (int i = 1; i < as_int(p.at("n")); ++i) box.push_back({-0.5, 0.5});
            return box;
        };
        es.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "rotational-case-ii";
        e.description = "rotational hypersurface over the circular profile "
                        "sqrt(b^2 - (x1 - c)^2)";
        e.params = {{"n", 3, 2, 4, true},
                    {"b", 2.0, 0.05, 5.0, false},
                    {"c", 0.0, -5.0, 5.0, false}};
        e.build = [](const ParamMap& p) {
            return rotational_family_immersion(RotationalFamily::CircularProfile,
                                               as_int(p.at("n")), p.at("b"), p.at("c"));
        };
        e.expected = [](const ParamMap& p) {
            const double n = p.at("n"), b = p.at("b"), c = p.at("c");
            if (c == 0.0)
                return ExpectedBehavior{ExpectedBehavior::Kind::Soliton, (n - 1.0) / (b * b),
                                        Classification::Shrinking,
                                        "centered profile closes to a hypersphere"};
            return ExpectedBehavior{ExpectedBehavior::Kind::NotSoliton, std::nullopt,
                                    Classification::None,
                                    "off-center profile, non-constant soliton quantity"};
        };
        e.safe_box = [](const ParamMap& p) {
            const double b = p.at("b"), c = p.at("c");
            std::vector<std::pair<double, double>> box{{c - 0.55 * b, c + 0.55 * b}};
            for (int i = 1; i < as_int(p.at("n")); ++i) box.push_back({-0.5, 0.5});
            return box;
        };
        es.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "sphere-sweep";
        e.description = "unit spheres swept along a planar curve with constant speed a";
        e.params = {{"n", 3, 2, 4, true}, {"a", 2.0, 0.3, 10.0, false}};
        e.build = [](const ParamMap& p) {
            const double a = p.at("a");
            return sweep_fixture(
                       as_int(p.at("n")),
                       [a](const Jet& s) { return Jet::constant(s.nvars(), a) + 0.0 * s; },
                       [a](double) { return a; })
                .immersion;
        };
        e.expected = [](const ParamMap&) {
            return ExpectedBehavior{ExpectedBehavior::Kind::NotSoliton, std::nullopt,
                                    Classification::None,
                                    "sweep family, direction requirements split"};
        };
        e.safe_box = [](const ParamMap& p) {
            std::vector<std::pair<double, double>> box{{-1.0, 1.0}};
            for (int i = 1; i < as_int(p.at("n")); ++i) box.push_back({-0.45, 0.45});
            return box;
        };
        es.push_back(std::move(e));
    }

    std::sort(es.begin(), es.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
    return es;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = make_entries();
    return entries;
}

const CatalogEntry& catalog_find(const std::string& id) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.id == id) return e;
    fail(ErrorKind::BadParameter, "unknown catalog entry: " + id);
}

ParamMap catalog_resolve_params(const CatalogEntry& entry, const ParamMap& user) {
    ParamMap out;
    for (const ParamSpec& ps : entry.params) out[ps.name] = ps.def;
    for (const auto& [k, v] : user) {
        const auto it =
            std::find_if(entry.params.begin(), entry.params.end(),
                         [&k](const ParamSpec& ps) { return ps.name == k; });
        if (it == entry.params.end())
            fail(ErrorKind::BadParameter, entry.id + ": unknown parameter " + k);
        if (!(v >= it->lo && v <= it->hi)) {
            std::ostringstream os;
            os << entry.id << ": parameter " << k << "=" << v << " outside [" << it->lo << ", "
               << it->hi << "]";
            fail(ErrorKind::BadParameter, os.str());
        }
        if (it->integer && v != std::llround(v))
            fail(ErrorKind::BadParameter, entry.id + ": parameter " + k + " must be an integer");
        out[k] = v;
    }
    return out;
}

MapSpec catalog_build(const std::string& id, const ParamMap& user) {
    const CatalogEntry& e = catalog_find(id);
    return e.build(catalog_resolve_params(e, user));
}

ExpectedBehavior catalog_expected(const std::string& id, const ParamMap& user) {
    const CatalogEntry& e = catalog_find(id);
    return e.expected(catalog_resolve_params(e, user));
}

std::vector<ChartPoint> catalog_grid(const CatalogEntry& entry, const ParamMap& resolved,
                                     int per_axis) {
    const auto box = entry.safe_box(resolved);
    std::vector<ChartPoint> pts{ChartPoint{}};
    for (const auto& [lo, hi] : box) {
        std::vector<ChartPoint> next;
        for (const ChartPoint& p : pts)
            for (int i = 0; i < per_axis; ++i) {
                ChartPoint q = p;
                q.coords.push_back(lo + (hi - lo) * (i + 0.5) / per_axis);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    return pts;
}

} // namespace rsv
