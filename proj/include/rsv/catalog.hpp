// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_CATALOG_HPP
#define RSV_CATALOG_HPP

#include <map>
#include <optional>

#include "rsv/soliton.hpp"

namespace rsv {

using ParamMap = std::map<std::string, double>;

struct ParamSpec {
    std::string name;
    double def = 0.0;
    double lo = 0.0, hi = 0.0;
    bool integer = false;
    bool optional = false; // resolved by the entry when absent
};

struct ExpectedBehavior {
    enum class Kind { Soliton, NotSoliton, Probe } kind = Kind::Probe;
    std::optional<double> lambda;
    Classification classification = Classification::None;
    std::string note;
};

/// A named, parametrized immersion family with expected-behavior metadata
/// and a safe evaluation box for default grids.
struct CatalogEntry {
    std::string id;
    std::string description;
    std::vector<ParamSpec> params;
    std::function<MapSpec(const ParamMap&)> build;
    std::function<ExpectedBehavior(const ParamMap&)> expected;
    std::function<std::vector<std::pair<double, double>>(const ParamMap&)> safe_box;
};

/// Stable, id-sorted registry.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry& catalog_find(const std::string& id);

/// Merge defaults with user parameters and validate ranges; BadParameter
/// carries the violated range.
ParamMap catalog_resolve_params(const CatalogEntry& entry, const ParamMap& user);

MapSpec catalog_build(const std::string& id, const ParamMap& user);

ExpectedBehavior catalog_expected(const std::string& id, const ParamMap& user);

/// Tensor grid over the entry's safe box, per_axis points per coordinate.
std::vector<ChartPoint> catalog_grid(const CatalogEntry& entry, const ParamMap& resolved,
                                     int per_axis);

} // namespace rsv

#endif
