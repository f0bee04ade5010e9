// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_ENGINE_HPP
#define RSV_ENGINE_HPP

#include <cstdint>

#include "rsv/catalog.hpp"

namespace rsv {

/// One record of run configuration shared by every command.
struct RunConfig {
    Tolerances tol;
    std::uint64_t seed = 42;
    int grid_per_axis = 3;
    bool csv = false;
    bool inject_fault = false; // test-only negative control

    void validate() const;
};

/// status mirrors the process exit contract: 0 pass, 1 property failure,
/// 2 usage error, 3 numerical failure. output is a complete JSON or CSV
/// document either way; failures carry an error document.
struct CommandResult {
    int status = 0;
    std::string output;
};

CommandResult run_list(const RunConfig& cfg);
CommandResult run_verify(const std::string& id, const ParamMap& params, const RunConfig& cfg);
CommandResult run_fixtures(const RunConfig& cfg);
CommandResult run_scan(const std::string& id, const std::string& param, double lo, double hi,
                       int steps, const RunConfig& cfg);
CommandResult run_identity_suite(const RunConfig& cfg);

} // namespace rsv

#endif
