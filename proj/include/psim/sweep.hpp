#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psim/metrics.hpp"
#include "psim/scenario.hpp"

namespace psim {

// One swept field: a dotted path into the scenario document plus the value
// literals to substitute (parsed as JSON scalars, falling back to strings).
struct SweepParam {
    std::string path;
    std::vector<std::string> values;
};

struct SweepRow {
    std::vector<std::string> values;  // one literal per param, as substituted
    uint64_t seed = 0;
    Summary summary;
};

struct SweepTable {
    std::vector<std::string> param_paths;
    std::vector<std::string> practice_ids;  // per-practice count columns
    std::vector<SweepRow> rows;
};

struct SweepResult {
    std::optional<SweepTable> table;
    std::vector<Diagnostic> errors;

    bool ok() const { return table.has_value() && errors.empty(); }
};

// Cartesian grid x seeds. All parameter paths are resolved and all scenario
// variants validated before any run starts; unknown paths fail with zero runs
// executed. Row order is deterministic: grid points in odometer order over
// the given value lists, seeds ascending within each point.
//
// Runs are independent; jobs > 1 executes them OpenMP-parallel. The serial
// path is the reference: both fill the same pre-sized row slots, so the
// resulting table is identical regardless of jobs.
SweepResult sweep(const Scenario& base, const std::vector<SweepParam>& grid,
                  std::vector<uint64_t> seeds, int jobs);

SweepResult sweep_serial(const Scenario& base, const std::vector<SweepParam>& grid,
                         std::vector<uint64_t> seeds);

std::string sweep_to_csv(const SweepTable& table);

} // namespace psim
