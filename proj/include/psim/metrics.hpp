#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psim/engine.hpp"

namespace psim {

enum class LogFormat { Csv, Jsonl };

bool log_format_from_string(const std::string& text, LogFormat& out);
std::string log_file_name(LogFormat format);

// CSV: the pinned header `tick,agent_id,action,practice_id,override,
// discard_trace,belief,belief_score`, one row per agent per tick, sorted by
// (tick, agent_id). Discard traces encode as `practice:reason;practice:reason`.
// JSONL: the run header object on the first line, then one tick object per
// line (fields documented in the README).
std::string emit_log(const MetricsLog& log, LogFormat format);

struct Summary {
    RunHeader header;
    double theta = 0.9;
    int window = 10;
    int64_t agent_count = 0;
    std::map<std::string, int64_t> performance_counts;  // practice -> performances
    int64_t idle_count = 0;
    std::map<std::string, std::map<std::string, int64_t>> discard_counts;  // practice -> reason -> n
    int64_t override_count = 0;
    int64_t checks_total = 0;   // disturbance checks implied by the log
    int64_t checks_passed = 0;
    std::optional<double> acceptability_rate;  // passed / total
    std::vector<std::pair<std::optional<std::string>, int64_t>> final_beliefs;
    std::optional<double> final_consensus;
    std::optional<int64_t> time_to_consensus;
};

// Per-practice and per-(practice, reason) counts, override count, the final
// belief distribution and time_to_consensus, all recomputed from the raw
// records.
Summary summarize(const MetricsLog& log, double theta, int window);

std::string emit_summary(const Summary& summary);

// Shortest round-trip decimal; integral values keep one decimal ("1.0").
std::string format_double(double value);

} // namespace psim
