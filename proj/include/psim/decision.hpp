#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "psim/context.hpp"
#include "psim/registry.hpp"

namespace psim {

enum class DiscardReason { NotPerformable, ContextInappropriate, DisturbsOther, DisturbedByOther };

std::string_view to_string(DiscardReason reason);
bool discard_reason_from_string(std::string_view text, DiscardReason& out);

struct TraceEntry {
    std::string practice;
    DiscardReason reason;

    bool operator==(const TraceEntry&) const = default;
};

// Only one ordering policy exists: effective preference weight descending,
// ties by ascending practice id.
enum class CandidateOrdering { PreferenceDesc };

struct DecisionParams {
    double epsilon = 0.0;  // probability of bypassing the context and disturbance filters
    CandidateOrdering ordering = CandidateOrdering::PreferenceDesc;

    bool operator==(const DecisionParams&) const = default;
};

struct NeighborPerformance {
    std::string agent;
    std::string practice;

    bool operator==(const NeighborPerformance&) const = default;
};

struct CheckResult {
    std::vector<NeighborPerformance> disturbs;      // performances the candidate would disturb
    std::vector<NeighborPerformance> disturbed_by;  // performances that would disturb it

    bool ok() const { return disturbs.empty() && disturbed_by.empty(); }
};

struct Decision {
    std::optional<std::string> action;  // practice id; nullopt = idle
    bool override_used = false;         // true only for performances that bypassed the filters
    std::vector<TraceEntry> trace;      // discards, in consideration order up to the choice
};

// agent-specific preference weights, overriding the registry defaults
using WeightOverrides = std::map<std::string, double>;

double effective_weight(const Practice& practice, const WeightOverrides& overrides);

// Every practice id, in ordering-policy order.
std::vector<std::string> ordered_practices(const Registry& registry,
                                           const WeightOverrides& overrides);

// Performable practices that fit the believed context (no context filter while
// the belief is empty), in ordering-policy order.
std::vector<std::string> candidate_set(const std::set<std::string>& endowment,
                                       const Belief& belief,
                                       const Registry& registry,
                                       const DecisionParams& params,
                                       const WeightOverrides& overrides = {});

// Both directions against the currently performed neighbor practices.
CheckResult disturbance_check(const std::string& practice,
                              const std::vector<NeighborPerformance>& neighbor_performances,
                              const DisturbanceMatrix& matrix);

// One agent-tick of the decision procedure. uniform_draw is the single
// Uniform[0,1) number budgeted for this call; the caller draws it so that
// replays stay aligned. With uniform_draw < epsilon the agent performs the
// first performable practice regardless of context or disturbance; otherwise
// practices are considered in ordering-policy order and the first one that is
// performable, context-appropriate and undisturbed is performed. Candidates
// that both disturb and are disturbed trace as DisturbsOther. The trace lists
// the candidates weighed and discarded before the choice; NotPerformable
// entries appear only when the agent idles with nothing performable at all.
Decision decide(const std::set<std::string>& endowment,
                const Belief& belief,
                const std::vector<NeighborPerformance>& neighbor_performances,
                const Registry& registry,
                const DisturbanceMatrix& matrix,
                const DecisionParams& params,
                const WeightOverrides& overrides,
                double uniform_draw);

} // namespace psim
