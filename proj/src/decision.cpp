#include "psim/decision.hpp"

#include <algorithm>

namespace psim {

std::string_view to_string(DiscardReason reason) {
    switch (reason) {
    case DiscardReason::NotPerformable: return "NotPerformable";
    case DiscardReason::ContextInappropriate: return "ContextInappropriate";
    case DiscardReason::DisturbsOther: return "DisturbsOther";
    case DiscardReason::DisturbedByOther: return "DisturbedByOther";
    }
    return "NotPerformable";
}

bool discard_reason_from_string(std::string_view text, DiscardReason& out) {
    if (text == "NotPerformable") {
        out = DiscardReason::NotPerformable;
    } else if (text == "ContextInappropriate") {
        out = DiscardReason::ContextInappropriate;
    } else if (text == "DisturbsOther") {
        out = DiscardReason::DisturbsOther;
    } else if (text == "DisturbedByOther") {
        out = DiscardReason::DisturbedByOther;
    } else {
        return false;
    }
    return true;
}

double effective_weight(const Practice& practice, const WeightOverrides& overrides) {
    auto it = overrides.find(practice.id);
    return it != overrides.end() ? it->second : practice.preference_weight;
}

std::vector<std::string> ordered_practices(const Registry& registry,
                                           const WeightOverrides& overrides) {
    std::vector<const Practice*> order;
    order.reserve(registry.practices.size());
    for (const auto& p : registry.practices)
        order.push_back(&p);
    std::sort(order.begin(), order.end(), [&overrides](const Practice* a, const Practice* b) {
        double wa = effective_weight(*a, overrides);
        double wb = effective_weight(*b, overrides);
        if (wa != wb)
            return wa > wb;
        return a->id < b->id;
    });
    std::vector<std::string> ids;
    ids.reserve(order.size());
    for (const auto* p : order)
        ids.push_back(p->id);
    return ids;
}

namespace {

bool context_allows(const Belief& belief, const Registry& registry, const std::string& practice) {
    if (!belief.context)
        return true;  // no interpretation yet, nothing to restrict against
    const ContextDefinition* ctx = registry.find_context(*belief.context);
    return ctx != nullptr && ctx->appropriate.count(practice) > 0;
}

} // namespace

std::vector<std::string> candidate_set(const std::set<std::string>& endowment,
                                       const Belief& belief,
                                       const Registry& registry,
                                       const DecisionParams& params,
                                       const WeightOverrides& overrides) {
    (void)params;  // the single ordering policy
    std::vector<std::string> candidates;
    for (const auto& pid : ordered_practices(registry, overrides)) {
        const Practice* p = registry.find_practice(pid);
        if (!performable(endowment, *p))
            continue;
        if (!context_allows(belief, registry, pid))
            continue;
        candidates.push_back(pid);
    }
    return candidates;
}

CheckResult disturbance_check(const std::string& practice,
                              const std::vector<NeighborPerformance>& neighbor_performances,
                              const DisturbanceMatrix& matrix) {
    CheckResult result;
    const size_t self = matrix.index_of(practice);
    for (const auto& np : neighbor_performances) {
        const size_t other = matrix.index_of(np.practice);
        if (matrix.at(self, other))
            result.disturbs.push_back(np);
        if (matrix.at(other, self))
            result.disturbed_by.push_back(np);
    }
    return result;
}

Decision decide(const std::set<std::string>& endowment,
                const Belief& belief,
                const std::vector<NeighborPerformance>& neighbor_performances,
                const Registry& registry,
                const DisturbanceMatrix& matrix,
                const DecisionParams& params,
                const WeightOverrides& overrides,
                double uniform_draw) {
    Decision decision;
    const bool override_filters = uniform_draw < params.epsilon;
    std::vector<std::string> not_performable;

    for (const auto& pid : ordered_practices(registry, overrides)) {
        const Practice* p = registry.find_practice(pid);
        if (!performable(endowment, *p)) {
            not_performable.push_back(pid);
            continue;
        }
        if (override_filters) {
            decision.action = pid;
            decision.override_used = true;
            return decision;
        }
        if (!context_allows(belief, registry, pid)) {
            decision.trace.push_back({pid, DiscardReason::ContextInappropriate});
            continue;
        }
        CheckResult check = disturbance_check(pid, neighbor_performances, matrix);
        if (!check.ok()) {
            decision.trace.push_back({pid, check.disturbs.empty()
                                               ? DiscardReason::DisturbedByOther
                                               : DiscardReason::DisturbsOther});
            continue;
        }
        decision.action = pid;
        return decision;
    }

    // Idle. Practices the agent could not perform at all only explain the
    // idleness when nothing was performable; otherwise the trace holds the
    // weighed-and-discarded candidates alone.
    if (decision.trace.empty() && !not_performable.empty())
        for (auto& pid : not_performable)
            decision.trace.push_back({std::move(pid), DiscardReason::NotPerformable});
    return decision;
}

} // namespace psim
