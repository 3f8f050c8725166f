#include "psim/context.hpp"

#include <map>
#include <stdexcept>

namespace psim {

Belief infer_context(const std::vector<std::string>& observation,
                     const Registry& registry,
                     const Belief& previous) {
    if (registry.contexts.empty())
        throw std::invalid_argument("infer_context requires at least one context");
    if (observation.empty())
        return previous;

    for (const auto& pid : observation)
        if (registry.find_practice(pid) == nullptr)
            throw std::invalid_argument("observed practice id not in registry: " + pid);

    double best = -1.0;
    std::vector<const ContextDefinition*> maximizers;
    for (const auto& ctx : registry.contexts) {
        size_t matches = 0;
        for (const auto& pid : observation)
            if (ctx.appropriate.count(pid))
                ++matches;
        double score = static_cast<double>(matches) / static_cast<double>(observation.size());
        if (score > best) {
            best = score;
            maximizers.assign(1, &ctx);
        } else if (score == best) {
            maximizers.push_back(&ctx);
        }
    }

    // hysteresis: a tied previous context stays
    if (previous.context) {
        for (const auto* ctx : maximizers)
            if (ctx->id == *previous.context)
                return Belief{ctx->id, best};
    }
    const ContextDefinition* winner = maximizers.front();
    for (const auto* ctx : maximizers)
        if (ctx->id < winner->id)
            winner = ctx;
    return Belief{winner->id, best};
}

double consensus_index(const std::vector<Belief>& beliefs) {
    if (beliefs.empty())
        throw std::invalid_argument("consensus_index of an empty belief list");
    std::map<std::optional<std::string>, size_t> counts;
    for (const auto& b : beliefs)
        counts[b.context]++;
    size_t modal = 0;
    for (const auto& [value, count] : counts)
        modal = std::max(modal, count);
    return static_cast<double>(modal) / static_cast<double>(beliefs.size());
}

std::optional<int64_t> time_to_consensus(const std::vector<double>& series,
                                         double theta, int window) {
    if (window < 1)
        throw std::invalid_argument("time_to_consensus window must be >= 1");
    if (series.size() < static_cast<size_t>(window))
        return std::nullopt;
    size_t run = 0;  // ticks >= theta ending at the current index
    for (size_t t = 0; t < series.size(); ++t) {
        run = series[t] >= theta ? run + 1 : 0;
        if (run >= static_cast<size_t>(window))
            return static_cast<int64_t>(t + 1 - static_cast<size_t>(window));
    }
    return std::nullopt;
}

} // namespace psim
