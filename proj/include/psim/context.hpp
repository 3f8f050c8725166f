#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psim/registry.hpp"

namespace psim {

// An agent's current interpretation of its surroundings. An empty context
// means the agent has not formed one yet; the score is the match fraction of
// the inference that produced the belief.
struct Belief {
    std::optional<std::string> context;
    double score = 0.0;

    bool operator==(const Belief&) const = default;
};

// observation: the practice ids currently performed in the agent's
// neighborhood (one entry per performing neighbor, idle neighbors absent).
//
// Each context is scored by the fraction of observed performances it lists
// as appropriate; the best-scoring context wins. An empty observation keeps
// the previous belief. Ties keep the previous context when it is among the
// maximizers, otherwise the lexicographically smallest context id wins.
//
// Requires a registry with at least one context; throws std::invalid_argument
// on an observed practice id missing from the registry (corrupt world state).
Belief infer_context(const std::vector<std::string>& observation,
                     const Registry& registry,
                     const Belief& previous);

// Fraction of agents sharing the modal belief value; "no context yet" counts
// as a value of its own. Throws std::invalid_argument on an empty list.
double consensus_index(const std::vector<Belief>& beliefs);

// Smallest t such that the consensus series stays >= theta over [t, t+window).
// The window must fit inside the series.
std::optional<int64_t> time_to_consensus(const std::vector<double>& series,
                                         double theta, int window);

} // namespace psim
