#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psim/decision.hpp"
#include "psim/registry.hpp"
#include "psim/topology.hpp"

namespace psim {

enum class ActivationPolicy { Ordered, Random };

struct ConsensusParams {
    double theta = 0.9;
    int window = 10;

    bool operator==(const ConsensusParams&) const = default;
};

// One simulated person: what they bring along, how they initially read the
// situation and which practices they personally prefer.
struct AgentSpec {
    std::string id;
    std::set<std::string> endowment;               // component ids
    std::optional<std::string> initial_belief;     // context id; absent = none yet
    WeightOverrides preferences;                   // practice id -> weight
    std::optional<std::pair<int, int>> cell;       // (x, y); explicit grid agents only

    bool operator==(const AgentSpec&) const = default;
};

// Population template expanded at world setup: count agents cycle through the
// archetypes round-robin and are placed by the chosen mode.
struct GeneratedPopulation {
    enum class PlacementMode { Scan, Random };

    int count = 0;
    std::vector<AgentSpec> archetypes;  // cell must be empty here
    PlacementMode placement = PlacementMode::Scan;

    bool operator==(const GeneratedPopulation&) const = default;
};

struct Population {
    std::vector<AgentSpec> agents;                  // explicit form
    std::optional<GeneratedPopulation> generated;   // generated form

    bool operator==(const Population&) const = default;
};

struct Scenario {
    int schema_version = 1;
    std::string name;
    Registry registry;
    Topology topology;
    Population population;
    DecisionParams decision;
    ActivationPolicy activation = ActivationPolicy::Ordered;
    MovementPolicy movement = MovementPolicy::None;
    ConsensusParams consensus;
    int64_t ticks = 0;  // default run length

    bool operator==(const Scenario&) const = default;
};

struct ParseResult {
    std::optional<Scenario> scenario;
    std::vector<Diagnostic> errors;

    bool ok() const { return scenario.has_value() && errors.empty(); }
};

// Strict parse of a scenario document (JSON). Unknown fields are rejected
// (E100), a missing or unsupported schema_version is rejected (E101); the
// document then goes through full semantic validation. Diagnostics carry the
// field path they refer to.
ParseResult parse_scenario(const std::string& text);

// Semantic validation of an already-built scenario: registry codes E001-E005
// plus cross-checks (population fits the topology, beliefs and endowments
// resolve, parameter ranges).
std::vector<Diagnostic> validate_scenario(const Scenario& scenario);

// Canonical document; parse_scenario(emit_scenario(s)) reproduces s exactly.
std::string emit_scenario(const Scenario& scenario);

uint64_t scenario_hash(const Scenario& scenario);
std::string scenario_hash_hex(const Scenario& scenario);

std::string to_string(ActivationPolicy policy);
std::string to_string(MovementPolicy policy);

} // namespace psim
