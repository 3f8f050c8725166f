#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psim/context.hpp"
#include "psim/decision.hpp"
#include "psim/registry.hpp"
#include "psim/scenario.hpp"
#include "psim/topology.hpp"

namespace psim {

inline constexpr const char* kEngineVersion = "psim/0.1.0";

// What one agent did during one tick, plus the belief it ended the tick with.
struct AgentTick {
    std::string agent;
    std::optional<std::string> action;  // practice id; nullopt = idle
    bool override_used = false;
    std::vector<TraceEntry> trace;
    Belief belief;

    bool operator==(const AgentTick&) const = default;
};

struct TickRecord {
    int64_t tick = 0;
    std::vector<AgentTick> entries;     // activation order
    std::optional<double> consensus;    // absent for empty worlds

    bool operator==(const TickRecord&) const = default;
};

struct RunHeader {
    std::string scenario_hash;
    uint64_t seed = 0;
    int64_t ticks = 0;
    std::string engine_version;

    bool operator==(const RunHeader&) const = default;
};

struct MetricsLog {
    RunHeader header;
    std::vector<TickRecord> records;

    bool operator==(const MetricsLog&) const = default;
};

struct World {
    Registry registry;
    DisturbanceMatrix matrix;
    Topology topology;
    Placement placement;
    std::vector<AgentSpec> agents;  // ascending id
    std::map<std::string, std::optional<std::string>> performances;
    std::map<std::string, Belief> beliefs;
    int64_t tick = 0;
    uint64_t master_seed = 0;
    DecisionParams decision;
    ActivationPolicy activation = ActivationPolicy::Ordered;
    MovementPolicy movement = MovementPolicy::None;
    ConsensusParams consensus;
};

struct WorldInit {
    std::optional<World> world;
    std::vector<Diagnostic> errors;

    bool ok() const { return world.has_value() && errors.empty(); }
};

// World at tick 0: everyone idle, beliefs as declared, the generated
// population (if any) expanded and placed. Draws for random placement come
// from the setup stream (phase 0) of the master seed.
WorldInit init_world(const Scenario& scenario, uint64_t seed);

// One tick. Agents activate in ascending-id order or in a freshly drawn
// permutation, and their updates are immediately visible to the agents
// activated after them: each agent first moves (when enabled), then reads the
// neighborhood's current performances, re-infers its context, and decides.
// All draws of tick t come from the tick stream (phase t+1), in activation
// order: optional shuffle, then per agent a movement draw (when applicable)
// followed by exactly one decision draw.
TickRecord step(World& world);

struct RunResult {
    std::optional<MetricsLog> log;
    std::vector<Diagnostic> errors;

    bool ok() const { return log.has_value() && errors.empty(); }
};

// init_world + `ticks` steps. Identical (scenario, seed, ticks) produce a
// byte-identical serialized log.
RunResult run(const Scenario& scenario, uint64_t seed, int64_t ticks);

} // namespace psim
