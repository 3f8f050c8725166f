#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psim/rng.hpp"

namespace psim {

// Moore neighborhoods: agents within Chebyshev distance <= radius.
struct GridTopology {
    int width = 1;
    int height = 1;
    int radius = 1;
    bool torus = false;

    int cell_count() const { return width * height; }
    int cell_index(int x, int y) const { return y * width + x; }

    bool operator==(const GridTopology&) const = default;
};

struct NetworkTopology {
    std::vector<std::pair<std::string, std::string>> edges;  // undirected

    bool operator==(const NetworkTopology&) const = default;
};

using Topology = std::variant<GridTopology, NetworkTopology>;

// agent id -> row-major grid cell, at most one agent per cell. Unused for
// network topologies, where an agent simply is its node.
struct Placement {
    std::map<std::string, int> cell_of;
    std::map<int, std::string> agent_at;

    // throws std::invalid_argument if the cell is already taken
    void put(const std::string& agent, int cell);
    void move(const std::string& agent, int cell);

    bool operator==(const Placement&) const = default;
};

enum class MovementPolicy { None, RandomWalk };

// Surrounding agents, ascending by id. Grid: Chebyshev distance <= radius,
// wrapping iff torus, self excluded. Network: adjacent nodes. Throws
// std::invalid_argument for a grid agent without a placement.
std::vector<std::string> neighbors(const Topology& topology,
                                   const Placement& placement,
                                   const std::string& agent);

// RandomWalk moves the agent to a uniformly drawn empty cell among its (at
// most 8) adjacent cells, consuming one bounded draw; no draw happens when
// every adjacent cell is occupied. Grid only; None is the identity.
void move_agent(const Topology& topology,
                Placement& placement,
                const std::string& agent,
                MovementPolicy policy,
                Pcg32& rng);

} // namespace psim
