#include "psim/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace psim {

void Placement::put(const std::string& agent, int cell) {
    auto [it, inserted] = agent_at.try_emplace(cell, agent);
    if (!inserted)
        throw std::invalid_argument("cell " + std::to_string(cell) + " already holds agent " + it->second);
    cell_of[agent] = cell;
}

void Placement::move(const std::string& agent, int cell) {
    auto it = cell_of.find(agent);
    if (it == cell_of.end())
        throw std::invalid_argument("agent has no placement: " + agent);
    if (cell == it->second)
        return;
    if (agent_at.count(cell))
        throw std::invalid_argument("cell " + std::to_string(cell) + " is occupied");
    agent_at.erase(it->second);
    agent_at[cell] = agent;
    it->second = cell;
}

namespace {

// Cells at Chebyshev distance <= radius from (x, y), own cell excluded,
// deduplicated (wrapping can fold offsets onto the same cell), in scan order.
std::vector<int> cells_within(const GridTopology& grid, int x, int y, int radius) {
    std::vector<int> cells;
    std::set<int> seen;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (dx == 0 && dy == 0)
                continue;
            int nx = x + dx;
            int ny = y + dy;
            if (grid.torus) {
                nx = ((nx % grid.width) + grid.width) % grid.width;
                ny = ((ny % grid.height) + grid.height) % grid.height;
            } else if (nx < 0 || nx >= grid.width || ny < 0 || ny >= grid.height) {
                continue;
            }
            if (nx == x && ny == y)
                continue;
            int cell = grid.cell_index(nx, ny);
            if (seen.insert(cell).second)
                cells.push_back(cell);
        }
    }
    return cells;
}

} // namespace

std::vector<std::string> neighbors(const Topology& topology,
                                   const Placement& placement,
                                   const std::string& agent) {
    std::vector<std::string> result;
    if (const auto* grid = std::get_if<GridTopology>(&topology)) {
        auto it = placement.cell_of.find(agent);
        if (it == placement.cell_of.end())
            throw std::invalid_argument("agent has no placement: " + agent);
        const int x = it->second % grid->width;
        const int y = it->second / grid->width;
        for (int cell : cells_within(*grid, x, y, grid->radius)) {
            auto occupant = placement.agent_at.find(cell);
            if (occupant != placement.agent_at.end())
                result.push_back(occupant->second);
        }
    } else {
        const auto& net = std::get<NetworkTopology>(topology);
        for (const auto& [a, b] : net.edges) {
            if (a == agent)
                result.push_back(b);
            else if (b == agent)
                result.push_back(a);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

void move_agent(const Topology& topology,
                Placement& placement,
                const std::string& agent,
                MovementPolicy policy,
                Pcg32& rng) {
    if (policy == MovementPolicy::None)
        return;
    const auto* grid = std::get_if<GridTopology>(&topology);
    if (grid == nullptr)
        throw std::logic_error("random_walk movement requires a grid topology");
    auto it = placement.cell_of.find(agent);
    if (it == placement.cell_of.end())
        throw std::invalid_argument("agent has no placement: " + agent);
    const int x = it->second % grid->width;
    const int y = it->second / grid->width;

    std::vector<int> empty;
    for (int cell : cells_within(*grid, x, y, 1))
        if (!placement.agent_at.count(cell))
            empty.push_back(cell);
    if (empty.empty())
        return;
    placement.move(agent, empty[rng.next_below(static_cast<uint32_t>(empty.size()))]);
}

} // namespace psim
