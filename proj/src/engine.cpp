#include "psim/engine.hpp"

#include <algorithm>
#include <cstdio>

#include "psim/rng.hpp"

namespace psim {

namespace {

std::string generated_agent_id(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "a%04d", index);
    return buf;
}

} // namespace

WorldInit init_world(const Scenario& scenario, uint64_t seed) {
    WorldInit init;
    init.errors = validate_scenario(scenario);
    if (!init.errors.empty())
        return init;

    World world;
    world.registry = scenario.registry;
    world.matrix = compile_disturbance(scenario.registry);
    world.topology = scenario.topology;
    world.decision = scenario.decision;
    world.activation = scenario.activation;
    world.movement = scenario.movement;
    world.consensus = scenario.consensus;
    world.master_seed = seed;
    world.tick = 0;

    Pcg32 setup_rng = make_stream(seed, 0, 0);
    const auto* grid = std::get_if<GridTopology>(&scenario.topology);

    if (scenario.population.generated) {
        const auto& gen = *scenario.population.generated;
        std::vector<int> cells;
        if (grid != nullptr) {
            cells.resize(static_cast<size_t>(grid->cell_count()));
            for (size_t i = 0; i < cells.size(); ++i)
                cells[i] = static_cast<int>(i);
            if (gen.placement == GeneratedPopulation::PlacementMode::Random)
                shuffle(cells, setup_rng);
        }
        for (int i = 0; i < gen.count; ++i) {
            AgentSpec agent = gen.archetypes[static_cast<size_t>(i) % gen.archetypes.size()];
            agent.id = generated_agent_id(i);
            agent.cell.reset();
            world.agents.push_back(std::move(agent));
            if (grid != nullptr)
                world.placement.put(world.agents.back().id, cells[static_cast<size_t>(i)]);
        }
    } else {
        world.agents = scenario.population.agents;
        if (grid != nullptr)
            for (const auto& agent : world.agents)
                world.placement.put(agent.id, grid->cell_index(agent.cell->first, agent.cell->second));
    }

    std::sort(world.agents.begin(), world.agents.end(),
              [](const AgentSpec& a, const AgentSpec& b) { return a.id < b.id; });

    for (const auto& agent : world.agents) {
        world.performances[agent.id] = std::nullopt;
        world.beliefs[agent.id] = Belief{agent.initial_belief, 0.0};
    }

    init.world = std::move(world);
    return init;
}

TickRecord step(World& world) {
    TickRecord record;
    record.tick = world.tick;

    Pcg32 rng = make_stream(world.master_seed, 0, static_cast<uint64_t>(world.tick) + 1);

    std::vector<const AgentSpec*> order;
    order.reserve(world.agents.size());
    for (const auto& agent : world.agents)
        order.push_back(&agent);
    if (world.activation == ActivationPolicy::Random)
        shuffle(order, rng);

    for (const AgentSpec* agent : order) {
        if (world.movement == MovementPolicy::RandomWalk)
            move_agent(world.topology, world.placement, agent->id, world.movement, rng);

        std::vector<NeighborPerformance> performed;
        std::vector<std::string> observed;
        for (const auto& neighbor : neighbors(world.topology, world.placement, agent->id)) {
            const auto& performance = world.performances.at(neighbor);
            if (performance) {
                performed.push_back({neighbor, *performance});
                observed.push_back(*performance);
            }
        }

        Belief& belief = world.beliefs.at(agent->id);
        if (!world.registry.contexts.empty())
            belief = infer_context(observed, world.registry, belief);

        const double draw = rng.next_unit();
        Decision decision = decide(agent->endowment, belief, performed, world.registry,
                                   world.matrix, world.decision, agent->preferences, draw);

        world.performances.at(agent->id) = decision.action;
        record.entries.push_back({agent->id, decision.action, decision.override_used,
                                  std::move(decision.trace), belief});
    }

    if (!world.agents.empty()) {
        std::vector<Belief> beliefs;
        beliefs.reserve(world.agents.size());
        for (const auto& agent : world.agents)
            beliefs.push_back(world.beliefs.at(agent.id));
        record.consensus = consensus_index(beliefs);
    }

    world.tick += 1;
    return record;
}

RunResult run(const Scenario& scenario, uint64_t seed, int64_t ticks) {
    RunResult result;
    WorldInit init = init_world(scenario, seed);
    if (!init.ok()) {
        result.errors = std::move(init.errors);
        return result;
    }

    MetricsLog log;
    log.header.scenario_hash = scenario_hash_hex(scenario);
    log.header.seed = seed;
    log.header.ticks = ticks;
    log.header.engine_version = kEngineVersion;
    log.records.reserve(static_cast<size_t>(ticks));
    for (int64_t t = 0; t < ticks; ++t)
        log.records.push_back(step(*init.world));

    result.log = std::move(log);
    return result;
}

} // namespace psim
