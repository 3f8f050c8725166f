#include "psim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>

#include "json.hpp"

namespace psim {

namespace {

using json = nlohmann::ordered_json;

bool valid_id(const std::string& id) {
    if (id.empty())
        return false;
    for (char c : id) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
        if (!ok)
            return false;
    }
    return true;
}

// Strict schema walk: every object may only carry the keys the schema names.
class Reader {
public:
    explicit Reader(std::vector<Diagnostic>& errors) : errors_(errors) {}

    void err(const char* code, const std::string& path, const std::string& message) {
        errors_.push_back({code, path, message});
    }

    void known_keys(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : obj.items()) {
            bool ok = std::any_of(allowed.begin(), allowed.end(),
                                  [&key](const char* k) { return key == k; });
            if (!ok)
                err("E100", join(path, key), "unknown field");
        }
    }

    static std::string join(const std::string& path, const std::string& key) {
        return path.empty() ? key : path + "." + key;
    }

    const json* get(const json& obj, const char* key) {
        auto it = obj.find(key);
        return it == obj.end() ? nullptr : &*it;
    }

    const json* require(const json& obj, const std::string& path, const char* key) {
        const json* field = get(obj, key);
        if (field == nullptr)
            err("E103", join(path, key), "missing required field");
        return field;
    }

    bool str(const json& j, const std::string& path, std::string& out) {
        if (!j.is_string()) {
            err("E102", path, "expected a string");
            return false;
        }
        out = j.get<std::string>();
        return true;
    }

    bool integer(const json& j, const std::string& path, int64_t& out) {
        if (!j.is_number_integer()) {
            err("E102", path, "expected an integer");
            return false;
        }
        out = j.get<int64_t>();
        return true;
    }

    bool number(const json& j, const std::string& path, double& out) {
        if (!j.is_number()) {
            err("E102", path, "expected a number");
            return false;
        }
        out = j.get<double>();
        return true;
    }

    bool boolean(const json& j, const std::string& path, bool& out) {
        if (!j.is_boolean()) {
            err("E102", path, "expected a boolean");
            return false;
        }
        out = j.get<bool>();
        return true;
    }

    bool string_set(const json& j, const std::string& path, std::set<std::string>& out) {
        if (!j.is_array()) {
            err("E102", path, "expected an array of strings");
            return false;
        }
        for (size_t i = 0; i < j.size(); ++i) {
            std::string s;
            if (str(j[i], path + "[" + std::to_string(i) + "]", s))
                out.insert(std::move(s));
        }
        return true;
    }

private:
    std::vector<Diagnostic>& errors_;
};

std::string index_path(const std::string& base, size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

Registry read_registry(const json& j, Reader& r) {
    Registry registry;
    const std::string base = "registry";
    if (!j.is_object()) {
        r.err("E102", base, "expected an object");
        return registry;
    }
    r.known_keys(j, base, {"components", "practices", "contexts", "rules"});

    if (const json* components = r.get(j, "components")) {
        if (!components->is_array()) {
            r.err("E102", base + ".components", "expected an array");
        } else {
            for (size_t i = 0; i < components->size(); ++i) {
                const json& cj = (*components)[i];
                const std::string path = index_path(base + ".components", i);
                if (!cj.is_object()) {
                    r.err("E102", path, "expected an object");
                    continue;
                }
                r.known_keys(cj, path, {"id", "kind", "name"});
                Component c;
                if (const json* f = r.require(cj, path, "id"))
                    r.str(*f, path + ".id", c.id);
                if (const json* f = r.require(cj, path, "kind")) {
                    std::string kind;
                    if (r.str(*f, path + ".kind", kind) && !component_kind_from_string(kind, c.kind))
                        r.err("E102", path + ".kind", "expected material, competence or meaning");
                }
                if (const json* f = r.get(cj, "name"))
                    r.str(*f, path + ".name", c.name);
                registry.components.push_back(std::move(c));
            }
        }
    }

    if (const json* practices = r.get(j, "practices")) {
        if (!practices->is_array()) {
            r.err("E102", base + ".practices", "expected an array");
        } else {
            for (size_t i = 0; i < practices->size(); ++i) {
                const json& pj = (*practices)[i];
                const std::string path = index_path(base + ".practices", i);
                if (!pj.is_object()) {
                    r.err("E102", path, "expected an object");
                    continue;
                }
                r.known_keys(pj, path, {"id", "name", "requires", "emits", "preference_weight"});
                Practice p;
                if (const json* f = r.require(pj, path, "id"))
                    r.str(*f, path + ".id", p.id);
                if (const json* f = r.get(pj, "name"))
                    r.str(*f, path + ".name", p.name);
                if (const json* f = r.require(pj, path, "requires"))
                    r.string_set(*f, path + ".requires", p.needs);
                if (const json* f = r.get(pj, "emits"))
                    r.string_set(*f, path + ".emits", p.emits);
                if (const json* f = r.get(pj, "preference_weight"))
                    r.number(*f, path + ".preference_weight", p.preference_weight);
                registry.practices.push_back(std::move(p));
            }
        }
    }

    if (const json* contexts = r.get(j, "contexts")) {
        if (!contexts->is_array()) {
            r.err("E102", base + ".contexts", "expected an array");
        } else {
            for (size_t i = 0; i < contexts->size(); ++i) {
                const json& cj = (*contexts)[i];
                const std::string path = index_path(base + ".contexts", i);
                if (!cj.is_object()) {
                    r.err("E102", path, "expected an object");
                    continue;
                }
                r.known_keys(cj, path, {"id", "appropriate"});
                ContextDefinition c;
                if (const json* f = r.require(cj, path, "id"))
                    r.str(*f, path + ".id", c.id);
                if (const json* f = r.require(cj, path, "appropriate"))
                    r.string_set(*f, path + ".appropriate", c.appropriate);
                registry.contexts.push_back(std::move(c));
            }
        }
    }

    if (const json* rules = r.get(j, "rules")) {
        if (!rules->is_array()) {
            r.err("E102", base + ".rules", "expected an array");
        } else {
            for (size_t i = 0; i < rules->size(); ++i) {
                const json& rj = (*rules)[i];
                const std::string path = index_path(base + ".rules", i);
                if (!rj.is_object()) {
                    r.err("E102", path, "expected an object");
                    continue;
                }
                r.known_keys(rj, path, {"emitter", "disturbed"});
                DisturbanceRule rule;
                if (const json* f = r.require(rj, path, "emitter"))
                    r.str(*f, path + ".emitter", rule.emitter);
                if (const json* f = r.require(rj, path, "disturbed"))
                    r.str(*f, path + ".disturbed", rule.disturbed);
                registry.rules.push_back(std::move(rule));
            }
        }
    }

    return registry;
}

Topology read_topology(const json& j, Reader& r) {
    const std::string base = "topology";
    if (!j.is_object()) {
        r.err("E102", base, "expected an object");
        return GridTopology{};
    }
    std::string kind;
    if (const json* f = r.require(j, base, "kind"))
        r.str(*f, base + ".kind", kind);

    if (kind == "network") {
        r.known_keys(j, base, {"kind", "edges"});
        NetworkTopology net;
        if (const json* edges = r.require(j, base, "edges")) {
            if (!edges->is_array()) {
                r.err("E102", base + ".edges", "expected an array of [a, b] pairs");
            } else {
                for (size_t i = 0; i < edges->size(); ++i) {
                    const json& ej = (*edges)[i];
                    const std::string path = index_path(base + ".edges", i);
                    if (!ej.is_array() || ej.size() != 2) {
                        r.err("E102", path, "expected an [a, b] pair");
                        continue;
                    }
                    std::string a, b;
                    if (r.str(ej[0], path + "[0]", a) && r.str(ej[1], path + "[1]", b))
                        net.edges.emplace_back(std::move(a), std::move(b));
                }
            }
        }
        return net;
    }

    if (kind != "grid" && !kind.empty())
        r.err("E102", base + ".kind", "expected grid or network");
    r.known_keys(j, base, {"kind", "width", "height", "radius", "torus"});
    GridTopology grid;
    int64_t v = 0;
    if (const json* f = r.require(j, base, "width"))
        if (r.integer(*f, base + ".width", v))
            grid.width = static_cast<int>(v);
    if (const json* f = r.require(j, base, "height"))
        if (r.integer(*f, base + ".height", v))
            grid.height = static_cast<int>(v);
    if (const json* f = r.get(j, "radius"))
        if (r.integer(*f, base + ".radius", v))
            grid.radius = static_cast<int>(v);
    if (const json* f = r.get(j, "torus"))
        r.boolean(*f, base + ".torus", grid.torus);
    return grid;
}

void read_agent_common(const json& j, const std::string& path, Reader& r, AgentSpec& agent) {
    if (const json* f = r.require(j, path, "endowment"))
        r.string_set(*f, path + ".endowment", agent.endowment);
    if (const json* f = r.get(j, "initial_belief")) {
        std::string belief;
        if (r.str(*f, path + ".initial_belief", belief))
            agent.initial_belief = std::move(belief);
    }
    if (const json* f = r.get(j, "preferences")) {
        if (!f->is_object()) {
            r.err("E102", path + ".preferences", "expected an object of practice -> weight");
        } else {
            for (const auto& [key, value] : f->items()) {
                double w = 0.0;
                if (r.number(value, path + ".preferences." + key, w))
                    agent.preferences[key] = w;
            }
        }
    }
}

Population read_population(const json& j, Reader& r) {
    Population population;
    const std::string base = "world";
    if (!j.is_object()) {
        r.err("E102", base, "expected an object");
        return population;
    }
    const bool explicit_form = j.contains("agents");
    const bool generated_form = j.contains("agent_count") || j.contains("archetypes") ||
                                j.contains("placement");
    if (explicit_form && generated_form) {
        r.err("E104", base, "agents and agent_count/archetypes/placement are mutually exclusive");
        return population;
    }
    if (!explicit_form && !generated_form) {
        r.err("E103", base + ".agents", "missing required field");
        return population;
    }

    if (explicit_form) {
        r.known_keys(j, base, {"agents"});
        const json& agents = j["agents"];
        if (!agents.is_array()) {
            r.err("E102", base + ".agents", "expected an array");
            return population;
        }
        for (size_t i = 0; i < agents.size(); ++i) {
            const json& aj = agents[i];
            const std::string path = index_path(base + ".agents", i);
            if (!aj.is_object()) {
                r.err("E102", path, "expected an object");
                continue;
            }
            r.known_keys(aj, path, {"id", "endowment", "cell", "initial_belief", "preferences"});
            AgentSpec agent;
            if (const json* f = r.require(aj, path, "id"))
                r.str(*f, path + ".id", agent.id);
            read_agent_common(aj, path, r, agent);
            if (const json* f = r.get(aj, "cell")) {
                if (!f->is_array() || f->size() != 2 || !(*f)[0].is_number_integer() ||
                    !(*f)[1].is_number_integer()) {
                    r.err("E102", path + ".cell", "expected an [x, y] pair of integers");
                } else {
                    agent.cell = {(*f)[0].get<int>(), (*f)[1].get<int>()};
                }
            }
            population.agents.push_back(std::move(agent));
        }
        return population;
    }

    r.known_keys(j, base, {"agent_count", "archetypes", "placement"});
    GeneratedPopulation gen;
    int64_t v = 0;
    if (const json* f = r.require(j, base, "agent_count"))
        if (r.integer(*f, base + ".agent_count", v))
            gen.count = static_cast<int>(v);
    if (const json* f = r.require(j, base, "archetypes")) {
        if (!f->is_array()) {
            r.err("E102", base + ".archetypes", "expected an array");
        } else {
            for (size_t i = 0; i < f->size(); ++i) {
                const json& aj = (*f)[i];
                const std::string path = index_path(base + ".archetypes", i);
                if (!aj.is_object()) {
                    r.err("E102", path, "expected an object");
                    continue;
                }
                r.known_keys(aj, path, {"endowment", "initial_belief", "preferences"});
                AgentSpec archetype;
                read_agent_common(aj, path, r, archetype);
                gen.archetypes.push_back(std::move(archetype));
            }
        }
    }
    if (const json* f = r.get(j, "placement")) {
        std::string mode;
        if (r.str(*f, base + ".placement", mode)) {
            if (mode == "scan")
                gen.placement = GeneratedPopulation::PlacementMode::Scan;
            else if (mode == "random")
                gen.placement = GeneratedPopulation::PlacementMode::Random;
            else
                r.err("E102", base + ".placement", "expected scan or random");
        }
    }
    population.generated = std::move(gen);
    return population;
}

} // namespace

std::string to_string(ActivationPolicy policy) {
    return policy == ActivationPolicy::Ordered ? "ordered" : "random";
}

std::string to_string(MovementPolicy policy) {
    return policy == MovementPolicy::None ? "none" : "random_walk";
}

ParseResult parse_scenario(const std::string& text) {
    ParseResult result;
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        // re-parse for the position-annotated message
        try {
            (void)json::parse(text);
        } catch (const json::parse_error& e) {
            result.errors.push_back({"SYNTAX", "", e.what()});
            return result;
        }
        result.errors.push_back({"SYNTAX", "", "malformed document"});
        return result;
    }

    Reader r(result.errors);
    if (!doc.is_object()) {
        r.err("E102", "", "scenario document must be an object");
        return result;
    }

    if (!doc.contains("schema_version")) {
        r.err("E101", "schema_version", "missing schema_version");
        return result;
    }

    r.known_keys(doc, "", {"schema_version", "name", "registry", "topology", "world", "decision",
                           "activation", "movement", "consensus", "ticks"});

    Scenario scenario;
    int64_t v = 0;
    if (r.integer(doc["schema_version"], "schema_version", v)) {
        if (v != 1) {
            r.err("E101", "schema_version", "unsupported schema_version (expected 1)");
            return result;
        }
        scenario.schema_version = static_cast<int>(v);
    }

    if (const json* f = r.get(doc, "name"))
        r.str(*f, "name", scenario.name);
    if (const json* f = r.require(doc, "", "registry"))
        scenario.registry = read_registry(*f, r);
    if (const json* f = r.require(doc, "", "topology"))
        scenario.topology = read_topology(*f, r);
    if (const json* f = r.require(doc, "", "world"))
        scenario.population = read_population(*f, r);

    if (const json* f = r.get(doc, "decision")) {
        if (!f->is_object()) {
            r.err("E102", "decision", "expected an object");
        } else {
            r.known_keys(*f, "decision", {"epsilon", "ordering"});
            if (const json* e = r.get(*f, "epsilon"))
                r.number(*e, "decision.epsilon", scenario.decision.epsilon);
            if (const json* o = r.get(*f, "ordering")) {
                std::string ordering;
                if (r.str(*o, "decision.ordering", ordering) && ordering != "preference")
                    r.err("E102", "decision.ordering", "expected preference");
            }
        }
    }

    if (const json* f = r.get(doc, "activation")) {
        std::string policy;
        if (r.str(*f, "activation", policy)) {
            if (policy == "ordered")
                scenario.activation = ActivationPolicy::Ordered;
            else if (policy == "random")
                scenario.activation = ActivationPolicy::Random;
            else
                r.err("E102", "activation", "expected ordered or random");
        }
    }

    if (const json* f = r.get(doc, "movement")) {
        std::string policy;
        if (r.str(*f, "movement", policy)) {
            if (policy == "none")
                scenario.movement = MovementPolicy::None;
            else if (policy == "random_walk")
                scenario.movement = MovementPolicy::RandomWalk;
            else
                r.err("E102", "movement", "expected none or random_walk");
        }
    }

    if (const json* f = r.get(doc, "consensus")) {
        if (!f->is_object()) {
            r.err("E102", "consensus", "expected an object");
        } else {
            r.known_keys(*f, "consensus", {"theta", "window"});
            if (const json* t = r.get(*f, "theta"))
                r.number(*t, "consensus.theta", scenario.consensus.theta);
            if (const json* w = r.get(*f, "window")) {
                if (r.integer(*w, "consensus.window", v))
                    scenario.consensus.window = static_cast<int>(v);
            }
        }
    }

    if (const json* f = r.require(doc, "", "ticks"))
        if (r.integer(*f, "ticks", v))
            scenario.ticks = v;

    if (!result.errors.empty())
        return result;

    auto semantic = validate_scenario(scenario);
    if (!semantic.empty()) {
        result.errors = std::move(semantic);
        return result;
    }
    result.scenario = std::move(scenario);
    return result;
}

std::vector<Diagnostic> validate_scenario(const Scenario& scenario) {
    std::vector<Diagnostic> errors;
    auto err = [&errors](const char* code, std::string path, std::string message) {
        errors.push_back({code, std::move(path), std::move(message)});
    };

    for (auto& d : validate_registry(scenario.registry))
        errors.push_back({d.code, "registry/" + d.path, d.message});

    for (const auto& c : scenario.registry.components)
        if (!valid_id(c.id))
            err("E102", "registry/components/" + c.id, "invalid id (allowed: [A-Za-z0-9_.-]+)");
    for (const auto& p : scenario.registry.practices) {
        if (!valid_id(p.id))
            err("E102", "registry/practices/" + p.id, "invalid id (allowed: [A-Za-z0-9_.-]+)");
        if (!(p.preference_weight >= 0.0) || !std::isfinite(p.preference_weight))
            err("E102", "registry/practices/" + p.id, "preference_weight must be finite and >= 0");
    }
    for (const auto& c : scenario.registry.contexts)
        if (!valid_id(c.id))
            err("E102", "registry/contexts/" + c.id, "invalid id (allowed: [A-Za-z0-9_.-]+)");

    if (!(scenario.decision.epsilon >= 0.0 && scenario.decision.epsilon <= 1.0))
        err("E102", "decision.epsilon", "epsilon must lie in [0,1]");
    if (!(scenario.consensus.theta > 0.0 && scenario.consensus.theta <= 1.0))
        err("E102", "consensus.theta", "theta must lie in (0,1]");
    if (scenario.consensus.window < 1)
        err("E102", "consensus.window", "window must be >= 1");
    if (scenario.ticks < 0)
        err("E102", "ticks", "ticks must be >= 0");

    const auto* grid = std::get_if<GridTopology>(&scenario.topology);
    const auto* network = std::get_if<NetworkTopology>(&scenario.topology);
    if (grid != nullptr) {
        if (grid->width < 1 || grid->height < 1)
            err("E102", "topology", "grid dimensions must be >= 1");
        if (grid->radius < 1)
            err("E102", "topology.radius", "radius must be >= 1");
    }
    if (network != nullptr && scenario.movement == MovementPolicy::RandomWalk)
        err("E104", "movement", "random_walk requires a grid topology");

    // agent-level checks shared by both population forms
    auto check_agent = [&](const AgentSpec& agent, const std::string& path) {
        for (const auto& cid : agent.endowment)
            if (scenario.registry.find_component(cid) == nullptr)
                err("E104", path, "endowment references unknown component " + cid);
        if (agent.initial_belief &&
            scenario.registry.find_context(*agent.initial_belief) == nullptr)
            err("E104", path, "initial_belief references unknown context " + *agent.initial_belief);
        for (const auto& [pid, weight] : agent.preferences) {
            if (scenario.registry.find_practice(pid) == nullptr)
                err("E104", path, "preferences reference unknown practice " + pid);
            if (!(weight >= 0.0) || !std::isfinite(weight))
                err("E102", path + "/preferences/" + pid, "weight must be finite and >= 0");
        }
    };

    if (scenario.population.generated) {
        const auto& gen = *scenario.population.generated;
        if (network != nullptr)
            err("E104", "world", "a generated population requires a grid topology");
        if (gen.count < 0)
            err("E102", "world.agent_count", "agent_count must be >= 0");
        if (gen.archetypes.empty() && gen.count > 0)
            err("E104", "world.archetypes", "at least one archetype is required");
        if (grid != nullptr && grid->width >= 1 && grid->height >= 1 &&
            gen.count > grid->cell_count())
            err("E104", "world.agent_count",
                "agent_count exceeds the number of grid cells");
        for (size_t i = 0; i < gen.archetypes.size(); ++i) {
            const auto& a = gen.archetypes[i];
            if (a.cell)
                err("E104", index_path("world.archetypes", i), "archetypes cannot carry cells");
            check_agent(a, index_path("world.archetypes", i));
        }
    } else {
        std::set<std::string> ids;
        std::set<int> cells;
        for (const auto& agent : scenario.population.agents) {
            const std::string path = "world/agents/" + agent.id;
            if (!valid_id(agent.id))
                err("E102", path, "invalid id (allowed: [A-Za-z0-9_.-]+)");
            if (!ids.insert(agent.id).second)
                err("E104", path, "duplicate agent id");
            check_agent(agent, path);
            if (grid != nullptr) {
                if (!agent.cell) {
                    err("E103", path + "/cell", "grid agents need a cell");
                } else if (grid->width >= 1 && grid->height >= 1) {
                    auto [x, y] = *agent.cell;
                    if (x < 0 || x >= grid->width || y < 0 || y >= grid->height)
                        err("E104", path + "/cell", "cell outside the grid");
                    else if (!cells.insert(grid->cell_index(x, y)).second)
                        err("E104", path + "/cell", "cell already occupied by another agent");
                }
            } else if (agent.cell) {
                err("E104", path + "/cell", "network agents cannot carry cells");
            }
        }
        if (network != nullptr) {
            std::set<std::pair<std::string, std::string>> seen;
            for (size_t i = 0; i < network->edges.size(); ++i) {
                const auto& [a, b] = network->edges[i];
                const std::string path = index_path("topology.edges", i);
                if (a == b)
                    err("E104", path, "self-loop");
                if (!ids.count(a))
                    err("E104", path, "edge references unknown agent " + a);
                if (!ids.count(b))
                    err("E104", path, "edge references unknown agent " + b);
                auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
                if (!seen.insert(key).second)
                    err("E104", path, "duplicate edge");
            }
        }
    }

    return errors;
}

namespace {

json emit_registry(const Registry& registry) {
    json j = json::object();
    json components = json::array();
    for (const auto& c : registry.components) {
        json cj = {{"id", c.id}, {"kind", to_string(c.kind)}};
        if (!c.name.empty())
            cj["name"] = c.name;
        components.push_back(std::move(cj));
    }
    j["components"] = std::move(components);

    json practices = json::array();
    for (const auto& p : registry.practices) {
        json pj = json::object();
        pj["id"] = p.id;
        if (!p.name.empty())
            pj["name"] = p.name;
        pj["requires"] = p.needs;
        if (!p.emits.empty())
            pj["emits"] = p.emits;
        pj["preference_weight"] = p.preference_weight;
        practices.push_back(std::move(pj));
    }
    j["practices"] = std::move(practices);

    json contexts = json::array();
    for (const auto& c : registry.contexts)
        contexts.push_back({{"id", c.id}, {"appropriate", c.appropriate}});
    j["contexts"] = std::move(contexts);

    json rules = json::array();
    for (const auto& rule : registry.rules)
        rules.push_back({{"emitter", rule.emitter}, {"disturbed", rule.disturbed}});
    j["rules"] = std::move(rules);
    return j;
}

json emit_agent(const AgentSpec& agent, bool with_id) {
    json j = json::object();
    if (with_id)
        j["id"] = agent.id;
    j["endowment"] = agent.endowment;
    if (agent.cell)
        j["cell"] = {agent.cell->first, agent.cell->second};
    if (agent.initial_belief)
        j["initial_belief"] = *agent.initial_belief;
    if (!agent.preferences.empty())
        j["preferences"] = agent.preferences;
    return j;
}

} // namespace

std::string emit_scenario(const Scenario& scenario) {
    json doc = json::object();
    doc["schema_version"] = scenario.schema_version;
    if (!scenario.name.empty())
        doc["name"] = scenario.name;
    doc["registry"] = emit_registry(scenario.registry);

    if (const auto* grid = std::get_if<GridTopology>(&scenario.topology)) {
        doc["topology"] = {{"kind", "grid"},
                           {"width", grid->width},
                           {"height", grid->height},
                           {"radius", grid->radius},
                           {"torus", grid->torus}};
    } else {
        const auto& net = std::get<NetworkTopology>(scenario.topology);
        json edges = json::array();
        for (const auto& [a, b] : net.edges)
            edges.push_back({a, b});
        doc["topology"] = {{"kind", "network"}, {"edges", std::move(edges)}};
    }

    json world = json::object();
    if (scenario.population.generated) {
        const auto& gen = *scenario.population.generated;
        world["agent_count"] = gen.count;
        json archetypes = json::array();
        for (const auto& a : gen.archetypes)
            archetypes.push_back(emit_agent(a, false));
        world["archetypes"] = std::move(archetypes);
        world["placement"] =
            gen.placement == GeneratedPopulation::PlacementMode::Scan ? "scan" : "random";
    } else {
        json agents = json::array();
        for (const auto& a : scenario.population.agents)
            agents.push_back(emit_agent(a, true));
        world["agents"] = std::move(agents);
    }
    doc["world"] = std::move(world);

    doc["decision"] = {{"epsilon", scenario.decision.epsilon}, {"ordering", "preference"}};
    doc["activation"] = to_string(scenario.activation);
    doc["movement"] = to_string(scenario.movement);
    doc["consensus"] = {{"theta", scenario.consensus.theta},
                        {"window", scenario.consensus.window}};
    doc["ticks"] = scenario.ticks;
    return doc.dump(2) + "\n";
}

uint64_t scenario_hash(const Scenario& scenario) {
    const std::string text = emit_scenario(scenario);
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string scenario_hash_hex(const Scenario& scenario) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(scenario_hash(scenario)));
    return buf;
}

} // namespace psim
