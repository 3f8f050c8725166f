#include "psim/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace psim {

std::string to_string(ComponentKind kind) {
    switch (kind) {
    case ComponentKind::Material: return "material";
    case ComponentKind::Competence: return "competence";
    case ComponentKind::Meaning: return "meaning";
    }
    return "material";
}

bool component_kind_from_string(const std::string& text, ComponentKind& out) {
    if (text == "material") {
        out = ComponentKind::Material;
    } else if (text == "competence") {
        out = ComponentKind::Competence;
    } else if (text == "meaning") {
        out = ComponentKind::Meaning;
    } else {
        return false;
    }
    return true;
}

const Component* Registry::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id)
            return &c;
    return nullptr;
}

const Practice* Registry::find_practice(const std::string& id) const {
    for (const auto& p : practices)
        if (p.id == id)
            return &p;
    return nullptr;
}

const ContextDefinition* Registry::find_context(const std::string& id) const {
    for (const auto& c : contexts)
        if (c.id == id)
            return &c;
    return nullptr;
}

ValidationReport validate_registry(const Registry& registry) {
    ValidationReport report;
    auto add = [&report](std::string code, std::string path, std::string message) {
        report.push_back({std::move(code), std::move(path), std::move(message)});
    };

    std::set<std::string> component_ids;
    for (const auto& c : registry.components) {
        if (!component_ids.insert(c.id).second)
            add("E002", "components/" + c.id, "duplicate component id");
    }

    std::set<std::string> practice_ids;
    for (const auto& p : registry.practices) {
        if (!practice_ids.insert(p.id).second)
            add("E002", "practices/" + p.id, "duplicate practice id");
    }

    std::set<std::string> context_ids;
    for (const auto& c : registry.contexts) {
        if (!context_ids.insert(c.id).second)
            add("E002", "contexts/" + c.id, "duplicate context id");
    }

    for (const auto& p : registry.practices) {
        if (p.needs.empty())
            add("E003", "practices/" + p.id, "practice requires no components");
        for (const auto& cid : p.needs)
            if (!component_ids.count(cid))
                add("E001", "practices/" + p.id + "/requires/" + cid, "unknown component id");
        for (const auto& cid : p.emits)
            if (!component_ids.count(cid))
                add("E001", "practices/" + p.id + "/emits/" + cid, "unknown component id");
    }

    std::set<std::pair<std::string, std::string>> rule_pairs;
    for (const auto& r : registry.rules) {
        const std::string path = "rules/" + r.emitter + "->" + r.disturbed;
        if (!component_ids.count(r.emitter))
            add("E001", path + "/emitter", "unknown component id");
        if (!component_ids.count(r.disturbed))
            add("E001", path + "/disturbed", "unknown component id");
        if (!rule_pairs.insert({r.emitter, r.disturbed}).second)
            add("E002", path, "duplicate disturbance rule");
    }

    for (const auto& c : registry.contexts) {
        if (c.appropriate.empty())
            add("E004", "contexts/" + c.id, "context lists no appropriate practices");
        for (const auto& pid : c.appropriate)
            if (!practice_ids.count(pid))
                add("E005", "contexts/" + c.id + "/" + pid, "unknown practice id in context");
    }

    return report;
}

bool performable(const std::set<std::string>& endowment, const Practice& practice) {
    return std::includes(endowment.begin(), endowment.end(),
                         practice.needs.begin(), practice.needs.end());
}

DisturbanceMatrix::DisturbanceMatrix(std::vector<std::string> practice_ids,
                                     std::vector<uint8_t> cells)
    : ids_(std::move(practice_ids)), cells_(std::move(cells)) {
    for (size_t i = 0; i < ids_.size(); ++i)
        index_[ids_[i]] = i;
    if (cells_.size() != ids_.size() * ids_.size())
        throw std::invalid_argument("disturbance matrix cell count does not match practice count");
}

size_t DisturbanceMatrix::index_of(const std::string& practice_id) const {
    auto it = index_.find(practice_id);
    if (it == index_.end())
        throw std::invalid_argument("unknown practice id: " + practice_id);
    return it->second;
}

DisturbanceMatrix compile_disturbance(const Registry& registry) {
    if (!validate_registry(registry).empty())
        throw std::invalid_argument("cannot compile disturbance relation of an invalid registry");

    // disturbed-component sets per emitting component
    std::map<std::string, std::set<std::string>> impaired_by_emitter;
    for (const auto& r : registry.rules)
        impaired_by_emitter[r.emitter].insert(r.disturbed);

    const size_t n = registry.practices.size();
    std::vector<std::string> ids(n);
    for (size_t i = 0; i < n; ++i)
        ids[i] = registry.practices[i].id;

    std::vector<uint8_t> cells(n * n, 0);
    for (size_t p = 0; p < n; ++p) {
        std::set<std::string> impaired;
        for (const auto& emitted : registry.practices[p].emits) {
            auto it = impaired_by_emitter.find(emitted);
            if (it != impaired_by_emitter.end())
                impaired.insert(it->second.begin(), it->second.end());
        }
        if (impaired.empty())
            continue;
        for (size_t q = 0; q < n; ++q) {
            const auto& needs = registry.practices[q].needs;
            bool hit = std::any_of(impaired.begin(), impaired.end(),
                                   [&needs](const std::string& c) { return needs.count(c) > 0; });
            cells[p * n + q] = hit ? 1 : 0;
        }
    }

    return DisturbanceMatrix(std::move(ids), std::move(cells));
}

} // namespace psim
