#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace psim {

enum class ComponentKind { Material, Competence, Meaning };

std::string to_string(ComponentKind kind);
bool component_kind_from_string(const std::string& text, ComponentKind& out);

// An atomic element of practices: a thing, a skill, or a motivation.
struct Component {
    std::string id;
    ComponentKind kind = ComponentKind::Material;
    std::string name;

    bool operator==(const Component&) const = default;
};

// A named behavior. It can be performed when all required components are
// present; performing it may emit further components (soundwaves and the
// like) that other practices can collide with.
struct Practice {
    std::string id;
    std::string name;
    std::set<std::string> needs;  // required component ids ("requires" in scenario files)
    std::set<std::string> emits;  // emitted component ids
    double preference_weight = 1.0;

    bool operator==(const Practice&) const = default;
};

// Component-level conflict: the emitted component impairs the required one.
struct DisturbanceRule {
    std::string emitter;
    std::string disturbed;

    bool operator==(const DisturbanceRule&) const = default;
    auto operator<=>(const DisturbanceRule&) const = default;
};

// A situational frame, defined extensionally by the practices that fit it.
struct ContextDefinition {
    std::string id;
    std::set<std::string> appropriate;  // practice ids

    bool operator==(const ContextDefinition&) const = default;
};

struct Registry {
    std::vector<Component> components;
    std::vector<Practice> practices;
    std::vector<ContextDefinition> contexts;
    std::vector<DisturbanceRule> rules;

    const Component* find_component(const std::string& id) const;
    const Practice* find_practice(const std::string& id) const;
    const ContextDefinition* find_context(const std::string& id) const;

    bool operator==(const Registry&) const = default;
};

struct Diagnostic {
    std::string code;
    std::string path;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

using ValidationReport = std::vector<Diagnostic>;

// Referential integrity over all four collections. Codes:
//   E001 unknown component reference (practice or rule)
//   E002 duplicate id (components, practices, contexts) or duplicate rule pair
//   E003 practice with an empty requires set
//   E004 context with an empty appropriate set
//   E005 context referencing an unknown practice
// The registry is valid iff the report is empty.
ValidationReport validate_registry(const Registry& registry);

// true iff every required component of the practice is in the endowment.
bool performable(const std::set<std::string>& endowment, const Practice& practice);

// Practice-level disturbance relation. at(p, q) means: performing p disturbs
// a concurrent performance of q. Directional; the diagonal is allowed.
class DisturbanceMatrix {
public:
    DisturbanceMatrix() = default;
    DisturbanceMatrix(std::vector<std::string> practice_ids, std::vector<uint8_t> cells);

    size_t size() const { return ids_.size(); }
    const std::vector<std::string>& practice_ids() const { return ids_; }

    // throws std::invalid_argument on unknown ids
    size_t index_of(const std::string& practice_id) const;

    bool at(size_t emitter, size_t disturbed) const {
        return cells_[emitter * ids_.size() + disturbed] != 0;
    }
    bool at(const std::string& emitter, const std::string& disturbed) const {
        return at(index_of(emitter), index_of(disturbed));
    }

    bool operator==(const DisturbanceMatrix&) const = default;

private:
    std::vector<std::string> ids_;
    std::map<std::string, size_t> index_;
    std::vector<uint8_t> cells_;
};

// at(p, q) = true iff some rule's emitter is emitted by p and its disturbed
// component is required by q. Throws std::invalid_argument if the registry
// does not validate; callers are expected to validate first.
DisturbanceMatrix compile_disturbance(const Registry& registry);

} // namespace psim
