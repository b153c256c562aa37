#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mmppf/error.hpp"

namespace mmppf {

// A property value is either EMPTY (no tuple) or one symbol index per
// dimension. Symbols are stored as indices into the ordered domain
// W_{p,q}, so comparing components also compares them under the domain
// order.
struct PropertyValue {
    std::vector<int> components;  // empty = EMPTY value

    bool is_empty() const { return components.empty(); }

    auto operator<=>(const PropertyValue&) const = default;
};

struct ActionRule {
    int essence = -1;
    PropertyValue from;
    PropertyValue to;

    auto operator<=>(const ActionRule&) const = default;
};

struct ActionDef {
    std::string id;
    std::vector<ActionRule> in_table;
    std::vector<ActionRule> ext_table;
};

struct PropertyDef {
    int dim = 1;
    // dim entries; each is the ordered value domain for that dimension.
    std::vector<std::vector<std::string>> domains;
};

// A sensation register: the distinguished EMPTY register or a sequence of
// pairs over {s, c}. Registers compare structurally.
struct Register {
    bool empty = true;
    std::vector<std::pair<char, char>> seq;

    auto operator<=>(const Register&) const = default;
};

struct Signature {
    std::vector<std::string> objects;
    std::vector<std::string> essences;
    std::vector<PropertyDef> properties;  // index 0 is the spatial property
    // actions[o][p] is the catalog A^p_o, sorted by action id.
    std::vector<std::vector<std::vector<ActionDef>>> actions;
    std::vector<Register> sra;

    int object_count() const { return static_cast<int>(objects.size()); }
    int essence_count() const { return static_cast<int>(essences.size()); }
    int property_count() const { return static_cast<int>(properties.size()); }

    int object_index(const std::string& id) const;
    int essence_index(const std::string& id) const;
    // Index of an action in the catalog actions[o][p], -1 if absent.
    int action_index(int object, int property, const std::string& id) const;
    const ActionDef& action(int object, int property, int index) const {
        return actions[object][property][index];
    }
};

// One (essence, value) assignment set, kept sorted: the realization of
// g*^p(o) and of the P_p sets appearing in formulas.
using AssignmentSet = std::vector<std::pair<int, PropertyValue>>;

struct State {
    std::string id;
    std::vector<std::vector<int>> es;                 // [object] -> sorted essence indices
    std::vector<std::vector<PropertyValue>> g;        // [property][essence]
    std::vector<std::vector<AssignmentSet>> gstar;    // [property][object]
    std::vector<std::vector<std::vector<int>>> theta; // [property][object] -> catalog indices
    // theta entries citing actions outside A^p_o; kept by id for Axiom 8.
    std::vector<std::vector<std::vector<std::string>>> theta_extra; // [property][object]
    std::vector<Register> sensation;                  // [object]
    std::vector<std::vector<std::vector<int>>> relations; // [object][property] -> sorted object indices
};

// One action per (object, property); actions are catalog indices so the
// lexicographic order on vectors is the deterministic enumeration order.
struct InputVector {
    std::vector<std::vector<int>> acts;  // [object][property]

    auto operator<=>(const InputVector&) const = default;
};

enum class Condition { Epsilon, Hypothetical };
enum class Situator { Past, Present, Future };

std::string to_string(Condition c);
std::string to_string(Situator s);

struct Reality {
    int time = 0;
    Condition condition = Condition::Epsilon;
    Situator situator = Situator::Present;
    int state = -1;

    auto operator<=>(const Reality&) const = default;
};

struct SuccEntry {
    Reality from;
    InputVector input;
    Reality to;
};

struct Perspective {
    int anchor = 1;
    std::map<int, std::vector<Reality>> moments;     // time -> sorted realities
    std::map<int, InputVector> realized_inputs;      // t' <= anchor
    std::vector<SuccEntry> succ;

    const std::vector<Reality>* moment(int time) const {
        auto it = moments.find(time);
        return it == moments.end() ? nullptr : &it->second;
    }
};

// Snapshot of g*^p across all objects: the key/value shape of the law and
// dependency tables.
using Snapshot = std::vector<AssignmentSet>;  // [object]

using DepSet = std::vector<std::pair<int, int>>;  // sorted (subject, target)

struct LawEntry {
    int property = 0;
    Snapshot from;
    std::vector<int> bundle;  // [object] -> catalog index for this property
    DepSet deps;
    std::vector<Snapshot> to;
};

struct DepEntry {
    int state = -1;
    int property = 0;
    std::vector<int> bundle;  // [object] -> catalog index for this property
    DepSet deps;
};

struct SensationLawEntry {
    Register reg;
    int object = -1;
    int state = -1;
    InputVector input;
    Register result;
};

struct MmppfStructure {
    Signature signature;
    std::vector<State> states;
    std::vector<Perspective> perspectives;  // perspectives[i] anchored at i+1
    std::map<std::pair<int, InputVector>, int> transition;
    std::vector<LawEntry> laws;
    std::vector<std::vector<SensationLawEntry>> sensation_laws;
    std::vector<DepEntry> dependencies;
    std::map<int, InputVector> realized_inputs;  // funi

    int time_count() const { return static_cast<int>(perspectives.size()); }
    int state_index(const std::string& id) const;
    const State& state(int index) const { return states[index]; }

    // Derived at load: the full admissible-input products per state.
    std::vector<std::vector<InputVector>> admissible;
};

// pi^o: the o-component of an input vector.
const std::vector<int>& project_input(const MmppfStructure& m, const InputVector& v, int object);

// The Cartesian product of theta sets at e, in deterministic order.
std::vector<InputVector> admissible_inputs(const MmppfStructure& m, const State& e);

bool input_admissible(const MmppfStructure& m, int state, const InputVector& v);

// The transition function &. nullopt encodes UNDEFINED.
std::optional<int> step(const MmppfStructure& m, int state, const InputVector& v);

// Recomputes derived data (admissible-input products). Called by the loader.
void finalize(MmppfStructure& m);

// Snapshot of g*^p across all objects of a state.
Snapshot snapshot_of(const MmppfStructure& m, const State& e, int property);

// D^p of a state: the relation edges present for property p.
DepSet dep_set_of(const MmppfStructure& m, const State& e, int property);

// Input vector as a per-property bundle: bundle[o] = component p of pi_o(v).
std::vector<int> bundle_of(const InputVector& v, int property);

}  // namespace mmppf
