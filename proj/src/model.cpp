#include "mmppf/model.hpp"

#include <algorithm>

namespace mmppf {

std::string to_string(Condition c) {
    return c == Condition::Epsilon ? "e" : "h";
}

std::string to_string(Situator s) {
    switch (s) {
        case Situator::Past: return "past";
        case Situator::Present: return "present";
        case Situator::Future: return "future";
    }
    return "?";
}

int Signature::object_index(const std::string& id) const {
    for (int i = 0; i < object_count(); ++i)
        if (objects[i] == id) return i;
    return -1;
}

int Signature::essence_index(const std::string& id) const {
    for (int i = 0; i < essence_count(); ++i)
        if (essences[i] == id) return i;
    return -1;
}

int Signature::action_index(int object, int property, const std::string& id) const {
    const auto& catalog = actions[object][property];
    for (int i = 0; i < static_cast<int>(catalog.size()); ++i)
        if (catalog[i].id == id) return i;
    return -1;
}

int MmppfStructure::state_index(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(states.size()); ++i)
        if (states[i].id == id) return i;
    return -1;
}

const std::vector<int>& project_input(const MmppfStructure& m, const InputVector& v, int object) {
    if (object < 0 || object >= m.signature.object_count())
        throw Error("UNKNOWN_OBJECT", "object index " + std::to_string(object));
    return v.acts[object];
}

std::vector<InputVector> admissible_inputs(const MmppfStructure& m, const State& e) {
    const int z = m.signature.object_count();
    const int np = m.signature.property_count();

    // Product over (object, property) of theta sets, enumerated with the
    // rightmost slot varying fastest: object index, then property index,
    // then catalog (identifier) order.
    std::vector<InputVector> result;
    InputVector current;
    current.acts.assign(z, std::vector<int>(np, -1));

    for (int o = 0; o < z; ++o)
        for (int p = 0; p < np; ++p)
            if (e.theta[p][o].empty()) return {};  // empty product

    // Iterative odometer over the z*np slots.
    std::vector<int> pos(static_cast<size_t>(z) * np, 0);
    while (true) {
        for (int o = 0; o < z; ++o)
            for (int p = 0; p < np; ++p)
                current.acts[o][p] = e.theta[p][o][pos[static_cast<size_t>(o) * np + p]];
        result.push_back(current);

        int slot = z * np - 1;
        while (slot >= 0) {
            int o = slot / np, p = slot % np;
            if (pos[slot] + 1 < static_cast<int>(e.theta[p][o].size())) {
                ++pos[slot];
                break;
            }
            pos[slot] = 0;
            --slot;
        }
        if (slot < 0) break;
    }
    return result;
}

bool input_admissible(const MmppfStructure& m, int state, const InputVector& v) {
    const State& e = m.states[state];
    const int z = m.signature.object_count();
    const int np = m.signature.property_count();
    if (static_cast<int>(v.acts.size()) != z) return false;
    for (int o = 0; o < z; ++o) {
        if (static_cast<int>(v.acts[o].size()) != np) return false;
        for (int p = 0; p < np; ++p) {
            const auto& th = e.theta[p][o];
            if (std::find(th.begin(), th.end(), v.acts[o][p]) == th.end()) return false;
        }
    }
    return true;
}

std::optional<int> step(const MmppfStructure& m, int state, const InputVector& v) {
    if (!input_admissible(m, state, v)) return std::nullopt;
    auto it = m.transition.find({state, v});
    if (it == m.transition.end()) return std::nullopt;
    return it->second;
}

void finalize(MmppfStructure& m) {
    m.admissible.clear();
    m.admissible.reserve(m.states.size());
    for (const State& e : m.states) m.admissible.push_back(admissible_inputs(m, e));
}

Snapshot snapshot_of(const MmppfStructure& m, const State& e, int property) {
    Snapshot snap;
    snap.reserve(m.signature.object_count());
    for (int o = 0; o < m.signature.object_count(); ++o) snap.push_back(e.gstar[property][o]);
    return snap;
}

DepSet dep_set_of(const MmppfStructure& m, const State& e, int property) {
    DepSet deps;
    for (int o = 0; o < m.signature.object_count(); ++o)
        for (int target : e.relations[o][property]) deps.emplace_back(o, target);
    std::sort(deps.begin(), deps.end());
    return deps;
}

std::vector<int> bundle_of(const InputVector& v, int property) {
    std::vector<int> bundle;
    bundle.reserve(v.acts.size());
    for (const auto& per_object : v.acts) bundle.push_back(per_object[property]);
    return bundle;
}

}  // namespace mmppf
