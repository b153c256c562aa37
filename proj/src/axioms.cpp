#include "mmppf/axioms.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace mmppf {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

void add_witness(AxiomReport& rep, Fields fields, std::string kind = "") {
    Witness w;
    w.kind = std::move(kind);
    w.fields = std::move(fields);
    rep.witnesses.push_back(std::move(w));
    rep.pass = false;
}

std::string value_str(const MmppfStructure& m, int property, const PropertyValue& v) {
    if (v.is_empty()) return "empty";
    std::string s = "(";
    for (size_t q = 0; q < v.components.size(); ++q) {
        if (q) s += ",";
        s += m.signature.properties[property].domains[q][v.components[q]];
    }
    return s + ")";
}

AxiomReport axiom1(const MmppfStructure& m) {
    AxiomReport rep{1, true, {}, ""};
    const Signature& sig = m.signature;
    for (const State& e : m.states)
        for (int p = 1; p < sig.property_count(); ++p)
            for (int h = 0; h < sig.essence_count(); ++h) {
                bool has_value = !e.g[p][h].is_empty();
                bool assigned = false;
                for (int o = 0; o < sig.object_count() && !assigned; ++o)
                    assigned = std::binary_search(e.es[o].begin(), e.es[o].end(), h);
                if (has_value != assigned)
                    add_witness(rep, {{"state", e.id},
                                      {"property", std::to_string(p)},
                                      {"essence", sig.essences[h]},
                                      {"detail", has_value ? "value without assignment"
                                                           : "assignment without value"}});
            }
    return rep;
}

AxiomReport axiom2(const MmppfStructure& m) {
    AxiomReport rep{2, true, {}, ""};
    const Signature& sig = m.signature;
    for (const State& e : m.states)
        for (int p = 1; p < sig.property_count(); ++p)
            for (int h = 0; h < sig.essence_count(); ++h) {
                bool has_value = !e.g[p][h].is_empty();
                bool has_place = !e.g[0][h].is_empty();
                if (has_value != has_place)
                    add_witness(rep, {{"state", e.id},
                                      {"property", std::to_string(p)},
                                      {"essence", sig.essences[h]},
                                      {"detail", has_value ? "value without place" : "place without value"}});
            }
    return rep;
}

AxiomReport axiom3(const MmppfStructure& m) {
    AxiomReport rep{3, true, {}, ""};
    const Signature& sig = m.signature;
    for (const State& e : m.states)
        for (int p = 0; p < sig.property_count(); ++p) {
            for (int h = 0; h < sig.essence_count(); ++h) {
                const PropertyValue& x = e.g[p][h];
                if (x.is_empty()) continue;
                bool found = false;
                for (int o = 0; o < sig.object_count() && !found; ++o)
                    found = std::binary_search(e.gstar[p][o].begin(), e.gstar[p][o].end(),
                                               std::make_pair(h, x));
                if (!found)
                    add_witness(rep, {{"state", e.id},
                                      {"property", std::to_string(p)},
                                      {"essence", sig.essences[h]},
                                      {"detail", "g value " + value_str(m, p, x) + " missing from g*"}});
            }
            for (int o = 0; o < sig.object_count(); ++o)
                for (const auto& [h, x] : e.gstar[p][o])
                    if (x.is_empty() || e.g[p][h] != x)
                        add_witness(rep, {{"state", e.id},
                                          {"property", std::to_string(p)},
                                          {"object", sig.objects[o]},
                                          {"essence", sig.essences[h]},
                                          {"detail", "g* pair " + value_str(m, p, x) +
                                                         " disagrees with g value " +
                                                         value_str(m, p, e.g[p][h])}});
        }
    return rep;
}

AxiomReport axiom4(const MmppfStructure& m) {
    AxiomReport rep{4, true, {},
                    "DH is compared per action against the union of ES_j over all states; the "
                    "axiom text indexes DH per action but quantifies j over states"};
    const Signature& sig = m.signature;
    for (int o = 0; o < sig.object_count(); ++o) {
        std::set<int> assigned;
        for (const State& e : m.states) assigned.insert(e.es[o].begin(), e.es[o].end());
        for (int p = 0; p < sig.property_count(); ++p)
            for (const ActionDef& a : sig.actions[o][p]) {
                std::set<int> dh;
                for (const ActionRule& r : a.in_table) dh.insert(r.essence);
                if (dh != assigned)
                    add_witness(rep, {{"object", sig.objects[o]},
                                      {"property", std::to_string(p)},
                                      {"action", a.id},
                                      {"detail", "in-table essence domain differs from assigned essences"}});
            }
    }
    return rep;
}

AxiomReport axiom5(const MmppfStructure& m) {
    AxiomReport rep{5, true, {}, ""};
    const Signature& sig = m.signature;
    for (size_t j = 0; j < m.states.size(); ++j)
        for (size_t j2 = 0; j2 < m.states.size(); ++j2)
            for (int i = 0; i < sig.object_count(); ++i)
                for (int u = 0; u < sig.object_count(); ++u) {
                    if (i == u) continue;
                    const auto& a = m.states[j].es[i];
                    const auto& b = m.states[j2].es[u];
                    for (int h = 0; h < sig.essence_count(); ++h)
                        if (std::binary_search(a.begin(), a.end(), h) &&
                            std::binary_search(b.begin(), b.end(), h))
                            add_witness(rep, {{"state", m.states[j].id},
                                              {"object", sig.objects[i]},
                                              {"state2", m.states[j2].id},
                                              {"object2", sig.objects[u]},
                                              {"essence", sig.essences[h]}});
                }
    return rep;
}

Fields edge_fields(const MmppfStructure& m, const Perspective& pt, const SuccEntry& s) {
    return {{"anchor", std::to_string(pt.anchor)},
            {"time", std::to_string(s.from.time)},
            {"from", m.states[s.from.state].id},
            {"to", m.states[s.to.state].id}};
}

AxiomReport axiom6(const MmppfStructure& m) {
    AxiomReport rep{6, true, {}, ""};
    for (const Perspective& pt : m.perspectives)
        for (const SuccEntry& s : pt.succ)
            for (int p = 0; p < m.signature.property_count(); ++p) {
                std::vector<int> bundle = bundle_of(s.input, p);
                DepSet target_deps = dep_set_of(m, m.states[s.to.state], p);
                const DepEntry* entry = nullptr;
                for (const DepEntry& d : m.dependencies)
                    if (d.state == s.from.state && d.property == p && d.bundle == bundle) {
                        entry = &d;
                        break;
                    }
                Fields f = edge_fields(m, pt, s);
                f.emplace_back("property", std::to_string(p));
                if (!entry)
                    add_witness(rep, std::move(f), "MISSING_ENTRY");
                else if (entry->deps != target_deps)
                    add_witness(rep, std::move(f));
            }
    return rep;
}

AxiomReport axiom7(const MmppfStructure& m) {
    AxiomReport rep{7, true, {}, ""};
    for (const Perspective& pt : m.perspectives)
        for (const SuccEntry& s : pt.succ)
            for (int p = 0; p < m.signature.property_count(); ++p) {
                Snapshot from = snapshot_of(m, m.states[s.from.state], p);
                Snapshot to = snapshot_of(m, m.states[s.to.state], p);
                DepSet deps = dep_set_of(m, m.states[s.from.state], p);
                bool justified = false;
                for (const LawEntry& l : m.laws) {
                    if (l.property != p || l.from != from || l.deps != deps) continue;
                    if (std::find(l.to.begin(), l.to.end(), to) != l.to.end()) {
                        justified = true;
                        break;
                    }
                }
                if (!justified) {
                    Fields f = edge_fields(m, pt, s);
                    f.emplace_back("property", std::to_string(p));
                    add_witness(rep, std::move(f));
                }
            }
    return rep;
}

AxiomReport axiom8(const MmppfStructure& m) {
    AxiomReport rep{8, true, {},
                    "the prose side condition (actions must modify the object) is not decidable "
                    "from the structure data and is not checked"};
    const Signature& sig = m.signature;
    for (const State& e : m.states)
        for (int p = 0; p < sig.property_count(); ++p)
            for (int o = 0; o < sig.object_count(); ++o)
                for (const std::string& id : e.theta_extra[p][o])
                    add_witness(rep, {{"state", e.id},
                                      {"property", std::to_string(p)},
                                      {"object", sig.objects[o]},
                                      {"action", id}});
    return rep;
}

AxiomReport axiom9(const MmppfStructure& m) {
    AxiomReport rep{9, true, {}, ""};
    const int mt = m.time_count();
    for (const Perspective& pt : m.perspectives) {
        for (int t = 1; t <= mt; ++t)
            if (!pt.moments.count(t))
                add_witness(rep, {{"anchor", std::to_string(pt.anchor)},
                                  {"time", std::to_string(t)},
                                  {"detail", "perspective time set misses this time"}});
        for (const auto& [t, moment] : pt.moments)
            if (t < 1 || t > mt)
                add_witness(rep, {{"anchor", std::to_string(pt.anchor)},
                                  {"time", std::to_string(t)},
                                  {"detail", "moment outside the shared time set"}});
        // funcip(t) = funi(t), checked where both are defined.
        for (const auto& [t, v] : pt.realized_inputs) {
            auto it = m.realized_inputs.find(t);
            if (it != m.realized_inputs.end() && it->second != v)
                add_witness(rep, {{"anchor", std::to_string(pt.anchor)},
                                  {"time", std::to_string(t)},
                                  {"detail", "perspective realized input differs from funi"}});
        }
    }
    return rep;
}

AxiomReport axiom10(const MmppfStructure& m) {
    AxiomReport rep{10, true, {}, ""};
    for (const Perspective& pt : m.perspectives) {
        const int t = pt.anchor;
        for (const SuccEntry& s : pt.succ) {
            const int tp = s.from.time;
            const Condition cond = s.from.condition;
            auto it = pt.realized_inputs.find(tp);
            const bool realized_known = it != pt.realized_inputs.end();
            const bool input_realized = realized_known && it->second == s.input;
            const bool input_unrealized = realized_known && it->second != s.input;

            struct Expected {
                int time;
                Condition cond;
                Situator sit;
            };
            std::vector<Expected> expected;
            if (tp + 1 < t && input_realized && cond == Condition::Epsilon)
                expected.push_back({tp + 1, Condition::Epsilon, Situator::Past});
            if (tp + 1 < t && input_unrealized)
                expected.push_back({tp + 1, Condition::Hypothetical, Situator::Past});
            if (tp + 1 == t && input_realized && cond == Condition::Epsilon)
                expected.push_back({tp + 1, Condition::Epsilon, Situator::Present});
            if (tp + 1 == t && input_unrealized)
                expected.push_back({tp + 1, Condition::Hypothetical, Situator::Present});
            if (tp == t && input_realized && cond == Condition::Epsilon)
                expected.push_back({t + 1, Condition::Epsilon, Situator::Future});
            if (tp == t && input_unrealized && cond == Condition::Hypothetical)
                expected.push_back({t + 1, Condition::Hypothetical, Situator::Future});
            if (tp > t && cond == Condition::Epsilon)
                expected.push_back({t + 1, Condition::Epsilon, Situator::Future});
            if (tp > t && cond == Condition::Hypothetical)
                expected.push_back({t + 1, Condition::Hypothetical, Situator::Future});

            Fields f = edge_fields(m, pt, s);
            if (expected.empty()) {
                add_witness(rep, std::move(f), "UNMATCHED_CASE");
                continue;
            }
            bool ok = false;
            for (const Expected& e : expected)
                if (s.to.time == e.time && s.to.condition == e.cond && s.to.situator == e.sit) {
                    ok = true;
                    break;
                }
            if (!ok) {
                f.emplace_back("detail", "successor reality tuple differs from the case table");
                add_witness(rep, std::move(f));
            }
        }
    }
    return rep;
}

AxiomReport axiom11(const MmppfStructure& m) {
    AxiomReport rep{11, true, {}, ""};
    const Signature& sig = m.signature;
    for (const Perspective& pt : m.perspectives)
        for (const SuccEntry& s : pt.succ) {
            if (s.from.time != pt.anchor) continue;
            const State& src = m.states[s.from.state];
            const State& dst = m.states[s.to.state];
            for (int o = 0; o < sig.object_count(); ++o) {
                bool justified = false;
                for (const auto& family : m.sensation_laws) {
                    for (const SensationLawEntry& e : family)
                        if (e.object == o && e.state == s.from.state && e.input == s.input &&
                            e.reg == src.sensation[o] && e.result == dst.sensation[o]) {
                            justified = true;
                            break;
                        }
                    if (justified) break;
                }
                if (!justified) {
                    Fields f = edge_fields(m, pt, s);
                    f.emplace_back("object", sig.objects[o]);
                    add_witness(rep, std::move(f));
                }
            }
        }
    return rep;
}

}  // namespace

AxiomReport check_axiom(const MmppfStructure& m, int axiom) {
    switch (axiom) {
        case 1: return axiom1(m);
        case 2: return axiom2(m);
        case 3: return axiom3(m);
        case 4: return axiom4(m);
        case 5: return axiom5(m);
        case 6: return axiom6(m);
        case 7: return axiom7(m);
        case 8: return axiom8(m);
        case 9: return axiom9(m);
        case 10: return axiom10(m);
        case 11: return axiom11(m);
        default: throw Error("UNKNOWN_AXIOM", "axiom id " + std::to_string(axiom));
    }
}

std::vector<AxiomReport> validate_all(const MmppfStructure& m) {
    std::vector<AxiomReport> reports;
    for (int k = 1; k <= 11; ++k) reports.push_back(check_axiom(m, k));
    return reports;
}

std::vector<Witness> check_transition_totality(const MmppfStructure& m) {
    std::vector<Witness> out;
    for (size_t j = 0; j < m.states.size(); ++j)
        for (const InputVector& v : m.admissible[j])
            if (!m.transition.count({static_cast<int>(j), v})) {
                Witness w;
                w.kind = "MISSING_TRANSITION";
                w.fields = {{"state", m.states[j].id}};
                out.push_back(w);
            }
    return out;
}

std::string report_to_json(const MmppfStructure&, const std::vector<AxiomReport>& reports,
                           const std::vector<Witness>& structural) {
    nlohmann::json doc;
    nlohmann::json arr = nlohmann::json::array();
    auto witness_json = [](const Witness& w) {
        nlohmann::json wj;
        if (!w.kind.empty()) wj["kind"] = w.kind;
        nlohmann::json fj;
        for (const auto& [k, v] : w.fields) fj[k] = v;
        wj["fields"] = fj;
        return wj;
    };
    for (const AxiomReport& r : reports) {
        nlohmann::json rj{{"axiom", r.axiom_id}, {"status", r.pass ? "PASS" : "FAIL"}};
        if (!r.note.empty()) rj["note"] = r.note;
        nlohmann::json ws = nlohmann::json::array();
        for (const Witness& w : r.witnesses) ws.push_back(witness_json(w));
        rj["witnesses"] = ws;
        arr.push_back(rj);
    }
    doc["axioms"] = arr;
    nlohmann::json st = nlohmann::json::array();
    for (const Witness& w : structural) st.push_back(witness_json(w));
    doc["structural"] = st;
    return doc.dump(2) + "\n";
}

}  // namespace mmppf
