#include "mmppf/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mmppf {

using nlohmann::json;

namespace {

const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(path, "missing key '" + key + "'");
    return j.at(key);
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw parse_error(path, "expected integer");
    return j.get<int>();
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw parse_error(path, "expected string");
    return j.get<std::string>();
}

int resolve_object(const Signature& sig, const json& j, const std::string& path) {
    std::string id = require_string(j, path);
    int o = sig.object_index(id);
    if (o < 0) throw dangling_reference(id, path);
    return o;
}

int resolve_essence(const Signature& sig, const json& j, const std::string& path) {
    std::string id = require_string(j, path);
    int h = sig.essence_index(id);
    if (h < 0) throw dangling_reference(id, path);
    return h;
}

PropertyValue parse_value(const Signature& sig, int property, const json& j, const std::string& path) {
    PropertyValue v;
    if (j.is_null()) return v;
    if (!j.is_array()) throw parse_error(path, "expected null or array of value symbols");
    const PropertyDef& pd = sig.properties[property];
    if (static_cast<int>(j.size()) != pd.dim)
        throw arity_error(path, "value tuple of arity " + std::to_string(j.size()) +
                                    " for property of dim " + std::to_string(pd.dim));
    for (int q = 0; q < pd.dim; ++q) {
        std::string w = require_string(j.at(q), path);
        const auto& dom = pd.domains[q];
        auto it = std::find(dom.begin(), dom.end(), w);
        if (it == dom.end()) throw dangling_reference(w, path);
        v.components.push_back(static_cast<int>(it - dom.begin()));
    }
    return v;
}

Register parse_register(const json& j, const std::string& path) {
    Register r;
    if (j.is_string()) {
        if (j.get<std::string>() != "empty") throw parse_error(path, "register must be \"empty\" or a pair list");
        return r;
    }
    if (!j.is_array()) throw parse_error(path, "register must be \"empty\" or a pair list");
    r.empty = false;
    for (const auto& pj : j) {
        if (!pj.is_array() || pj.size() != 2) throw parse_error(path, "register pair must have two symbols");
        std::string a = require_string(pj.at(0), path), b = require_string(pj.at(1), path);
        if ((a != "s" && a != "c") || (b != "s" && b != "c"))
            throw parse_error(path, "register symbols are 's' and 'c'");
        r.seq.emplace_back(a[0], b[0]);
    }
    return r;
}

AssignmentSet parse_assignment_set(const Signature& sig, int property, const json& j, const std::string& path) {
    if (!j.is_array()) throw parse_error(path, "expected array of [essence, value] pairs");
    AssignmentSet set;
    for (const auto& pj : j) {
        if (!pj.is_array() || pj.size() != 2) throw parse_error(path, "pair must be [essence, value]");
        int h = resolve_essence(sig, pj.at(0), path);
        PropertyValue v = parse_value(sig, property, pj.at(1), path);
        set.emplace_back(h, v);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

InputVector parse_input(const MmppfStructure& m, const json& j, const std::string& path) {
    const Signature& sig = m.signature;
    if (!j.is_object()) throw parse_error(path, "input vector must map objects to action tuples");
    InputVector v;
    v.acts.assign(sig.object_count(), std::vector<int>(sig.property_count(), -1));
    for (auto it = j.begin(); it != j.end(); ++it) {
        int o = sig.object_index(it.key());
        if (o < 0) throw dangling_reference(it.key(), path);
        const json& tj = it.value();
        if (!tj.is_array() || static_cast<int>(tj.size()) != sig.property_count())
            throw arity_error(path, "action tuple must have one action per property");
        for (int p = 0; p < sig.property_count(); ++p) {
            std::string aid = require_string(tj.at(p), path);
            int a = sig.action_index(o, p, aid);
            if (a < 0) throw dangling_reference(aid, path + "/" + it.key());
            v.acts[o][p] = a;
        }
    }
    for (int o = 0; o < sig.object_count(); ++o)
        for (int p = 0; p < sig.property_count(); ++p)
            if (v.acts[o][p] < 0)
                throw parse_error(path, "input vector misses object " + sig.objects[o]);
    return v;
}

Condition parse_condition(const json& j, const std::string& path) {
    std::string s = require_string(j, path);
    if (s == "e") return Condition::Epsilon;
    if (s == "h") return Condition::Hypothetical;
    throw parse_error(path, "condition must be 'e' or 'h'");
}

Situator parse_situator(const json& j, const std::string& path) {
    std::string s = require_string(j, path);
    if (s == "past") return Situator::Past;
    if (s == "present") return Situator::Present;
    if (s == "future") return Situator::Future;
    throw parse_error(path, "situator must be past|present|future");
}

Reality parse_reality(const MmppfStructure& m, const json& j, const std::string& path) {
    Reality r;
    r.time = require_int(require(j, "time", path), path + "/time");
    r.condition = parse_condition(require(j, "condition", path), path + "/condition");
    r.situator = parse_situator(require(j, "situator", path), path + "/situator");
    std::string sid = require_string(require(j, "state", path), path + "/state");
    r.state = m.state_index(sid);
    if (r.state < 0) throw dangling_reference(sid, path + "/state");
    return r;
}

Snapshot parse_snapshot(const MmppfStructure& m, int property, const json& j, const std::string& path) {
    const Signature& sig = m.signature;
    if (!j.is_object()) throw parse_error(path, "snapshot must map objects to assignment sets");
    Snapshot snap(sig.object_count());
    for (auto it = j.begin(); it != j.end(); ++it) {
        int o = sig.object_index(it.key());
        if (o < 0) throw dangling_reference(it.key(), path);
        snap[o] = parse_assignment_set(sig, property, it.value(), path + "/" + it.key());
    }
    return snap;
}

DepSet parse_deps(const Signature& sig, const json& j, const std::string& path) {
    if (!j.is_array()) throw parse_error(path, "deps must be an array of [subject, target] pairs");
    DepSet deps;
    for (const auto& pj : j) {
        if (!pj.is_array() || pj.size() != 2) throw parse_error(path, "dep must be [subject, target]");
        deps.emplace_back(resolve_object(sig, pj.at(0), path), resolve_object(sig, pj.at(1), path));
    }
    std::sort(deps.begin(), deps.end());
    deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
    return deps;
}

std::vector<int> parse_bundle(const Signature& sig, int property, const json& j, const std::string& path) {
    if (!j.is_object()) throw parse_error(path, "action bundle must map objects to action ids");
    std::vector<int> bundle(sig.object_count(), -1);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int o = sig.object_index(it.key());
        if (o < 0) throw dangling_reference(it.key(), path);
        std::string aid = require_string(it.value(), path);
        int a = sig.action_index(o, property, aid);
        if (a < 0) throw dangling_reference(aid, path + "/" + it.key());
        bundle[o] = a;
    }
    for (int o = 0; o < sig.object_count(); ++o)
        if (bundle[o] < 0) throw parse_error(path, "bundle misses object " + sig.objects[o]);
    return bundle;
}

Signature parse_signature(const json& j) {
    Signature sig;
    const std::string path = "signature";
    for (const auto& oj : require(j, "objects", path)) sig.objects.push_back(require_string(oj, path + "/objects"));
    for (const auto& hj : require(j, "essences", path)) sig.essences.push_back(require_string(hj, path + "/essences"));
    if (sig.objects.empty()) throw parse_error(path, "at least one object required");
    if (sig.object_count() > sig.essence_count())
        throw parse_error(path, "object count exceeds essence count");
    {
        auto check_unique = [&](std::vector<std::string> v, const char* what) {
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) != v.end())
                throw parse_error(path, std::string("duplicate ") + what + " identifier");
        };
        check_unique(sig.objects, "object");
        check_unique(sig.essences, "essence");
    }

    const json& props = require(j, "properties", path);
    if (!props.is_array() || props.empty())
        throw parse_error(path + "/properties", "at least the spatial property (index 0) is required");
    for (size_t p = 0; p < props.size(); ++p) {
        const std::string ppath = path + "/properties/" + std::to_string(p);
        PropertyDef pd;
        pd.dim = require_int(require(props.at(p), "dim", ppath), ppath + "/dim");
        if (pd.dim < 1) throw arity_error(ppath, "dim must be >= 1");
        const json& doms = require(props.at(p), "domains", ppath);
        if (!doms.is_array() || static_cast<int>(doms.size()) != pd.dim)
            throw arity_error(ppath, "one domain per dimension required");
        for (const auto& dj : doms) {
            std::vector<std::string> dom;
            for (const auto& wj : dj) dom.push_back(require_string(wj, ppath + "/domains"));
            if (dom.empty()) throw parse_error(ppath, "value domains must be non-empty");
            pd.domains.push_back(dom);
        }
        sig.properties.push_back(pd);
    }

    // Action catalogs. Objects without an entry get empty catalogs.
    sig.actions.assign(sig.object_count(),
                       std::vector<std::vector<ActionDef>>(sig.property_count()));
    const json& acts = require(j, "actions", path);
    if (!acts.is_object()) throw parse_error(path + "/actions", "expected object keyed by object id");
    for (auto it = acts.begin(); it != acts.end(); ++it) {
        int o = sig.object_index(it.key());
        if (o < 0) throw dangling_reference(it.key(), path + "/actions");
        const json& per_prop = it.value();
        if (!per_prop.is_array() || static_cast<int>(per_prop.size()) != sig.property_count())
            throw arity_error(path + "/actions/" + it.key(), "one catalog per property required");
        for (int p = 0; p < sig.property_count(); ++p) {
            const std::string apath = path + "/actions/" + it.key() + "/" + std::to_string(p);
            for (const auto& aj : per_prop.at(p)) {
                ActionDef a;
                a.id = require_string(require(aj, "id", apath), apath + "/id");
                auto parse_table = [&](const char* key, std::vector<ActionRule>& out) {
                    if (!aj.contains(key)) return;
                    for (const auto& rj : aj.at(key)) {
                        ActionRule rule;
                        rule.essence = resolve_essence(sig, require(rj, "essence", apath), apath);
                        rule.from = parse_value(sig, p, require(rj, "from", apath), apath);
                        rule.to = parse_value(sig, p, require(rj, "to", apath), apath);
                        out.push_back(rule);
                    }
                    std::sort(out.begin(), out.end());
                };
                parse_table("in", a.in_table);
                parse_table("ext", a.ext_table);
                sig.actions[o][p].push_back(a);
            }
            auto& catalog = sig.actions[o][p];
            std::sort(catalog.begin(), catalog.end(),
                      [](const ActionDef& x, const ActionDef& y) { return x.id < y.id; });
            for (size_t i = 1; i < catalog.size(); ++i)
                if (catalog[i - 1].id == catalog[i].id)
                    throw parse_error(apath, "duplicate action id " + catalog[i].id);
        }
    }

    if (j.contains("sra"))
        for (size_t i = 0; i < j.at("sra").size(); ++i)
            sig.sra.push_back(parse_register(j.at("sra").at(i), path + "/sra/" + std::to_string(i)));
    return sig;
}

State parse_state(const MmppfStructure& m, const json& j, const std::string& path) {
    const Signature& sig = m.signature;
    State e;
    e.id = require_string(require(j, "id", path), path + "/id");
    e.es.assign(sig.object_count(), {});
    e.g.assign(sig.property_count(), std::vector<PropertyValue>(sig.essence_count()));
    e.gstar.assign(sig.property_count(), std::vector<AssignmentSet>(sig.object_count()));
    e.theta.assign(sig.property_count(), std::vector<std::vector<int>>(sig.object_count()));
    e.theta_extra.assign(sig.property_count(),
                         std::vector<std::vector<std::string>>(sig.object_count()));
    e.sensation.assign(sig.object_count(), Register{});
    e.relations.assign(sig.object_count(),
                       std::vector<std::vector<int>>(sig.property_count()));

    const json& es = require(j, "es", path);
    for (auto it = es.begin(); it != es.end(); ++it) {
        int o = sig.object_index(it.key());
        if (o < 0) throw dangling_reference(it.key(), path + "/es");
        for (const auto& hj : it.value())
            e.es[o].push_back(resolve_essence(sig, hj, path + "/es/" + it.key()));
        std::sort(e.es[o].begin(), e.es[o].end());
        e.es[o].erase(std::unique(e.es[o].begin(), e.es[o].end()), e.es[o].end());
    }

    const json& g = require(j, "g", path);
    if (!g.is_array() || static_cast<int>(g.size()) != sig.property_count())
        throw arity_error(path + "/g", "one essence-value map per property required");
    for (int p = 0; p < sig.property_count(); ++p) {
        for (auto it = g.at(p).begin(); it != g.at(p).end(); ++it) {
            int h = sig.essence_index(it.key());
            if (h < 0) throw dangling_reference(it.key(), path + "/g");
            e.g[p][h] = parse_value(sig, p, it.value(), path + "/g/" + it.key());
        }
    }

    const json& gstar = require(j, "gstar", path);
    if (!gstar.is_array() || static_cast<int>(gstar.size()) != sig.property_count())
        throw arity_error(path + "/gstar", "one object map per property required");
    for (int p = 0; p < sig.property_count(); ++p) {
        for (auto it = gstar.at(p).begin(); it != gstar.at(p).end(); ++it) {
            int o = sig.object_index(it.key());
            if (o < 0) throw dangling_reference(it.key(), path + "/gstar");
            e.gstar[p][o] = parse_assignment_set(sig, p, it.value(), path + "/gstar/" + it.key());
        }
    }

    const json& theta = require(j, "theta", path);
    if (!theta.is_array() || static_cast<int>(theta.size()) != sig.property_count())
        throw arity_error(path + "/theta", "one object map per property required");
    for (int p = 0; p < sig.property_count(); ++p) {
        for (auto it = theta.at(p).begin(); it != theta.at(p).end(); ++it) {
            int o = sig.object_index(it.key());
            if (o < 0) throw dangling_reference(it.key(), path + "/theta");
            for (const auto& aj : it.value()) {
                std::string aid = require_string(aj, path + "/theta");
                int a = sig.action_index(o, p, aid);
                // theta may cite actions outside the object's catalog; the
                // axiom validator reports those (Axiom 8). They must still
                // be declared somewhere in the signature.
                if (a < 0) {
                    bool found = false;
                    for (int o2 = 0; o2 < sig.object_count() && !found; ++o2)
                        for (int p2 = 0; p2 < sig.property_count() && !found; ++p2)
                            if (sig.action_index(o2, p2, aid) >= 0) found = true;
                    if (!found) throw dangling_reference(aid, path + "/theta/" + it.key());
                    e.theta_extra[p][o].push_back(aid);
                    continue;
                }
                e.theta[p][o].push_back(a);
            }
            std::sort(e.theta[p][o].begin(), e.theta[p][o].end());
            e.theta[p][o].erase(std::unique(e.theta[p][o].begin(), e.theta[p][o].end()),
                                e.theta[p][o].end());
        }
    }

    if (j.contains("sensation"))
        for (auto it = j.at("sensation").begin(); it != j.at("sensation").end(); ++it) {
            int o = sig.object_index(it.key());
            if (o < 0) throw dangling_reference(it.key(), path + "/sensation");
            e.sensation[o] = parse_register(it.value(), path + "/sensation/" + it.key());
        }

    if (j.contains("relations"))
        for (auto it = j.at("relations").begin(); it != j.at("relations").end(); ++it) {
            int o = sig.object_index(it.key());
            if (o < 0) throw dangling_reference(it.key(), path + "/relations");
            const json& per_prop = it.value();
            if (!per_prop.is_array() || static_cast<int>(per_prop.size()) != sig.property_count())
                throw arity_error(path + "/relations/" + it.key(), "one target list per property required");
            for (int p = 0; p < sig.property_count(); ++p) {
                for (const auto& tj : per_prop.at(p))
                    e.relations[o][p].push_back(resolve_object(sig, tj, path + "/relations"));
                std::sort(e.relations[o][p].begin(), e.relations[o][p].end());
            }
        }
    return e;
}

}  // namespace

MmppfStructure load_structure(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw parse_error("document", ex.what());
    }
    if (!doc.is_object()) throw parse_error("document", "top level must be an object");

    MmppfStructure m;
    m.signature = parse_signature(require(doc, "signature", "document"));

    const json& states = require(doc, "states", "document");
    for (size_t i = 0; i < states.size(); ++i) {
        // Two passes are not needed; state ids are only referenced after this loop.
        m.states.push_back(parse_state(m, states.at(i), "states/" + std::to_string(i)));
    }
    {
        std::vector<std::string> ids;
        for (const auto& e : m.states) ids.push_back(e.id);
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw parse_error("states", "duplicate state id");
    }

    if (doc.contains("transition"))
        for (size_t i = 0; i < doc.at("transition").size(); ++i) {
            const std::string path = "transition/" + std::to_string(i);
            const json& tj = doc.at("transition").at(i);
            std::string from = require_string(require(tj, "from", path), path);
            std::string to = require_string(require(tj, "to", path), path);
            int fs = m.state_index(from), ts = m.state_index(to);
            if (fs < 0) throw dangling_reference(from, path);
            if (ts < 0) throw dangling_reference(to, path);
            InputVector v = parse_input(m, require(tj, "input", path), path + "/input");
            m.transition[{fs, v}] = ts;
        }

    if (doc.contains("laws"))
        for (size_t i = 0; i < doc.at("laws").size(); ++i) {
            const std::string path = "laws/" + std::to_string(i);
            const json& lj = doc.at("laws").at(i);
            LawEntry entry;
            entry.property = require_int(require(lj, "property", path), path);
            if (entry.property < 0 || entry.property >= m.signature.property_count())
                throw dangling_reference("property " + std::to_string(entry.property), path);
            entry.from = parse_snapshot(m, entry.property, require(lj, "from", path), path + "/from");
            entry.bundle = parse_bundle(m.signature, entry.property, require(lj, "actions", path), path + "/actions");
            entry.deps = parse_deps(m.signature, require(lj, "deps", path), path + "/deps");
            for (const auto& sj : require(lj, "to", path))
                entry.to.push_back(parse_snapshot(m, entry.property, sj, path + "/to"));
            m.laws.push_back(entry);
        }

    if (doc.contains("sensation_laws"))
        for (size_t k = 0; k < doc.at("sensation_laws").size(); ++k) {
            std::vector<SensationLawEntry> family;
            for (size_t i = 0; i < doc.at("sensation_laws").at(k).size(); ++i) {
                const std::string path = "sensation_laws/" + std::to_string(k) + "/" + std::to_string(i);
                const json& sj = doc.at("sensation_laws").at(k).at(i);
                SensationLawEntry entry;
                entry.reg = parse_register(require(sj, "register", path), path + "/register");
                entry.object = resolve_object(m.signature, require(sj, "object", path), path);
                std::string sid = require_string(require(sj, "state", path), path);
                entry.state = m.state_index(sid);
                if (entry.state < 0) throw dangling_reference(sid, path);
                entry.input = parse_input(m, require(sj, "input", path), path + "/input");
                entry.result = parse_register(require(sj, "result", path), path + "/result");
                family.push_back(entry);
            }
            m.sensation_laws.push_back(family);
        }

    if (doc.contains("dependencies"))
        for (size_t i = 0; i < doc.at("dependencies").size(); ++i) {
            const std::string path = "dependencies/" + std::to_string(i);
            const json& dj = doc.at("dependencies").at(i);
            DepEntry entry;
            std::string sid = require_string(require(dj, "state", path), path);
            entry.state = m.state_index(sid);
            if (entry.state < 0) throw dangling_reference(sid, path);
            entry.property = require_int(require(dj, "property", path), path);
            if (entry.property < 0 || entry.property >= m.signature.property_count())
                throw dangling_reference("property " + std::to_string(entry.property), path);
            entry.bundle = parse_bundle(m.signature, entry.property, require(dj, "actions", path), path + "/actions");
            entry.deps = parse_deps(m.signature, require(dj, "deps", path), path + "/deps");
            m.dependencies.push_back(entry);
        }

    const json& persp = require(doc, "perspectives", "document");
    for (size_t i = 0; i < persp.size(); ++i) {
        const std::string path = "perspectives/" + std::to_string(i);
        const json& pj = persp.at(i);
        Perspective pt;
        pt.anchor = require_int(require(pj, "anchor", path), path + "/anchor");
        if (pt.anchor != static_cast<int>(i) + 1)
            throw parse_error(path, "perspectives must be anchored 1..m in order");
        if (pj.contains("moments"))
            for (auto it = pj.at("moments").begin(); it != pj.at("moments").end(); ++it) {
                int t;
                try {
                    t = std::stoi(it.key());
                } catch (...) {
                    throw parse_error(path + "/moments", "moment keys are time indices");
                }
                std::vector<Reality> moment;
                for (const auto& rj : it.value()) {
                    Reality r = parse_reality(m, rj, path + "/moments/" + it.key());
                    if (r.time != t)
                        throw parse_error(path + "/moments/" + it.key(), "reality time differs from moment key");
                    Situator expected = r.time < pt.anchor   ? Situator::Past
                                        : r.time == pt.anchor ? Situator::Present
                                                              : Situator::Future;
                    if (r.situator != expected)
                        throw parse_error(path + "/moments/" + it.key(),
                                          "situator inconsistent with anchor " + std::to_string(pt.anchor));
                    moment.push_back(r);
                }
                std::sort(moment.begin(), moment.end());
                moment.erase(std::unique(moment.begin(), moment.end()), moment.end());
                pt.moments[t] = moment;
            }
        if (pj.contains("realized_inputs"))
            for (auto it = pj.at("realized_inputs").begin(); it != pj.at("realized_inputs").end(); ++it) {
                int t;
                try {
                    t = std::stoi(it.key());
                } catch (...) {
                    throw parse_error(path + "/realized_inputs", "keys are time indices");
                }
                if (t > pt.anchor)
                    throw parse_error(path + "/realized_inputs", "realized inputs only up to the anchor");
                pt.realized_inputs[t] = parse_input(m, it.value(), path + "/realized_inputs/" + it.key());
            }
        if (pj.contains("succ"))
            for (size_t s = 0; s < pj.at("succ").size(); ++s) {
                const std::string spath = path + "/succ/" + std::to_string(s);
                const json& sj = pj.at("succ").at(s);
                SuccEntry entry;
                entry.from = parse_reality(m, require(sj, "from", spath), spath + "/from");
                entry.input = parse_input(m, require(sj, "input", spath), spath + "/input");
                // The successor reality is not required to lie in a moment;
                // Axiom 10 constrains its shape instead. Parse it leniently.
                {
                    const json& rj = require(sj, "to", spath);
                    entry.to.time = require_int(require(rj, "time", spath), spath);
                    entry.to.condition = parse_condition(require(rj, "condition", spath), spath);
                    entry.to.situator = parse_situator(require(rj, "situator", spath), spath);
                    std::string sid = require_string(require(rj, "state", spath), spath);
                    entry.to.state = m.state_index(sid);
                    if (entry.to.state < 0) throw dangling_reference(sid, spath);
                }
                pt.succ.push_back(entry);
            }
        std::sort(pt.succ.begin(), pt.succ.end(), [](const SuccEntry& a, const SuccEntry& b) {
            return std::tie(a.from, a.input, a.to) < std::tie(b.from, b.input, b.to);
        });
        m.perspectives.push_back(pt);
    }
    if (m.perspectives.empty()) throw parse_error("perspectives", "at least one perspective required");

    if (doc.contains("realized_inputs"))
        for (auto it = doc.at("realized_inputs").begin(); it != doc.at("realized_inputs").end(); ++it) {
            int t;
            try {
                t = std::stoi(it.key());
            } catch (...) {
                throw parse_error("realized_inputs", "keys are time indices");
            }
            m.realized_inputs[t] = parse_input(m, it.value(), "realized_inputs/" + it.key());
        }

    finalize(m);
    return m;
}

MmppfStructure load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IO_ERROR", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_structure(ss.str());
}

namespace {

json value_json(const Signature& sig, int property, const PropertyValue& v) {
    if (v.is_empty()) return nullptr;
    json arr = json::array();
    for (int q = 0; q < static_cast<int>(v.components.size()); ++q)
        arr.push_back(sig.properties[property].domains[q][v.components[q]]);
    return arr;
}

json register_json(const Register& r) {
    if (r.empty) return "empty";
    json arr = json::array();
    for (auto [a, b] : r.seq) arr.push_back(json::array({std::string(1, a), std::string(1, b)}));
    return arr;
}

json assignment_set_json(const Signature& sig, int property, const AssignmentSet& set) {
    json arr = json::array();
    for (const auto& [h, v] : set)
        arr.push_back(json::array({sig.essences[h], value_json(sig, property, v)}));
    return arr;
}

json input_json(const MmppfStructure& m, const InputVector& v) {
    const Signature& sig = m.signature;
    json obj = json::object();
    for (int o = 0; o < sig.object_count(); ++o) {
        json tuple = json::array();
        for (int p = 0; p < sig.property_count(); ++p)
            tuple.push_back(sig.action(o, p, v.acts[o][p]).id);
        obj[sig.objects[o]] = tuple;
    }
    return obj;
}

json reality_json(const MmppfStructure& m, const Reality& r) {
    return json{{"time", r.time},
                {"condition", to_string(r.condition)},
                {"situator", to_string(r.situator)},
                {"state", m.states[r.state].id}};
}

json snapshot_json(const MmppfStructure& m, int property, const Snapshot& snap) {
    json obj = json::object();
    for (int o = 0; o < m.signature.object_count(); ++o)
        obj[m.signature.objects[o]] = assignment_set_json(m.signature, property, snap[o]);
    return obj;
}

json deps_json(const Signature& sig, const DepSet& deps) {
    json arr = json::array();
    for (auto [a, b] : deps) arr.push_back(json::array({sig.objects[a], sig.objects[b]}));
    return arr;
}

json bundle_json(const MmppfStructure& m, int property, const std::vector<int>& bundle) {
    json obj = json::object();
    for (int o = 0; o < m.signature.object_count(); ++o)
        obj[m.signature.objects[o]] = m.signature.action(o, property, bundle[o]).id;
    return obj;
}

void sort_entries(json& arr) {
    std::sort(arr.begin(), arr.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
}

}  // namespace

std::string save_structure(const MmppfStructure& m) {
    const Signature& sig = m.signature;
    json doc;

    json sj;
    sj["objects"] = sig.objects;
    sj["essences"] = sig.essences;
    json props = json::array();
    for (const auto& pd : sig.properties) props.push_back(json{{"dim", pd.dim}, {"domains", pd.domains}});
    sj["properties"] = props;
    json acts = json::object();
    for (int o = 0; o < sig.object_count(); ++o) {
        json per_prop = json::array();
        for (int p = 0; p < sig.property_count(); ++p) {
            json catalog = json::array();
            for (const ActionDef& a : sig.actions[o][p]) {
                json aj{{"id", a.id}};
                auto table_json = [&](const std::vector<ActionRule>& table) {
                    json arr = json::array();
                    for (const ActionRule& r : table)
                        arr.push_back(json{{"essence", sig.essences[r.essence]},
                                           {"from", value_json(sig, p, r.from)},
                                           {"to", value_json(sig, p, r.to)}});
                    return arr;
                };
                aj["in"] = table_json(a.in_table);
                aj["ext"] = table_json(a.ext_table);
                catalog.push_back(aj);
            }
            per_prop.push_back(catalog);
        }
        acts[sig.objects[o]] = per_prop;
    }
    sj["actions"] = acts;
    json sra = json::array();
    for (const Register& r : sig.sra) sra.push_back(register_json(r));
    sj["sra"] = sra;
    doc["signature"] = sj;

    json states = json::array();
    for (const State& e : m.states) {
        json ej{{"id", e.id}};
        json es = json::object();
        for (int o = 0; o < sig.object_count(); ++o) {
            json hs = json::array();
            for (int h : e.es[o]) hs.push_back(sig.essences[h]);
            es[sig.objects[o]] = hs;
        }
        ej["es"] = es;
        json g = json::array();
        for (int p = 0; p < sig.property_count(); ++p) {
            json gm = json::object();
            for (int h = 0; h < sig.essence_count(); ++h)
                gm[sig.essences[h]] = value_json(sig, p, e.g[p][h]);
            g.push_back(gm);
        }
        ej["g"] = g;
        json gstar = json::array();
        for (int p = 0; p < sig.property_count(); ++p) {
            json gm = json::object();
            for (int o = 0; o < sig.object_count(); ++o)
                gm[sig.objects[o]] = assignment_set_json(sig, p, e.gstar[p][o]);
            gstar.push_back(gm);
        }
        ej["gstar"] = gstar;
        json theta = json::array();
        for (int p = 0; p < sig.property_count(); ++p) {
            json tm = json::object();
            for (int o = 0; o < sig.object_count(); ++o) {
                std::vector<std::string> ids;
                for (int a : e.theta[p][o]) ids.push_back(sig.action(o, p, a).id);
                for (const auto& id : e.theta_extra[p][o]) ids.push_back(id);
                std::sort(ids.begin(), ids.end());
                tm[sig.objects[o]] = ids;
            }
            theta.push_back(tm);
        }
        ej["theta"] = theta;
        json sens = json::object();
        for (int o = 0; o < sig.object_count(); ++o)
            sens[sig.objects[o]] = register_json(e.sensation[o]);
        ej["sensation"] = sens;
        json rels = json::object();
        for (int o = 0; o < sig.object_count(); ++o) {
            json per_prop = json::array();
            for (int p = 0; p < sig.property_count(); ++p) {
                json targets = json::array();
                for (int t : e.relations[o][p]) targets.push_back(sig.objects[t]);
                per_prop.push_back(targets);
            }
            rels[sig.objects[o]] = per_prop;
        }
        ej["relations"] = rels;
        states.push_back(ej);
    }
    doc["states"] = states;

    json trans = json::array();
    for (const auto& [key, to] : m.transition)
        trans.push_back(json{{"from", m.states[key.first].id},
                             {"input", input_json(m, key.second)},
                             {"to", m.states[to].id}});
    doc["transition"] = trans;

    json laws = json::array();
    for (const LawEntry& l : m.laws) {
        json tos = json::array();
        for (const Snapshot& s : l.to) tos.push_back(snapshot_json(m, l.property, s));
        laws.push_back(json{{"property", l.property},
                            {"from", snapshot_json(m, l.property, l.from)},
                            {"actions", bundle_json(m, l.property, l.bundle)},
                            {"deps", deps_json(sig, l.deps)},
                            {"to", tos}});
    }
    sort_entries(laws);
    doc["laws"] = laws;

    json slaws = json::array();
    for (const auto& family : m.sensation_laws) {
        json fam = json::array();
        for (const SensationLawEntry& s : family)
            fam.push_back(json{{"register", register_json(s.reg)},
                               {"object", sig.objects[s.object]},
                               {"state", m.states[s.state].id},
                               {"input", input_json(m, s.input)},
                               {"result", register_json(s.result)}});
        sort_entries(fam);
        slaws.push_back(fam);
    }
    doc["sensation_laws"] = slaws;

    json deps = json::array();
    for (const DepEntry& d : m.dependencies)
        deps.push_back(json{{"state", m.states[d.state].id},
                            {"property", d.property},
                            {"actions", bundle_json(m, d.property, d.bundle)},
                            {"deps", deps_json(sig, d.deps)}});
    sort_entries(deps);
    doc["dependencies"] = deps;

    json persp = json::array();
    for (const Perspective& pt : m.perspectives) {
        json pj{{"anchor", pt.anchor}};
        json moments = json::object();
        for (const auto& [t, moment] : pt.moments) {
            json arr = json::array();
            for (const Reality& r : moment) arr.push_back(reality_json(m, r));
            moments[std::to_string(t)] = arr;
        }
        pj["moments"] = moments;
        json realized = json::object();
        for (const auto& [t, v] : pt.realized_inputs) realized[std::to_string(t)] = input_json(m, v);
        pj["realized_inputs"] = realized;
        json succ = json::array();
        for (const SuccEntry& s : pt.succ)
            succ.push_back(json{{"from", reality_json(m, s.from)},
                                {"input", input_json(m, s.input)},
                                {"to", reality_json(m, s.to)}});
        pj["succ"] = succ;
        persp.push_back(pj);
    }
    doc["perspectives"] = persp;

    json realized = json::object();
    for (const auto& [t, v] : m.realized_inputs) realized[std::to_string(t)] = input_json(m, v);
    doc["realized_inputs"] = realized;

    return doc.dump(2) + "\n";
}

}  // namespace mmppf
