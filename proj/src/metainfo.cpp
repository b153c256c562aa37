#include "mmppf/metainfo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace mmppf {

namespace {

const TypeIBody& type1_body(const PlAtomic& a, int object, const char* who) {
    const TypeIBody* b = std::get_if<TypeIBody>(&a.body);
    if (!b) throw Error("WRONG_ATOM_KIND", std::string(who) + " needs a state atom");
    if (b->object != object)
        throw Error("WRONG_SHAPE", std::string(who) + ": atom names a different object");
    return *b;
}

// All component-q comparisons between values of essences shared by the two
// assignment sets. cmp < 0 left-smaller, 0 equal, > 0 right-smaller.
std::vector<int> shared_comparisons(const AssignmentSet& left, const AssignmentSet& right,
                                    int dimension) {
    std::vector<int> out;
    for (const auto& [h, vl] : left)
        for (const auto& [h2, vr] : right) {
            if (h != h2) continue;
            int a = vl.components[dimension - 1];
            int b = vr.components[dimension - 1];
            out.push_back(a < b ? -1 : a == b ? 0 : 1);
        }
    return out;
}

bool has_relation(const Signature&, int property, int subject, int target, const PlBlock& block) {
    for (const PlAtomic& a : block.atoms)
        if (const TypeIIBody* b = std::get_if<TypeIIBody>(&a.body))
            if (b->subject == subject && b->property == property && b->target == target)
                return true;
    return false;
}

}  // namespace

MetaSym ms(const Signature&, int property, int object, const PlAtomic& psi) {
    const TypeIBody& b = type1_body(psi, object, "ms");
    return b.sets[property].empty() ? MetaSym::Zero : MetaSym::One;
}

MetaSym tsp(const Signature& sig, int property, int object, const PlAtomic& left,
            const PlAtomic& right) {
    const TypeIBody& l = type1_body(left, object, "tsp");
    const TypeIBody& r = type1_body(right, object, "tsp");
    if (ms(sig, property, object, left) == MetaSym::Zero ||
        ms(sig, property, object, right) == MetaSym::Zero)
        return MetaSym::Tilde;
    return l.sets[property] == r.sets[property] ? MetaSym::B1 : MetaSym::B2;
}

MetaSym tscp(const Signature& sig, int property, int dimension, int object,
             const PlAtomic& left, const PlAtomic& right) {
    const TypeIBody& l = type1_body(left, object, "tscp");
    const TypeIBody& r = type1_body(right, object, "tscp");
    if (ms(sig, property, object, left) == MetaSym::Zero ||
        ms(sig, property, object, right) == MetaSym::Zero)
        return MetaSym::Tilde;
    std::vector<int> cmp = shared_comparisons(l.sets[property], r.sets[property], dimension);
    bool all_equal = std::all_of(cmp.begin(), cmp.end(), [](int c) { return c == 0; });
    bool all_diff = std::all_of(cmp.begin(), cmp.end(), [](int c) { return c != 0; });
    if (all_equal) return MetaSym::G1;  // covers the vacuous no-shared-essence case
    if (all_diff) return MetaSym::G2;
    throw Error("MIXED_COMPONENT_CASE",
                "tscp: shared essences of property " + std::to_string(property) + " dimension " +
                    std::to_string(dimension) + " are partly equal, partly different");
}

MetaSym toscp(const Signature& sig, int property, int dimension, int object,
              const PlAtomic& left, const PlAtomic& right) {
    const TypeIBody& l = type1_body(left, object, "toscp");
    const TypeIBody& r = type1_body(right, object, "toscp");
    if (ms(sig, property, object, left) == MetaSym::Zero ||
        ms(sig, property, object, right) == MetaSym::Zero)
        return MetaSym::Tilde;
    std::vector<int> cmp = shared_comparisons(l.sets[property], r.sets[property], dimension);
    bool all_up = std::all_of(cmp.begin(), cmp.end(), [](int c) { return c < 0; });
    bool all_down = std::all_of(cmp.begin(), cmp.end(), [](int c) { return c > 0; });
    if (all_up) return MetaSym::D1;  // covers the vacuous case
    if (all_down && !cmp.empty()) return MetaSym::D2;
    throw Error("MIXED_COMPONENT_CASE",
                "toscp: shared essences of property " + std::to_string(property) + " dimension " +
                    std::to_string(dimension) + " do not move uniformly under the order");
}

MetaSym rs(const Signature& sig, int property, int subject, int target, const PlBlock& block) {
    return has_relation(sig, property, subject, target, block) ? MetaSym::K2 : MetaSym::K1;
}

MetaSym trs(const Signature& sig, int property, int subject, int target, const PlBlock& left,
            const PlBlock& right) {
    bool l = has_relation(sig, property, subject, target, left);
    bool r = has_relation(sig, property, subject, target, right);
    if (!l && !r) return MetaSym::T1;
    if (!l && r) return MetaSym::T2;
    if (l && !r) return MetaSym::T3;
    return MetaSym::T4;
}

AbstractionProfile parse_profile(const Signature& sig, const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("profile", e.what());
    }
    if (!doc.is_object() || !doc.contains("directives") || !doc["directives"].is_array())
        throw parse_error("profile", "expected an object with a 'directives' array");
    AbstractionProfile p;
    static const std::set<std::string> functors = {"sigma1", "sigma2", "sigma3",
                                                   "sigma4", "pi1",    "pi2"};
    for (const auto& dj : doc["directives"]) {
        ProfileDirective d;
        d.chain = dj.value("chain", 0);
        d.block = dj.value("block", 0);
        d.functor = dj.value("functor", "");
        if (!functors.count(d.functor))
            throw parse_error("profile", "unknown functor '" + d.functor + "'");
        bool relational = d.functor == "pi1" || d.functor == "pi2";
        std::string obj = dj.value(relational ? "subject" : "object", "");
        d.object = sig.object_index(obj);
        if (d.object < 0) throw dangling_reference(obj, "profile directive");
        if (relational) {
            std::string tgt = dj.value("target", "");
            d.target = sig.object_index(tgt);
            if (d.target < 0) throw dangling_reference(tgt, "profile directive");
        }
        if (d.functor != "sigma1" && d.functor != "sigma2") {
            d.property = dj.value("property", 0);
            if (d.property < 0 || d.property >= sig.property_count())
                throw dangling_reference("property " + std::to_string(d.property),
                                         "profile directive");
        }
        if (d.functor == "sigma3" || d.functor == "sigma4") {
            d.dimension = dj.value("dimension", 1);
            if (d.dimension < 1 || d.dimension > sig.properties[d.property].dim)
                throw dangling_reference("dimension " + std::to_string(d.dimension),
                                         "profile directive");
        }
        p.directives.push_back(d);
    }
    return p;
}

std::string print_profile(const Signature& sig, const AbstractionProfile& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ProfileDirective& d : p.directives) {
        nlohmann::json dj{{"chain", d.chain}, {"block", d.block}, {"functor", d.functor}};
        bool relational = d.functor == "pi1" || d.functor == "pi2";
        dj[relational ? "subject" : "object"] = sig.objects[d.object];
        if (relational) dj["target"] = sig.objects[d.target];
        if (d.functor != "sigma1" && d.functor != "sigma2") dj["property"] = d.property;
        if (d.functor == "sigma3" || d.functor == "sigma4") dj["dimension"] = d.dimension;
        arr.push_back(dj);
    }
    return nlohmann::json{{"directives", arr}}.dump(2) + "\n";
}

namespace {

std::vector<int> type1_objects(const PlBlock& block) {
    std::vector<int> out;
    for (const PlAtomic& a : block.atoms)
        if (const TypeIBody* b = std::get_if<TypeIBody>(&a.body)) out.push_back(b->object);
    std::sort(out.begin(), out.end());
    return out;
}

const PlAtomic* find_type1(const PlBlock& block, int object) {
    for (const PlAtomic& a : block.atoms)
        if (const TypeIBody* b = std::get_if<TypeIBody>(&a.body))
            if (b->object == object) return &a;
    return nullptr;
}

}  // namespace

AbstractionProfile default_profile(const Signature&, const PlFormula& f) {
    AbstractionProfile p;
    for (size_t c = 0; c < f.chains.size(); ++c) {
        const PlChain& chain = f.chains[c];
        size_t b = 0;
        while (b < chain.blocks.size()) {
            const PlBlock& block = chain.blocks[b];
            std::vector<int> left_objs = type1_objects(block);
            std::vector<int> shared;
            bool pair = b + 1 < chain.blocks.size() && chain.joins[b] == Join::Next;
            if (pair) {
                std::vector<int> right_objs = type1_objects(chain.blocks[b + 1]);
                std::set_intersection(left_objs.begin(), left_objs.end(), right_objs.begin(),
                                      right_objs.end(), std::back_inserter(shared));
            }
            if (!shared.empty()) {
                for (int o : shared)
                    p.directives.push_back({static_cast<int>(c), static_cast<int>(b), "sigma2",
                                            o, -1, 0, 1});
                for (int o : left_objs)
                    if (!std::binary_search(shared.begin(), shared.end(), o))
                        p.directives.push_back({static_cast<int>(c), static_cast<int>(b),
                                                "sigma1", o, -1, 0, 1});
                for (const PlAtomic& a : block.atoms)
                    if (const TypeIIBody* rb = std::get_if<TypeIIBody>(&a.body))
                        p.directives.push_back({static_cast<int>(c), static_cast<int>(b), "pi2",
                                                rb->subject, rb->target, rb->property, 1});
                b += 2;
            } else {
                for (int o : left_objs)
                    p.directives.push_back({static_cast<int>(c), static_cast<int>(b), "sigma1",
                                            o, -1, 0, 1});
                for (const PlAtomic& a : block.atoms)
                    if (const TypeIIBody* rb = std::get_if<TypeIIBody>(&a.body))
                        p.directives.push_back({static_cast<int>(c), static_cast<int>(b), "pi1",
                                                rb->subject, rb->target, rb->property, 1});
                b += 1;
            }
        }
    }
    return p;
}

PlStarFormula translate_tr1(const Signature& sig, const PlFormula& f,
                            const AbstractionProfile& profile) {
    auto mismatch = [](const std::string& what) { return Error("PROFILE_MISMATCH", what); };

    // Directives grouped by (chain, left block), preserving profile order.
    std::map<std::pair<int, int>, std::vector<const ProfileDirective*>> at;
    for (const ProfileDirective& d : profile.directives) {
        if (d.chain < 0 || d.chain >= static_cast<int>(f.chains.size()))
            throw mismatch("directive chain index out of range");
        if (d.block < 0 || d.block >= static_cast<int>(f.chains[d.chain].blocks.size()))
            throw mismatch("directive block index out of range");
        at[{d.chain, d.block}].push_back(&d);
    }

    PlStarFormula out;
    for (size_t c = 0; c < f.chains.size(); ++c) {
        const PlChain& chain = f.chains[c];
        PlStarChain star_chain;
        std::optional<Join> pending_join;
        size_t b = 0;
        while (b < chain.blocks.size()) {
            auto it = at.find({static_cast<int>(c), static_cast<int>(b)});
            if (it == at.end())
                throw mismatch("chain " + std::to_string(c + 1) + " block " +
                               std::to_string(b + 1) + " has no directive");
            const PlBlock& left = chain.blocks[b];
            bool pair = std::any_of(it->second.begin(), it->second.end(),
                                    [](const ProfileDirective* d) {
                                        return d->functor != "sigma1" && d->functor != "pi1";
                                    });
            const PlBlock* right = nullptr;
            if (pair) {
                if (b + 1 >= chain.blocks.size() || chain.joins[b] != Join::Next)
                    throw mismatch("pair directive at chain " + std::to_string(c + 1) +
                                   " block " + std::to_string(b + 1) +
                                   " without a ->> successor block");
                if (at.count({static_cast<int>(c), static_cast<int>(b + 1)}))
                    throw mismatch("block consumed by a pair directive also has directives");
                right = &chain.blocks[b + 1];
            }

            PlStarBlock star_block;
            for (const ProfileDirective* d : it->second) {
                PlStarAtomic atom;
                atom.cond = left.atoms[0].cond;
                atom.sit = left.atoms[0].sit;
                if (d->functor == "sigma1" || d->functor == "sigma2") {
                    const PlAtomic* l = find_type1(left, d->object);
                    if (!l) throw mismatch("no state atom for the directed object");
                    MetaIBody body;
                    body.object = d->object;
                    if (d->functor == "sigma1") {
                        for (int p = 0; p < sig.property_count(); ++p)
                            body.symbols.push_back(ms(sig, p, d->object, *l));
                    } else {
                        const PlAtomic* r = find_type1(*right, d->object);
                        if (!r) throw mismatch("no right-hand state atom for the directed object");
                        for (int p = 0; p < sig.property_count(); ++p)
                            body.symbols.push_back(tsp(sig, p, d->object, *l, *r));
                    }
                    atom.body = std::move(body);
                } else if (d->functor == "sigma3" || d->functor == "sigma4") {
                    const PlAtomic* l = find_type1(left, d->object);
                    const PlAtomic* r = right ? find_type1(*right, d->object) : nullptr;
                    if (!l || !r) throw mismatch("no state atom pair for the directed object");
                    MetaComponentBody body;
                    body.object = d->object;
                    body.property = d->property;
                    body.dimension = d->dimension;
                    body.symbol = d->functor == "sigma3"
                                      ? tscp(sig, d->property, d->dimension, d->object, *l, *r)
                                      : toscp(sig, d->property, d->dimension, d->object, *l, *r);
                    atom.body = body;
                } else {
                    MetaRelationalBody body;
                    body.subject = d->object;
                    body.target = d->target;
                    body.symbol = d->functor == "pi1"
                                      ? rs(sig, d->property, d->object, d->target, left)
                                      : trs(sig, d->property, d->object, d->target, left, *right);
                    atom.body = body;
                }
                star_block.atoms.push_back(std::move(atom));
            }
            std::sort(star_block.atoms.begin(), star_block.atoms.end());
            if (pending_join) star_chain.joins.push_back(*pending_join);
            star_chain.blocks.push_back(std::move(star_block));
            size_t consumed = pair ? 2 : 1;
            size_t next = b + consumed;
            if (next < chain.blocks.size()) pending_join = chain.joins[next - 1];
            b = next;
        }
        out.chains.push_back(std::move(star_chain));
    }
    return out;
}

}  // namespace mmppf
