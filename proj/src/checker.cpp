#include "mmppf/checker.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "json.hpp"

namespace mmppf {

bool sat_atomic(const MmppfStructure& m, const Perspective& pt, const Reality& r,
                const PlAtomic& a) {
    if (a.sit != r.situator) return false;
    const State& e = m.states[r.state];
    if (const TypeIBody* b = std::get_if<TypeIBody>(&a.body)) {
        if (a.cond != r.condition) return false;
        for (int p = 0; p < m.signature.property_count(); ++p)
            if (b->sets[p] != e.gstar[p][b->object]) return false;
        return true;
    }
    if (const TypeIIBody* b2 = std::get_if<TypeIIBody>(&a.body)) {
        const auto& rel = e.relations[b2->subject][b2->property];
        return std::binary_search(rel.begin(), rel.end(), b2->target);
    }
    const TypeIIIBody& b3 = std::get<TypeIIIBody>(a.body);
    if (a.cond == Condition::Epsilon && r.time <= pt.anchor) {
        auto it = pt.realized_inputs.find(r.time);
        if (it == pt.realized_inputs.end()) return false;
        return it->second.acts[b3.object] == b3.actions;
    }
    for (int p = 0; p < m.signature.property_count(); ++p) {
        const auto& th = e.theta[p][b3.object];
        if (std::find(th.begin(), th.end(), b3.actions[p]) == th.end()) return false;
    }
    return true;
}

namespace {

struct Node {
    int time = 0;
    int state = -1;
    std::optional<Condition> cond;
    std::optional<Situator> sit;
    int parent = -1;
    std::optional<InputVector> in;  // input taken from parent to here
};

struct FrontierEntry {
    int node = -1;
    std::vector<InputVector> inputs;  // the pi-filtered I' of this reality
};

struct ChainSearch {
    const MmppfStructure& m;
    const Perspective& pt;
    const PlChain& chain;
    std::vector<Node> arena;

    bool sat_block(const Reality& r, const PlBlock& b) const {
        return std::all_of(b.atoms.begin(), b.atoms.end(),
                           [&](const PlAtomic& a) { return sat_atomic(m, pt, r, a); });
    }

    std::vector<InputVector> filtered_inputs(int state, const PlBlock& b) const {
        std::vector<InputVector> out;
        for (const InputVector& v : m.admissible[state]) {
            bool ok = true;
            for (const PlAtomic& a : b.atoms)
                if (const TypeIIIBody* t3 = std::get_if<TypeIIIBody>(&a.body))
                    if (v.acts[t3->object] != t3->actions) {
                        ok = false;
                        break;
                    }
            if (ok) out.push_back(v);
        }
        return out;
    }

    std::vector<FrontierEntry> initial(int t) {
        std::vector<FrontierEntry> out;
        const std::vector<Reality>* mom = pt.moment(t);
        if (!mom) return out;
        for (const Reality& r : *mom)
            if (sat_block(r, chain.blocks[0])) {
                arena.push_back({t, r.state, r.condition, r.situator, -1, std::nullopt});
                out.push_back({static_cast<int>(arena.size()) - 1,
                               filtered_inputs(r.state, chain.blocks[0])});
            }
        return out;
    }

    // Returns an accepting node of the final frontier, if any.
    std::optional<int> eval_rest(std::vector<FrontierEntry> frontier, size_t bi, int t) {
        if (bi == chain.blocks.size()) return frontier.front().node;
        const PlBlock& blk = chain.blocks[bi];

        if (chain.joins[bi - 1] == Join::Next) {
            const int t2 = t + 1;
            const std::vector<Reality>* mom = pt.moment(t2);
            if (!mom) return std::nullopt;
            std::vector<FrontierEntry> next;
            std::set<Reality> seen;
            for (const FrontierEntry& fe : frontier)
                for (const InputVector& i : fe.inputs) {
                    std::optional<int> s2 = step(m, arena[fe.node].state, i);
                    if (!s2) continue;
                    for (const Reality& r2 : *mom) {
                        if (r2.state != *s2 || seen.count(r2) || !sat_block(r2, blk)) continue;
                        seen.insert(r2);
                        arena.push_back({t2, r2.state, r2.condition, r2.situator, fe.node, i});
                        next.push_back({static_cast<int>(arena.size()) - 1,
                                        filtered_inputs(r2.state, blk)});
                    }
                }
            if (next.empty()) return std::nullopt;
            return eval_rest(std::move(next), bi + 1, t2);
        }

        // Eventually: composed transition chains. The first hop draws from
        // I', later hops from the full admissible sets; intermediate states
        // satisfy nothing.
        std::map<int, int> layer;  // state -> arena node, at the current time
        for (const FrontierEntry& fe : frontier)
            for (const InputVector& i : fe.inputs) {
                std::optional<int> s2 = step(m, arena[fe.node].state, i);
                if (!s2 || layer.count(*s2)) continue;
                arena.push_back({t + 1, *s2, std::nullopt, std::nullopt, fe.node, i});
                layer[*s2] = static_cast<int>(arena.size()) - 1;
            }
        for (int t2 = t + 1; t2 <= m.time_count(); ++t2) {
            if (layer.empty()) return std::nullopt;
            if (const std::vector<Reality>* mom = pt.moment(t2)) {
                std::vector<FrontierEntry> next;
                std::set<Reality> seen;
                for (const auto& [s, node] : layer)
                    for (const Reality& r2 : *mom) {
                        if (r2.state != s || seen.count(r2) || !sat_block(r2, blk)) continue;
                        seen.insert(r2);
                        // A reality node replacing the intermediate hop.
                        arena.push_back({t2, r2.state, r2.condition, r2.situator,
                                         arena[node].parent, arena[node].in});
                        next.push_back({static_cast<int>(arena.size()) - 1,
                                        filtered_inputs(r2.state, blk)});
                    }
                if (!next.empty())
                    if (std::optional<int> acc = eval_rest(std::move(next), bi + 1, t2))
                        return acc;
            }
            // Advance one more hop with unconstrained admissible inputs.
            std::map<int, int> advanced;
            for (const auto& [s, node] : layer)
                for (const InputVector& v : m.admissible[s]) {
                    std::optional<int> s2 = step(m, s, v);
                    if (!s2 || advanced.count(*s2)) continue;
                    arena.push_back({t2 + 1, *s2, std::nullopt, std::nullopt, node, v});
                    advanced[*s2] = static_cast<int>(arena.size()) - 1;
                }
            layer = std::move(advanced);
        }
        return std::nullopt;
    }

    ChainTrace trace_of(int accept) const {
        std::vector<int> path;
        for (int n = accept; n >= 0; n = arena[n].parent) path.push_back(n);
        std::reverse(path.begin(), path.end());
        ChainTrace trace;
        for (size_t i = 0; i < path.size(); ++i) {
            const Node& n = arena[path[i]];
            TraceStep step;
            step.time = n.time;
            step.condition = n.cond;
            step.situator = n.sit;
            step.state = n.state;
            if (i + 1 < path.size()) step.input = arena[path[i + 1]].in;
            trace.push_back(std::move(step));
        }
        return trace;
    }
};

}  // namespace

CheckResult check(const MmppfStructure& m, int anchor, const PlFormula& f) {
    if (anchor < 1 || anchor > m.time_count())
        throw Error("ANCHOR_OUT_OF_RANGE", "anchor " + std::to_string(anchor) +
                                               " outside 1.." + std::to_string(m.time_count()));
    const Perspective& pt = m.perspectives[anchor - 1];
    CheckResult res;
    res.value = true;
    for (const PlChain& chain : f.chains) {
        ChainSearch cs{m, pt, chain, {}};
        std::optional<int> acc;
        for (int t0 = 1; t0 <= m.time_count() && !acc; ++t0) {
            std::vector<FrontierEntry> init = cs.initial(t0);
            if (init.empty()) continue;
            acc = cs.eval_rest(std::move(init), 1, t0);
        }
        if (!acc) {
            res.value = false;
            res.traces.clear();
            return res;
        }
        res.traces.push_back(cs.trace_of(*acc));
    }
    return res;
}

namespace {

nlohmann::json input_json(const MmppfStructure& m, const InputVector& v) {
    nlohmann::json out;
    for (int o = 0; o < m.signature.object_count(); ++o) {
        nlohmann::json acts = nlohmann::json::array();
        for (int p = 0; p < m.signature.property_count(); ++p)
            acts.push_back(m.signature.action(o, p, v.acts[o][p]).id);
        out[m.signature.objects[o]] = acts;
    }
    return out;
}

}  // namespace

std::string trace_to_json(const MmppfStructure& m, const CheckResult& r) {
    nlohmann::json doc;
    doc["value"] = r.value;
    nlohmann::json chains = nlohmann::json::array();
    for (const ChainTrace& trace : r.traces) {
        nlohmann::json steps = nlohmann::json::array();
        for (const TraceStep& s : trace) {
            nlohmann::json sj;
            sj["time"] = s.time;
            sj["condition"] = s.condition ? nlohmann::json(to_string(*s.condition))
                                          : nlohmann::json(nullptr);
            sj["situator"] =
                s.situator ? nlohmann::json(to_string(*s.situator)) : nlohmann::json(nullptr);
            sj["state"] = m.states[s.state].id;
            sj["input"] = s.input ? input_json(m, *s.input) : nlohmann::json(nullptr);
            steps.push_back(sj);
        }
        chains.push_back(steps);
    }
    doc["chains"] = chains;
    return doc.dump(2) + "\n";
}

namespace {

// ---- witness search for check_star ----

struct AtomChoice {
    int object = -1;
    std::vector<MetaSym> symbols;
    bool pair = false;  // sigma2-shaped (some symbol outside Sigma1)
};

struct SegmentPlan {
    bool pair = false;  // expands to two ->> joined blocks
    Condition cond = Condition::Epsilon;
    Situator sit = Situator::Present;
    std::vector<AtomChoice> atoms;
};

bool sigma2_shaped(const std::vector<MetaSym>& symbols) {
    return std::any_of(symbols.begin(), symbols.end(), [](MetaSym s) {
        return s == MetaSym::Tilde || s == MetaSym::B1 || s == MetaSym::B2;
    });
}

std::vector<Situator> right_situators(Situator left) {
    switch (left) {
        case Situator::Past: return {Situator::Past, Situator::Present};
        case Situator::Present: return {Situator::Future};
        case Situator::Future: return {Situator::Future};
    }
    return {};
}

struct StarSearch {
    const MmppfStructure& m;
    int anchor;
    const PlStarFormula& target;
    long long budget;
    bool budget_hit = false;

    std::vector<std::vector<TypeIBody>> pool;           // [object] -> candidate bodies
    std::vector<std::vector<SegmentPlan>> plans;        // [chain] -> segments
    std::vector<std::vector<Join>> seg_joins;           // joins between segments
    PlFormula candidate;                                 // assembled chains so far

    bool build_pool() {
        const Signature& sig = m.signature;
        pool.assign(sig.object_count(), {});
        for (int o = 0; o < sig.object_count(); ++o) {
            for (const State& e : m.states) {
                TypeIBody b;
                b.object = o;
                for (int p = 0; p < sig.property_count(); ++p) b.sets.push_back(e.gstar[p][o]);
                auto& v = pool[o];
                bool dup = std::any_of(v.begin(), v.end(),
                                       [&](const TypeIBody& x) { return x.sets == b.sets; });
                if (!dup) v.push_back(std::move(b));
            }
        }
        return true;
    }

    // False when the target contains anything but plain meta atoms.
    bool build_plans() {
        for (const PlStarChain& chain : target.chains) {
            std::vector<SegmentPlan> segs;
            for (const PlStarBlock& block : chain.blocks) {
                SegmentPlan plan;
                plan.cond = block.atoms[0].cond;
                plan.sit = block.atoms[0].sit;
                for (const PlStarAtomic& a : block.atoms) {
                    const MetaIBody* b = std::get_if<MetaIBody>(&a.body);
                    if (!b) return false;
                    AtomChoice ac{b->object, b->symbols, sigma2_shaped(b->symbols)};
                    plan.pair = plan.pair || ac.pair;
                    plan.atoms.push_back(std::move(ac));
                }
                segs.push_back(std::move(plan));
            }
            plans.push_back(std::move(segs));
            seg_joins.push_back(chain.joins);
        }
        return true;
    }

    static MetaSym ms_of(const AssignmentSet& set) {
        return set.empty() ? MetaSym::Zero : MetaSym::One;
    }

    static MetaSym tsp_of(const AssignmentSet& l, const AssignmentSet& r) {
        if (l.empty() || r.empty()) return MetaSym::Tilde;
        return l == r ? MetaSym::B1 : MetaSym::B2;
    }

    bool ms_matches(const TypeIBody& b, const std::vector<MetaSym>& symbols) const {
        for (size_t p = 0; p < symbols.size(); ++p)
            if (ms_of(b.sets[p]) != symbols[p]) return false;
        return true;
    }

    bool tsp_matches(const TypeIBody& l, const TypeIBody& r,
                     const std::vector<MetaSym>& symbols) const {
        for (size_t p = 0; p < symbols.size(); ++p)
            if (tsp_of(l.sets[p], r.sets[p]) != symbols[p]) return false;
        return true;
    }

    bool test_candidate() {
        if (budget <= 0) {
            budget_hit = true;
            return false;
        }
        --budget;
        if (!check_wff(m.signature, candidate).empty()) return false;
        try {
            PlStarFormula got =
                translate_tr1(m.signature, candidate, default_profile(m.signature, candidate));
            canonicalize(got);
            PlStarFormula want = target;
            canonicalize(want);
            if (!(got == want)) return false;
        } catch (const Error&) {
            return false;
        }
        return check(m, anchor, candidate).value;
    }

    // Enumerate candidate expansions of segment `si` of chain `ci`.
    bool enum_segment(size_t ci, size_t si) {
        if (si == plans[ci].size()) return enum_chain(ci + 1);
        const SegmentPlan& plan = plans[ci][si];
        PlChain& chain = candidate.chains[ci];

        PlBlock left, right;
        std::optional<Join> lead;
        if (si > 0) lead = seg_joins[ci][si - 1];

        // Depth-first product over the segment's atoms.
        std::function<bool(size_t, Condition, Situator)> per_atom =
            [&](size_t ai, Condition rcond, Situator rsit) -> bool {
            if (ai == plan.atoms.size()) {
                size_t saved_blocks = chain.blocks.size();
                size_t saved_joins = chain.joins.size();
                if (lead) chain.joins.push_back(*lead);
                chain.blocks.push_back(left);
                if (plan.pair) {
                    chain.joins.push_back(Join::Next);
                    chain.blocks.push_back(right);
                }
                bool found = enum_segment(ci, si + 1);
                chain.blocks.resize(saved_blocks);
                chain.joins.resize(saved_joins);
                return found;
            }
            const AtomChoice& ac = plan.atoms[ai];
            for (const TypeIBody& lb : pool[ac.object]) {
                if (ac.pair) {
                    for (const TypeIBody& rb : pool[ac.object]) {
                        if (!tsp_matches(lb, rb, ac.symbols)) continue;
                        left.atoms.push_back({plan.cond, plan.sit, lb});
                        right.atoms.push_back({rcond, rsit, rb});
                        if (per_atom(ai + 1, rcond, rsit)) return true;
                        left.atoms.pop_back();
                        right.atoms.pop_back();
                        if (budget_hit) return false;
                    }
                } else {
                    if (!ms_matches(lb, ac.symbols)) continue;
                    left.atoms.push_back({plan.cond, plan.sit, lb});
                    if (per_atom(ai + 1, rcond, rsit)) return true;
                    left.atoms.pop_back();
                    if (budget_hit) return false;
                }
            }
            return false;
        };

        if (!plan.pair) return per_atom(0, Condition::Epsilon, Situator::Present);
        for (Condition rcond : {Condition::Epsilon, Condition::Hypothetical})
            for (Situator rsit : right_situators(plan.sit)) {
                if (per_atom(0, rcond, rsit)) return true;
                if (budget_hit) return false;
            }
        return false;
    }

    bool enum_chain(size_t ci) {
        if (ci == plans.size()) return test_candidate();
        candidate.chains.push_back({});
        bool found = enum_segment(ci, 0);
        if (!found) candidate.chains.pop_back();
        return found;
    }

    Verdict run() {
        if (budget <= 0) return Verdict::Budget;
        build_pool();
        if (!build_plans()) {
            budget_hit = true;  // unsupported shape: cannot search this space
            return Verdict::Budget;
        }
        if (enum_chain(0)) return Verdict::True;
        return budget_hit ? Verdict::Budget : Verdict::False;
    }
};

}  // namespace

Verdict check_star(const MmppfStructure& m, int anchor, const PlStarFormula& f,
                   const std::optional<PlFormula>& witness, long long bound,
                   const AbstractionProfile* profile, std::string* detail) {
    if (witness) {
        AbstractionProfile prof =
            profile ? *profile : default_profile(m.signature, *witness);
        PlStarFormula got;
        try {
            got = translate_tr1(m.signature, *witness, prof);
        } catch (const Error& e) {
            if (detail) *detail = e.what();
            return Verdict::False;
        }
        canonicalize(got);
        PlStarFormula want = f;
        canonicalize(want);
        if (!(got == want)) {
            if (detail) *detail = "TRANSLATION_MISMATCH";
            return Verdict::False;
        }
        return check(m, anchor, *witness).value ? Verdict::True : Verdict::False;
    }
    StarSearch search{m, anchor, f, bound, false, {}, {}, {}, {}};
    Verdict v = search.run();
    if (v == Verdict::Budget && detail) *detail = "BUDGET_EXHAUSTED";
    return v;
}

namespace {

// Regroup one CL block into the PL* block it would come from, when that is
// unambiguous: per object a full vector of property symbols, component and
// relational atoms one-to-one.
std::optional<PlStarBlock> regroup_cl_block(const Signature& sig, const ClBlock& block) {
    PlStarBlock out;
    std::map<int, std::vector<std::optional<MetaSym>>> meta;  // object -> per-property
    for (const ClAtomic& a : block.atoms) {
        if (!a.obj.pattern.empty()) return std::nullopt;
        if (const ClPropMeta* b = std::get_if<ClPropMeta>(&a.body)) {
            auto& slots = meta[a.obj.object];
            slots.resize(sig.property_count());
            if (slots[b->property]) return std::nullopt;  // duplicate
            slots[b->property] = b->symbol;
        } else if (const ClCompMeta* b2 = std::get_if<ClCompMeta>(&a.body)) {
            PlStarAtomic atom;
            atom.cond = a.cond;
            atom.sit = a.sit;
            atom.body = MetaComponentBody{a.obj.object, b2->property, b2->dimension, b2->symbol};
            out.atoms.push_back(std::move(atom));
        } else {
            const ClRelMeta& b3 = std::get<ClRelMeta>(a.body);
            PlStarAtomic atom;
            atom.cond = a.cond;
            atom.sit = a.sit;
            atom.body = MetaRelationalBody{a.obj.object, b3.target, b3.symbol};
            out.atoms.push_back(std::move(atom));
        }
    }
    for (auto& [o, slots] : meta) {
        MetaIBody body;
        body.object = o;
        for (auto& s : slots) {
            if (!s) return std::nullopt;  // property vector incomplete
            body.symbols.push_back(*s);
        }
        PlStarAtomic atom;
        atom.cond = block.atoms[0].cond;
        atom.sit = block.atoms[0].sit;
        atom.body = std::move(body);
        out.atoms.push_back(std::move(atom));
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    return out;
}

}  // namespace

Verdict check_cl(const MmppfStructure& m, int anchor, const ClFormula& f,
                 const std::optional<PlStarFormula>& witness, long long bound,
                 const RgtcGrammar* grammar, std::string* detail) {
    if (witness) {
        ClFormula got;
        try {
            RgtcGrammar g = grammar ? *grammar : default_tr2_grammar(m.signature, *witness);
            got = translate_tr2(m.signature, *witness, g);
        } catch (const Error& e) {
            if (detail) *detail = e.what();
            return Verdict::False;
        }
        canonicalize(got);
        ClFormula want = f;
        canonicalize(want);
        if (!(got == want)) {
            if (detail) *detail = "TRANSLATION_MISMATCH";
            return Verdict::False;
        }
        return check_star(m, anchor, *witness, std::nullopt, bound, nullptr, detail);
    }

    if (bound <= 0) {
        if (detail) *detail = "BUDGET_EXHAUSTED";
        return Verdict::Budget;
    }

    // Reconstruct the collapse-free PL* preimage and search below it. With
    // several time points longer preimages (repeated runs) exist too; those
    // are tried for past/future blocks up to the structure's time count.
    PlStarFormula base;
    for (const ClChain& chain : f.chains) {
        PlStarChain star_chain;
        for (const ClBlock& block : chain.blocks) {
            std::optional<PlStarBlock> sb = regroup_cl_block(m.signature, block);
            if (!sb) {
                if (detail) *detail = "BUDGET_EXHAUSTED";
                return Verdict::Budget;
            }
            star_chain.blocks.push_back(std::move(*sb));
        }
        star_chain.joins = chain.joins;
        base.chains.push_back(std::move(star_chain));
    }

    // Repeat counts per (chain, block); present-situated blocks cannot
    // repeat without breaking the junction rules.
    std::vector<std::vector<int>> max_rep;
    size_t total = 1;
    for (const PlStarChain& chain : base.chains) {
        std::vector<int> per_block;
        for (const PlStarBlock& block : chain.blocks) {
            bool can_repeat = m.time_count() > 1 &&
                              block.atoms[0].sit != Situator::Present &&
                              std::all_of(block.atoms.begin(), block.atoms.end(),
                                          [](const PlStarAtomic& a) {
                                              const MetaIBody* b = std::get_if<MetaIBody>(&a.body);
                                              return b && !sigma2_shaped(b->symbols);
                                          });
            per_block.push_back(can_repeat ? std::min(m.time_count(), 3) : 1);
            total *= per_block.back();
        }
        max_rep.push_back(std::move(per_block));
    }
    if (total > 64) total = 64;

    bool any_budget = false;
    std::vector<std::vector<int>> rep;
    for (const auto& mb : max_rep) rep.push_back(std::vector<int>(mb.size(), 1));
    for (size_t variant = 0; variant < total; ++variant) {
        PlStarFormula expanded;
        for (size_t c = 0; c < base.chains.size(); ++c) {
            PlStarChain chain;
            for (size_t b = 0; b < base.chains[c].blocks.size(); ++b) {
                for (int k = 0; k < rep[c][b]; ++k) {
                    if (!chain.blocks.empty())
                        chain.joins.push_back(k == 0 ? base.chains[c].joins[b - 1] : Join::Next);
                    chain.blocks.push_back(base.chains[c].blocks[b]);
                }
            }
            expanded.chains.push_back(std::move(chain));
        }
        Verdict v = check_star(m, anchor, expanded, std::nullopt, bound, nullptr, nullptr);
        if (v == Verdict::True) return Verdict::True;
        if (v == Verdict::Budget) any_budget = true;

        // Odometer over the repeat counts.
        bool advanced = false;
        for (auto& chain_rep : rep) {
            for (size_t b = 0; b < chain_rep.size() && !advanced; ++b) {
                size_t ci = static_cast<size_t>(&chain_rep - rep.data());
                if (chain_rep[b] < max_rep[ci][b]) {
                    ++chain_rep[b];
                    advanced = true;
                } else {
                    chain_rep[b] = 1;
                }
            }
            if (advanced) break;
        }
        if (!advanced) break;
    }
    if (any_budget) {
        if (detail) *detail = "BUDGET_EXHAUSTED";
        return Verdict::Budget;
    }
    return Verdict::False;
}

namespace {

// ---- independent brute-force reference ----

std::vector<InputVector> oracle_inputs(const MmppfStructure& m, const State& e) {
    std::vector<InputVector> out;
    InputVector cur;
    cur.acts.assign(m.signature.object_count(),
                    std::vector<int>(m.signature.property_count(), -1));
    std::function<void(int, int)> rec = [&](int o, int p) {
        if (o == m.signature.object_count()) {
            out.push_back(cur);
            return;
        }
        int no = p + 1 == m.signature.property_count() ? o + 1 : o;
        int np = p + 1 == m.signature.property_count() ? 0 : p + 1;
        for (int a : e.theta[p][o]) {
            cur.acts[o][p] = a;
            rec(no, np);
        }
    };
    rec(0, 0);
    return out;
}

bool oracle_atom(const MmppfStructure& m, const Perspective& pt, const Reality& r,
                 const PlAtomic& a) {
    const State& st = m.states[r.state];
    if (r.situator != a.sit) return false;
    if (const TypeIBody* b = std::get_if<TypeIBody>(&a.body)) {
        if (r.condition != a.cond) return false;
        for (size_t p = 0; p < b->sets.size(); ++p) {
            const AssignmentSet& x = b->sets[p];
            const AssignmentSet& y = st.gstar[p][b->object];
            if (x.size() != y.size()) return false;
            for (size_t k = 0; k < x.size(); ++k)
                if (x[k].first != y[k].first || x[k].second != y[k].second) return false;
        }
        return true;
    }
    if (const TypeIIBody* b2 = std::get_if<TypeIIBody>(&a.body)) {
        for (int other : st.relations[b2->subject][b2->property])
            if (other == b2->target) return true;
        return false;
    }
    const TypeIIIBody& b3 = std::get<TypeIIIBody>(a.body);
    if (a.cond == Condition::Epsilon && r.time <= pt.anchor) {
        auto it = pt.realized_inputs.find(r.time);
        if (it == pt.realized_inputs.end()) return false;
        for (size_t p = 0; p < b3.actions.size(); ++p)
            if (it->second.acts[b3.object][p] != b3.actions[p]) return false;
        return true;
    }
    for (size_t p = 0; p < b3.actions.size(); ++p) {
        bool found = false;
        for (int cand : st.theta[p][b3.object])
            if (cand == b3.actions[p]) found = true;
        if (!found) return false;
    }
    return true;
}

bool oracle_block(const MmppfStructure& m, const Perspective& pt, const Reality& r,
                  const PlBlock& b) {
    for (const PlAtomic& a : b.atoms)
        if (!oracle_atom(m, pt, r, a)) return false;
    return true;
}

bool oracle_input_allowed(const PlBlock& b, const InputVector& v) {
    for (const PlAtomic& a : b.atoms)
        if (const TypeIIIBody* t3 = std::get_if<TypeIIIBody>(&a.body))
            for (size_t p = 0; p < t3->actions.size(); ++p)
                if (v.acts[t3->object][p] != t3->actions[p]) return false;
    return true;
}

std::optional<int> oracle_step(const MmppfStructure& m, int state, const InputVector& v) {
    auto it = m.transition.find({state, v});
    if (it == m.transition.end()) return std::nullopt;
    return it->second;
}

bool oracle_rest(const MmppfStructure& m, const Perspective& pt, const PlChain& chain,
                 size_t bi, const Reality& r);

// Every composed input chain of the given length out of `state`, first
// input restricted to `first`.
bool oracle_chains(const MmppfStructure& m, const Perspective& pt, const PlChain& chain,
                   size_t bi, int state, int hops, const std::vector<InputVector>& first,
                   int target_time) {
    if (hops == 0) {
        const std::vector<Reality>* mom = pt.moment(target_time);
        if (!mom) return false;
        for (const Reality& r2 : *mom)
            if (r2.state == state && oracle_block(m, pt, r2, chain.blocks[bi]))
                if (oracle_rest(m, pt, chain, bi, r2)) return true;
        return false;
    }
    for (const InputVector& v : first) {
        std::optional<int> s2 = oracle_step(m, state, v);
        if (!s2) continue;
        if (oracle_chains(m, pt, chain, bi, *s2, hops - 1,
                          oracle_inputs(m, m.states[*s2]), target_time))
            return true;
    }
    return false;
}

bool oracle_rest(const MmppfStructure& m, const Perspective& pt, const PlChain& chain,
                 size_t bi, const Reality& r) {
    if (bi + 1 == chain.blocks.size()) return true;
    std::vector<InputVector> filtered;
    for (const InputVector& v : oracle_inputs(m, m.states[r.state]))
        if (oracle_input_allowed(chain.blocks[bi], v)) filtered.push_back(v);

    if (chain.joins[bi] == Join::Next) {
        const std::vector<Reality>* mom = pt.moment(r.time + 1);
        if (!mom) return false;
        for (const InputVector& v : filtered) {
            std::optional<int> s2 = oracle_step(m, r.state, v);
            if (!s2) continue;
            for (const Reality& r2 : *mom)
                if (r2.state == *s2 && oracle_block(m, pt, r2, chain.blocks[bi + 1]))
                    if (oracle_rest(m, pt, chain, bi + 1, r2)) return true;
        }
        return false;
    }
    for (int t2 = r.time + 1; t2 <= m.time_count(); ++t2)
        if (oracle_chains(m, pt, chain, bi + 1, r.state, t2 - r.time, filtered, t2)) return true;
    return false;
}

}  // namespace

bool oracle_check(const MmppfStructure& m, int anchor, const PlFormula& f) {
    if (anchor < 1 || anchor > m.time_count())
        throw Error("ANCHOR_OUT_OF_RANGE", "anchor " + std::to_string(anchor) +
                                               " outside 1.." + std::to_string(m.time_count()));
    if (m.states.size() > 6 || m.time_count() > 6)
        throw Error("ORACLE_LIMIT_EXCEEDED", "structure exceeds the oracle's soft limits");
    for (const State& e : m.states)
        if (oracle_inputs(m, e).size() > 64)
            throw Error("ORACLE_LIMIT_EXCEEDED", "too many admissible inputs for state " + e.id);

    const Perspective& pt = m.perspectives[anchor - 1];
    for (const PlChain& chain : f.chains) {
        bool chain_ok = false;
        for (int t0 = 1; t0 <= m.time_count() && !chain_ok; ++t0) {
            const std::vector<Reality>* mom = pt.moment(t0);
            if (!mom) continue;
            for (const Reality& r : *mom)
                if (oracle_block(m, pt, r, chain.blocks[0]) &&
                    oracle_rest(m, pt, chain, 0, r)) {
                    chain_ok = true;
                    break;
                }
        }
        if (!chain_ok) return false;
    }
    return true;
}

}  // namespace mmppf
