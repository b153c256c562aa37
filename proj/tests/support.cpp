#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace testsup {

using namespace mmppf;

std::string corpus_dir() {
    if (const char* env = std::getenv("MMPPF_CORPUS")) return env;
    return MMPPF_CORPUS_DIR;
}

std::string corpus_path(const std::string& name) { return corpus_dir() + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IO_ERROR", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

MmppfStructure load_corpus(const std::string& name) {
    return load_structure_file(corpus_path(name));
}

namespace {

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

bool coin(Rng& rng) { return pick(rng, 2) == 0; }

}  // namespace

MmppfStructure random_structure(Rng& rng) {
    MmppfStructure m;
    Signature& sig = m.signature;
    const int n_obj = 1 + pick(rng, 2);
    const int n_prop = 1 + pick(rng, 2);
    for (int o = 0; o < n_obj; ++o) sig.objects.push_back("o" + std::to_string(o + 1));
    for (int o = 0; o < n_obj; ++o) sig.essences.push_back("h" + std::to_string(o + 1));
    for (int p = 0; p < n_prop; ++p) {
        PropertyDef pd;
        pd.dim = 1;
        pd.domains = {{"w0", "w1"}};
        sig.properties.push_back(pd);
    }
    sig.actions.assign(n_obj, std::vector<std::vector<ActionDef>>(n_prop));
    for (int o = 0; o < n_obj; ++o)
        for (int p = 0; p < n_prop; ++p)
            for (const char* id : {"a0", "a1"}) sig.actions[o][p].push_back({id, {}, {}});

    const int n_states = 2 + pick(rng, 3);
    for (int j = 0; j < n_states; ++j) {
        State e;
        e.id = "e" + std::to_string(j);
        e.es.assign(n_obj, {});
        e.g.assign(n_prop, std::vector<PropertyValue>(n_obj));
        e.gstar.assign(n_prop, std::vector<AssignmentSet>(n_obj));
        e.theta.assign(n_prop, std::vector<std::vector<int>>(n_obj));
        e.theta_extra.assign(n_prop, std::vector<std::vector<std::string>>(n_obj));
        e.sensation.assign(n_obj, Register{});
        e.relations.assign(n_obj, std::vector<std::vector<int>>(n_prop));
        for (int o = 0; o < n_obj; ++o) {
            e.es[o] = {o};
            for (int p = 0; p < n_prop; ++p) {
                PropertyValue v;
                v.components = {pick(rng, 2)};
                e.g[p][o] = v;
                e.gstar[p][o] = {{o, v}};
                switch (pick(rng, 3)) {
                    case 0: e.theta[p][o] = {0}; break;
                    case 1: e.theta[p][o] = {1}; break;
                    default: e.theta[p][o] = {0, 1}; break;
                }
                if (coin(rng)) {
                    e.relations[o][p] = {pick(rng, n_obj)};
                }
            }
        }
        m.states.push_back(std::move(e));
    }

    finalize(m);
    for (int j = 0; j < n_states; ++j)
        for (const InputVector& v : m.admissible[j])
            if (pick(rng, 5) != 0) m.transition[{j, v}] = pick(rng, n_states);

    auto random_input = [&] {
        InputVector v;
        v.acts.assign(n_obj, std::vector<int>(n_prop));
        for (int o = 0; o < n_obj; ++o)
            for (int p = 0; p < n_prop; ++p) v.acts[o][p] = pick(rng, 2);
        return v;
    };

    const int times = 2 + pick(rng, 2);
    for (int t = 1; t <= times; ++t) {
        Perspective pt;
        pt.anchor = t;
        for (int u = 1; u <= times; ++u) {
            Situator sit = u < t ? Situator::Past : u == t ? Situator::Present : Situator::Future;
            std::vector<Reality> moment;
            const int k = 1 + pick(rng, 3);
            for (int i = 0; i < k; ++i)
                moment.push_back({u, coin(rng) ? Condition::Epsilon : Condition::Hypothetical,
                                  sit, pick(rng, n_states)});
            std::sort(moment.begin(), moment.end());
            moment.erase(std::unique(moment.begin(), moment.end()), moment.end());
            pt.moments[u] = moment;
        }
        for (int u = 1; u <= t; ++u) pt.realized_inputs[u] = random_input();
        m.perspectives.push_back(std::move(pt));
    }
    for (int u = 1; u <= times; ++u) m.realized_inputs[u] = random_input();
    return m;
}

PlAtomic random_pl_atom(const MmppfStructure& m, Rng& rng, Condition cond, Situator sit) {
    const Signature& sig = m.signature;
    PlAtomic a;
    a.cond = cond;
    a.sit = sit;
    switch (pick(rng, 3)) {
        case 0: {
            TypeIBody b;
            b.object = pick(rng, sig.object_count());
            if (coin(rng)) {
                const State& e = m.states[pick(rng, static_cast<int>(m.states.size()))];
                for (int p = 0; p < sig.property_count(); ++p)
                    b.sets.push_back(e.gstar[p][b.object]);
            } else {
                for (int p = 0; p < sig.property_count(); ++p) {
                    AssignmentSet set;
                    int k = pick(rng, 3);
                    for (int i = 0; i < k; ++i) {
                        PropertyValue v;
                        for (int q = 0; q < sig.properties[p].dim; ++q)
                            v.components.push_back(
                                pick(rng, static_cast<int>(sig.properties[p].domains[q].size())));
                        set.emplace_back(pick(rng, sig.essence_count()), v);
                    }
                    std::sort(set.begin(), set.end());
                    set.erase(std::unique(set.begin(), set.end()), set.end());
                    b.sets.push_back(std::move(set));
                }
            }
            a.body = std::move(b);
            break;
        }
        case 1: {
            TypeIIBody b;
            b.subject = pick(rng, sig.object_count());
            b.property = pick(rng, sig.property_count());
            b.target = pick(rng, sig.object_count());
            a.body = b;
            break;
        }
        default: {
            TypeIIIBody b;
            b.object = pick(rng, sig.object_count());
            for (int p = 0; p < sig.property_count(); ++p)
                b.actions.push_back(
                    pick(rng, static_cast<int>(sig.actions[b.object][p].size())));
            a.body = std::move(b);
            break;
        }
    }
    return a;
}

namespace {

Condition random_cond(Rng& rng) {
    return coin(rng) ? Condition::Epsilon : Condition::Hypothetical;
}

Situator random_sit(Rng& rng) {
    switch (pick(rng, 3)) {
        case 0: return Situator::Past;
        case 1: return Situator::Present;
        default: return Situator::Future;
    }
}

MetaSym random_sym(Rng& rng, std::initializer_list<MetaSym> from) {
    return *(from.begin() + pick(rng, static_cast<int>(from.size())));
}

}  // namespace

PlFormula random_pl_formula(const MmppfStructure& m, Rng& rng, bool uniform_blocks) {
    PlFormula f;
    const int chains = 1 + pick(rng, 2);
    for (int c = 0; c < chains; ++c) {
        PlChain chain;
        const int blocks = 1 + pick(rng, 3);
        for (int b = 0; b < blocks; ++b) {
            PlBlock block;
            Condition cond = random_cond(rng);
            Situator sit = random_sit(rng);
            const int atoms = 1 + pick(rng, 2);
            for (int k = 0; k < atoms; ++k) {
                Condition ac = uniform_blocks ? cond : random_cond(rng);
                Situator as = uniform_blocks ? sit : random_sit(rng);
                block.atoms.push_back(random_pl_atom(m, rng, ac, as));
            }
            chain.blocks.push_back(std::move(block));
            if (b + 1 < blocks)
                chain.joins.push_back(coin(rng) ? Join::Next : Join::Eventually);
        }
        f.chains.push_back(std::move(chain));
    }
    return f;
}

PlStarFormula random_star_formula(const Signature& sig, Rng& rng) {
    PlStarFormula f;
    const int chains = 1 + pick(rng, 2);
    for (int c = 0; c < chains; ++c) {
        PlStarChain chain;
        const int blocks = 1 + pick(rng, 3);
        for (int b = 0; b < blocks; ++b) {
            PlStarBlock block;
            const int atoms = 1 + pick(rng, 2);
            for (int k = 0; k < atoms; ++k) {
                PlStarAtomic a;
                a.cond = random_cond(rng);
                a.sit = random_sit(rng);
                switch (pick(rng, 3)) {
                    case 0: {
                        MetaIBody body;
                        body.object = pick(rng, sig.object_count());
                        for (int p = 0; p < sig.property_count(); ++p)
                            body.symbols.push_back(random_sym(
                                rng, {MetaSym::Zero, MetaSym::One, MetaSym::Tilde, MetaSym::B1,
                                      MetaSym::B2}));
                        a.body = std::move(body);
                        break;
                    }
                    case 1: {
                        MetaComponentBody body;
                        body.object = pick(rng, sig.object_count());
                        body.property = pick(rng, sig.property_count());
                        body.dimension = 1 + pick(rng, sig.properties[body.property].dim);
                        body.symbol = random_sym(rng, {MetaSym::Tilde, MetaSym::G1, MetaSym::G2,
                                                       MetaSym::D1, MetaSym::D2});
                        a.body = body;
                        break;
                    }
                    default: {
                        MetaRelationalBody body;
                        body.subject = pick(rng, sig.object_count());
                        body.target = pick(rng, sig.object_count());
                        body.symbol = random_sym(rng, {MetaSym::K1, MetaSym::K2, MetaSym::T1,
                                                       MetaSym::T2, MetaSym::T3, MetaSym::T4});
                        a.body = body;
                        break;
                    }
                }
                block.atoms.push_back(std::move(a));
            }
            chain.blocks.push_back(std::move(block));
            if (b + 1 < blocks)
                chain.joins.push_back(coin(rng) ? Join::Next : Join::Eventually);
        }
        f.chains.push_back(std::move(chain));
    }
    return f;
}

ClFormula random_cl_formula(const Signature& sig, Rng& rng) {
    ClFormula f;
    const int chains = 1 + pick(rng, 2);
    for (int c = 0; c < chains; ++c) {
        ClChain chain;
        const int blocks = 1 + pick(rng, 3);
        for (int b = 0; b < blocks; ++b) {
            ClBlock block;
            const int atoms = 1 + pick(rng, 2);
            for (int k = 0; k < atoms; ++k) {
                ClAtomic a;
                a.cond = random_cond(rng);
                a.sit = random_sit(rng);
                if (pick(rng, 4) == 0)
                    a.obj.pattern = "x" + std::to_string(pick(rng, 3));
                else
                    a.obj.object = pick(rng, sig.object_count());
                switch (pick(rng, 3)) {
                    case 0: {
                        ClPropMeta body;
                        body.property = pick(rng, sig.property_count());
                        body.symbol = random_sym(rng, {MetaSym::Zero, MetaSym::One, MetaSym::Tilde,
                                                       MetaSym::B1, MetaSym::B2});
                        a.body = body;
                        break;
                    }
                    case 1: {
                        ClCompMeta body;
                        body.property = pick(rng, sig.property_count());
                        body.dimension = 1 + pick(rng, sig.properties[body.property].dim);
                        body.symbol = random_sym(rng, {MetaSym::Tilde, MetaSym::G1, MetaSym::G2,
                                                       MetaSym::D1, MetaSym::D2});
                        a.body = body;
                        break;
                    }
                    default: {
                        ClRelMeta body;
                        body.target = pick(rng, sig.object_count());
                        body.symbol = random_sym(rng, {MetaSym::K1, MetaSym::K2, MetaSym::T1,
                                                       MetaSym::T2, MetaSym::T3, MetaSym::T4});
                        a.body = body;
                        break;
                    }
                }
                block.atoms.push_back(std::move(a));
            }
            chain.blocks.push_back(std::move(block));
            if (b + 1 < blocks)
                chain.joins.push_back(coin(rng) ? Join::Next : Join::Eventually);
        }
        f.chains.push_back(std::move(chain));
    }
    return f;
}

bool wff_reference_accepts(const Signature&, const PlFormula& f) {
    for (const PlChain& chain : f.chains) {
        std::optional<Situator> last;
        for (const PlBlock& block : chain.blocks) {
            for (const PlAtomic& a : block.atoms)
                if (a.cond != block.atoms[0].cond || a.sit != block.atoms[0].sit) return false;
            Situator sit = block.atoms[0].sit;
            if (last) {
                bool ok = (*last == Situator::Past &&
                           (sit == Situator::Past || sit == Situator::Present)) ||
                          (*last == Situator::Present && sit == Situator::Future) ||
                          (*last == Situator::Future && sit == Situator::Future);
                if (!ok) return false;
            }
            last = sit;
            std::vector<int> state_objs, act_objs;
            for (const PlAtomic& a : block.atoms) {
                if (const TypeIBody* b = std::get_if<TypeIBody>(&a.body))
                    state_objs.push_back(b->object);
                else if (const TypeIIIBody* b3 = std::get_if<TypeIIIBody>(&a.body))
                    act_objs.push_back(b3->object);
            }
            for (auto* v : {&state_objs, &act_objs}) {
                std::sort(v->begin(), v->end());
                if (std::adjacent_find(v->begin(), v->end()) != v->end()) return false;
            }
        }
    }
    return true;
}

std::optional<PlFormula> true_block_formula(const MmppfStructure& m, int anchor, Rng& rng) {
    const Perspective& pt = m.perspectives[anchor - 1];
    for (int attempt = 0; attempt < 20; ++attempt) {
        int t = 1 + pick(rng, m.time_count());
        const std::vector<Reality>* mom = pt.moment(t);
        if (!mom || mom->empty()) continue;
        const Reality& r = (*mom)[pick(rng, static_cast<int>(mom->size()))];
        PlBlock block;
        int n = 1 + pick(rng, m.signature.object_count());
        for (int o = 0; o < n; ++o) {
            TypeIBody b;
            b.object = o;
            for (int p = 0; p < m.signature.property_count(); ++p)
                b.sets.push_back(m.states[r.state].gstar[p][o]);
            block.atoms.push_back({r.condition, r.situator, std::move(b)});
        }
        PlFormula f;
        f.chains.push_back({{block}, {}});
        return f;
    }
    return std::nullopt;
}

std::optional<PlFormula> true_next_formula(const MmppfStructure& m, int anchor, Rng& rng) {
    const Perspective& pt = m.perspectives[anchor - 1];
    for (int attempt = 0; attempt < 40; ++attempt) {
        int t = 1 + pick(rng, m.time_count() - 1);
        const std::vector<Reality>* mom = pt.moment(t);
        const std::vector<Reality>* next = pt.moment(t + 1);
        if (!mom || mom->empty() || !next || next->empty()) continue;
        const Reality& r = (*mom)[pick(rng, static_cast<int>(mom->size()))];
        const auto& inputs = m.admissible[r.state];
        if (inputs.empty()) continue;
        const InputVector& v = inputs[pick(rng, static_cast<int>(inputs.size()))];
        std::optional<int> s2 = step(m, r.state, v);
        if (!s2) continue;
        std::vector<const Reality*> targets;
        for (const Reality& r2 : *next)
            if (r2.state == *s2) targets.push_back(&r2);
        if (targets.empty()) continue;
        const Reality& r2 = *targets[pick(rng, static_cast<int>(targets.size()))];
        // Junction must respect the situator run rules for Tr1 searches.
        bool ok = (r.situator == Situator::Past &&
                   (r2.situator == Situator::Past || r2.situator == Situator::Present)) ||
                  (r.situator == Situator::Present && r2.situator == Situator::Future) ||
                  (r.situator == Situator::Future && r2.situator == Situator::Future);
        if (!ok) continue;
        int n = 1 + pick(rng, m.signature.object_count());
        PlBlock left, right;
        for (int o = 0; o < n; ++o) {
            TypeIBody lb, rb;
            lb.object = rb.object = o;
            for (int p = 0; p < m.signature.property_count(); ++p) {
                lb.sets.push_back(m.states[r.state].gstar[p][o]);
                rb.sets.push_back(m.states[r2.state].gstar[p][o]);
            }
            left.atoms.push_back({r.condition, r.situator, std::move(lb)});
            right.atoms.push_back({r2.condition, r2.situator, std::move(rb)});
        }
        PlFormula f;
        f.chains.push_back({{left, right}, {Join::Next}});
        return f;
    }
    return std::nullopt;
}

}  // namespace testsup
