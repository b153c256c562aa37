// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mmppf/axioms.hpp"
#include "mmppf/metainfo.hpp"
#include "mmppf/rgtc.hpp"
#include "support.hpp"

using namespace mmppf;
using Clock = std::chrono::steady_clock;

namespace {

bool g_all_pass = true;

void report(int criterion, bool pass, const std::string& note = "") {
    g_all_pass = g_all_pass && pass;
    std::printf("criterion %d: %s%s%s\n", criterion, pass ? "PASS" : "FAIL",
                note.empty() ? "" : " ", note.c_str());
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

PlAtomic state_atom(int object, AssignmentSet p0, AssignmentSet p1) {
    PlAtomic a;
    TypeIBody b;
    b.object = object;
    b.sets = {std::move(p0), std::move(p1)};
    a.body = std::move(b);
    return a;
}

PlAtomic rel_atom(int subject, int property, int target) {
    PlAtomic a;
    a.body = TypeIIBody{subject, property, target};
    return a;
}

AssignmentSet aset(std::initializer_list<std::pair<int, int>> pairs) {
    AssignmentSet s;
    for (auto [h, v] : pairs) s.push_back({h, PropertyValue{{v}}});
    return s;
}

// 1. The axiom suite flags exactly the intended axiom on every corpus file.
void criterion_1() {
    auto start = Clock::now();
    bool ok = true;
    int structures = 0;
    for (const char* name : {"two-state-toggle.mmppf.json", "one-state-loop.mmppf.json"}) {
        MmppfStructure m = testsup::load_corpus(name);
        ++structures;
        for (const AxiomReport& r : validate_all(m)) ok = ok && r.pass;
    }
    for (int k = 1; k <= 11; ++k) {
        char name[64];
        std::snprintf(name, sizeof name, "violates-axiom-%02d.mmppf.json", k);
        MmppfStructure m = testsup::load_corpus(name);
        ++structures;
        for (const AxiomReport& r : validate_all(m)) ok = ok && r.pass == (r.axiom_id != k);
    }
    double dt = seconds_since(start);
    report(1, ok && structures >= 12 && dt < 1.0,
           "(" + std::to_string(structures) + " structures, " + std::to_string(dt) + "s)");
}

// 2. Exhaustive functor truth tables.
void criterion_2() {
    auto start = Clock::now();
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = m.signature;
    bool ok = true;
    PlAtomic empty = state_atom(0, {}, {});
    PlAtomic lo = state_atom(0, {}, aset({{0, 0}, {1, 0}}));
    PlAtomic hi = state_atom(0, {}, aset({{0, 1}, {1, 1}}));
    PlAtomic split = state_atom(0, {}, aset({{0, 0}, {1, 1}}));
    PlAtomic other = state_atom(0, {}, aset({{2, 0}}));

    ok = ok && ms(sig, 1, 0, empty) == MetaSym::Zero;
    ok = ok && ms(sig, 1, 0, lo) == MetaSym::One;

    ok = ok && tsp(sig, 1, 0, empty, lo) == MetaSym::Tilde;
    ok = ok && tsp(sig, 1, 0, lo, lo) == MetaSym::B1;
    ok = ok && tsp(sig, 1, 0, lo, hi) == MetaSym::B2;

    ok = ok && tscp(sig, 1, 1, 0, empty, lo) == MetaSym::Tilde;
    ok = ok && tscp(sig, 1, 1, 0, lo, lo) == MetaSym::G1;
    ok = ok && tscp(sig, 1, 1, 0, lo, other) == MetaSym::G1;
    ok = ok && tscp(sig, 1, 1, 0, lo, hi) == MetaSym::G2;
    try {
        tscp(sig, 1, 1, 0, lo, split);
        ok = false;
    } catch (const Error& e) {
        ok = ok && e.code() == std::string("MIXED_COMPONENT_CASE");
    }

    ok = ok && toscp(sig, 1, 1, 0, empty, lo) == MetaSym::Tilde;
    ok = ok && toscp(sig, 1, 1, 0, lo, hi) == MetaSym::D1;
    ok = ok && toscp(sig, 1, 1, 0, lo, other) == MetaSym::D1;
    ok = ok && toscp(sig, 1, 1, 0, hi, lo) == MetaSym::D2;
    try {
        toscp(sig, 1, 1, 0, lo, split);
        ok = false;
    } catch (const Error& e) {
        ok = ok && e.code() == std::string("MIXED_COMPONENT_CASE");
    }

    PlBlock with, without;
    with.atoms = {rel_atom(0, 1, 1)};
    without.atoms = {state_atom(0, {}, {})};
    ok = ok && rs(sig, 1, 0, 1, with) == MetaSym::K2;
    ok = ok && rs(sig, 1, 0, 1, without) == MetaSym::K1;
    ok = ok && trs(sig, 1, 0, 1, without, without) == MetaSym::T1;
    ok = ok && trs(sig, 1, 0, 1, without, with) == MetaSym::T2;
    ok = ok && trs(sig, 1, 0, 1, with, without) == MetaSym::T3;
    ok = ok && trs(sig, 1, 0, 1, with, with) == MetaSym::T4;

    double dt = seconds_since(start);
    report(2, ok && dt < 1.0, "(" + std::to_string(dt) + "s)");
}

// 3. Wff acceptance vs the reference automaton on 1000 random formulas.
void criterion_3() {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    testsup::Rng rng(301);
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
        PlFormula f = testsup::random_pl_formula(m, rng, i % 2 == 0);
        bool accepted = check_wff(m.signature, f).empty();
        if (accepted != testsup::wff_reference_accepts(m.signature, f)) ++disagreements;
    }
    report(3, disagreements == 0, "(" + std::to_string(disagreements) + " disagreements)");
}

// 4. Checker-oracle equivalence on >= 500 random pairs.
void criterion_4() {
    auto start = Clock::now();
    testsup::Rng rng(401);
    int pairs = 0, disagreements = 0;
    while (pairs < 500) {
        MmppfStructure m = testsup::random_structure(rng);
        int anchor = 1 + static_cast<int>(rng() % m.time_count());
        for (int k = 0; k < 5 && pairs < 500; ++k) {
            PlFormula f = testsup::random_pl_formula(m, rng, true);
            if (!check_wff(m.signature, f).empty()) continue;
            if (check(m, anchor, f).value != oracle_check(m, anchor, f)) ++disagreements;
            ++pairs;
        }
    }
    double dt = seconds_since(start);
    report(4, disagreements == 0 && dt < 60.0,
           "(" + std::to_string(pairs) + " pairs, " + std::to_string(dt) + "s)");
}

// 5. The ->> formula flips to false when its transition entry is removed.
void criterion_5() {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = m.signature;
    PlFormula f = parse_pl(sig, testsup::read_file(testsup::corpus_path("pl-next-true.plf")));
    int anchor = m.time_count();
    bool with_entry = check(m, anchor, f).value;

    MmppfStructure cut = m;
    for (auto it = cut.transition.begin(); it != cut.transition.end();)
        it = it->first.first != it->second ? cut.transition.erase(it) : std::next(it);
    bool without_entry = check(cut, anchor, f).value;

    // Each block alone stays satisfiable at its own moment.
    PlFormula left{{PlChain{{f.chains[0].blocks[0]}, {}}}};
    PlFormula right{{PlChain{{f.chains[0].blocks[1]}, {}}}};
    bool blocks_hold = check(cut, anchor, left).value && check(cut, anchor, right).value;

    report(5, with_entry && !without_entry && blocks_hold);
}

// 6. Connective laws: permutation invariance, non-commutativity witnesses,
// and next-implies-eventually monotonicity.
void criterion_6() {
    testsup::Rng rng(601);
    bool ok = true;

    int permuted = 0;
    while (permuted < 200) {
        MmppfStructure m = testsup::random_structure(rng);
        int anchor = 1 + static_cast<int>(rng() % m.time_count());
        PlFormula f = testsup::random_pl_formula(m, rng, true);
        if (!check_wff(m.signature, f).empty()) continue;
        bool before = check(m, anchor, f).value;
        PlFormula g = f;
        for (auto& chain : g.chains)
            for (auto& block : chain.blocks)
                std::shuffle(block.atoms.begin(), block.atoms.end(), rng);
        std::shuffle(g.chains.begin(), g.chains.end(), rng);
        ok = ok && check(m, anchor, g).value == before;
        ++permuted;
    }

    bool next_witness = false, event_witness = false;
    for (int tries = 0; tries < 4000 && !(next_witness && event_witness); ++tries) {
        MmppfStructure m = testsup::random_structure(rng);
        int anchor = 1 + static_cast<int>(rng() % m.time_count());
        std::optional<PlFormula> f = testsup::true_next_formula(m, anchor, rng);
        if (!f || !check_wff(m.signature, *f).empty()) continue;
        PlFormula swapped = *f;
        std::swap(swapped.chains[0].blocks[0], swapped.chains[0].blocks[1]);
        if (!check_wff(m.signature, swapped).empty()) continue;
        if (!check(m, anchor, *f).value) continue;
        if (!check(m, anchor, swapped).value) next_witness = true;
        PlFormula ev = *f, ev_swapped = swapped;
        ev.chains[0].joins[0] = Join::Eventually;
        ev_swapped.chains[0].joins[0] = Join::Eventually;
        if (check(m, anchor, ev).value && !check(m, anchor, ev_swapped).value)
            event_witness = true;
    }
    ok = ok && next_witness && event_witness;

    int monotone = 0;
    while (monotone < 200) {
        MmppfStructure m = testsup::random_structure(rng);
        int anchor = 1 + static_cast<int>(rng() % m.time_count());
        std::optional<PlFormula> f = testsup::true_next_formula(m, anchor, rng);
        if (!f || !check_wff(m.signature, *f).empty()) continue;
        if (!check(m, anchor, *f).value) continue;
        PlFormula ev = *f;
        ev.chains[0].joins[0] = Join::Eventually;
        ok = ok && check(m, anchor, ev).value;
        ++monotone;
    }

    report(6, ok);
}

// 7. Translation pipeline on true formulas plus run-length collapse.
void criterion_7() {
    testsup::Rng rng(701);
    bool ok = true;
    int piped = 0;
    while (piped < 100) {
        MmppfStructure m = testsup::random_structure(rng);
        const Signature& sig = m.signature;
        int anchor = 1 + static_cast<int>(rng() % m.time_count());
        std::optional<PlFormula> f = rng() % 2 ? testsup::true_next_formula(m, anchor, rng)
                                               : testsup::true_block_formula(m, anchor, rng);
        if (!f || !check_wff(sig, *f).empty()) continue;
        if (!check(m, anchor, *f).value) continue;
        PlStarFormula star;
        try {
            star = translate_tr1(sig, *f, default_profile(sig, *f));
        } catch (const Error&) {
            continue;
        }
        ok = ok && check_star(m, anchor, star, *f, 1) == Verdict::True;
        ClFormula cl = translate_tr2(sig, star, default_tr2_grammar(sig, star));
        ok = ok && check_cl(m, anchor, cl, star, 2000000) == Verdict::True;
        ++piped;
    }

    MmppfStructure toggle = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = toggle.signature;
    PlStarFormula base =
        parse_star(sig, testsup::read_file(testsup::corpus_path("star-simple.plf")));
    ClFormula collapsed;
    for (int k = 1; k <= 20; ++k) {
        PlStarFormula f;
        f.chains.emplace_back();
        for (int i = 0; i < k; ++i) {
            f.chains[0].blocks.push_back(base.chains[0].blocks[0]);
            if (i) f.chains[0].joins.push_back(Join::Next);
        }
        ClFormula out = translate_tr2(sig, f, default_tr2_grammar(sig, f));
        if (k == 1)
            collapsed = out;
        else
            ok = ok && out == collapsed;
    }

    report(7, ok);
}

// 8. Byte-exact round trips for formulas and the structure corpus.
void criterion_8() {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = m.signature;
    testsup::Rng rng(801);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        PlFormula f = testsup::random_pl_formula(m, rng, false);
        ok = ok && parse_pl(sig, print_pl(sig, f)) == f;
        PlStarFormula g = testsup::random_star_formula(sig, rng);
        ok = ok && parse_star(sig, print_star(sig, g)) == g;
        ClFormula h = testsup::random_cl_formula(sig, rng);
        ok = ok && parse_cl(sig, print_cl(sig, h)) == h;
    }
    std::vector<std::string> names = {"two-state-toggle.mmppf.json",
                                      "one-state-loop.mmppf.json"};
    for (int k = 1; k <= 11; ++k) {
        char name[64];
        std::snprintf(name, sizeof name, "violates-axiom-%02d.mmppf.json", k);
        names.push_back(name);
    }
    for (const std::string& name : names) {
        std::string text = testsup::read_file(testsup::corpus_path(name));
        ok = ok && save_structure(load_structure(text)) == text;
    }
    report(8, ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    return g_all_pass ? 0 : 1;
}
