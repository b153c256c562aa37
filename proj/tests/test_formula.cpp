#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace mmppf;

TEST_SUITE("formula") {

TEST_CASE("concrete syntax parses into the expected shapes") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = m.signature;

    PlFormula f = parse_pl(sig, "[e|@=|obj o1: {(h1,(w0))};_] ^ [e|@=|rel S[o1,1] o2]"
                                " ->> [h||>|act o2: (hold0,stay2)]");
    REQUIRE(f.chains.size() == 1);
    REQUIRE(f.chains[0].blocks.size() == 2);
    CHECK(f.chains[0].joins == std::vector<Join>{Join::Next});
    CHECK(f.chains[0].blocks[0].atoms.size() == 2);
    const TypeIBody& b1 = std::get<TypeIBody>(f.chains[0].blocks[0].atoms[0].body);
    CHECK(b1.object == 0);
    CHECK(b1.sets[1].empty());
    CHECK(std::get<TypeIIBody>(f.chains[0].blocks[0].atoms[1].body).property == 1);
    CHECK(std::get<TypeIIIBody>(f.chains[0].blocks[1].atoms[0].body).object == 1);

    PlStarFormula g = parse_star(sig, "[e|<||meta o1: 1;b2] ~> [h|@=|metac o2[1,1]: g1]"
                                      " // [e||>|metar o1 o2: t3]");
    REQUIRE(g.chains.size() == 2);
    CHECK(std::get<MetaIBody>(g.chains[0].blocks[0].atoms[0].body).symbols ==
          std::vector<MetaSym>{MetaSym::One, MetaSym::B2});
    CHECK(std::get<MetaComponentBody>(g.chains[0].blocks[1].atoms[0].body).dimension == 1);
    CHECK(std::get<MetaRelationalBody>(g.chains[1].blocks[0].atoms[0].body).symbol == MetaSym::T3);

    ClFormula h = parse_cl(sig, "[e|@=|int o1 0 1] ^ [e|@=|int o1 1 1 ~] ^ [e|@=|int pat x o2 k2]");
    const ClBlock& blk = h.chains[0].blocks[0];
    REQUIRE(blk.atoms.size() == 3);
    CHECK(std::get<ClPropMeta>(blk.atoms[0].body).symbol == MetaSym::One);
    CHECK(std::get<ClCompMeta>(blk.atoms[1].body).symbol == MetaSym::Tilde);
    CHECK(blk.atoms[2].obj.pattern == "x");
    CHECK(std::get<ClRelMeta>(blk.atoms[2].body).symbol == MetaSym::K2);
}

TEST_CASE("syntax errors carry line and column, unknown names their spelling") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    try {
        parse_pl(m.signature, "[e|@=|obj o1:\n {(h1,(w0))};");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "SYNTAX_ERROR");
        CHECK(std::string(e.what()).find("2:") != std::string::npos);
    }
    try {
        parse_pl(m.signature, "[e|@=|obj oX: _;_]");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "UNKNOWN_SYMBOL");
        CHECK(std::string(e.what()).find("oX") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_star(m.signature, "[e|@=|meta o1: g1;1]"), Error);
    CHECK_THROWS_AS((void)parse_cl(m.signature, "[e|@=|int o1 1 2 g1]"), Error);
}

TEST_CASE("parse and print are inverse on random formulas per layer") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = m.signature;
    testsup::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        PlFormula f = testsup::random_pl_formula(m, rng, false);
        CHECK(parse_pl(sig, print_pl(sig, f)) == f);
        PlStarFormula g = testsup::random_star_formula(sig, rng);
        CHECK(parse_star(sig, print_star(sig, g)) == g);
        ClFormula h = testsup::random_cl_formula(sig, rng);
        CHECK(parse_cl(sig, print_cl(sig, h)) == h);
    }
}

TEST_CASE("wff acceptance matches the reference automaton on random formulas") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    testsup::Rng rng(12);
    int rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        PlFormula f = testsup::random_pl_formula(m, rng, i % 2 == 0);
        bool accepted = check_wff(m.signature, f).empty();
        CHECK(accepted == testsup::wff_reference_accepts(m.signature, f));
        if (!accepted) ++rejected;
    }
    CHECK(rejected > 0);
    CHECK(rejected < 1000);
}

TEST_CASE("every violation message names its rule") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    testsup::Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        PlFormula f = testsup::random_pl_formula(m, rng, false);
        for (const WffViolation& v : check_wff(m.signature, f)) {
            CHECK(v.rule >= 1);
            CHECK(v.rule <= 5);
            CHECK(v.message.find("rule " + std::to_string(v.rule)) != std::string::npos);
        }
    }
}

TEST_CASE("the violation set is stable under conjunct permutation") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    testsup::Rng rng(14);
    auto rule_multiset = [&](const PlFormula& f) {
        std::vector<int> rules;
        for (const WffViolation& v : check_wff(m.signature, f)) rules.push_back(v.rule);
        std::sort(rules.begin(), rules.end());
        return rules;
    };
    for (int i = 0; i < 200; ++i) {
        PlFormula f = testsup::random_pl_formula(m, rng, false);
        std::vector<int> before = rule_multiset(f);
        for (auto& chain : f.chains)
            for (auto& block : chain.blocks)
                std::shuffle(block.atoms.begin(), block.atoms.end(), rng);
        CHECK(rule_multiset(f) == before);
    }
}

TEST_CASE("duplicate rules fire on the right layers") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = m.signature;
    PlFormula dup_state =
        parse_pl(sig, "[e|@=|obj o1: _;_] ^ [e|@=|obj o1: {(h1,(w0))};_]");
    auto v1 = check_wff(sig, dup_state);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].rule == 4);

    PlFormula dup_act = parse_pl(sig, "[e|@=|act o2: (hold0,stay2)] ^ [e|@=|act o2: (hold0,stay2)]");
    auto v2 = check_wff(sig, dup_act);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].rule == 5);

    PlStarFormula dup_meta = parse_star(sig, "[e|@=|meta o1: 1;1] ^ [e|@=|meta o1: 0;0]");
    auto v3 = check_wff(sig, dup_meta);
    REQUIRE(v3.size() == 1);
    CHECK(v3[0].rule == 4);

    PlFormula bad_junction = parse_pl(sig, "[e|@=|obj o1: _;_] ~> [e|<||obj o1: _;_]");
    auto v4 = check_wff(sig, bad_junction);
    REQUIRE(v4.size() == 1);
    CHECK(v4[0].rule == 3);
}

TEST_CASE("canonicalize sorts conjuncts deterministically") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    const Signature& sig = m.signature;
    PlFormula a = parse_pl(sig, "[e|@=|obj o2: _;_] ^ [e|@=|obj o1: _;_]");
    PlFormula b = parse_pl(sig, "[e|@=|obj o1: _;_] ^ [e|@=|obj o2: _;_]");
    canonicalize(a);
    canonicalize(b);
    CHECK(a == b);
    CHECK(print_pl(sig, a) == print_pl(sig, b));
}

}  // TEST_SUITE
