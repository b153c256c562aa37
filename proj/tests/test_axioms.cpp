#include <set>

#include "doctest.h"
#include "mmppf/axioms.hpp"
#include "support.hpp"

using namespace mmppf;

namespace {

// Data-driven restatement of the successor case table, kept independent of
// the validator's control flow. Row: (time relation, realized requirement,
// condition requirement) -> expected successor tuple.
enum class TimeRel { Before, Abuts, Equal, After };
enum class Realized { Yes, No, Any };

struct CaseRow {
    TimeRel rel;
    Realized realized;
    std::optional<Condition> cond;
    int out_time_from_anchor;  // 0: t'+1, 1: t+1
    Condition out_cond;
    Situator out_sit;
};

const CaseRow kTable[] = {
    {TimeRel::Before, Realized::Yes, Condition::Epsilon, 0, Condition::Epsilon, Situator::Past},
    {TimeRel::Before, Realized::No, std::nullopt, 0, Condition::Hypothetical, Situator::Past},
    {TimeRel::Abuts, Realized::Yes, Condition::Epsilon, 0, Condition::Epsilon, Situator::Present},
    {TimeRel::Abuts, Realized::No, std::nullopt, 0, Condition::Hypothetical, Situator::Present},
    {TimeRel::Equal, Realized::Yes, Condition::Epsilon, 1, Condition::Epsilon, Situator::Future},
    {TimeRel::Equal, Realized::No, Condition::Hypothetical, 1, Condition::Hypothetical,
     Situator::Future},
    {TimeRel::After, Realized::Any, Condition::Epsilon, 1, Condition::Epsilon, Situator::Future},
    {TimeRel::After, Realized::Any, Condition::Hypothetical, 1, Condition::Hypothetical,
     Situator::Future},
};

bool edge_fits_table(const Perspective& pt, const SuccEntry& s) {
    const int t = pt.anchor, tp = s.from.time;
    TimeRel rel = tp + 1 < t    ? TimeRel::Before
                  : tp + 1 == t ? TimeRel::Abuts
                  : tp == t     ? TimeRel::Equal
                                : TimeRel::After;
    auto it = pt.realized_inputs.find(tp);
    std::optional<bool> realized;
    if (it != pt.realized_inputs.end()) realized = it->second == s.input;
    for (const CaseRow& row : kTable) {
        if (row.rel != rel) continue;
        if (row.realized == Realized::Yes && realized != std::optional<bool>(true)) continue;
        if (row.realized == Realized::No && realized != std::optional<bool>(false)) continue;
        if (row.cond && s.from.condition != *row.cond) continue;
        int want_time = (row.out_time_from_anchor ? t : tp) + 1;
        if (s.to.time == want_time && s.to.condition == row.out_cond &&
            s.to.situator == row.out_sit)
            return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("axioms") {

TEST_CASE("the full corpus validates cleanly") {
    for (const char* name : {"two-state-toggle.mmppf.json", "one-state-loop.mmppf.json"}) {
        CAPTURE(name);
        MmppfStructure m = testsup::load_corpus(name);
        for (const AxiomReport& r : validate_all(m)) {
            CAPTURE(r.axiom_id);
            CHECK(r.pass);
        }
        CHECK(check_transition_totality(m).empty());
    }
}

TEST_CASE("each violation file fails exactly its own axiom") {
    for (int k = 1; k <= 11; ++k) {
        char name[64];
        std::snprintf(name, sizeof name, "violates-axiom-%02d.mmppf.json", k);
        CAPTURE(name);
        MmppfStructure m = testsup::load_corpus(name);
        for (const AxiomReport& r : validate_all(m)) {
            CAPTURE(r.axiom_id);
            CHECK(r.pass == (r.axiom_id != k));
            if (!r.pass) CHECK(!r.witnesses.empty());
        }
    }
}

TEST_CASE("witnesses carry the offending location") {
    MmppfStructure m = testsup::load_corpus("violates-axiom-05.mmppf.json");
    AxiomReport rep = check_axiom(m, 5);
    REQUIRE(!rep.pass);
    // Ownership violations are symmetric; every ordered pair is reported.
    CHECK(rep.witnesses.size() == 4);
    for (const Witness& w : rep.witnesses) CHECK(w.field("essence") == "h1");
}

TEST_CASE("unknown axiom ids are rejected") {
    MmppfStructure m = testsup::load_corpus("one-state-loop.mmppf.json");
    CHECK_THROWS_AS((void)check_axiom(m, 0), Error);
    CHECK_THROWS_AS((void)check_axiom(m, 12), Error);
}

TEST_CASE("successor case analysis agrees with the data-driven table") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    testsup::Rng rng(4242);
    auto mutate = [&](SuccEntry& s) {
        switch (rng() % 4) {
            case 0: s.to.time = 1 + static_cast<int>(rng() % 4); break;
            case 1:
                s.to.condition = s.to.condition == Condition::Epsilon ? Condition::Hypothetical
                                                                      : Condition::Epsilon;
                break;
            case 2:
                s.to.situator = static_cast<Situator>(rng() % 3);
                break;
            default: s.from.time = 1 + static_cast<int>(rng() % 3); break;
        }
    };
    for (int round = 0; round < 200; ++round) {
        MmppfStructure mut = m;
        Perspective& pt = mut.perspectives[rng() % mut.perspectives.size()];
        if (pt.succ.empty()) continue;
        if (round) mutate(pt.succ[rng() % pt.succ.size()]);
        bool expect = true;
        for (const Perspective& p : mut.perspectives)
            for (const SuccEntry& s : p.succ) expect = expect && edge_fits_table(p, s);
        CHECK(check_axiom(mut, 10).pass == expect);
    }
}

TEST_CASE("missing transitions show up as structural findings") {
    MmppfStructure m = testsup::load_corpus("two-state-toggle.mmppf.json");
    m.transition.erase(m.transition.begin());
    std::vector<Witness> w = check_transition_totality(m);
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == "MISSING_TRANSITION");
}

TEST_CASE("the validation report serializes with verdicts and witnesses") {
    MmppfStructure m = testsup::load_corpus("violates-axiom-01.mmppf.json");
    std::string doc = report_to_json(m, validate_all(m), check_transition_totality(m));
    CHECK(doc.find("\"axiom\": 1") != std::string::npos);
    CHECK(doc.find("\"FAIL\"") != std::string::npos);
    CHECK(doc.find("\"PASS\"") != std::string::npos);
    CHECK(doc.find("\"structural\"") != std::string::npos);
}

}  // TEST_SUITE
