#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmppf/formula.hpp"
#include "mmppf/metainfo.hpp"
#include "mmppf/rgtc.hpp"

namespace mmppf {

// One atomic clause at one reality of a perspective.
bool sat_atomic(const MmppfStructure& m, const Perspective& pt, const Reality& r,
                const PlAtomic& a);

// One step of a satisfying run. Intermediate hops of a ~> chain carry no
// condition/situator; input is the one taken to leave this step (null on
// the last step).
struct TraceStep {
    int time = 0;
    std::optional<Condition> condition;
    std::optional<Situator> situator;
    int state = -1;
    std::optional<InputVector> input;
};
using ChainTrace = std::vector<TraceStep>;

struct CheckResult {
    bool value = false;
    std::vector<ChainTrace> traces;  // one per chain when true
};

// Satisfiability of a perceptive formula at the perspective anchored at
// `anchor`. Throws ANCHOR_OUT_OF_RANGE.
CheckResult check(const MmppfStructure& m, int anchor, const PlFormula& f);

std::string trace_to_json(const MmppfStructure& m, const CheckResult& r);

enum class Verdict { True, False, Budget };

// Metainformation-level satisfiability: does some perceptive formula
// translate to f and hold? With a witness, verifies the translation and
// checks the witness; without one, enumerates candidates built from the
// structure's own state tables, testing at most `bound` of them.
Verdict check_star(const MmppfStructure& m, int anchor, const PlStarFormula& f,
                   const std::optional<PlFormula>& witness, long long bound,
                   const AbstractionProfile* profile = nullptr, std::string* detail = nullptr);

// Interval-level satisfiability via Tr2; the witness space is PL*.
Verdict check_cl(const MmppfStructure& m, int anchor, const ClFormula& f,
                 const std::optional<PlStarFormula>& witness, long long bound,
                 const RgtcGrammar* grammar = nullptr, std::string* detail = nullptr);

// Brute-force reference: enumerates every reality sequence and input chain
// with no frontier pruning. Soft limits (6 states, 6 times, 64 admissible
// inputs per state) guarded by ORACLE_LIMIT_EXCEEDED.
bool oracle_check(const MmppfStructure& m, int anchor, const PlFormula& f);

}  // namespace mmppf
