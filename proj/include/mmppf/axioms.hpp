#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmppf/model.hpp"

namespace mmppf {

// One violation record: ordered (field, value) pairs naming the tuple that
// falsifies the axiom, plus an optional kind tag (e.g. UNMATCHED_CASE).
struct Witness {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;

    std::string field(const std::string& name) const {
        for (const auto& [k, v] : fields)
            if (k == name) return v;
        return "";
    }
};

struct AxiomReport {
    int axiom_id = 0;
    bool pass = true;
    std::vector<Witness> witnesses;
    std::string note;  // ambiguity notes, e.g. the Axiom 4 DH reading
};

// Exhaustive check of one axiom (1..11). Throws UNKNOWN_AXIOM otherwise.
AxiomReport check_axiom(const MmppfStructure& m, int axiom);

// Eleven reports in axiom order; never short-circuits.
std::vector<AxiomReport> validate_all(const MmppfStructure& m);

// Structural totality of the transition function: every admissible input of
// every state must have a transition entry. Not one of the eleven axioms;
// reported separately by the CLI.
std::vector<Witness> check_transition_totality(const MmppfStructure& m);

std::string report_to_json(const MmppfStructure& m, const std::vector<AxiomReport>& reports,
                           const std::vector<Witness>& structural);

}  // namespace mmppf
