#pragma once

#include <random>
#include <string>

#include "mmppf/checker.hpp"
#include "mmppf/io.hpp"

namespace testsup {

using Rng = std::mt19937;

std::string corpus_dir();
std::string corpus_path(const std::string& name);
std::string read_file(const std::string& path);
mmppf::MmppfStructure load_corpus(const std::string& name);

// A small random structure within the oracle limits: 1-2 objects, 1-2
// properties, 2-4 states, 2-3 perspectives, partial transition table.
mmppf::MmppfStructure random_structure(Rng& rng);

// Random atoms over a structure's signature. TypeI sets are drawn from the
// states' own tables half the time so formulas are sometimes satisfiable.
mmppf::PlAtomic random_pl_atom(const mmppf::MmppfStructure& m, Rng& rng,
                               mmppf::Condition cond, mmppf::Situator sit);

// Random formula ASTs for round-trip and wff tests. Situators are
// unconstrained; conditions and situators are shared within a block only
// when `uniform_blocks` is set.
mmppf::PlFormula random_pl_formula(const mmppf::MmppfStructure& m, Rng& rng,
                                   bool uniform_blocks);
mmppf::PlStarFormula random_star_formula(const mmppf::Signature& sig, Rng& rng);
mmppf::ClFormula random_cl_formula(const mmppf::Signature& sig, Rng& rng);

// Reference acceptor for the wff rules, independent of check_wff: a DFA
// over the block situator runs plus duplicate scans.
bool wff_reference_accepts(const mmppf::Signature& sig, const mmppf::PlFormula& f);

// A two-block ->> formula read off an actual path of the perspective
// anchored at `anchor`, or nothing if no such path exists. The formula is
// true at that anchor by construction.
std::optional<mmppf::PlFormula> true_next_formula(const mmppf::MmppfStructure& m, int anchor,
                                                  Rng& rng);

// A single-block formula read off one reality of the anchor's perspective.
std::optional<mmppf::PlFormula> true_block_formula(const mmppf::MmppfStructure& m, int anchor,
                                                   Rng& rng);

}  // namespace testsup
