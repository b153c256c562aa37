#pragma once

#include <string>
#include <vector>

#include "mmppf/formula.hpp"
#include "mmppf/lambda.hpp"

namespace mmppf {

// Simple syntax-directed translation rules extended with assignment sets.
// alpha and gamma each carry at most one nonterminal, and they must agree
// on it (identity permutation).
struct RgtcRule {
    struct InTok {
        bool terminal = true;
        std::string text;

        auto operator<=>(const InTok&) const = default;
    };
    struct OutItem {
        enum Kind { Literal, NonTerminal, Term } kind = Literal;
        std::string text;  // Literal/NonTerminal
        LTermPtr term;     // Term
    };

    std::string lhs;
    std::vector<InTok> alpha;
    std::vector<OutItem> gamma;
    std::vector<std::pair<std::string, std::string>> assignments;  // var := constant
};

struct RgtcGrammar {
    std::string start;
    std::vector<std::string> input_symbols;   // terminal alphabet
    std::vector<std::string> output_symbols;  // literal output alphabet
    std::vector<RgtcRule> rules;              // lhs set = nonterminal set

    bool is_nonterminal(const std::string& s) const;
    bool is_input_symbol(const std::string& s) const;
    bool is_output_symbol(const std::string& s) const;
};

// Grammar documents (.rgtc): %start, %input, %output declarations and
// line-oriented rules `A -> ( <alpha> , <gamma> , { x := c ; ... } )`.
// Terminals and output literals are double-quoted; λ-terms appear bare.
RgtcGrammar parse_grammar(const std::string& source);
std::string print_grammar(const RgtcGrammar& g);

// One output piece of a finished run: a literal symbol or a λ-term.
struct OutPiece {
    bool literal = true;
    std::string text;
    LTermPtr term;
};

struct TranslationRun {
    std::vector<std::string> input;
    std::vector<int> derivation;   // applied rule indices, leftmost order
    std::vector<OutPiece> raw;     // before assignments and β-reduction
    std::vector<OutPiece> output;  // assignments applied, β-normal
};

// Predictive leftmost derivation; among the viable rules of a nonterminal
// the one with the longest matching terminal prefix wins, ties raise
// AMBIGUOUS. Assignments substitute free λ-variables across the whole run.
TranslationRun translate(const RgtcGrammar& g, const std::vector<std::string>& input);

// The default Tr2 grammar: one nonterminal per distinct block of the
// vocabulary, collapsing maximal runs of identical blocks into one CL
// interval-atom group.
RgtcGrammar make_interval_collapse_grammar(const Signature& sig,
                                           const std::vector<PlStarBlock>& vocabulary);
RgtcGrammar default_tr2_grammar(const Signature& sig, const PlStarFormula& f);

// Tokenization of one PL* chain as fed to translate: atom texts with ^
// between conjuncts and the junction marks between blocks.
std::vector<std::string> tr2_tokens(const Signature& sig, const PlStarChain& chain);

// Tr2: translate every chain of f under g and assemble the CL formula.
ClFormula translate_tr2(const Signature& sig, const PlStarFormula& f, const RgtcGrammar& g);

}  // namespace mmppf
