#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mmppf/model.hpp"

namespace mmppf {

// The shared metainformation vocabulary. Sigma1 = {Zero, One},
// Sigma2 = {Tilde, B1, B2}, Sigma3 = {Tilde, G1, G2}, Sigma4 = {Tilde, D1, D2},
// Pi1 = {K1, K2}, Pi2 = {T1..T4}.
enum class MetaSym { Zero, One, Tilde, B1, B2, G1, G2, D1, D2, K1, K2, T1, T2, T3, T4 };

std::string spell(MetaSym s);
bool in_sigma12(MetaSym s);
bool in_sigma34(MetaSym s);
bool in_pi(MetaSym s);

enum class Join { Next, Eventually };  // ->> and ~>

template <typename Atomic>
struct BasicBlock {
    std::vector<Atomic> atoms;

    auto operator<=>(const BasicBlock&) const = default;
};

template <typename Atomic>
struct BasicChain {
    std::vector<BasicBlock<Atomic>> blocks;
    std::vector<Join> joins;  // joins[i] sits between blocks[i] and blocks[i+1]

    auto operator<=>(const BasicChain&) const = default;
};

template <typename Atomic>
struct BasicFormula {
    std::vector<BasicChain<Atomic>> chains;  // joined by //

    auto operator<=>(const BasicFormula&) const = default;
};

// Perceptive-language atom bodies. Objects, essences, actions and values
// are signature indices; actions[p] indexes the catalog of (object, p).
struct TypeIBody {
    int object = -1;
    std::vector<AssignmentSet> sets;  // [property]

    auto operator<=>(const TypeIBody&) const = default;
};

struct TypeIIBody {
    int subject = -1;
    int property = 0;
    int target = -1;

    auto operator<=>(const TypeIIBody&) const = default;
};

struct TypeIIIBody {
    int object = -1;
    std::vector<int> actions;  // [property] -> catalog index

    auto operator<=>(const TypeIIIBody&) const = default;
};

struct PlAtomic {
    Condition cond = Condition::Epsilon;
    Situator sit = Situator::Present;
    std::variant<TypeIBody, TypeIIBody, TypeIIIBody> body;

    auto operator<=>(const PlAtomic&) const = default;
};

// Metainformation-language atom bodies.
struct MetaIBody {
    int object = -1;
    std::vector<MetaSym> symbols;  // [property], each in Sigma1 u Sigma2

    auto operator<=>(const MetaIBody&) const = default;
};

struct MetaComponentBody {
    int object = -1;
    int property = 0;
    int dimension = 1;  // 1-based, as in the component maps
    MetaSym symbol = MetaSym::Tilde;  // Sigma3 u Sigma4

    auto operator<=>(const MetaComponentBody&) const = default;
};

struct MetaRelationalBody {
    int subject = -1;
    int target = -1;
    MetaSym symbol = MetaSym::K1;  // Pi1 u Pi2

    auto operator<=>(const MetaRelationalBody&) const = default;
};

struct PlStarAtomic {
    Condition cond = Condition::Epsilon;
    Situator sit = Situator::Present;
    std::variant<MetaIBody, MetaComponentBody, MetaRelationalBody> body;

    auto operator<=>(const PlStarAtomic&) const = default;
};

// Categorical-language interval atoms. The object slot is either a signature
// object or a named pattern predicate.
struct ClObjectRef {
    int object = -1;          // -1 when a pattern is used
    std::string pattern;      // empty when an object is used

    auto operator<=>(const ClObjectRef&) const = default;
};

struct ClPropMeta {
    int property = 0;
    MetaSym symbol = MetaSym::Zero;  // Sigma1 u Sigma2

    auto operator<=>(const ClPropMeta&) const = default;
};

struct ClCompMeta {
    int property = 0;
    int dimension = 1;  // 1-based
    MetaSym symbol = MetaSym::Tilde;  // Sigma3 u Sigma4

    auto operator<=>(const ClCompMeta&) const = default;
};

struct ClRelMeta {
    int target = -1;
    MetaSym symbol = MetaSym::K1;  // Pi1 u Pi2

    auto operator<=>(const ClRelMeta&) const = default;
};

struct ClAtomic {
    Condition cond = Condition::Epsilon;
    Situator sit = Situator::Present;
    ClObjectRef obj;
    std::variant<ClPropMeta, ClCompMeta, ClRelMeta> body;

    auto operator<=>(const ClAtomic&) const = default;
};

using PlBlock = BasicBlock<PlAtomic>;
using PlChain = BasicChain<PlAtomic>;
using PlFormula = BasicFormula<PlAtomic>;
using PlStarBlock = BasicBlock<PlStarAtomic>;
using PlStarChain = BasicChain<PlStarAtomic>;
using PlStarFormula = BasicFormula<PlStarAtomic>;
using ClBlock = BasicBlock<ClAtomic>;
using ClChain = BasicChain<ClAtomic>;
using ClFormula = BasicFormula<ClAtomic>;

// Parsers bound to a signature. Throw SYNTAX_ERROR with line:column, or
// UNKNOWN_SYMBOL for identifiers absent from the signature.
PlFormula parse_pl(const Signature& sig, const std::string& text);
PlStarFormula parse_star(const Signature& sig, const std::string& text);
ClFormula parse_cl(const Signature& sig, const std::string& text);

// Canonical printers: conjuncts sorted, one space around connectives.
// parse(print(f)) == f for canonical f.
std::string print_pl(const Signature& sig, const PlFormula& f);
std::string print_star(const Signature& sig, const PlStarFormula& f);
std::string print_cl(const Signature& sig, const ClFormula& f);

// Single-atom printers, used for token vocabularies.
std::string print_atom(const Signature& sig, const PlAtomic& a);
std::string print_atom(const Signature& sig, const PlStarAtomic& a);
std::string print_atom(const Signature& sig, const ClAtomic& a);

// Sorts every block's conjuncts into the canonical order.
void canonicalize(PlFormula& f);
void canonicalize(PlStarFormula& f);
void canonicalize(ClFormula& f);

struct WffViolation {
    int rule = 0;  // 1 block sharing, 2 next-junction, 3 eventually-junction,
                   // 4 duplicate state atom, 5 duplicate action atom
    std::string message;  // always contains "rule N"
};

std::vector<WffViolation> check_wff(const Signature& sig, const PlFormula& f);
std::vector<WffViolation> check_wff(const Signature& sig, const PlStarFormula& f);
std::vector<WffViolation> check_wff(const Signature& sig, const ClFormula& f);

}  // namespace mmppf
