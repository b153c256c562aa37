#pragma once

#include <string>
#include <vector>

#include "mmppf/formula.hpp"

namespace mmppf {

// The six metainformation functors. All work at the formula level:
// assignment sets and relation atoms are read off the given atoms, not
// from a structure.

// Sigma1 momentary state: Zero iff P_p is empty.
MetaSym ms(const Signature& sig, int property, int object, const PlAtomic& psi);

// Sigma2 temporal state over a ->> pair of TypeI atoms naming the object.
MetaSym tsp(const Signature& sig, int property, int object, const PlAtomic& left,
            const PlAtomic& right);

// Sigma3 component-wise temporal state; dimension is 1-based.
// Throws MIXED_COMPONENT_CASE when the shared essences disagree.
MetaSym tscp(const Signature& sig, int property, int dimension, int object,
             const PlAtomic& left, const PlAtomic& right);

// Sigma4 ordered component-wise temporal state.
MetaSym toscp(const Signature& sig, int property, int dimension, int object,
              const PlAtomic& left, const PlAtomic& right);

// Pi1 relational state of a block: K2 iff the block conjoins the matching
// relation atom.
MetaSym rs(const Signature& sig, int property, int subject, int target, const PlBlock& block);

// Pi2 temporal relational state over a ->> pair of blocks.
MetaSym trs(const Signature& sig, int property, int subject, int target, const PlBlock& left,
            const PlBlock& right);

// One directed functor application. chain/block address the LEFT block of
// the position; pair functors (sigma2/3/4, pi2) consume the addressed block
// and its ->> successor.
struct ProfileDirective {
    int chain = 0;
    int block = 0;
    std::string functor;  // sigma1 | sigma2 | sigma3 | sigma4 | pi1 | pi2
    int object = -1;      // sigma*: carrier object; pi*: relation subject
    int target = -1;      // pi* only
    int property = 0;     // sigma3/4, pi1/2
    int dimension = 1;    // sigma3/4, 1-based
};

struct AbstractionProfile {
    std::vector<ProfileDirective> directives;
};

AbstractionProfile parse_profile(const Signature& sig, const std::string& json_text);
std::string print_profile(const Signature& sig, const AbstractionProfile& p);

// Greedy default: collapse ->> pairs sharing a TypeI object with sigma2
// (pi2 for the left block's relation atoms), otherwise sigma1 per TypeI
// atom and pi1 per relation atom. Action atoms carry no metainformation
// and are dropped.
AbstractionProfile default_profile(const Signature& sig, const PlFormula& f);

// Tr1. Keeps the condition/situator/connective skeleton except that each
// pair directive shortens its chain by one block. Throws PROFILE_MISMATCH
// when a directive does not fit the formula or a block is left uncovered;
// propagates MIXED_COMPONENT_CASE.
PlStarFormula translate_tr1(const Signature& sig, const PlFormula& f,
                            const AbstractionProfile& profile);

}  // namespace mmppf
