#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mmppf/error.hpp"

namespace mmppf {

// Categories of the interval language. Register is the category of the
// λ-terms themselves (the register-of-states functions); Index and
// IntervalAtom are plumbing categories for atom fields and finished atoms.
enum class Cat { Object, Pattern, CondOfReality, TempSituator, MetaSymbol, Index, IntervalAtom, Register };

std::string to_string(Cat c);

// Category a bare constant spelling belongs to: condition letters CR,
// situator marks TS, metainformation symbols MS, digit strings Index,
// anything else Object.
Cat category_of_spelling(const std::string& s);

struct LTerm;
using LTermPtr = std::shared_ptr<const LTerm>;

struct LTerm {
    enum Kind { Var, Const, Lam, App, Interval };
    Kind kind = Const;
    std::string name;             // Var/Const spelling, Lam parameter name
    Cat cat = Cat::Object;        // Const category, Lam parameter category
    LTermPtr fn, arg;             // App
    LTermPtr body;                // Lam
    std::vector<LTermPtr> fields; // Interval template
};

LTermPtr make_var(const std::string& name);
LTermPtr make_const(const std::string& name, Cat cat);
LTermPtr make_lam(const std::string& param, Cat cat, LTermPtr body);
LTermPtr make_app(LTermPtr fn, LTermPtr arg);
LTermPtr make_interval(std::vector<LTermPtr> fields);

bool term_equal(const LTerm& a, const LTerm& b);

// Concrete term syntax: `\x:TS. body`, n-ary application `(f a b)`,
// interval templates `[f1|f2|...]`, constants categorized by spelling
// (condition letters CR, situator marks TS, metainformation symbols MS,
// numbers Index, `pat name` Pattern, anything else Object).
LTermPtr parse_term(const std::string& text);
std::string print_term(const LTerm& t);

bool is_normal(const LTerm& t);
// True when no free variable occurs.
bool is_closed(const LTerm& t);
// Free variables in first-occurrence order.
std::vector<std::string> free_vars(const LTerm& t);

// Normal-order reduction to β-normal form. Applications of annotated
// binders check the argument's category and throw TYPE_MISMATCH.
LTermPtr beta_reduce(LTermPtr t);
// Reduces by repeatedly contracting a randomly chosen redex; used to test
// confluence of the fragment.
LTermPtr beta_reduce_random(LTermPtr t, std::mt19937& rng);

}  // namespace mmppf
