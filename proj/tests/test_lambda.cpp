#include "doctest.h"
#include "mmppf/lambda.hpp"
#include "support.hpp"

using namespace mmppf;

TEST_SUITE("lambda") {

TEST_CASE("terms print and reparse unchanged") {
    for (const char* text : {
             "(\\tp:TS. \\ob:O. [e|tp|ob|0|1])",
             "((\\tp:TS. \\ob:O. [e|tp|ob|1|b2]) <| o1)",
             "[h|@=|o2|o1|k2]",
             "(\\x:O. (\\y:MS. [e|<||x|0|y]))",
             "(\\x:O. x)",
         }) {
        CAPTURE(text);
        LTermPtr t = parse_term(text);
        CHECK(term_equal(*parse_term(print_term(*t)), *t));
    }
}

TEST_CASE("beta reduction reaches the normal form") {
    LTermPtr t = parse_term("((\\tp:TS. \\ob:O. [e|tp|ob|0|1]) @= o1)");
    CHECK(!is_normal(*t));
    LTermPtr n = beta_reduce(t);
    CHECK(is_normal(*n));
    CHECK(print_term(*n) == "[e|@=|o1|0|1]");
}

TEST_CASE("reduction order does not matter on interval terms") {
    std::mt19937 rng(99);
    for (const char* text : {
             "(((\\tp:TS. \\ob:O. [e|tp|ob|0|1]) <| o1))",
             "[e|@=|o1|((\\y:MS. y) b1)]",
             "((\\tp:TS. [e|tp|((\\x:O. x) o1)|0|1]) @=)",
         }) {
        CAPTURE(text);
        LTermPtr t = parse_term(text);
        LTermPtr normal = beta_reduce(t);
        for (int i = 0; i < 10; ++i) {
            LTermPtr other = beta_reduce_random(t, rng);
            CHECK(term_equal(*other, *normal));
        }
    }
}

TEST_CASE("substitution avoids variable capture") {
    // Substituting a value whose free y crosses a \y binder must rename the
    // binder instead of capturing.
    LTermPtr value = make_lam("z", Cat::Object, make_var("y"));
    LTermPtr t = make_app(
        make_lam("x", Cat::Register, make_lam("y", Cat::Object, make_var("x"))), value);
    LTermPtr n = beta_reduce(t);
    REQUIRE(n->kind == LTerm::Lam);
    CHECK(n->name != "y");
    REQUIRE(n->body->kind == LTerm::Lam);
    CHECK(n->body->body->kind == LTerm::Var);
    CHECK(n->body->body->name == "y");
}

TEST_CASE("applications check argument categories") {
    LTermPtr bad = make_app(parse_term("(\\tp:TS. [e|tp|o1|0|1])"), make_const("o1", Cat::Object));
    try {
        beta_reduce(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "TYPE_MISMATCH");
    }
    LTermPtr ok = make_app(parse_term("(\\tp:TS. [e|tp|o1|0|1])"),
                           make_const("<|", Cat::TempSituator));
    CHECK(is_normal(*beta_reduce(ok)));
}

TEST_CASE("free variables and closedness") {
    LTermPtr open = make_app(make_var("f"), make_const("o1", Cat::Object));
    CHECK(free_vars(*open) == std::vector<std::string>{"f"});
    CHECK(!is_closed(*open));
    CHECK(is_closed(*parse_term("(\\x:O. [e|@=|x|0|1])")));
}

}  // TEST_SUITE
