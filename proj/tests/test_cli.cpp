#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

namespace {

#ifndef MMPPF_CLI_PATH
#define MMPPF_CLI_PATH "build/mmppf"
#endif

std::string cli() {
    const char* env = std::getenv("MMPPF_CLI");
    return env ? env : MMPPF_CLI_PATH;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string out_path = "/tmp/mmppf_cli_out.txt";
    std::string cmd = cli() + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream os;
    os << in.rdbuf();
    r.output = os.str();
    return r;
}

std::string q(const std::string& corpus_name) {
    return "'" + testsup::corpus_path(corpus_name) + "'";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate distinguishes clean and violating structures") {
    RunResult good = run("validate " + q("two-state-toggle.mmppf.json"));
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("PASS") != std::string::npos);
    RunResult bad = run("validate " + q("violates-axiom-07.mmppf.json"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("axiom 7") != std::string::npos);
    RunResult gone = run("validate /nonexistent.json");
    CHECK(gone.exit_code == 1);
    RunResult json = run("--json validate " + q("violates-axiom-07.mmppf.json"));
    CHECK(json.exit_code == 2);
    CHECK(json.output.find("\"status\"") != std::string::npos);
}

TEST_CASE("check reports the verdict through the exit code") {
    std::string s = q("two-state-toggle.mmppf.json");
    CHECK(run("check " + s + " " + q("pl-next-true.plf")).exit_code == 0);
    CHECK(run("check " + s + " " + q("pl-eventually-true.plf")).exit_code == 0);
    CHECK(run("check " + s + " " + q("pl-false.plf")).exit_code == 3);
    CHECK(run("check " + s + " " + q("pl-malformed.plf")).exit_code == 5);
    CHECK(run("check " + s + " --layer star " + q("star-true.plf")).exit_code == 0);
    CHECK(run("check " + s + " --layer star " + q("star-false.plf")).exit_code == 3);
    CHECK(run("check " + s + " --layer star --bound 0 " + q("star-true.plf")).exit_code == 4);
    CHECK(run("check " + s + " --layer star --witness " + q("pl-next-true.plf") + " " +
              q("star-true.plf"))
              .exit_code == 0);
    CHECK(run("check " + s + " --layer cl --witness " + q("star-simple.plf") + " " +
              q("cl-simple.plf"))
              .exit_code == 0);
}

TEST_CASE("check prints a trace when asked for JSON") {
    RunResult r = run("--json check " + q("two-state-toggle.mmppf.json") + " " +
                      q("pl-next-true.plf"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"value\": true") != std::string::npos);
    CHECK(r.output.find("\"state\"") != std::string::npos);
}

TEST_CASE("translate runs both directions and can emit its grammar") {
    std::string s = q("two-state-toggle.mmppf.json");
    RunResult tr1 = run("translate " + s + " --direction tr1 " + q("pl-next-true.plf"));
    CHECK(tr1.exit_code == 0);
    CHECK(tr1.output.find("meta o1:") != std::string::npos);
    RunResult tr2 = run("translate " + s + " --direction tr2 " + q("star-simple.plf"));
    CHECK(tr2.exit_code == 0);
    CHECK(tr2.output.find("int o1") != std::string::npos);
    RunResult g = run("translate " + s + " --direction tr2 --emit-grammar " + q("star-run.plf"));
    CHECK(g.exit_code == 0);
    CHECK(g.output == testsup::read_file(testsup::corpus_path("interval-collapse.rgtc")));
    // A grammar whose input alphabet misses the formula's tokens cannot derive.
    CHECK(run("translate " + s + " --direction tr2 --grammar " + q("interval-collapse.rgtc") +
              " " + q("star-simple.plf"))
              .exit_code == 6);
}

TEST_CASE("oracle compares the checker against brute force") {
    std::string s = q("two-state-toggle.mmppf.json");
    for (const char* f : {"pl-next-true.plf", "pl-false.plf"}) {
        RunResult r = run("oracle " + s + " " + q(f));
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("check:") != std::string::npos);
        CHECK(r.output.find("oracle:") != std::string::npos);
    }
}

TEST_CASE("format re-prints artifacts canonically") {
    RunResult s = run("format " + q("two-state-toggle.mmppf.json"));
    CHECK(s.exit_code == 0);
    CHECK(s.output == testsup::read_file(testsup::corpus_path("two-state-toggle.mmppf.json")));
    RunResult g = run("format " + q("interval-collapse.rgtc"));
    CHECK(g.exit_code == 0);
    CHECK(g.output == testsup::read_file(testsup::corpus_path("interval-collapse.rgtc")));
    RunResult f = run("format --structure " + q("two-state-toggle.mmppf.json") +
                      " --layer pl " + q("pl-next-true.plf"));
    CHECK(f.exit_code == 0);
    CHECK(f.output.find("obj o1:") != std::string::npos);
}

}  // TEST_SUITE
