#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qeis/cli.hpp"

namespace {

struct Out {
    int rc;
    std::string out, err;
};

Out run(std::vector<std::string> args) {
    args.insert(args.begin(), "qeis");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    int rc = qeis::cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
    return {rc, o.str(), e.str()};
}

}  // namespace

TEST_CASE("local") {
    auto r = run({"local", "--D", "3", "--n", "2", "--ell", "3", "--T", "1,0,1,0", "--p", "2"});
    CHECK(r.rc == 0);
    CHECK(r.out == "{\"case\":\"inert\",\"k\":1,\"Q\":[1,0,1]}\n");
    auto u = run({"local", "--T", "1,0,0,1", "--p", "5"});
    CHECK(u.rc == 0);
    CHECK(u.out.find("\"Q\":[1]") != std::string::npos);
    auto o = run({"local", "--T", "1,0,1,0", "--p", "2", "--oracle"});
    CHECK(o.rc == 0);
    CHECK(o.out.find("\"oracle\":\"agree\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"local", "--D", "4", "--T", "1,0,1,0", "--p", "2"}).rc == 2);
    CHECK(run({"local", "--T", "1,0,1", "--p", "2"}).rc == 2);
    CHECK(run({"local", "--T", "1,0,1,0", "--p", "2", "--n", "4"}).rc == 2);
    CHECK(run({"local", "--T", "2,0,-1,2", "--p", "2"}).rc == 2);
    CHECK(run({"verify", "--suite", "nonsense"}).rc == 2);
    CHECK(run({"expand", "--bound", "20", "--budget", "5"}).rc == 4);
    CHECK(run({"frobnicate"}).rc == 1);
    CHECK(run({"local", "--p", "2"}).rc == 1);
    CHECK(run({"--help"}).rc == 0);
}

TEST_CASE("expand is deterministic") {
    auto a = run({"expand", "--bound", "5", "--workers", "1"});
    auto b = run({"expand", "--bound", "5", "--workers", "3"});
    auto c = run({"expand", "--bound", "5", "--workers", "3", "--format", "csv"});
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(c.out.rfind("ax,ay,bx,by,", 0) == 0);
}

TEST_CASE("lift") {
    auto r = run({"lift", "--ell", "6", "--T", "1,0,1,0"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("\"value\":\"-24\"") != std::string::npos);
    CHECK(r.out.find("\"degree\":8") != std::string::npos);
}

TEST_CASE("verify identities") {
    auto r = run({"verify", "--suite", "identities"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
}
