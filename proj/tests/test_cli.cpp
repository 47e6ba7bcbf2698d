#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "scr/io.hpp"

using namespace scr;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "scr_cli_tests";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string h3_path() { return write_temp("h3.json", algebra_to_json(fx::H3()).dump()); }

}  // namespace

TEST_CASE("cli check refutes excluded middle on the three-chain") {
    Run r = run({"check", "--algebra", h3_path(), "--rule", "/ p1 | (p1 -> false)"});
    CHECK(r.code == 1);
    CHECK(r.out.find("refuted") != std::string::npos);
    CHECK(r.out.find("V(p1) = 1") != std::string::npos);
    Run j = run({"check", "--algebra", h3_path(), "--rule", "/ p1 | (p1 -> false)", "--json"});
    CHECK(Json::parse(j.out)["witness"]["p1"] == 1);
    Run v = run({"check", "--algebra", h3_path(), "--rule", "p1 / p1"});
    CHECK(v.code == 0);
    Run fixed = run({"check", "--algebra", h3_path(), "--rule", "/ p1 | (p1 -> false)", "--valuation", "p1=2"});
    CHECK(fixed.code == 0);
}

TEST_CASE("cli check on a frame") {
    std::string f = write_temp("chain.json", frame_to_json(fx::chain2()).dump());
    Run r = run({"check", "--frame", f, "--rule", "/ p1 | (p1 -> false)"});
    CHECK(r.code == 1);
}

TEST_CASE("cli translate") {
    Run r = run({"translate", "--from", "si", "p1 -> p2"});
    CHECK(r.code == 0);
    CHECK(r.out == "[](~[]p1 | []p2)\n");
}

TEST_CASE("cli verify") {
    Run r = run({"verify", "--suite", "skeleton", "--max-size", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("skeleton") != std::string::npos);
    Run d = run({"verify", "--suite", "duality", "--max-size", "4", "--json"});
    CHECK(d.code == 0);
    CHECK(Json::parse(d.out)[0]["failed"] == 0);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("cli usage and input errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "--algebra", "/nonexistent.json", "--rule", "/ p1"}).code == 2);
    std::string bad = write_temp("bad.json", "{not json");
    Run r = run({"check", "--algebra", bad, "--rule", "/ p1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed JSON") != std::string::npos);
    Json broken = algebra_to_json(fx::H3());
    broken["imp"][1][0] = 1;
    CHECK(run({"check", "--algebra", write_temp("broken.json", broken.dump()), "--rule", "/ p1"}).code == 2);
    CHECK(run({"parse", "p1 &"}).code == 2);
    CHECK(run({"check", "--algebra", h3_path(), "--rule", "/ []p1"}).code == 2);
}

TEST_CASE("cli parse, enumerate, scr, rewrite, skeleton, filtrate") {
    Run p = run({"parse", "--sig", "md", "<>p1"});
    CHECK(p.out == "~[]~p1\n");
    Run e = run({"enumerate", "--kind", "POSET", "--size", "3"});
    CHECK(e.code == 0);
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 5);

    std::string h2 = write_temp("h2.json", algebra_to_json(fx::H2()).dump());
    Run s = run({"scr", "--algebra", h2, "--target", h3_path()});
    CHECK(s.code == 1);
    CHECK(s.out.find("embedding: 0 2") != std::string::npos);
    Run s2 = run({"scr", "--algebra", h3_path(), "--target", h2});
    CHECK(s2.code == 0);

    Run w = run({"rewrite", "--rule", "/ p1 | (p1 -> false)", "--bound", "3"});
    CHECK(w.code == 0);
    CHECK(w.out.find("1 stable canonical rule within bound 3") != std::string::npos);

    std::string c2 = write_temp("c2.json", algebra_to_json(fx::C2()).dump());
    Run k = run({"skeleton", "--algebra", c2});
    CHECK(k.code == 0);
    Run g = run({"skeleton", "--algebra", c2, "--rule", "/ p1 | (p1 -> false)", "--json"});
    CHECK(g.code == 0);
    CHECK(Json::parse(g.out)["agree"] == true);

    Run f = run({"filtrate", "--algebra", h3_path(), "--method", "SI", "--theta", "p1 | (p1 -> false)", "--valuation",
                 "p1=1", "--json"});
    CHECK(f.code == 0);
    Json fj = Json::parse(f.out);
    CHECK(fj["size"] == 3);
    CHECK(fj["domains"]["imp"].size() == 1);
}
