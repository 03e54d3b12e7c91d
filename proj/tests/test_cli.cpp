#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "degcut/cli.hpp"
#include "degcut/constructions.hpp"
#include "degcut/graph6.hpp"

using namespace degcut;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("construct ring") {
    auto r = run({"construct", "ring", "--k", "2", "--s", "3"});
    CHECK(r.code == exit_ok);
    CHECK(parse_graph6(r.out).order() == 13);
    CHECK(r.out.back() == '\n');
    auto p = run({"construct", "ring", "--k", "2", "--s", "3", "--perm-seed", "7"});
    CHECK(parse_graph6(p.out).size() == 34);
    CHECK(run({"construct", "ring", "--k", "1", "--s", "3"}).code == exit_usage);
}

TEST_CASE("construct join") {
    auto r = run({"construct", "join", "--k", "1", "--n", "6"});
    CHECK(r.code == exit_ok);
    CHECK(parse_graph6(r.out).size() == 12);
}

TEST_CASE("analyze") {
    auto r = run({"analyze"}, to_graph6(complete_graph(5)) + "\n");
    CHECK(r.code == exit_ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 10);
    CHECK(j["min_degree"] == 4);
    CHECK(j["degeneracy"] == 4);
    CHECK(j["kappa"] == 4);
}

TEST_CASE("find-cut") {
    auto found = run({"find-cut", "--k", "0"}, to_graph6(path_graph(3)) + "\n");
    CHECK(found.code == exit_ok);
    auto none = run({"find-cut", "--k", "1"}, to_graph6(join_extremal(1, 6)) + "\n");
    CHECK(none.code == exit_negative);
    CHECK(nlohmann::json::parse(none.out)["outcome"] == "none");
    auto min = run({"find-cut", "--k", "2", "--minimum", "--quiet"}, to_graph6(cycle_graph(6)) + "\n");
    CHECK(min.out == "found\n");
    auto budget = run({"find-cut", "--k", "2", "--budget", "5"}, to_graph6(join_extremal(2, 10)) + "\n");
    CHECK(budget.code == exit_undecided);
}

TEST_CASE("min-cuts") {
    auto r = run({"min-cuts"}, to_graph6(cycle_graph(4)) + "\n");
    CHECK(r.code == exit_ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kappa"] == 2);
    CHECK(j["cuts"].size() == 2);
    CHECK(run({"min-cuts"}, "Bw\n").code == exit_negative);
}

TEST_CASE("verify") {
    auto r = run({"verify", "thm2", "--n", "5", "--exhaustive"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("{\"theorem\":\"thm2\",\"k\":2,", 0) == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["scanned"] == 1024);
    CHECK(j["hypothesis_hits"] == 1);
    CHECK(j["violations"].empty());
    CHECK(j["exhaustive"] == true);

    auto q = run({"--quiet", "verify", "mindeg", "--k", "1"}, to_graph6(join_extremal(1, 6)) + "\n");
    CHECK(q.out == "PASS\n");

    auto s = run({"verify", "thm3", "--k", "2", "--n", "8", "--sample", "20", "--seed", "3"});
    CHECK(s.code == exit_ok);
    CHECK(nlohmann::json::parse(s.out)["scanned"] == 20);
}

TEST_CASE("verify output is independent of --jobs") {
    auto strip = [](const std::string& text) {
        auto j = nlohmann::json::parse(text);
        j.erase("seconds");
        return j.dump();
    };
    auto a = run({"--jobs", "1", "verify", "thm2", "--n", "6", "--exhaustive", "--min-deg", "3"});
    auto b = run({"--jobs", "4", "verify", "thm2", "--n", "6", "--exhaustive", "--min-deg", "3"});
    CHECK(strip(a.out) == strip(b.out));

    auto e1 = run({"enumerate", "--n", "5", "--min-deg", "2"});
    auto e4 = run({"--jobs", "4", "enumerate", "--n", "5", "--min-deg", "2"});
    CHECK(e1.out == e4.out);
}

TEST_CASE("enumerate") {
    auto r = run({"enumerate", "--n", "5", "--min-deg", "4"});
    CHECK(r.out == "D~{\n"); // K5
    auto iso = run({"enumerate", "--n", "4", "--iso"});
    CHECK(std::count(iso.out.begin(), iso.out.end(), '\n') == 11);
}

TEST_CASE("usage errors") {
    auto r = run({"frobnicate"});
    CHECK(r.code == exit_usage);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"analyze", "--bogus"}).code == exit_usage);
    CHECK(run({"verify", "thm9", "--n", "5", "--exhaustive"}).code == exit_usage);
    CHECK(run({"analyze"}, "A!\n").code == exit_usage);
    CHECK(run({"analyze", "--input", "/nonexistent/file.g6"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
}
