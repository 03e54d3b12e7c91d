#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "degcut/errors.hpp"
#include "degcut/graph6.hpp"

using namespace degcut;

TEST_CASE("graph6 fixed vectors") {
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("A?") == empty_graph(2));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(empty_graph(2)) == "A?");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(empty_graph(0)) == "?");
    CHECK(parse_graph6("?") == empty_graph(0));
    CHECK(parse_graph6("Bw\n") == complete_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(0, 62);
    std::uniform_real_distribution<double> density(0, 1);
    for (int i = 0; i < 10000; ++i) {
        auto g = random_graph(order(rng), density(rng), rng);
        auto text = to_graph6(g);
        REQUIRE(parse_graph6(text) == g);
        REQUIRE(to_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("graph6 long form") {
    std::mt19937_64 rng(5);
    for (int n : {63, 64, 100, 200, 512}) {
        auto g = random_graph(n, 0.1, rng);
        auto text = to_graph6(g);
        CHECK(text[0] == '~');
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 errors carry byte offsets") {
    auto offset_of = [](const std::string& text) -> long {
        try {
            parse_graph6(text);
        } catch (const parse_error& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(" A") == 0);
    CHECK(offset_of("B") == 1);      // truncated payload
    CHECK(offset_of("A\x7f") == 1);  // byte above '~'
    CHECK(offset_of("A`") == 1);     // nonzero padding
    CHECK(offset_of("A_?") == 2);    // trailing data
}

TEST_CASE("graph6 reader reports line numbers") {
    std::istringstream in("A_\n\nBw\nA!\n");
    Graph6Reader reader(in);
    CHECK(reader.next() == complete_graph(2));
    CHECK(reader.next() == complete_graph(3));
    try {
        reader.next();
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 4);
        CHECK(e.offset() == 1);
    }

    std::istringstream empty("");
    Graph6Reader none(empty);
    CHECK_FALSE(none.next().has_value());
}
