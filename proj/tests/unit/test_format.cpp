#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "circind/format.hpp"

using namespace circind;

TEST_CASE("connection set parsing") {
    CHECK(parse_connection_set("1,3,8") == std::vector<int>{1, 3, 8});
    CHECK(parse_connection_set("8, 1, 3") == std::vector<int>{1, 3, 8});
    CHECK(parse_connection_set("") == std::vector<int>{});
    CHECK(parse_connection_set("2,2,2") == std::vector<int>{2});

    CHECK(parse_connection_set("1-5") == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(parse_connection_set("1-5^3") == std::vector<int>{1, 2, 4, 5});
    CHECK(parse_connection_set("1-5^2-4") == std::vector<int>{1, 5});
    CHECK(parse_connection_set("1-4,9^2,3") == std::vector<int>{1, 4, 9});

    std::vector<int> expect;
    for (int s = 1; s <= 24; ++s)
        if (s != 5) expect.push_back(s);
    CHECK(parse_connection_set("1-24^5") == expect);

    CHECK_THROWS_AS(parse_connection_set("1,,3"), ValidationError);
    CHECK_THROWS_AS(parse_connection_set("a"), ValidationError);
    CHECK_THROWS_AS(parse_connection_set("5-1"), ValidationError);
    CHECK_THROWS_AS(parse_connection_set("1^2^3"), ValidationError);
}

TEST_CASE("rendering") {
    CHECK(render_set({1, 3, 8}) == "1,3,8");
    CHECK(render_set({}) == "");
    CHECK(render_set_braced({1, 3, 8}) == "{1,3,8}");
    CHECK(render_bracketed({1, 30, 345}) == "[1, 30, 345]");
    CHECK(render_bracketed({1}) == "[1]");
}

TEST_CASE("reference list files") {
    const char* path = "test_reference_sets.tmp";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "1,3,8\n";
        out << "\n";
        out << "2,9,13  # trailing comment\n";
    }
    auto sets = load_reference_sets(path);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == std::vector<int>{1, 3, 8});
    CHECK(sets[1] == std::vector<int>{2, 9, 13});
    std::remove(path);

    CHECK_THROWS_AS(load_reference_sets("does_not_exist.txt"), ValidationError);
}
