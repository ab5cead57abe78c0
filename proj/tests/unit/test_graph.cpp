#include <doctest.h>

#include <numeric>
#include <random>

#include "circind/graph.hpp"

using namespace circind;

TEST_CASE("distance norm") {
    CHECK(distance_norm(7, 10) == 3);
    CHECK(distance_norm(5, 10) == 5);
    CHECK(distance_norm(56, 30) == 4);
    CHECK(distance_norm(0, 6) == 0);
    CHECK(distance_norm(-1, 6) == 1);
    CHECK(distance_norm(-7, 6) == 1);
    CHECK_THROWS_AS(distance_norm(3, 1), ValidationError);
}

TEST_CASE("construction normalizes and validates") {
    CirculantGraph g(30, {8, 1, 3});
    CHECK(g.connection_set() == std::vector<int>{1, 3, 8});
    CHECK(g.to_string() == "C30(1,3,8)");

    CirculantGraph edgeless(6, {});
    CHECK(edgeless.is_edgeless());
    CHECK(edgeless.connection_set().empty());

    CirculantGraph dup(10, {2, 2, 3});
    CHECK(dup.connection_set() == std::vector<int>{2, 3});

    CHECK_THROWS_WITH_AS(CirculantGraph(5, {3}), doctest::Contains("3"), ValidationError);
    CHECK_THROWS_AS(CirculantGraph(1, {}), ValidationError);
    CHECK_THROWS_AS(CirculantGraph(0, {}), ValidationError);
    CHECK_THROWS_AS(CirculantGraph(65, {}), CapacityError);
}

TEST_CASE("adjacency") {
    CirculantGraph g(30, {1, 3, 8});
    CHECK(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(7, 7));
    CHECK(g.adjacent(29, 0));

    CirculantGraph diam(10, {5});
    CHECK(diam.adjacent(2, 7));

    CHECK_THROWS_AS(g.adjacent(0, 30), ValidationError);
    CHECK_THROWS_AS(g.adjacent(-1, 0), ValidationError);
}

TEST_CASE("adjacency is symmetric and rotation invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 20);
        std::uint64_t mask = rng() & ((1ull << (n / 2)) - 1);
        CirculantGraph g = graph_from_distance_mask(n, mask);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CHECK(g.adjacent(i, j) == g.adjacent(j, i));
                CHECK(g.adjacent(i, j) == g.adjacent((i + 1) % n, (j + 1) % n));
            }
    }
}

TEST_CASE("complement") {
    CHECK(CirculantGraph(5, {1}).complement() == CirculantGraph(5, {2}));
    CHECK(CirculantGraph(6, {1, 2, 3}).complement() == CirculantGraph(6, {}));

    std::vector<int> big;
    for (int s = 1; s <= 24; ++s)
        if (s != 5) big.push_back(s);
    CHECK(CirculantGraph(50, big).complement() == CirculantGraph(50, {5, 25}));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 30);
        std::uint64_t mask = rng() & ((1ull << (n / 2)) - 1);
        CirculantGraph g = graph_from_distance_mask(n, mask);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("multiplier image") {
    CHECK(CirculantGraph(30, {1, 3, 8}).multiplier_image(7) ==
          CirculantGraph(30, {4, 7, 9}));
    CHECK(CirculantGraph(5, {2}).multiplier_image(3) == CirculantGraph(5, {1}));

    CirculantGraph g(30, {1, 3, 8});
    CHECK(g.multiplier_image(1) == g);
    CHECK_THROWS_AS(g.multiplier_image(6), ValidationError);

    // Unit multiplication permutes distance classes, so sizes are preserved.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 30);
        std::uint64_t mask = rng() & ((1ull << (n / 2)) - 1);
        CirculantGraph h = graph_from_distance_mask(n, mask);
        std::vector<int> units = units_mod(n);
        int a = units[rng() % units.size()];
        CHECK(h.multiplier_image(a).connection_set().size() == h.connection_set().size());
    }
}

TEST_CASE("canonical form") {
    CanonicalClass c = canonical_form(CirculantGraph(5, {2}));
    CHECK(c.representative == std::vector<int>{1});
    CHECK(c.orbit_size == 2);

    CanonicalClass complete = canonical_form(CirculantGraph(6, {1, 2, 3}));
    CHECK(complete.representative == std::vector<int>{1, 2, 3});
    CHECK(complete.orbit_size == 1);

    CHECK(canonical_form(CirculantGraph(30, {4, 7, 9})).representative ==
          canonical_form(CirculantGraph(30, {1, 3, 8})).representative);

    // Idempotent on representatives, constant on orbits.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 30);
        std::uint64_t mask = rng() & ((1ull << (n / 2)) - 1);
        CirculantGraph g = graph_from_distance_mask(n, mask);
        CanonicalClass canon = canonical_form(g);
        CHECK(canonical_form(CirculantGraph(n, canon.representative)).representative ==
              canon.representative);
        std::vector<int> units = units_mod(n);
        int a = units[rng() % units.size()];
        CanonicalClass moved = canonical_form(g.multiplier_image(a));
        CHECK(moved.representative == canon.representative);
        CHECK(moved.orbit_size == canon.orbit_size);
    }
}

TEST_CASE("class enumeration") {
    std::vector<CanonicalClass> n5 = enumerate_classes(5);
    REQUIRE(n5.size() == 3);
    CHECK(n5[0].representative.empty());
    CHECK(n5[1].representative == std::vector<int>{1});
    CHECK(n5[1].orbit_size == 2);
    CHECK(n5[2].representative == std::vector<int>{1, 2});

    std::vector<CanonicalClass> n4 = enumerate_classes(4);
    REQUIRE(n4.size() == 4);  // units {1,3} fix both distances

    std::vector<CanonicalClass> n2 = enumerate_classes(2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0].representative.empty());
    CHECK(n2[1].representative == std::vector<int>{1});

    CHECK_THROWS_AS(enumerate_classes(41), CapacityError);

    for (int n = 2; n <= 16; ++n) {
        std::vector<CanonicalClass> classes = enumerate_classes(n);
        std::uint64_t covered = 0;
        int phi = static_cast<int>(units_mod(n).size());
        for (const auto& c : classes) {
            covered += static_cast<std::uint64_t>(c.orbit_size);
            CHECK(phi % c.orbit_size == 0);
        }
        CHECK(covered == 1ull << (n / 2));
        CHECK(std::is_sorted(classes.begin(), classes.end(),
                             [](const CanonicalClass& a, const CanonicalClass& b) {
                                 return a.representative < b.representative;
                             }));
    }
}
