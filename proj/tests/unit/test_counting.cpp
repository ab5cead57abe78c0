#include <doctest.h>

#include <random>

#include "circind/checked.hpp"
#include "circind/counting.hpp"
#include "circind/invariants.hpp"

using namespace circind;

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("independence test") {
    CirculantGraph c5(5, {1});
    CHECK(is_independent(c5, std::vector<int>{0, 2}));
    CHECK_FALSE(is_independent(c5, std::vector<int>{0, 4}));
    CHECK(is_independent(c5, std::vector<int>{}));
    CHECK(is_independent(c5, std::vector<int>{3}));
    CHECK_THROWS_AS(is_independent(c5, std::vector<int>{5}), ValidationError);

    // Agreement with pairwise adjacency on random subsets.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 16);
        CirculantGraph g = graph_from_distance_mask(n, rng() & ((1ull << (n / 2)) - 1));
        std::uint64_t subset = rng() & g.full_vertex_mask();
        bool expect = true;
        for (int i = 0; i < n && expect; ++i)
            for (int j = i + 1; j < n && expect; ++j)
                if ((subset >> i & 1) && (subset >> j & 1) && g.adjacent(i, j))
                    expect = false;
        CHECK(is_independent_mask(g, subset) == expect);
    }
}

TEST_CASE("oracle f-vectors") {
    CHECK(fvector_oracle(CirculantGraph(4, {1})).counts ==
          std::vector<std::int64_t>{1, 4, 2});
    CHECK(fvector_oracle(CirculantGraph(5, {1})).counts ==
          std::vector<std::int64_t>{1, 5, 5});
    CHECK(fvector_oracle(CirculantGraph(6, {1, 2, 3})).counts ==
          std::vector<std::int64_t>{1, 6});
    CHECK_THROWS_AS(fvector_oracle(CirculantGraph(27, {1})), CapacityError);
}

TEST_CASE("split engine matches frozen values") {
    CHECK(fvector(CirculantGraph(30, {1, 3, 8})).counts ==
          std::vector<std::int64_t>{1, 30, 345, 1990, 6360, 11736, 12600, 7680, 2430, 300});
    CHECK(fvector(CirculantGraph(3, {})).counts == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(fvector(CirculantGraph(10, {5})).counts ==
          std::vector<std::int64_t>{1, 10, 40, 80, 80, 32});
}

TEST_CASE("closed forms: complete and edgeless") {
    for (int n = 2; n <= 20; ++n) {
        std::vector<int> all;
        for (int s = 1; s <= n / 2; ++s) all.push_back(s);
        CHECK(fvector(CirculantGraph(n, all)).counts == std::vector<std::int64_t>{1, n});

        FVector empty = fvector(CirculantGraph(n, {}));
        REQUIRE(empty.d() == n);
        for (int i = 0; i <= n; ++i) CHECK(empty.counts[i] == binom(n, i));
    }
}

TEST_CASE("engines agree") {
    for (int n = 2; n <= 12; ++n)
        for (std::uint64_t mask = 0; mask < (1ull << (n / 2)); ++mask) {
            CirculantGraph g = graph_from_distance_mask(n, mask);
            FVector expect = fvector_oracle(g);
            CHECK(fvector(g, Engine::Split) == expect);
            CHECK(fvector(g, Engine::Rooted) == expect);
            CHECK(fvector(g, Engine::Auto) == expect);
        }

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 13 + static_cast<int>(rng() % 8);  // 13..20
        CirculantGraph g = graph_from_distance_mask(n, rng() & ((1ull << (n / 2)) - 1));
        FVector expect = fvector_oracle(g);
        CHECK(fvector(g, Engine::Split) == expect);
        CHECK(fvector(g, Engine::Rooted) == expect);
    }
}

TEST_CASE("f-vector is a multiplier invariant") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 19);
        CirculantGraph g = graph_from_distance_mask(n, rng() & ((1ull << (n / 2)) - 1));
        std::vector<int> units = units_mod(n);
        int a = units[rng() % units.size()];
        CHECK(fvector(g) == fvector(g.multiplier_image(a)));
    }
}

TEST_CASE("rooted counts") {
    CHECK(rooted_counts(CirculantGraph(5, {1})).counts == std::vector<std::int64_t>{1, 2});
    CHECK(rooted_counts(CirculantGraph(6, {1, 2, 3})).counts ==
          std::vector<std::int64_t>{1});
    CHECK(rooted_counts(CirculantGraph(4, {1})).counts == std::vector<std::int64_t>{1, 1});

    // i*f_{i-1} = n*f_{i-1,0}, exhaustively at small orders.
    for (int n = 2; n <= 12; ++n)
        for (std::uint64_t mask = 0; mask < (1ull << (n / 2)); ++mask) {
            CirculantGraph g = graph_from_distance_mask(n, mask);
            FVector f = fvector(g, Engine::Split);
            RootedCounts rooted = rooted_counts(g);
            REQUIRE(static_cast<int>(rooted.counts.size()) == f.d());
            for (int i = 1; i <= f.d(); ++i)
                CHECK(static_cast<std::int64_t>(i) * f.counts[i] ==
                      static_cast<std::int64_t>(n) * rooted.counts[i - 1]);
        }
}

TEST_CASE("clique numbers") {
    CHECK(clique_number(CirculantGraph(6, {1, 2, 3})) == 6);
    CHECK(clique_number(CirculantGraph(6, {2})) == 3);
    CHECK(clique_number(CirculantGraph(10, {2, 4})) == 5);
    CHECK(clique_number(CirculantGraph(7, {1})) == 2);
}

TEST_CASE("clique counts by size") {
    CHECK(cliques_of_size(CirculantGraph(6, {2}), 4) == 0);

    std::vector<int> all9;
    for (int s = 1; s <= 9; ++s) all9.push_back(s);
    CHECK(cliques_of_size(CirculantGraph(18, all9), 9) == 48620);
    CHECK(48620 % 3 == 2);

    CHECK_THROWS_AS(cliques_of_size(CirculantGraph(6, {2}), 0), ValidationError);
    CHECK_THROWS_AS(cliques_of_size(CirculantGraph(6, {2}), 7), ValidationError);

    // Complement duality: k-cliques of g are the k-faces of the complement's
    // independence complex.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 15);
        CirculantGraph g = graph_from_distance_mask(n, rng() & ((1ull << (n / 2)) - 1));
        FVector cf = fvector(g.complement());
        for (int k = 1; k <= n; ++k)
            CHECK(cliques_of_size(g, k) == (k <= cf.d() ? cf.counts[k] : 0));
    }
}

TEST_CASE("overflow detection") {
    // Independence polynomial of the edgeless order-64 graph evaluated at 3
    // needs 4^64; the checked arithmetic must refuse rather than wrap.
    IndependencePolynomial poly = independence_polynomial(CirculantGraph(64, {}));
    CHECK_THROWS_AS(poly.evaluate(3), ArithmeticError);
    CHECK(poly.evaluate(-1) == 0);  // simplex
    CHECK(checked_mul(1ll << 32, 1ll << 30) == (1ll << 62));
    CHECK_THROWS_AS(checked_mul(1ll << 32, 1ll << 32), ArithmeticError);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), ArithmeticError);
}
