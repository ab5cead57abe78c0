#include <doctest.h>

#include "circind/invariants.hpp"
#include "circind/search.hpp"
#include "circind/serialize.hpp"

using namespace circind;

TEST_CASE("search finds nothing on theorem-covered orders") {
    SearchResult n25 = search_zero_chi(25);
    CHECK(n25.records.empty());
    CHECK(n25.summary.subsets_total == 1ull << 12);
    CHECK(n25.summary.zero_classes == 0);

    SearchResult n10 = search_zero_chi(10, 2);
    CHECK(n10.records.empty());
    CHECK(n10.summary.subsets_total == 32);
}

TEST_CASE("search covers the sweep and stays deterministic") {
    SearchResult one = search_zero_chi(16, 1);
    SearchResult two = search_zero_chi(16, 2);
    SearchResult eight = search_zero_chi(16, 8);
    CHECK(one.summary.subsets_total == 256);
    CHECK(one.summary.classes_total == two.summary.classes_total);

    auto render = [](const SearchResult& r) {
        std::string out;
        for (const auto& rec : r.records) out += to_json(rec).dump() + "\n";
        out += to_json(r.summary).dump();
        return out;
    };
    CHECK(render(one) == render(two));
    CHECK(render(one) == render(eight));
}

TEST_CASE("search at n=30 includes the known class") {
    SearchResult result = search_zero_chi(30, 8);
    CHECK(result.summary.subsets_total == 1ull << 15);

    bool found = false;
    for (const auto& rec : result.records) {
        CHECK(reduced_euler(rec.fvector) == 0);
        CHECK(rec.representative ==
              canonical_form(CirculantGraph(30, rec.representative)).representative);
        if (rec.representative == std::vector<int>{1, 3, 8}) {
            found = true;
            CHECK(rec.fvector.counts ==
                  std::vector<std::int64_t>{1, 30, 345, 1990, 6360, 11736, 12600, 7680,
                                            2430, 300});
        }
    }
    CHECK(found);

    // Resume skips everything up to the given representative.
    SearchResult tail = search_zero_chi(30, 8, result.records.front().representative);
    CHECK(tail.summary.classes_total < result.summary.classes_total);
    for (const auto& rec : tail.records)
        CHECK(rec.representative > result.records.front().representative);
}

TEST_CASE("reconciliation matches by orbit membership") {
    SearchResult result = search_zero_chi(30, 8);

    // {4,7,9} is the image of {1,3,8} under the unit 7, so it must match the
    // same class even though the strings differ.
    std::vector<std::vector<int>> table = {{4, 7, 9}};
    ReconcileReport report = cross_reference_table(result.records, table, 30);
    REQUIRE(report.matched.size() == 1);
    CHECK(report.matched[0].representative == std::vector<int>{1, 3, 8});
    CHECK(report.unmatched_table_entries.empty());
    CHECK(report.unmatched_classes.size() == result.records.size() - 1);

    for (const auto& rec : result.records)
        if (rec.representative == std::vector<int>{1, 3, 8})
            CHECK(rec.matched_reference_entry == std::vector<int>{4, 7, 9});

    std::vector<ZeroRecord> empty_records;
    ReconcileReport trivial = cross_reference_table(empty_records, {}, 30);
    CHECK(trivial.matched.empty());
    CHECK(trivial.fully_attributed());

    ReconcileReport missing = cross_reference_table(empty_records, {{1, 3, 8}}, 30);
    CHECK(missing.unmatched_table_entries.size() == 1);
    CHECK_FALSE(missing.fully_attributed());

    std::vector<ZeroRecord> wrong_n = {ZeroRecord{25, {1}, 1, FVector{{1, 25}}, 0, {}}};
    CHECK_THROWS_AS(cross_reference_table(wrong_n, {}, 30), ValidationError);
}

TEST_CASE("zero record serialization round trip") {
    ZeroRecord rec{30, {1, 3, 8}, 4,
                   FVector{{1, 30, 345, 1990, 6360, 11736, 12600, 7680, 2430, 300}}, 0,
                   std::vector<int>{4, 7, 9}};
    auto j = to_json(rec);
    ZeroRecord back = zero_record_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.n == rec.n);
    CHECK(back.representative == rec.representative);
    CHECK(back.orbit_size == rec.orbit_size);
    CHECK(back.fvector == rec.fvector);
    CHECK(back.matched_reference_entry == rec.matched_reference_entry);
}
