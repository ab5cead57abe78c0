#include "circind/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "circind/invariants.hpp"
#include "circind/parallel.hpp"

namespace circind {

SearchResult search_zero_chi(int n, int workers,
                             const std::optional<std::vector<int>>& resume_after) {
    auto started = std::chrono::steady_clock::now();
    std::vector<CanonicalClass> classes = enumerate_classes(n);
    const bool full_sweep = !resume_after.has_value();
    if (resume_after)
        std::erase_if(classes, [&](const CanonicalClass& c) {
            return c.representative <= *resume_after;
        });

    std::vector<std::int64_t> chi(classes.size(), 0);
    parallel_for_index(classes.size(), workers, [&](std::size_t i) {
        CirculantGraph g(n, classes[i].representative);
        chi[i] = reduced_euler(fvector(g, Engine::Auto));
    });

    SearchResult result;
    result.summary.n = n;
    result.summary.classes_total = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        result.summary.subsets_total += static_cast<std::uint64_t>(classes[i].orbit_size);
        if (chi[i] != 0 || classes[i].representative.empty()) continue;

        CirculantGraph g(n, classes[i].representative);
        FVector f = fvector(g, Engine::Split);
        // Independent confirmation: oracle where it fits, else the rooted
        // engine, which reaches the counts through the divisibility identity.
        FVector confirm = n <= oracle_order_bound() ? fvector(g, Engine::Brute)
                                                    : fvector(g, Engine::Rooted);
        if (f != confirm || reduced_euler(confirm) != 0)
            throw InternalError("engines disagree on zero class of " + g.to_string());
        result.records.push_back(ZeroRecord{n, classes[i].representative,
                                            classes[i].orbit_size, std::move(f), 0,
                                            std::nullopt});
    }
    result.summary.zero_classes = result.records.size();
    if (!classes.empty()) result.summary.last_class = classes.back().representative;

    if (full_sweep) {
        const std::uint64_t expected = 1ull << max_distance(n);
        if (result.summary.subsets_total != expected)
            throw InternalError("class sweep covered " +
                                std::to_string(result.summary.subsets_total) +
                                " subsets, expected " + std::to_string(expected));
    }
    result.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

bool ReconcileReport::fully_attributed() const {
    if (!unmatched_table_entries.empty()) return false;
    for (const auto& extra : unmatched_classes)
        if (extra.same_fvector_entries.empty()) return false;
    return true;
}

ReconcileReport cross_reference_table(std::vector<ZeroRecord>& records,
                                      const std::vector<std::vector<int>>& table_entries,
                                      int n) {
    for (const auto& r : records)
        if (r.n != n)
            throw ValidationError("record for n=" + std::to_string(r.n) +
                                  " mixed into a reconciliation at n=" + std::to_string(n));

    ReconcileReport report;
    report.n = n;

    std::map<std::vector<int>, std::size_t> by_representative;
    for (std::size_t i = 0; i < records.size(); ++i)
        by_representative[records[i].representative] = i;

    std::vector<bool> covered(records.size(), false);
    for (const auto& entry : table_entries) {
        CanonicalClass canon = canonical_form(CirculantGraph(n, entry));
        auto it = by_representative.find(canon.representative);
        if (it == by_representative.end()) {
            report.unmatched_table_entries.push_back(entry);
            continue;
        }
        ZeroRecord& rec = records[it->second];
        covered[it->second] = true;
        if (!rec.matched_reference_entry) rec.matched_reference_entry = entry;
        report.matched.push_back(ReconcileMatch{entry, rec.representative, rec.orbit_size});
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        if (covered[i]) continue;
        UnmatchedClass extra;
        extra.representative = records[i].representative;
        for (const auto& entry : table_entries) {
            FVector entry_f = fvector(CirculantGraph(n, entry));
            if (entry_f == records[i].fvector) extra.same_fvector_entries.push_back(entry);
        }
        report.unmatched_classes.push_back(std::move(extra));
    }
    return report;
}

}  // namespace circind
