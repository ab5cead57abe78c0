#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "circind/counting.hpp"

namespace circind {

/// One multiplier class whose independence complex has vanishing reduced
/// Euler characteristic.
struct ZeroRecord {
    int n = 0;
    std::vector<int> representative;
    int orbit_size = 0;
    FVector fvector;
    std::int64_t chi = 0;
    std::optional<std::vector<int>> matched_reference_entry;
};

struct SearchSummary {
    int format_version = 1;
    int n = 0;
    std::uint64_t classes_total = 0;
    std::uint64_t subsets_total = 0;  // sum of orbit sizes over visited classes
    std::uint64_t zero_classes = 0;
    std::vector<int> last_class;      // representative of the final class processed
    double wall_seconds = 0.0;        // excluded from structured output
};

struct SearchResult {
    std::vector<ZeroRecord> records;
    SearchSummary summary;
};

// Sweeps every multiplier class of connection sets for order n and reports
// the classes with chi~ = 0, in lexicographic order of representative. The
// empty class is excluded from the records (its complex is a simplex) but
// counted in the summary. Every emitted record is confirmed by a second,
// independent engine. Output does not depend on worker count. resume_after
// skips all classes with representative <= the given set.
SearchResult search_zero_chi(int n, int workers = 1,
                             const std::optional<std::vector<int>>& resume_after = std::nullopt);

struct ReconcileMatch {
    std::vector<int> table_entry;
    std::vector<int> representative;
    int orbit_size = 0;
};

// A found class covering no reference entry; same_fvector_entries lists the
// reference entries sharing its f-vector (multiplier dedup may be finer
// than graph isomorphism, so these are the candidate duplicates).
struct UnmatchedClass {
    std::vector<int> representative;
    std::vector<std::vector<int>> same_fvector_entries;
};

struct ReconcileReport {
    int n = 0;
    std::vector<ReconcileMatch> matched;
    std::vector<std::vector<int>> unmatched_table_entries;
    std::vector<UnmatchedClass> unmatched_classes;

    // True when every reference entry is covered and every extra class is
    // annotated with at least one same-f-vector reference entry.
    bool fully_attributed() const;
};

// Maps each reference entry to the found class containing it (membership by
// canonical form, never by textual equality) and annotates the records'
// matched_reference_entry fields in place.
ReconcileReport cross_reference_table(std::vector<ZeroRecord>& records,
                                      const std::vector<std::vector<int>>& table_entries,
                                      int n);

}  // namespace circind
