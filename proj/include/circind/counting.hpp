#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "circind/graph.hpp"

namespace circind {

// Counting engines. Brute sweeps all 2^n subsets and is the ground truth;
// Split branches on a maximum-degree vertex with connected-component
// factorization and memoization; Rooted counts sets through vertex 0 and
// recovers the totals from the divisibility identity i*f_{i-1} = n*f_{i-1,0}.
// Auto selects Split.
enum class Engine { Auto, Brute, Split, Rooted };

std::string_view engine_name(Engine e);
Engine parse_engine(std::string_view name);

/// Face counts (f_{-1}, f_0, ..., f_{d-1}) of the independence complex,
/// where d is the maximum independent-set size. counts[i] = f_{i-1} = number
/// of independent sets of cardinality i; counts[0] = 1 by convention.
struct FVector {
    std::vector<std::int64_t> counts;

    int d() const { return static_cast<int>(counts.size()) - 1; }

    friend bool operator==(const FVector&, const FVector&) = default;
};

// Shape check: nonempty, f_{-1} = 1, every entry strictly positive.
void validate_fvector(const FVector& f);

/// Rooted face counts: counts[i-1] = f_{i-1,0} = number of independent sets
/// of cardinality i that contain vertex 0, for i = 1..d.
struct RootedCounts {
    std::vector<std::int64_t> counts;

    friend bool operator==(const RootedCounts&, const RootedCounts&) = default;
};

// True iff no two distinct vertices of the subset are adjacent.
bool is_independent(const CirculantGraph& g, std::span<const int> vertices);
bool is_independent_mask(const CirculantGraph& g, std::uint64_t subset);

// Full 2^n subset sweep. Ground truth for the other engines; refuses orders
// above the oracle bound (default 26, override with CIRCIND_ORACLE_BOUND).
FVector fvector_oracle(const CirculantGraph& g);
int oracle_order_bound();

FVector fvector(const CirculantGraph& g, Engine engine = Engine::Auto);

RootedCounts rooted_counts(const CirculantGraph& g);

// Maximum clique size; equals the independence number of the complement.
int clique_number(const CirculantGraph& g);

// Number of k-cliques, i.e. entry f_{k-1} of the complement's independence
// complex; 0 when k exceeds the clique number.
std::int64_t cliques_of_size(const CirculantGraph& g, int k);

// Memo table byte budget of the split engine (default 256 MiB, override
// with CIRCIND_MEMO_BUDGET).
std::size_t memo_budget_bytes();

}  // namespace circind
