#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "circind/errors.hpp"

namespace circind {

// Circular distance |k|_n = min(k mod n, n - k mod n). k may be any integer.
int distance_norm(long long k, int n);

// Largest distance class floor(n/2); the full distance range T = {1..max_distance}.
int max_distance(int n);

// Neighborhoods are single 64-bit words, so orders beyond 64 are rejected.
inline constexpr int kMaxOrder = 64;

/// Circulant graph C_n(S) on vertex set Z_n. Vertices i, j are adjacent
/// exactly when the circular distance |j-i|_n lies in the connection set S.
/// Immutable after construction; cheap to copy and safe to share.
class CirculantGraph {
public:
    CirculantGraph(int n, std::span<const int> distances);
    CirculantGraph(int n, std::initializer_list<int> distances);
    CirculantGraph(int n, const std::vector<int>& distances);

    int order() const { return n_; }

    // Sorted, duplicate-free distance list in 1..floor(n/2).
    const std::vector<int>& connection_set() const { return distances_; }

    // Bit s-1 set <=> distance s in the connection set.
    std::uint64_t distance_mask() const { return distance_mask_; }

    bool adjacent(int i, int j) const;

    // Open neighborhood of v as a vertex bit set (bit u <=> u adjacent to v).
    std::uint64_t neighbors(int v) const;

    // All n vertex bits set.
    std::uint64_t full_vertex_mask() const;

    bool is_complete() const;
    bool is_edgeless() const { return distances_.empty(); }

    CirculantGraph complement() const;

    // Image under the distance map s -> |a*s|_n for a unit a of Z_n; always
    // isomorphic to the original graph via v -> a*v.
    CirculantGraph multiplier_image(long long a) const;

    std::string to_string() const;  // "C30(1,3,8)"

    friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

private:
    int n_;
    std::vector<int> distances_;
    std::uint64_t distance_mask_ = 0;
    std::vector<std::uint64_t> adjacency_;

    void build_adjacency();
};

// Builds C_n(S) from a distance bit mask (bit s-1 <=> distance s).
CirculantGraph graph_from_distance_mask(int n, std::uint64_t mask);

/// One orbit of connection sets under the multiplier action of the units of
/// Z_n. The representative is the lexicographically least orbit member.
struct CanonicalClass {
    int n = 0;
    std::vector<int> representative;
    int orbit_size = 0;

    friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

// Units of Z_n in increasing order.
std::vector<int> units_mod(int n);

CanonicalClass canonical_form(const CirculantGraph& g);

// One CanonicalClass per multiplier orbit of subsets of {1..floor(n/2)},
// sorted by representative. Orbit sizes over all classes sum to 2^floor(n/2).
std::vector<CanonicalClass> enumerate_classes(int n);

// Hard cap for enumerate_classes / search sweeps (2^floor(n/2) subsets are
// scanned). Default 40, override with CIRCIND_SEARCH_CAP.
int class_enumeration_cap();

}  // namespace circind
