#include "circind/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace circind {

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoi(v);
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

int distance_norm(long long k, int n) {
    if (n < 2) throw ValidationError("invalid order n=" + std::to_string(n) + ", need n >= 2");
    long long r = k % n;
    if (r < 0) r += n;
    return static_cast<int>(std::min(r, n - r));
}

int max_distance(int n) {
    if (n < 2) throw ValidationError("invalid order n=" + std::to_string(n) + ", need n >= 2");
    return n / 2;
}

CirculantGraph::CirculantGraph(int n, std::span<const int> distances) : n_(n) {
    if (n < 2) throw ValidationError("invalid order n=" + std::to_string(n) + ", need n >= 2");
    if (n > kMaxOrder)
        throw CapacityError("order n=" + std::to_string(n) + " exceeds the bit-set width " +
                            std::to_string(kMaxOrder));
    const int t = n / 2;
    for (int s : distances) {
        if (s < 1 || s > t)
            throw ValidationError("distance " + std::to_string(s) + " out of range 1.." +
                                  std::to_string(t) + " for n=" + std::to_string(n));
        distance_mask_ |= 1ull << (s - 1);
    }
    for (int s = 1; s <= t; ++s)
        if (distance_mask_ >> (s - 1) & 1) distances_.push_back(s);
    build_adjacency();
}

CirculantGraph::CirculantGraph(int n, std::initializer_list<int> distances)
    : CirculantGraph(n, std::span<const int>(distances.begin(), distances.size())) {}

CirculantGraph::CirculantGraph(int n, const std::vector<int>& distances)
    : CirculantGraph(n, std::span<const int>(distances)) {}

void CirculantGraph::build_adjacency() {
    adjacency_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
        std::uint64_t row = 0;
        for (int s : distances_) {
            row |= 1ull << ((v + s) % n_);
            row |= 1ull << ((v - s + n_) % n_);
        }
        adjacency_[v] = row;
    }
}

bool CirculantGraph::adjacent(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw ValidationError("vertex index out of range 0.." + std::to_string(n_ - 1));
    return (adjacency_[i] >> j) & 1;
}

std::uint64_t CirculantGraph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw ValidationError("vertex index out of range 0.." + std::to_string(n_ - 1));
    return adjacency_[v];
}

std::uint64_t CirculantGraph::full_vertex_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

bool CirculantGraph::is_complete() const {
    return static_cast<int>(distances_.size()) == n_ / 2;
}

CirculantGraph CirculantGraph::complement() const {
    const int t = n_ / 2;
    std::uint64_t all = t == 64 ? ~0ull : (1ull << t) - 1;
    return graph_from_distance_mask(n_, all & ~distance_mask_);
}

CirculantGraph CirculantGraph::multiplier_image(long long a) const {
    long long r = a % n_;
    if (r < 0) r += n_;
    if (gcd_ll(r, n_) != 1)
        throw ValidationError("a=" + std::to_string(a) + " is not a unit mod " +
                              std::to_string(n_));
    std::uint64_t mask = 0;
    for (int s : distances_) mask |= 1ull << (distance_norm(r * s, n_) - 1);
    return graph_from_distance_mask(n_, mask);
}

std::string CirculantGraph::to_string() const {
    std::ostringstream out;
    out << 'C' << n_ << '(';
    for (std::size_t i = 0; i < distances_.size(); ++i) {
        if (i) out << ',';
        out << distances_[i];
    }
    out << ')';
    return out.str();
}

CirculantGraph graph_from_distance_mask(int n, std::uint64_t mask) {
    std::vector<int> distances;
    distances.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        int b = std::countr_zero(mask);
        distances.push_back(b + 1);
        mask &= mask - 1;
    }
    return CirculantGraph(n, distances);
}

std::vector<int> units_mod(int n) {
    if (n < 2) throw ValidationError("invalid order n=" + std::to_string(n) + ", need n >= 2");
    std::vector<int> units;
    for (int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) units.push_back(a);
    return units;
}

namespace {

// Distance-set image under multiplication by the unit a, as a mask.
std::uint64_t image_mask(std::uint64_t mask, int a, int n) {
    std::uint64_t out = 0;
    while (mask) {
        int s = std::countr_zero(mask) + 1;
        out |= 1ull << (distance_norm(static_cast<long long>(a) * s, n) - 1);
        mask &= mask - 1;
    }
    return out;
}

std::vector<int> mask_to_set(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

CanonicalClass canonical_form(const CirculantGraph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> images;
    for (int a : units_mod(n)) images.push_back(image_mask(g.distance_mask(), a, n));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());

    // Orbit members share cardinality, so elementwise comparison of the
    // sorted distance lists picks the lexicographic minimum.
    std::vector<int> best = mask_to_set(images.front());
    for (std::size_t i = 1; i < images.size(); ++i) {
        std::vector<int> cand = mask_to_set(images[i]);
        if (cand < best) best = std::move(cand);
    }
    return CanonicalClass{n, std::move(best), static_cast<int>(images.size())};
}

std::vector<CanonicalClass> enumerate_classes(int n) {
    if (n < 2) throw ValidationError("invalid order n=" + std::to_string(n) + ", need n >= 2");
    if (n > class_enumeration_cap())
        throw CapacityError("order n=" + std::to_string(n) +
                            " exceeds the class enumeration cap " +
                            std::to_string(class_enumeration_cap()));
    const int t = n / 2;
    const std::uint64_t total = 1ull << t;
    const std::vector<int> units = units_mod(n);

    std::vector<bool> seen(total, false);
    std::vector<CanonicalClass> classes;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (seen[mask]) continue;
        std::vector<std::uint64_t> images;
        images.reserve(units.size());
        for (int a : units) images.push_back(image_mask(mask, a, n));
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        for (std::uint64_t m : images) seen[m] = true;

        std::vector<int> best = mask_to_set(images.front());
        for (std::size_t i = 1; i < images.size(); ++i) {
            std::vector<int> cand = mask_to_set(images[i]);
            if (cand < best) best = std::move(cand);
        }
        classes.push_back(CanonicalClass{n, std::move(best), static_cast<int>(images.size())});
    }
    std::sort(classes.begin(), classes.end(),
              [](const CanonicalClass& a, const CanonicalClass& b) {
                  return a.representative < b.representative;
              });
    return classes;
}

int class_enumeration_cap() { return env_int("CIRCIND_SEARCH_CAP", 40); }

}  // namespace circind
