#include "circind/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "circind/checked.hpp"

namespace circind {

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoi(v);
}

// Size-indexed count polynomial: poly[i] = number of independent sets of
// cardinality i in the subgraph under consideration.
using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
    return out;
}

// a += x^shift * b
void poly_add_shifted(Poly& a, const Poly& b, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = checked_add(a[i + shift], b[i]);
}

// (1+x)^k by the Pascal recurrence; exact with overflow checks.
Poly binomial_poly(int k) {
    Poly row{1};
    for (int step = 0; step < k; ++step) {
        Poly next(row.size() + 1, 0);
        next[0] = 1;
        for (std::size_t i = 1; i < row.size(); ++i)
            next[i] = checked_add(row[i - 1], row[i]);
        next[row.size()] = 1;
        row = std::move(next);
    }
    return row;
}

// Branch-and-factor counter over residual vertex masks of a fixed graph.
// Memoizes per connected component; insertion stops once the configured
// byte budget is exhausted (results stay exact, only reuse degrades).
class SplitCounter {
public:
    explicit SplitCounter(const CirculantGraph& g) : budget_(memo_budget_bytes()) {
        adj_.reserve(g.order());
        for (int v = 0; v < g.order(); ++v) adj_.push_back(g.neighbors(v));
    }

    Poly count(std::uint64_t mask) {
        if (mask == 0) return Poly{1};
        if (edgeless(mask)) return binomial_poly(std::popcount(mask));

        Poly result{1};
        std::uint64_t rest = mask;
        int singletons = 0;
        while (rest) {
            std::uint64_t comp = component_of(rest, std::countr_zero(rest));
            rest &= ~comp;
            if (std::popcount(comp) == 1) {
                ++singletons;
                continue;
            }
            result = poly_mul(result, count_component(comp));
        }
        if (singletons) result = poly_mul(result, binomial_poly(singletons));
        return result;
    }

private:
    bool edgeless(std::uint64_t mask) const {
        for (std::uint64_t m = mask; m; m &= m - 1)
            if (adj_[std::countr_zero(m)] & mask) return false;
        return true;
    }

    std::uint64_t component_of(std::uint64_t mask, int start) const {
        std::uint64_t comp = 1ull << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t grow = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                grow |= adj_[std::countr_zero(m)];
            frontier = grow & mask & ~comp;
            comp |= frontier;
        }
        return comp;
    }

    Poly count_component(std::uint64_t mask) {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

        // Branch vertex: maximum residual degree, lowest index on ties.
        int best = -1, best_deg = -1;
        for (std::uint64_t m = mask; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int deg = std::popcount(adj_[v] & mask);
            if (deg > best_deg) {
                best_deg = deg;
                best = v;
            }
        }

        Poly without = count(mask & ~(1ull << best));
        Poly with = count(mask & ~(adj_[best] | (1ull << best)));
        poly_add_shifted(without, with, 1);

        std::size_t entry_bytes = 64 + 8 * without.size();
        if (memo_bytes_ + entry_bytes <= budget_) {
            memo_bytes_ += entry_bytes;
            memo_.emplace(mask, without);
        }
        return without;
    }

    std::vector<std::uint64_t> adj_;
    std::unordered_map<std::uint64_t, Poly> memo_;
    std::size_t memo_bytes_ = 0;
    std::size_t budget_;
};

void trim_trailing_zeros(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

FVector fvector_split(const CirculantGraph& g) {
    SplitCounter counter(g);
    Poly p = counter.count(g.full_vertex_mask());
    trim_trailing_zeros(p);
    FVector f{std::move(p)};
    validate_fvector(f);
    return f;
}

FVector fvector_rooted(const CirculantGraph& g) {
    const int n = g.order();
    RootedCounts rooted = rooted_counts(g);
    FVector f;
    f.counts.reserve(rooted.counts.size() + 1);
    f.counts.push_back(1);
    for (std::size_t idx = 0; idx < rooted.counts.size(); ++idx) {
        std::int64_t i = static_cast<std::int64_t>(idx) + 1;
        std::int64_t total = checked_mul(static_cast<std::int64_t>(n), rooted.counts[idx]);
        if (total % i != 0)
            throw InternalError("rooted engine: n*f_{i-1,0} not divisible by i at i=" +
                                std::to_string(i) + " for " + g.to_string());
        f.counts.push_back(total / i);
    }
    validate_fvector(f);
    return f;
}

bool cross_check_enabled() {
    const char* v = std::getenv("CIRCIND_CROSS_CHECK");
    return v && *v && std::string_view(v) != "0";
}

}  // namespace

std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::Auto: return "auto";
        case Engine::Brute: return "brute";
        case Engine::Split: return "split";
        case Engine::Rooted: return "rooted";
    }
    return "auto";
}

Engine parse_engine(std::string_view name) {
    if (name == "auto") return Engine::Auto;
    if (name == "brute") return Engine::Brute;
    if (name == "split") return Engine::Split;
    if (name == "rooted") return Engine::Rooted;
    throw ValidationError("unknown engine '" + std::string(name) +
                          "', expected auto|brute|split|rooted");
}

void validate_fvector(const FVector& f) {
    if (f.counts.empty() || f.counts[0] != 1)
        throw InternalError("malformed f-vector: f_{-1} must equal 1");
    for (std::int64_t c : f.counts)
        if (c <= 0) throw InternalError("malformed f-vector: nonpositive entry");
}

bool is_independent(const CirculantGraph& g, std::span<const int> vertices) {
    std::uint64_t mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.order())
            throw ValidationError("vertex index " + std::to_string(v) + " out of range 0.." +
                                  std::to_string(g.order() - 1));
        mask |= 1ull << v;
    }
    return is_independent_mask(g, mask);
}

bool is_independent_mask(const CirculantGraph& g, std::uint64_t subset) {
    for (std::uint64_t m = subset; m; m &= m - 1)
        if (g.neighbors(std::countr_zero(m)) & subset) return false;
    return true;
}

int oracle_order_bound() { return env_int("CIRCIND_ORACLE_BOUND", 26); }

FVector fvector_oracle(const CirculantGraph& g) {
    const int n = g.order();
    // 48 is a hard ceiling regardless of the env override: the sweep is a
    // full 2^n pass and the mask arithmetic below shifts by n.
    if (n > oracle_order_bound() || n > 48)
        throw CapacityError("order n=" + std::to_string(n) + " exceeds the oracle bound " +
                            std::to_string(std::min(oracle_order_bound(), 48)));
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

    std::vector<std::int64_t> counts(n + 1, 0);
    counts[0] = 1;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        bool independent = true;
        for (std::uint64_t m = mask; m; m &= m - 1) {
            if (adj[std::countr_zero(m)] & mask) {
                independent = false;
                break;
            }
        }
        if (independent) ++counts[std::popcount(mask)];
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    FVector f{std::move(counts)};
    validate_fvector(f);
    return f;
}

FVector fvector(const CirculantGraph& g, Engine engine) {
    switch (engine) {
        case Engine::Brute:
            return fvector_oracle(g);
        case Engine::Split:
            return fvector_split(g);
        case Engine::Rooted:
            return fvector_rooted(g);
        case Engine::Auto: {
            FVector f = fvector_split(g);
            if (cross_check_enabled() && g.order() <= 16 && f != fvector_oracle(g))
                throw InternalError("engine cross-check failed for " + g.to_string());
            return f;
        }
    }
    throw InternalError("unreachable engine dispatch");
}

RootedCounts rooted_counts(const CirculantGraph& g) {
    // Independent sets through vertex 0 are exactly {0} joined with the
    // independent sets of the graph minus the closed neighborhood of 0.
    std::uint64_t residual = g.full_vertex_mask() & ~(g.neighbors(0) | 1ull);
    SplitCounter counter(g);
    Poly p = counter.count(residual);
    trim_trailing_zeros(p);
    return RootedCounts{std::move(p)};
}

int clique_number(const CirculantGraph& g) { return fvector(g.complement()).d(); }

std::int64_t cliques_of_size(const CirculantGraph& g, int k) {
    if (k < 1 || k > g.order())
        throw ValidationError("clique size " + std::to_string(k) + " out of range 1.." +
                              std::to_string(g.order()));
    FVector f = fvector(g.complement());
    if (k > f.d()) return 0;
    return f.counts[k];
}

std::size_t memo_budget_bytes() {
    const char* v = std::getenv("CIRCIND_MEMO_BUDGET");
    if (!v || !*v) return 256ull << 20;
    return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

}  // namespace circind
