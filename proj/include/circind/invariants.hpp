#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circind/counting.hpp"

namespace circind {

/// h-vector (h_0, ..., h_d) of a simplicial complex, the binomial transform
/// of the f-vector: h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}.
struct HVector {
    std::vector<std::int64_t> entries;

    int d() const { return static_cast<int>(entries.size()) - 1; }

    friend bool operator==(const HVector&, const HVector&) = default;
};

HVector hvector(const FVector& f);

// Inverse binomial transform: f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i.
FVector fvector_from_hvector(const HVector& h);

// Reduced Euler characteristic: chi~ = sum_{i=0..d} (-1)^{i-1} f_{i-1}.
// Equals (-1)^{d-1} h_d and -I(G,-1).
std::int64_t reduced_euler(const FVector& f);

/// Independence polynomial I(G,x) = sum_i f_{i-1} x^i.
struct IndependencePolynomial {
    std::vector<std::int64_t> coefficients;  // ascending degree

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    std::int64_t evaluate(std::int64_t x) const;  // exact, overflow-checked

    friend bool operator==(const IndependencePolynomial&,
                           const IndependencePolynomial&) = default;
};

IndependencePolynomial independence_polynomial(const CirculantGraph& g,
                                               Engine engine = Engine::Auto);

/// Stanley-Reisner numerics of R/I derived from the f-vector: the numerator
/// h(t) of the Hilbert-Poincare series over (1-t)^d, the regularity index
/// (0 when h_d = 0, else 1), and the a-invariant deg h(t) - d (the degree of
/// the series as a rational function, independent of the normalization).
struct AlgebraicSummary {
    std::vector<std::int64_t> hilbert_numerator;  // trailing zeros trimmed
    int krull_dim = 0;                            // d
    int regularity_index = 0;
    int a_invariant = 0;

    friend bool operator==(const AlgebraicSummary&, const AlgebraicSummary&) = default;
};

AlgebraicSummary algebraic_summary(const FVector& f);

// First `terms` Hilbert function values, expanded from h(t)/(1-t)^d by
// series division. Derived output only; not an independent computation.
std::vector<std::int64_t> hilbert_series_prefix(const AlgebraicSummary& s, int terms);

// "1 + 30x + 345x^2 + ..." (ascending degree, signed coefficients).
std::string render_polynomial(const std::vector<std::int64_t>& coefficients,
                              std::string_view variable);

// Edge ideal generators, e.g. "(x0*x1, x0*x3, x1*x2, x2*x3)". Formatting
// utility only.
std::string render_edge_ideal(const CirculantGraph& g);

}  // namespace circind
