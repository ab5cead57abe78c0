#include "circind/invariants.hpp"

#include <sstream>

#include "circind/checked.hpp"

namespace circind {

namespace {

// Pascal triangle rows 0..size; entries stay tiny (size <= 64).
std::vector<std::vector<std::int64_t>> binomial_table(int size) {
    std::vector<std::vector<std::int64_t>> c(size + 1);
    for (int i = 0; i <= size; ++i) {
        c[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) c[i][j] = checked_add(c[i - 1][j - 1], c[i - 1][j]);
    }
    return c;
}

}  // namespace

HVector hvector(const FVector& f) {
    validate_fvector(f);
    const int d = f.d();
    auto c = binomial_table(d);
    HVector h;
    h.entries.reserve(d + 1);
    for (int k = 0; k <= d; ++k) {
        // Terms can exceed 64 bits even when h_k itself is small; the wide
        // accumulator is bounded by C(64,32)*2^64 < 2^127 for orders <= 64.
        __int128 acc = 0;
        for (int i = 0; i <= k; ++i) {
            __int128 term = static_cast<__int128>(c[d - i][k - i]) * f.counts[i];
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        h.entries.push_back(checked_narrow(acc));
    }
    return h;
}

FVector fvector_from_hvector(const HVector& h) {
    const int d = h.d();
    auto c = binomial_table(d);
    FVector f;
    f.counts.reserve(d + 1);
    for (int k = 0; k <= d; ++k) {
        __int128 acc = 0;
        for (int i = 0; i <= k; ++i)
            acc += static_cast<__int128>(c[d - i][k - i]) * h.entries[i];
        f.counts.push_back(checked_narrow(acc));
    }
    return f;
}

std::int64_t reduced_euler(const FVector& f) {
    validate_fvector(f);
    __int128 acc = 0;
    for (int i = 0; i < static_cast<int>(f.counts.size()); ++i)
        acc += (i % 2 == 0) ? -static_cast<__int128>(f.counts[i])
                            : static_cast<__int128>(f.counts[i]);
    return checked_narrow(acc);
}

std::int64_t IndependencePolynomial::evaluate(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

IndependencePolynomial independence_polynomial(const CirculantGraph& g, Engine engine) {
    return IndependencePolynomial{fvector(g, engine).counts};
}

AlgebraicSummary algebraic_summary(const FVector& f) {
    HVector h = hvector(f);
    AlgebraicSummary s;
    s.krull_dim = h.d();
    s.regularity_index = h.entries.back() == 0 ? 0 : 1;
    s.hilbert_numerator = h.entries;
    while (s.hilbert_numerator.size() > 1 && s.hilbert_numerator.back() == 0)
        s.hilbert_numerator.pop_back();
    if (s.hilbert_numerator.empty() || s.hilbert_numerator[0] != 1)
        throw InternalError("Hilbert numerator must have constant term 1");
    s.a_invariant = static_cast<int>(s.hilbert_numerator.size()) - 1 - s.krull_dim;
    return s;
}

std::vector<std::int64_t> hilbert_series_prefix(const AlgebraicSummary& s, int terms) {
    if (terms < 0) throw ValidationError("series term count must be nonnegative");
    // h(t)/(1-t)^d: coefficient k of (1-t)^{-d} is C(k+d-1, d-1).
    std::vector<std::int64_t> out(terms, 0);
    const int d = s.krull_dim;
    for (int k = 0; k < terms; ++k) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < s.hilbert_numerator.size(); ++j) {
            int m = k - static_cast<int>(j);
            if (m < 0) break;
            std::int64_t expansion;
            if (d == 0) {
                expansion = (m == 0) ? 1 : 0;
            } else {
                // C(m+d-1, d-1) built incrementally to stay exact.
                __int128 b = 1;
                for (int q = 1; q <= d - 1; ++q) b = b * (m + q) / q;
                expansion = checked_narrow(b);
            }
            acc += static_cast<__int128>(s.hilbert_numerator[j]) * expansion;
        }
        out[k] = checked_narrow(acc);
    }
    return out;
}

std::string render_polynomial(const std::vector<std::int64_t>& coefficients,
                              std::string_view variable) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        std::int64_t c = coefficients[i];
        if (c == 0 && coefficients.size() > 1) continue;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::uint64_t mag = c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (i == 0 || mag != 1) out << mag;
        if (i >= 1) {
            out << variable;
            if (i >= 2) out << '^' << i;
        }
    }
    if (first) out << '0';
    return out.str();
}

std::string render_edge_ideal(const CirculantGraph& g) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j)) {
                if (!first) out << ", ";
                out << 'x' << i << "*x" << j;
                first = false;
            }
    out << ')';
    return out.str();
}

}  // namespace circind
