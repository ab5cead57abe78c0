#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circind/counting.hpp"

namespace circind {

struct CheckOptions {
    int workers = 1;
    std::uint64_t seed = 1;
    std::size_t samples = 2000;     // connection sets drawn in sampled mode
    int div_exhaustive_order = 16;  // all-S sweep bound on n for div/cn
    int exhaustive_half_bound = 14; // all-S sweep bound on floor(n/2) elsewhere
    std::optional<std::vector<int>> explicit_set;  // check one set only
};

struct Counterexample {
    std::vector<int> set;
    std::string observed;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Machine-checkable record binding one verified statement to the evidence
/// computed for it. A failed run carries the lexicographically least
/// counterexample; failure is an outcome, never an exception.
struct CheckCertificate {
    std::string statement_id;  // div | cn | 2q | dq1 | congruence | thm_pk | thm_2pk
    std::vector<std::pair<std::string, long long>> parameters;
    std::string mode;          // exhaustive | sampled | single
    std::uint64_t seed = 0;    // meaningful in sampled mode only
    std::uint64_t instances_checked = 0;
    bool passed = false;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> evidence;  // deterministic key=value lines
    std::string evidence_digest;        // fnv1a-64 over the evidence lines
};

std::string fnv1a_hex(const std::vector<std::string>& lines);

// Divisibility identity i*f_{i-1} = n*f_{i-1,0} for every i, with the two
// sides computed by independent engines.
CheckCertificate check_lemma_div(int n, const CheckOptions& options = {});

// Clique bound omega(G) <= floor(n/2) for every non-complete S.
CheckCertificate check_clique_bound(int n, const CheckOptions& options = {});

// On n = 2q, q odd: omega(G) < q  <=>  {2,4,...,q-1} not contained in S,
// both directions, every non-complete S.
CheckCertificate check_lemma_2q(int q, const CheckOptions& options = {});

// On n = rq, q odd: (1) {r,2r,...,(q-1)/2*r} not in S implies
// omega <= (n-r)/2; (2) omega < q implies the multiple set is not in S.
CheckCertificate check_lemma_dq1(int r, int q, const CheckOptions& options = {});

// On n = 2p^k, p odd prime: every nonzero count of p^k-cliques is congruent
// to 2 mod p, and equals exactly 2 when 1 is missing from S or some odd
// t <= p^k coprime to p is missing from S.
CheckCertificate check_congruence(int p, int k, const CheckOptions& options = {});

// Nonvanishing reduced Euler characteristic for every non-empty S, on
// n = p^k (any prime) or n = 2p^k (odd prime). Residues of the observed
// chi~ values mod p are recorded as evidence.
CheckCertificate verify_nonvanishing(int n, const CheckOptions& options = {});

}  // namespace circind
