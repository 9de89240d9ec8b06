#pragma once

#include <string>

#include "zerosum/decision.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

enum class ClassicalKind { ones, signed_powers, divisor_chain, egz };

struct ConstructionReport {
    ZnSequence sequence;
    std::string claimed_kind;  // davenport | erdos | restricted-erdos | restricted-davenport
    WeightSet claimed_A;
    bool verified = false;      // decision module confirmed NOT a Z-sequence
    bool fallback_used = false; // paper recipe failed, witness found by search
    std::string note;

    ConstructionReport(ZnSequence seq, std::string kind, WeightSet A)
        : sequence(std::move(seq)), claimed_kind(std::move(kind)),
          claimed_A(std::move(A)) {}
};

// ones: (1^{n-1}), A={1}, not Davenport.
// signed_powers: (1,2,...,2^{k-1}) with k = floor(log2 n), A={1,-1}, not Davenport.
// divisor_chain: (1, q1, q1q2, ...) over the prime factorization of n, A=units.
// egz: (0^{n-1}, 1^{n-1}), A={1}, not Erdos.
// Verification failure indicates a bug and throws verification_failure.
ConstructionReport gen_classical(ClassicalKind kind, uint32_t n);

// 2-restricted, length n+1, no zero-sum subsequence of size exactly n.
// Tries the literal Harborth sequences first, falls back to exhaustive search
// over 2-restricted multisets when the literal reading fails to verify.
ConstructionReport gen_harborth2(uint32_t n);

// k-restricted, length p+k-1 over Z_p, no zero-sum subsequence of size p.
// k copies of -1 plus an a-sequence built from the base block
// 0^(k-1) 1^(k-1) ... (l-2)^(k-1) and r+k-2 distinct extras <= l-2 whose sum
// is pinned so the whole sequence sums to -k. The formulaic extras are tried
// per congruence case; a deterministic exact-sum selection is the fallback.
ConstructionReport gen_restricted_erdos_extremal(uint32_t p, uint32_t k);

// (1^k, 2^k, ..., t^k) with t maximal under k*t*(t+1) < n; every nonempty
// subset sum stays in (0, n/2), so not a Davenport Z-sequence for A={1}.
ConstructionReport gen_restricted_davenport(uint32_t n, uint32_t k);

}  // namespace zerosum
