#pragma once

#include <functional>
#include <optional>

#include "zerosum/decision.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

enum class InvariantKind { davenport, erdos, restricted_erdos, restricted_davenport };

struct InvariantQuery {
    uint32_t n = 2;
    InvariantKind kind = InvariantKind::davenport;
    std::optional<WeightSet> A;  // davenport / erdos kinds
    uint32_t k = 1;              // restricted kinds (A fixed to {1})
    uint64_t budget = 1'000'000'000;  // max sequences examined
    bool use_symmetry = true;
};

struct InvariantResult {
    uint32_t value = 0;
    ZnSequence extremal_witness;  // length value-1, not a Z-sequence
    uint64_t sequences_examined = 0;
};

// Least m such that every admissible length-m sequence is a Z-sequence of the
// queried kind. Exhaustive DFS over canonical (nondecreasing) multisets: any
// sub-multiset of a non-Z sequence is non-Z, so the search extends non-Z
// sequences only and returns (longest non-Z length) + 1.
InvariantResult compute_invariant(const InvariantQuery& q);

InvariantResult davenport_constant(uint32_t n, const WeightSet& A,
                                   uint64_t budget = 1'000'000'000);
InvariantResult erdos_constant(uint32_t n, const WeightSet& A,
                               uint64_t budget = 1'000'000'000);
// s^(k)(Z_n)
InvariantResult restricted_erdos_constant(uint32_t n, uint32_t k,
                                          uint64_t budget = 1'000'000'000);
// d^(k)(Z_n), A = {1}
InvariantResult restricted_davenport_constant(uint32_t n, uint32_t k,
                                              uint64_t budget = 1'000'000'000);

// E_A(Z_n) == D_A(Z_n) + n - 1
bool verify_yuan_zeng(uint32_t n, const WeightSet& A,
                      uint64_t budget = 1'000'000'000);

struct ScanCell {
    uint32_t n = 0;
    uint32_t k = 0;
    bool skipped = false;  // budget exceeded, never guessed
    uint32_t value = 0;
    uint32_t expected = 0;  // n + k
    bool matches = false;
    std::vector<uint32_t> witness;
    uint64_t sequences_examined = 0;
};

// s^(k)(Z_n) vs the conjectured n+k over a grid.
std::vector<ScanCell> scan_conjecture(uint32_t n_lo, uint32_t n_hi, uint32_t k_lo,
                                      uint32_t k_hi,
                                      uint64_t budget = 1'000'000'000);

// One nondecreasing representative per multiset of size m over Z_n with max
// multiplicity <= k. visit returns false to stop early.
void enumerate_restricted_multisets(
    uint32_t n, uint32_t m, uint32_t k,
    const std::function<bool(const std::vector<uint32_t>&)>& visit);

}  // namespace zerosum
