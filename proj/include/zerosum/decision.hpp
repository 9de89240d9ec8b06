#pragma once

#include <optional>

#include "zerosum/bitset.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

enum class ZKind { davenport, erdos };

struct DecisionOutcome {
    bool is_z_sequence = false;
    std::optional<WitnessVector> witness;
};

// Davenport: exists a in (A u {0})^m \ {0} with sum a_i x_i = 0 (mod n).
// Erdos: additionally |Supp(a)| = n exactly.
//
// Bit-parallel reachability DP, O(m*|A|*n) transitions (Erdos: times the
// support-count dimension). Witness reconstruction is deterministic: skip
// transitions are preferred, then weights in ascending order.
DecisionOutcome decide_davenport(const ZnSequence& x, const WeightSet& A,
                                 bool want_witness = true);
DecisionOutcome decide_erdos(const ZnSequence& x, const WeightSet& A,
                             bool want_witness = true);
DecisionOutcome decide(const ZnSequence& x, const WeightSet& A, ZKind kind,
                       bool want_witness = true);

// Literal enumeration of every coefficient vector. Independent oracle for the
// DP; guarded by (|A|+1)^m <= 1e8.
bool brute_force_decide(const ZnSequence& x, const WeightSet& A, ZKind kind);

// Re-evaluate a claimed witness by plain modular arithmetic.
bool witness_valid(const ZnSequence& x, const WeightSet& A, ZKind kind,
                   const WitnessVector& w);

// Incremental DP states for searches that extend a sequence entry by entry.
// Reachability only grows, so a copy of the parent state seeds each child.
class DavenportState {
public:
    explicit DavenportState(uint32_t n) : n_(n), reached_(n) {}
    void push(uint32_t entry, const std::vector<uint32_t>& weights);
    bool zero_reachable() const { return reached_.test(0); }

private:
    uint32_t n_;
    Bitset reached_;  // residues reachable with >= 1 nonzero coefficient
};

class ErdosState {
public:
    explicit ErdosState(uint32_t n);
    void push(uint32_t entry, const std::vector<uint32_t>& weights);
    bool zero_sum_of_support_n() const;

private:
    uint32_t n_;
    std::vector<Bitset> by_count_;  // support count 0..n
};

}  // namespace zerosum
