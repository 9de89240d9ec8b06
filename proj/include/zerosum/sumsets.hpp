#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zerosum/bitset.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

// Subset of Z_n as an n-bit vector.
struct ResidueSet {
    uint32_t n = 2;
    Bitset bits;

    ResidueSet() = default;
    explicit ResidueSet(uint32_t modulus) : n(modulus), bits(modulus) {}
    ResidueSet(uint32_t modulus, std::initializer_list<int64_t> values);
    static ResidueSet of(uint32_t modulus, const std::vector<uint32_t>& values);

    uint32_t size() const { return bits.count(); }
    bool contains(uint32_t v) const { return bits.test(v); }
    std::vector<uint32_t> values() const { return bits.to_values(); }
};

// S(A): sums over all nonempty subsets. include_zero adds the empty sum,
// giving the S(A) u {0} variant.
ResidueSet subset_sums(const ResidueSet& A, bool include_zero = false);

// Same recurrence over a sequence (multiset), repeats allowed.
ResidueSet subset_sums(std::span<const uint32_t> elems, uint32_t n,
                       bool include_zero = false);

// Sums over subsets of cardinality exactly t.
ResidueSet subset_sums_of_size(const ResidueSet& A, uint32_t t);

ResidueSet sumset(const ResidueSet& A, const ResidueSet& B);

enum class SumsetLaw { covering, cauchy_davenport, scherk, szemeredi };

struct LawReport {
    SumsetLaw law;
    bool holds = false;
    uint32_t measured = 0;  // |A+B|, or |S(A)|
    uint32_t bound = 0;     // the law's lower bound (szemeredi: ceil(|A|^2/10000))
    bool zero_in_sums = false;  // szemeredi only
    double ratio = 0.0;         // szemeredi only: |S(A)| / |A|^2
};

// covering: |A|+|B| > n  =>  A+B = Z_n
// cauchy-davenport: n prime, A,B nonempty  =>  |A+B| >= min(n, |A|+|B|-1)
// scherk: 0 in A and B, a+b=0 only at a=b=0  =>  |A+B| >= min(|A|+|B|-1, n)
// Precondition violations throw std::invalid_argument, distinct from a law
// failing to hold.
LawReport verify_law(SumsetLaw law, const ResidueSet& A, const ResidueSet& B);

// szemeredi: 0 in S(A) or |S(A)| >= |A|^2 / 10000.
LawReport verify_law(SumsetLaw law, const ResidueSet& A);

std::string law_name(SumsetLaw law);

}  // namespace zerosum
