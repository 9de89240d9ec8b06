#include "zerosum/sumsets.hpp"

#include <stdexcept>

namespace zerosum {

ResidueSet::ResidueSet(uint32_t modulus, std::initializer_list<int64_t> values)
    : n(modulus), bits(modulus) {
    for (int64_t v : values) bits.set(normalize(v, modulus));
}

ResidueSet ResidueSet::of(uint32_t modulus, const std::vector<uint32_t>& values) {
    ResidueSet s(modulus);
    for (uint32_t v : values) {
        if (v >= modulus) throw std::invalid_argument("residue out of range");
        s.bits.set(v);
    }
    return s;
}

ResidueSet subset_sums(std::span<const uint32_t> elems, uint32_t n,
                       bool include_zero) {
    // S(A u {x}) = S(A) u (S(A)+x) u {x}
    ResidueSet s(n);
    for (uint32_t x : elems) {
        Bitset next = s.bits;
        next.or_rotated(s.bits, x);
        next.set(x % n);
        s.bits = std::move(next);
    }
    if (include_zero) s.bits.set(0);
    return s;
}

ResidueSet subset_sums(const ResidueSet& A, bool include_zero) {
    auto vals = A.values();
    return subset_sums(std::span<const uint32_t>(vals), A.n, include_zero);
}

ResidueSet subset_sums_of_size(const ResidueSet& A, uint32_t t) {
    if (t > A.size()) throw std::invalid_argument("t exceeds |A|");
    const uint32_t n = A.n;
    std::vector<Bitset> by_count(t + 1, Bitset(n));
    by_count[0].set(0);
    for (uint32_t x : A.values()) {
        for (uint32_t c = t; c-- > 0;) {
            if (!by_count[c].any()) continue;
            by_count[c + 1].or_rotated(by_count[c], x);
        }
    }
    ResidueSet out(n);
    out.bits = std::move(by_count[t]);
    return out;
}

ResidueSet sumset(const ResidueSet& A, const ResidueSet& B) {
    if (A.n != B.n) throw std::invalid_argument("modulus mismatch");
    ResidueSet out(A.n);
    for (uint32_t b : B.values()) out.bits.or_rotated(A.bits, b);
    return out;
}

LawReport verify_law(SumsetLaw law, const ResidueSet& A, const ResidueSet& B) {
    if (A.n != B.n) throw std::invalid_argument("modulus mismatch");
    const uint32_t n = A.n;
    LawReport rep{law};
    switch (law) {
        case SumsetLaw::covering: {
            if (A.size() + B.size() <= n)
                throw std::invalid_argument("covering law requires |A|+|B| > n");
            rep.measured = sumset(A, B).size();
            rep.bound = n;
            rep.holds = rep.measured == n;
            return rep;
        }
        case SumsetLaw::cauchy_davenport: {
            if (!is_prime(n))
                throw std::invalid_argument("cauchy-davenport requires prime modulus");
            if (A.size() == 0 || B.size() == 0)
                throw std::invalid_argument("cauchy-davenport requires nonempty sets");
            rep.measured = sumset(A, B).size();
            rep.bound = std::min(n, A.size() + B.size() - 1);
            rep.holds = rep.measured >= rep.bound;
            return rep;
        }
        case SumsetLaw::scherk: {
            if (!A.contains(0) || !B.contains(0))
                throw std::invalid_argument("scherk requires 0 in A and B");
            for (uint32_t a : A.values()) {
                uint32_t neg = (n - a) % n;
                if (a != 0 && B.contains(neg))
                    throw std::invalid_argument(
                        "scherk requires a+b=0 to have only the trivial solution");
            }
            rep.measured = sumset(A, B).size();
            rep.bound = std::min(A.size() + B.size() - 1, n);
            rep.holds = rep.measured >= rep.bound;
            return rep;
        }
        case SumsetLaw::szemeredi:
            throw std::invalid_argument("szemeredi takes a single set");
    }
    throw std::invalid_argument("unknown law");
}

LawReport verify_law(SumsetLaw law, const ResidueSet& A) {
    if (law != SumsetLaw::szemeredi)
        throw std::invalid_argument("law requires two sets");
    LawReport rep{law};
    ResidueSet s = subset_sums(A);
    rep.measured = s.size();
    rep.zero_in_sums = s.contains(0);
    uint64_t sq = uint64_t(A.size()) * A.size();
    rep.bound = static_cast<uint32_t>((sq + 9999) / 10000);
    rep.ratio = sq ? static_cast<double>(rep.measured) / static_cast<double>(sq) : 0.0;
    rep.holds = rep.zero_in_sums || uint64_t(rep.measured) * 10000 >= sq;
    return rep;
}

std::string law_name(SumsetLaw law) {
    switch (law) {
        case SumsetLaw::covering: return "covering";
        case SumsetLaw::cauchy_davenport: return "cauchy-davenport";
        case SumsetLaw::scherk: return "scherk";
        case SumsetLaw::szemeredi: return "szemeredi";
    }
    return "?";
}

}  // namespace zerosum
