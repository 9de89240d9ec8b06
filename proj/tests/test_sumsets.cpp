#include <doctest.h>

#include <set>

#include "zerosum/montecarlo.hpp"
#include "zerosum/sumsets.hpp"

using namespace zerosum;

namespace {

// independent reference: iterate all subsets explicitly
std::set<uint32_t> brute_subset_sums(const std::vector<uint32_t>& elems, uint32_t n,
                                     bool include_zero) {
    std::set<uint32_t> out;
    if (include_zero) out.insert(0);
    const uint32_t lim = uint32_t(1) << elems.size();
    for (uint32_t mask = 1; mask < lim; ++mask) {
        uint64_t s = 0;
        for (size_t i = 0; i < elems.size(); ++i)
            if (mask >> i & 1) s += elems[i];
        out.insert(static_cast<uint32_t>(s % n));
    }
    return out;
}

}  // namespace

TEST_CASE("subset sums match explicit enumeration") {
    for (uint64_t trial = 0; trial < 300; ++trial) {
        CounterRng rng(0x5E75, trial);
        uint32_t n = 2 + rng.below(13);
        uint32_t m = 1 + rng.below(10);
        std::vector<uint32_t> elems(m);
        for (auto& v : elems) v = rng.below(n);
        for (bool with_zero : {false, true}) {
            ResidueSet got =
                subset_sums(std::span<const uint32_t>(elems), n, with_zero);
            auto want = brute_subset_sums(elems, n, with_zero);
            auto got_vals = got.values();
            CHECK(std::set<uint32_t>(got_vals.begin(), got_vals.end()) == want);
        }
    }
}

TEST_CASE("fixed-cardinality subset sums match enumeration") {
    for (uint64_t trial = 0; trial < 200; ++trial) {
        CounterRng rng(0x512E, trial);
        uint32_t n = 3 + rng.below(10);
        ResidueSet A(n);
        for (uint32_t v = 0; v < n; ++v)
            if (rng.below(2)) A.bits.set(v);
        if (A.size() == 0) continue;
        auto vals = A.values();
        for (uint32_t t = 0; t <= A.size(); ++t) {
            ResidueSet got = subset_sums_of_size(A, t);
            std::set<uint32_t> want;
            const uint32_t lim = uint32_t(1) << vals.size();
            for (uint32_t mask = 0; mask < lim; ++mask) {
                if (uint32_t(__builtin_popcount(mask)) != t) continue;
                uint64_t s = 0;
                for (size_t i = 0; i < vals.size(); ++i)
                    if (mask >> i & 1) s += vals[i];
                want.insert(static_cast<uint32_t>(s % n));
            }
            auto got_vals = got.values();
            CHECK(std::set<uint32_t>(got_vals.begin(), got_vals.end()) == want);
        }
    }
}

TEST_CASE("sumset matches pairwise enumeration") {
    ResidueSet A(7, {1, 2}), B(7, {0, 3});
    auto got = sumset(A, B).values();
    CHECK(got == std::vector<uint32_t>{1, 2, 4, 5});
}

TEST_CASE("covering law and its precondition") {
    ResidueSet A(5, {0, 1, 2}), B(5, {0, 2, 4});
    LawReport r = verify_law(SumsetLaw::covering, A, B);
    CHECK(r.holds);
    CHECK(r.measured == 5);
    ResidueSet small(5, {0});
    CHECK_THROWS_AS(verify_law(SumsetLaw::covering, small, small),
                    std::invalid_argument);
}

TEST_CASE("cauchy-davenport on a prime modulus") {
    ResidueSet A(7, {0, 1, 3}), B(7, {0, 2});
    LawReport r = verify_law(SumsetLaw::cauchy_davenport, A, B);
    CHECK(r.bound == 4);
    CHECK(r.holds);
    ResidueSet C(6, {1});
    CHECK_THROWS_AS(verify_law(SumsetLaw::cauchy_davenport, C, C),
                    std::invalid_argument);
}

TEST_CASE("scherk law preconditions") {
    ResidueSet A(8, {0, 1}), B(8, {0, 2});
    CHECK(verify_law(SumsetLaw::scherk, A, B).holds);
    ResidueSet Bbad(8, {0, 7});  // 1 + 7 = 0 non-trivially
    CHECK_THROWS_AS(verify_law(SumsetLaw::scherk, A, Bbad), std::invalid_argument);
    ResidueSet no_zero(8, {1});
    CHECK_THROWS_AS(verify_law(SumsetLaw::scherk, no_zero, B),
                    std::invalid_argument);
}

TEST_CASE("szemeredi report fields") {
    ResidueSet A(9, {3, 6});  // S(A) = {3, 6, 0}: zero-sum set
    LawReport r = verify_law(SumsetLaw::szemeredi, A);
    CHECK(r.zero_in_sums);
    CHECK(r.holds);

    ResidueSet B(9, {1});  // S(B) = {1}
    LawReport r2 = verify_law(SumsetLaw::szemeredi, B);
    CHECK_FALSE(r2.zero_in_sums);
    CHECK(r2.measured == 1);
    CHECK(r2.holds);
    CHECK(r2.ratio == doctest::Approx(1.0));
}
