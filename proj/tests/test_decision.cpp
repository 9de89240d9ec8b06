#include <doctest.h>

#include "zerosum/common.hpp"
#include "zerosum/decision.hpp"
#include "zerosum/montecarlo.hpp"

using namespace zerosum;

TEST_CASE("davenport decision on classic extremal sequences") {
    // (1^{n-1}) is never a Z-sequence for A = {1}; (1^n) always is
    for (uint32_t n = 2; n <= 12; ++n) {
        WeightSet A = WeightSet::singleton(n, 1);
        ZnSequence shorter = ZnSequence::reduced(n, std::vector<uint32_t>(n - 1, 1));
        ZnSequence full = ZnSequence::reduced(n, std::vector<uint32_t>(n, 1));
        CHECK_FALSE(decide_davenport(shorter, A).is_z_sequence);
        auto out = decide_davenport(full, A);
        CHECK(out.is_z_sequence);
        REQUIRE(out.witness);
        CHECK(witness_valid(full, A, ZKind::davenport, *out.witness));
    }
}

TEST_CASE("a zero entry is immediately a davenport Z-sequence") {
    WeightSet A = WeightSet::singleton(5, 1);
    auto out = decide_davenport(ZnSequence(5, {0}), A);
    CHECK(out.is_z_sequence);
    REQUIRE(out.witness);
    CHECK(out.witness->coefficients == std::vector<uint32_t>{1});
}

TEST_CASE("erdos requires length at least n") {
    WeightSet A = WeightSet::explicit_set(5, {1, 4});
    CHECK_FALSE(decide_erdos(ZnSequence(5, {1, 2}), A).is_z_sequence);
}

TEST_CASE("egz bound: 2n-1 entries always contain an n-term zero sum") {
    for (uint32_t n = 2; n <= 7; ++n) {
        WeightSet A = WeightSet::singleton(n, 1);
        // the EGZ extremal: (0^{n-1}, 1^{n-1}) is not a Z-sequence
        std::vector<uint32_t> e(n - 1, 0);
        e.insert(e.end(), n - 1, 1 % n);
        CHECK_FALSE(decide_erdos(ZnSequence::reduced(n, e), A).is_z_sequence);
        e.push_back(1 % n);  // length 2n-1
        auto out = decide_erdos(ZnSequence::reduced(n, e), A);
        CHECK(out.is_z_sequence);
        REQUIRE(out.witness);
        CHECK(witness_valid(ZnSequence::reduced(n, e), A, ZKind::erdos, *out.witness));
    }
}

TEST_CASE("dp agrees with literal enumeration on random instances") {
    for (uint64_t trial = 0; trial < 400; ++trial) {
        CounterRng rng(0xC0FFEE, trial);
        uint32_t n = 2 + rng.below(9);
        uint32_t m = 1 + rng.below(7);
        uint32_t asz = 1 + rng.below(std::min(3u, n - 1));
        std::vector<int64_t> weights;
        while (weights.size() < asz) {
            int64_t w = 1 + rng.below(n - 1);
            if (std::find(weights.begin(), weights.end(), w) == weights.end())
                weights.push_back(w);
        }
        WeightSet A = WeightSet::explicit_set(n, weights);
        std::vector<uint32_t> e(m);
        for (auto& v : e) v = rng.below(n);
        ZnSequence x = ZnSequence::reduced(n, e);
        for (ZKind kind : {ZKind::davenport, ZKind::erdos}) {
            auto out = decide(x, A, kind);
            CHECK(out.is_z_sequence == brute_force_decide(x, A, kind));
            if (out.is_z_sequence) {
                REQUIRE(out.witness);
                CHECK(witness_valid(x, A, kind, *out.witness));
            }
        }
    }
}

TEST_CASE("decisions are permutation invariant and absorb extensions") {
    for (uint64_t trial = 0; trial < 200; ++trial) {
        CounterRng rng(0xBADA55, trial);
        uint32_t n = 2 + rng.below(7);
        uint32_t m = 1 + rng.below(6);
        WeightSet A = WeightSet::plus_minus_one(n);
        std::vector<uint32_t> e(m);
        for (auto& v : e) v = rng.below(n);
        ZnSequence x = ZnSequence::reduced(n, e);
        bool z = decide_davenport(x, A, false).is_z_sequence;

        std::vector<uint32_t> shuffled = e;
        for (size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(uint32_t(i))]);
        CHECK(decide_davenport(ZnSequence::reduced(n, shuffled), A, false)
                  .is_z_sequence == z);

        if (z) {  // appending anything keeps the property
            e.push_back(rng.below(n));
            CHECK(decide_davenport(ZnSequence::reduced(n, e), A, false).is_z_sequence);
        }
    }
}

TEST_CASE("incremental states match the batch decision on every prefix") {
    for (uint64_t trial = 0; trial < 100; ++trial) {
        CounterRng rng(0xFACADE, trial);
        uint32_t n = 2 + rng.below(6);
        WeightSet A = WeightSet::singleton(n, 1);
        DavenportState ds(n);
        ErdosState es(n);
        std::vector<uint32_t> prefix;
        for (uint32_t i = 0; i < 8; ++i) {
            uint32_t v = rng.below(n);
            prefix.push_back(v);
            ds.push(v, A.members());
            es.push(v, A.members());
            ZnSequence x = ZnSequence::reduced(n, prefix);
            CHECK(ds.zero_reachable() ==
                  decide_davenport(x, A, false).is_z_sequence);
            CHECK(es.zero_sum_of_support_n() ==
                  decide_erdos(x, A, false).is_z_sequence);
        }
    }
}

TEST_CASE("brute force guard rejects oversized instances") {
    WeightSet A = WeightSet::units(101);
    ZnSequence x = ZnSequence::reduced(101, std::vector<uint32_t>(40, 1));
    CHECK_THROWS_AS(brute_force_decide(x, A, ZKind::davenport), budget_exceeded);
}
