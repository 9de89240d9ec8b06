#include <doctest.h>

#include "zerosum/common.hpp"
#include "zerosum/invariants.hpp"

using namespace zerosum;

TEST_CASE("classical davenport and erdos constants at small n") {
    for (uint32_t n = 2; n <= 7; ++n) {
        WeightSet one = WeightSet::singleton(n, 1);
        CHECK(davenport_constant(n, one).value == n);
        CHECK(erdos_constant(n, one).value == 2 * n - 1);
    }
    // D_{pm1} = floor(log2 n) + 1
    CHECK(davenport_constant(8, WeightSet::plus_minus_one(8)).value == 4);
    CHECK(davenport_constant(9, WeightSet::plus_minus_one(9)).value == 4);
    CHECK(davenport_constant(16, WeightSet::plus_minus_one(16)).value == 5);
    // D_{units} = (number of prime factors with multiplicity) + 1
    CHECK(davenport_constant(6, WeightSet::units(6)).value == 3);
    CHECK(davenport_constant(8, WeightSet::units(8)).value == 4);
    CHECK(davenport_constant(9, WeightSet::units(9)).value == 3);
}

TEST_CASE("restricted erdos constants, exhaustively known values") {
    CHECK(restricted_erdos_constant(3, 2).value == 5);
    CHECK(restricted_erdos_constant(4, 2).value == 5);  // n+2 fails here
    CHECK(restricted_erdos_constant(5, 2).value == 7);
    CHECK(restricted_erdos_constant(6, 2).value == 8);
    // k = 1 (Harborth): the only 3-element subset of Z_3 is {0,1,2}, a zero sum
    CHECK(restricted_erdos_constant(3, 1).value == 3);
    CHECK(restricted_erdos_constant(5, 3).value == 7);
    CHECK(restricted_erdos_constant(3, 3).value == 5);
}

TEST_CASE("extremal witnesses are maximal non-Z sequences") {
    for (uint32_t n = 3; n <= 6; ++n) {
        InvariantResult r = restricted_erdos_constant(n, 2);
        CHECK(r.extremal_witness.size() == r.value - 1);
        CHECK(is_k_restricted(r.extremal_witness, 2));
        CHECK_FALSE(brute_force_decide(r.extremal_witness,
                                       WeightSet::singleton(n, 1), ZKind::erdos));
    }
}

TEST_CASE("symmetry pruning does not change any value") {
    for (uint32_t n = 2; n <= 6; ++n) {
        std::vector<std::pair<InvariantKind, std::optional<WeightSet>>> queries = {
            {InvariantKind::davenport, WeightSet::singleton(n, 1)},
            {InvariantKind::davenport, WeightSet::plus_minus_one(n)},
            {InvariantKind::davenport, WeightSet::units(n)},
            {InvariantKind::erdos, WeightSet::singleton(n, 1)},
            {InvariantKind::erdos, WeightSet::plus_minus_one(n)},
            {InvariantKind::restricted_erdos, std::nullopt},
            {InvariantKind::restricted_davenport, std::nullopt},
        };
        for (auto& [kind, A] : queries) {
            InvariantQuery q;
            q.n = n;
            q.kind = kind;
            q.A = A;
            q.k = 2;
            q.use_symmetry = true;
            InvariantResult pruned = compute_invariant(q);
            q.use_symmetry = false;
            InvariantResult full = compute_invariant(q);
            CHECK(pruned.value == full.value);
            CHECK(pruned.sequences_examined <= full.sequences_examined);
        }
    }
}

TEST_CASE("yuan-zeng identity at small n") {
    for (uint32_t n = 2; n <= 5; ++n) {
        CHECK(verify_yuan_zeng(n, WeightSet::singleton(n, 1)));
        CHECK(verify_yuan_zeng(n, WeightSet::plus_minus_one(n)));
        CHECK(verify_yuan_zeng(n, WeightSet::units(n)));
    }
}

TEST_CASE("budget is enforced, never silently truncated") {
    InvariantQuery q;
    q.n = 8;
    q.kind = InvariantKind::erdos;
    q.A = WeightSet::singleton(8, 1);
    q.budget = 10;
    CHECK_THROWS_AS(compute_invariant(q), budget_exceeded);
}

TEST_CASE("scan reports mismatching cells with witnesses") {
    auto cells = scan_conjecture(3, 4, 2, 2);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].matches);      // s^(2)(Z_3) = 5
    CHECK(cells[0].value == 5);
    CHECK_FALSE(cells[1].matches);  // s^(2)(Z_4) = 5, conjecture says 6
    CHECK(cells[1].value == 5);
    CHECK(cells[1].witness.size() == 4);
}

TEST_CASE("restricted multiset enumeration counts") {
    // multisets of size m over n symbols with multiplicity <= k
    auto count = [](uint32_t n, uint32_t m, uint32_t k) {
        uint64_t c = 0;
        enumerate_restricted_multisets(n, m, k, [&](const std::vector<uint32_t>&) {
            ++c;
            return true;
        });
        return c;
    };
    CHECK(count(4, 2, 1) == 6);    // C(4,2)
    CHECK(count(4, 2, 2) == 10);   // multisets of size 2
    CHECK(count(4, 5, 1) == 0);    // more slots than symbols
    CHECK(count(3, 3, 3) == 10);   // all multisets of size 3
    CHECK(count(3, 4, 2) == 6);    // patterns (2,2,0) and (2,1,1)
}
