#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zerosum {

// Reduce an arbitrary integer into [0, n). Requires n >= 2.
uint32_t normalize(int64_t x, uint32_t n);

// True iff gcd(x, n) = 1.
bool is_unit(uint32_t x, uint32_t n);

uint32_t euler_phi(uint32_t n);

bool is_prime(uint32_t n);

// Ordered sequence of residues mod n. Entries are stored reduced; all
// arithmetic downstream relies on that.
struct ZnSequence {
    uint32_t n = 2;
    std::vector<uint32_t> entries;

    ZnSequence() = default;
    ZnSequence(uint32_t modulus, std::vector<int64_t> raw);

    // Entries already in [0, n); validated.
    static ZnSequence reduced(uint32_t modulus, std::vector<uint32_t> entries);

    size_t size() const { return entries.size(); }
    std::vector<uint32_t> multiplicities() const;
    uint32_t max_multiplicity() const;
};

// True iff no residue appears more than k times.
bool is_k_restricted(const ZnSequence& x, uint32_t k);

enum class WeightKind { singleton, plus_minus_one, units, explicit_set };

// Coefficient set A, a nonempty subset of [1, n-1]. For kind=units the member
// list is only materialized below a size threshold; above it membership stays
// predicate-backed (gcd test) and member enumeration is an error.
class WeightSet {
public:
    static constexpr uint64_t kDefaultMaterializeLimit = 1'000'000;

    static WeightSet singleton(uint32_t n, int64_t a);
    static WeightSet plus_minus_one(uint32_t n);
    static WeightSet units(uint32_t n, uint64_t materialize_limit = kDefaultMaterializeLimit);
    static WeightSet explicit_set(uint32_t n, std::vector<int64_t> values);

    uint32_t modulus() const { return n_; }
    WeightKind kind() const { return kind_; }
    bool materialized() const { return materialized_; }
    bool contains(uint32_t v) const;
    uint64_t size() const;

    // Sorted ascending. Throws if the set is predicate-backed.
    const std::vector<uint32_t>& members() const;

    std::string describe() const;

private:
    WeightSet(uint32_t n, WeightKind kind) : n_(n), kind_(kind) {}

    uint32_t n_ = 2;
    WeightKind kind_ = WeightKind::explicit_set;
    bool materialized_ = true;
    std::vector<uint32_t> members_;
};

// Coefficient vector a in (A u {0})^m certifying a Z-sequence.
struct WitnessVector {
    std::vector<uint32_t> coefficients;

    std::vector<size_t> support() const;
};

}  // namespace zerosum
