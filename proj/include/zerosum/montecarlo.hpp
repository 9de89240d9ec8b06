#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zerosum/group.hpp"

namespace zerosum {

using Rational = boost::multiprecision::cpp_rational;

enum class Scenario {
    erdos_unweighted,   // A = {1}, Erdos property, m around n+2
    erdos_ab,           // A = {a, b} with a, a+b, a-b units, m around n
    erdos_pm1,          // A = {1, -1}, Erdos property, m around n+1
    davenport_unweighted,       // A = {1}, threshold log2 n
    davenport_pm1,              // A = {1, -1}, threshold (1/2) log2 n
    davenport_units_squarefree, // A = units, n a product of distinct primes
    primorial_chain,            // inclusion chain of sampled prime-index sets
};

Scenario scenario_from_name(const std::string& name);
std::string scenario_name(Scenario s);

struct TrialConfig {
    Scenario scenario = Scenario::davenport_unweighted;
    uint32_t n = 0;                // modulus; derived from primes when given
    std::vector<uint32_t> primes;  // units-squarefree / primorial-chain
    uint32_t m = 0;
    int64_t a = 0, b = 0;          // erdos-ab weights
    uint32_t trials = 1;
    uint64_t seed = 0;
    uint32_t exact_threshold = 100'000;  // above: certificate mode only
    uint32_t threads = 0;                // 0 = hardware concurrency

    // Throws std::invalid_argument; fills n from primes where applicable.
    void validate();
};

struct TrialReport {
    TrialConfig config;
    uint32_t successes = 0;
    double estimate = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0;  // Wilson 95%
    std::map<std::string, uint32_t> method_counts;
    bool lower_bound = false;  // certificate mode: estimate bounds from below
};

// Deterministic counter-based stream: (seed, stream index) fully determines
// the output, so trials replay individually and parallelize freely.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream);
    uint64_t next();
    // uniform on [0, bound) by rejection
    uint32_t below(uint32_t bound);

private:
    uint64_t state_;
};

ZnSequence sample_sequence(uint32_t n, uint32_t m, uint64_t seed, uint64_t trial);

// T independent trials of the scenario's Z-property; Wilson 95% interval.
TrialReport run_experiment(const TrialConfig& config);

struct FactorizationProfile {
    uint32_t x = 0;
    std::vector<uint32_t> prime_indices;  // A(x) = { i : p_i | x }
    uint32_t unit_part = 0;               // u with x = u * prod_{i in A} p_i (mod n)
    bool integer_squarefree = true;       // no p_i^2 divides the representative
};

// n = prod primes (distinct), x != 0 (mod n).
FactorizationProfile decompose_element(uint32_t x, const std::vector<uint32_t>& primes);

struct Lemma1Certificate {
    std::vector<std::vector<uint32_t>> prime_index_sets;  // A(x_i) per entry
};

// Sufficient condition for unit-weighted Davenport Z: entries pairwise
// distinct and nonzero over squarefree n, and for each i the prime-index sets
// of the other entries have empty intersection. Sound, not complete.
std::optional<Lemma1Certificate> lemma1_certify(const ZnSequence& x,
                                                const std::vector<uint32_t>& primes);

// P(a 0-1 column of length m is increasing) with Bernoulli(1/p) entries:
// sum_{j=0}^{m} (1/p)^j (1-1/p)^{m-j}, exact.
Rational column_increasing_probability(uint32_t p, uint32_t m);

// The displayed closed form ((p-1)^{m+1} - 1) / ((p-2) p^{m+1}). Disagrees
// with the sum definition (e.g. m=1, where the sum gives 1); computed and
// reported alongside, never used in place of the sum.
Rational column_increasing_probability_literal(uint32_t p, uint32_t m);

// One factor of the chain formula: ((1-1/p)^{m+1} - (1/p)^{m+1}) * p/(p-2).
Rational chain_factor_literal(uint32_t p, uint32_t m);

// m! * prod_i chain_factor_literal(p_i, m); the literal closed form, which
// over-counts orderings with ties and can exceed 1.
Rational chain_closed_form(const std::vector<uint32_t>& primes, uint32_t m);

struct ChainComparison {
    Rational closed_form;
    TrialReport simulated;
    bool closed_form_in_ci = false;
};

// Simulated P(exists an ordering of the m sampled sets forming an inclusion
// chain) vs the literal closed form. Disagreements are reported as-is.
ChainComparison chain_probability(const std::vector<uint32_t>& primes, uint32_t m,
                                  uint32_t trials, uint64_t seed,
                                  uint32_t threads = 0);

struct WilsonInterval {
    double lo = 0.0, hi = 0.0;
};
WilsonInterval wilson95(uint32_t successes, uint32_t trials);

}  // namespace zerosum
