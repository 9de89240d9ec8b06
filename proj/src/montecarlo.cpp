#include "zerosum/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>

#include "zerosum/decision.hpp"

namespace zerosum {

namespace {

constexpr std::array<const char*, 3> kMethodNames = {"exact-dp", "lemma1-certificate",
                                                     "brute-force"};
enum MethodIdx { kExact = 0, kCert = 1, kBrute = 2 };

uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

uint64_t modpow(uint64_t b, uint64_t e, uint64_t mod) {
    uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

void check_prime_list(const std::vector<uint32_t>& primes) {
    if (primes.empty()) throw std::invalid_argument("prime list is empty");
    for (size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) throw std::invalid_argument("not a prime");
        if (i && primes[i] <= primes[i - 1])
            throw std::invalid_argument("primes must be distinct and ascending");
    }
}

// distinct primes in ascending order; returns the (checked) product
uint32_t checked_primorial(const std::vector<uint32_t>& primes) {
    check_prime_list(primes);
    uint64_t prod = 1;
    for (uint32_t p : primes) {
        prod *= p;
        if (prod > UINT32_MAX) throw std::invalid_argument("prime product overflows");
    }
    return static_cast<uint32_t>(prod);
}

}  // namespace

Scenario scenario_from_name(const std::string& name) {
    if (name == "erdos-unweighted@n+2") return Scenario::erdos_unweighted;
    if (name == "erdos-ab@n") return Scenario::erdos_ab;
    if (name == "erdos-pm1@n+1") return Scenario::erdos_pm1;
    if (name == "davenport-unweighted") return Scenario::davenport_unweighted;
    if (name == "davenport-pm1") return Scenario::davenport_pm1;
    if (name == "davenport-units-squarefree")
        return Scenario::davenport_units_squarefree;
    if (name == "primorial-chain") return Scenario::primorial_chain;
    throw std::invalid_argument("unknown scenario: " + name);
}

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::erdos_unweighted: return "erdos-unweighted@n+2";
        case Scenario::erdos_ab: return "erdos-ab@n";
        case Scenario::erdos_pm1: return "erdos-pm1@n+1";
        case Scenario::davenport_unweighted: return "davenport-unweighted";
        case Scenario::davenport_pm1: return "davenport-pm1";
        case Scenario::davenport_units_squarefree:
            return "davenport-units-squarefree";
        case Scenario::primorial_chain: return "primorial-chain";
    }
    return "?";
}

void TrialConfig::validate() {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const bool uses_primes = scenario == Scenario::davenport_units_squarefree ||
                             scenario == Scenario::primorial_chain;
    if (uses_primes) {
        if (scenario == Scenario::primorial_chain) {
            check_prime_list(primes);  // the product itself is never formed
            if (primes.size() > 64)
                throw std::invalid_argument("at most 64 primes supported");
            if (m < 1) throw std::invalid_argument("chain needs m >= 1");
        } else {
            n = checked_primorial(primes);
        }
    } else {
        if (n < 2) throw std::invalid_argument("modulus must be >= 2");
        if (!primes.empty())
            throw std::invalid_argument("scenario takes n, not a prime list");
        if (scenario == Scenario::erdos_ab) {
            uint32_t na = normalize(a, n), nb = normalize(b, n);
            if (na == 0 || nb == 0)
                throw std::invalid_argument("erdos-ab weights must be nonzero");
            if (!is_unit(na, n) || !is_unit(normalize(a + b, n), n) ||
                !is_unit(normalize(a - b, n), n))
                throw std::invalid_argument("erdos-ab requires a, a+b, a-b units");
        }
    }
}

CounterRng::CounterRng(uint64_t seed, uint64_t stream)
    : state_(mix64(seed + 0x9E3779B97F4A7C15ull) ^
             mix64(stream * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull)) {}

uint64_t CounterRng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
}

uint32_t CounterRng::below(uint32_t bound) {
    // rejection keeps the distribution exactly uniform
    const uint64_t threshold = (0 - uint64_t(bound)) % bound;
    for (;;) {
        uint64_t r = next();
        if (r >= threshold) return static_cast<uint32_t>(r % bound);
    }
}

ZnSequence sample_sequence(uint32_t n, uint32_t m, uint64_t seed, uint64_t trial) {
    CounterRng rng(seed, trial);
    std::vector<uint32_t> e(m);
    for (auto& v : e) v = rng.below(n);
    return ZnSequence::reduced(n, std::move(e));
}

WilsonInterval wilson95(uint32_t successes, uint32_t trials) {
    const double z = 1.959963984540054;
    // pin the boundary cases so the interval always brackets the estimate
    if (successes == 0) {
        double t = trials;
        return {0.0, (z * z / t) / (1.0 + z * z / t)};
    }
    if (successes == trials) {
        double t = trials;
        return {(1.0) / (1.0 + z * z / t), 1.0};
    }
    const double t = trials, p = double(successes) / t;
    const double denom = 1.0 + z * z / t;
    const double center = (p + z * z / (2.0 * t)) / denom;
    const double half =
        (z / denom) * std::sqrt(p * (1.0 - p) / t + z * z / (4.0 * t * t));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

FactorizationProfile decompose_element(uint32_t x, const std::vector<uint32_t>& primes) {
    const uint32_t n = checked_primorial(primes);
    if (x == 0 || x >= n) throw std::invalid_argument("x must be in [1, n-1]");

    FactorizationProfile prof;
    prof.x = x;
    uint64_t pA = 1;
    for (uint32_t i = 0; i < primes.size(); ++i)
        if (x % primes[i] == 0) {
            prof.prime_indices.push_back(i);
            pA *= primes[i];
            if ((x / primes[i]) % primes[i] == 0) prof.integer_squarefree = false;
        }

    // u = 1 on coordinates in A, x / p_A elsewhere; combine by CRT
    uint64_t u = 0;
    for (uint32_t j = 0; j < primes.size(); ++j) {
        const uint64_t p = primes[j];
        uint64_t rj;
        if (x % p == 0) {
            rj = 1;
        } else {
            uint64_t inv = modpow(pA % p, p - 2, p);
            rj = (x % p) * inv % p;
        }
        const uint64_t M = n / p;
        uint64_t Minv = modpow(M % p, p - 2, p);
        u = (u + rj % p * (M % n) % n * Minv) % n;
    }
    prof.unit_part = static_cast<uint32_t>(u);
    if (u * pA % n != x || !is_unit(prof.unit_part, n))
        throw std::logic_error("CRT decomposition failed self-check");
    return prof;
}

std::optional<Lemma1Certificate> lemma1_certify(const ZnSequence& x,
                                                const std::vector<uint32_t>& primes) {
    const uint32_t n = checked_primorial(primes);
    if (x.n != n) throw std::invalid_argument("modulus mismatch");
    for (uint32_t v : x.entries)
        if (v == 0) throw std::invalid_argument("zero entry");

    std::vector<uint32_t> sorted = x.entries;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;  // the lemma needs pairwise distinct entries

    const size_t r = primes.size();
    Lemma1Certificate cert;
    std::vector<uint32_t> missing(r, 0);  // entries whose A(x) omits prime i
    for (uint32_t v : x.entries) {
        std::vector<uint32_t> A;
        for (uint32_t i = 0; i < r; ++i) {
            if (v % primes[i] == 0)
                A.push_back(i);
            else
                ++missing[i];
        }
        cert.prime_index_sets.push_back(std::move(A));
    }
    // intersection over the others is empty for every i  <=>  every prime
    // index is omitted by at least two entries
    for (uint32_t i = 0; i < r; ++i)
        if (missing[i] < 2) return std::nullopt;
    return cert;
}

TrialReport run_experiment(const TrialConfig& config) {
    TrialConfig cfg = config;
    cfg.validate();

    TrialReport rep;
    rep.config = cfg;

    std::function<std::pair<bool, int>(uint64_t)> trial_fn;

    if (cfg.scenario == Scenario::primorial_chain) {
        trial_fn = [cfg](uint64_t t) -> std::pair<bool, int> {
            CounterRng rng(cfg.seed, t);
            std::vector<uint64_t> sets(cfg.m, 0);
            for (auto& s : sets)
                for (size_t i = 0; i < cfg.primes.size(); ++i)
                    if (rng.below(cfg.primes[i]) == 0) s |= uint64_t(1) << i;
            std::sort(sets.begin(), sets.end(), [](uint64_t a, uint64_t b) {
                return std::popcount(a) < std::popcount(b);
            });
            for (size_t j = 0; j + 1 < sets.size(); ++j)
                if ((sets[j] | sets[j + 1]) != sets[j + 1]) return {false, kExact};
            return {true, kExact};
        };
    } else if (cfg.scenario == Scenario::davenport_units_squarefree) {
        const bool exact = cfg.n <= cfg.exact_threshold;
        rep.lower_bound = !exact;
        std::shared_ptr<const WeightSet> A;
        if (exact) A = std::make_shared<WeightSet>(WeightSet::units(cfg.n));
        trial_fn = [cfg, exact, A](uint64_t t) -> std::pair<bool, int> {
            ZnSequence x = sample_sequence(cfg.n, cfg.m, cfg.seed, t);
            if (exact) return {decide_davenport(x, *A, false).is_z_sequence, kExact};
            // certificate mode: a zero entry is itself a zero-sum; otherwise
            // apply the sufficient condition to the distinct nonzero entries
            std::vector<uint32_t> distinct = x.entries;
            std::sort(distinct.begin(), distinct.end());
            if (distinct.front() == 0) return {true, kExact};
            distinct.erase(std::unique(distinct.begin(), distinct.end()),
                           distinct.end());
            ZnSequence y = ZnSequence::reduced(cfg.n, std::move(distinct));
            return {lemma1_certify(y, cfg.primes).has_value(), kCert};
        };
    } else {
        ZKind kind;
        std::shared_ptr<const WeightSet> A;
        switch (cfg.scenario) {
            case Scenario::erdos_unweighted:
                kind = ZKind::erdos;
                A = std::make_shared<WeightSet>(WeightSet::singleton(cfg.n, 1));
                break;
            case Scenario::erdos_ab:
                kind = ZKind::erdos;
                A = std::make_shared<WeightSet>(WeightSet::explicit_set(
                    cfg.n, {int64_t(normalize(cfg.a, cfg.n)),
                            int64_t(normalize(cfg.b, cfg.n))}));
                break;
            case Scenario::erdos_pm1:
                kind = ZKind::erdos;
                A = std::make_shared<WeightSet>(WeightSet::plus_minus_one(cfg.n));
                break;
            case Scenario::davenport_unweighted:
                kind = ZKind::davenport;
                A = std::make_shared<WeightSet>(WeightSet::singleton(cfg.n, 1));
                break;
            case Scenario::davenport_pm1:
                kind = ZKind::davenport;
                A = std::make_shared<WeightSet>(WeightSet::plus_minus_one(cfg.n));
                break;
            default:
                throw std::logic_error("unhandled scenario");
        }
        trial_fn = [cfg, kind, A](uint64_t t) -> std::pair<bool, int> {
            ZnSequence x = sample_sequence(cfg.n, cfg.m, cfg.seed, t);
            return {decide(x, *A, kind, false).is_z_sequence, kExact};
        };
    }

    uint32_t nthreads = cfg.threads ? cfg.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, cfg.trials);

    std::vector<uint32_t> succ(nthreads, 0);
    std::vector<std::array<uint32_t, 3>> methods(nthreads, {0, 0, 0});
    auto work = [&](uint32_t w) {
        for (uint64_t t = w; t < cfg.trials; t += nthreads) {
            auto [ok, mi] = trial_fn(t);
            if (ok) ++succ[w];
            ++methods[w][mi];
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (uint32_t w = 0; w < nthreads; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    std::array<uint32_t, 3> total_methods{0, 0, 0};
    for (uint32_t w = 0; w < nthreads; ++w) {
        rep.successes += succ[w];
        for (int i = 0; i < 3; ++i) total_methods[i] += methods[w][i];
    }
    for (int i = 0; i < 3; ++i)
        if (total_methods[i]) rep.method_counts[kMethodNames[i]] = total_methods[i];
    rep.estimate = double(rep.successes) / cfg.trials;
    auto ci = wilson95(rep.successes, cfg.trials);
    rep.ci_lo = ci.lo;
    rep.ci_hi = ci.hi;
    return rep;
}

Rational column_increasing_probability(uint32_t p, uint32_t m) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 3");
    using boost::multiprecision::cpp_int;
    // sum_{j=0}^{m} (1/p)^j (1-1/p)^{m-j} = (sum_{e=0}^{m} (p-1)^e) / p^m
    cpp_int num = 0, pw = 1, den = 1;
    for (uint32_t e = 0; e <= m; ++e) {
        num += pw;
        pw *= p - 1;
    }
    for (uint32_t e = 0; e < m; ++e) den *= p;
    return Rational(num, den);
}

Rational column_increasing_probability_literal(uint32_t p, uint32_t m) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 3");
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = p - 2;
    for (uint32_t e = 0; e <= m; ++e) {
        num *= p - 1;
        den *= p;
    }
    return Rational(num - 1, den);
}

Rational chain_factor_literal(uint32_t p, uint32_t m) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 3");
    Rational q(int64_t(p) - 1, p);
    Rational inv(1, p);
    Rational a = 1, b = 1;
    for (uint32_t e = 0; e <= m; ++e) {
        a *= q;
        b *= inv;
    }
    return (a - b) * Rational(p, int64_t(p) - 2);
}

Rational chain_closed_form(const std::vector<uint32_t>& primes, uint32_t m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    Rational out = 1;
    for (uint32_t f = 2; f <= m; ++f) out *= f;
    for (uint32_t p : primes) out *= chain_factor_literal(p, m);
    return out;
}

ChainComparison chain_probability(const std::vector<uint32_t>& primes, uint32_t m,
                                  uint32_t trials, uint64_t seed, uint32_t threads) {
    ChainComparison cmp;
    cmp.closed_form = chain_closed_form(primes, m);

    TrialConfig cfg;
    cfg.scenario = Scenario::primorial_chain;
    cfg.primes = primes;
    cfg.m = m;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.threads = threads;
    cmp.simulated = run_experiment(cfg);

    const double cf = cmp.closed_form.convert_to<double>();
    cmp.closed_form_in_ci = cf >= cmp.simulated.ci_lo && cf <= cmp.simulated.ci_hi;
    return cmp;
}

}  // namespace zerosum
