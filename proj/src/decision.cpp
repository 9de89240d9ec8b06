#include "zerosum/decision.hpp"

#include <algorithm>
#include <stdexcept>

#include "zerosum/common.hpp"

namespace zerosum {

namespace {

void check_same_modulus(const ZnSequence& x, const WeightSet& A) {
    if (x.n != A.modulus()) throw std::invalid_argument("modulus mismatch");
}

}  // namespace

void DavenportState::push(uint32_t entry, const std::vector<uint32_t>& weights) {
    Bitset next = reached_;
    for (uint32_t a : weights) {
        uint32_t shift = static_cast<uint32_t>((uint64_t(a) * entry) % n_);
        next.or_rotated(reached_, shift);
        next.set(shift);  // first nonzero coefficient, all-zero prefix before it
    }
    reached_ = std::move(next);
}

ErdosState::ErdosState(uint32_t n) : n_(n), by_count_(n + 1, Bitset(n)) {
    by_count_[0].set(0);
}

void ErdosState::push(uint32_t entry, const std::vector<uint32_t>& weights) {
    for (uint32_t c = n_; c-- > 0;) {
        if (!by_count_[c].any()) continue;
        for (uint32_t a : weights) {
            uint32_t shift = static_cast<uint32_t>((uint64_t(a) * entry) % n_);
            by_count_[c + 1].or_rotated(by_count_[c], shift);
        }
    }
}

bool ErdosState::zero_sum_of_support_n() const { return by_count_[n_].test(0); }

DecisionOutcome decide_davenport(const ZnSequence& x, const WeightSet& A,
                                 bool want_witness) {
    check_same_modulus(x, A);
    const uint32_t n = x.n;
    const auto& weights = A.members();
    const size_t m = x.size();

    if (!want_witness) {
        DavenportState st(n);
        for (uint32_t v : x.entries) {
            st.push(v, weights);
            if (st.zero_reachable()) return {true, std::nullopt};
        }
        return {false, std::nullopt};
    }

    // layers[i] = residues reachable after i entries with >= 1 nonzero coeff
    std::vector<Bitset> layers;
    layers.reserve(m + 1);
    layers.emplace_back(n);
    for (size_t i = 0; i < m; ++i) {
        Bitset next = layers.back();
        for (uint32_t a : weights) {
            uint32_t shift = static_cast<uint32_t>((uint64_t(a) * x.entries[i]) % n);
            next.or_rotated(layers.back(), shift);
            next.set(shift);
        }
        layers.push_back(std::move(next));
    }
    if (!layers[m].test(0)) return {false, std::nullopt};

    WitnessVector w;
    w.coefficients.assign(m, 0);
    uint32_t t = 0;
    for (size_t i = m; i > 0; --i) {
        if (layers[i - 1].test(t)) continue;  // coefficient 0
        const uint32_t xi = x.entries[i - 1];
        bool placed = false;
        for (uint32_t a : weights) {
            uint32_t shift = static_cast<uint32_t>((uint64_t(a) * xi) % n);
            uint32_t prev = (t + n - shift) % n;
            if (layers[i - 1].test(prev)) {
                w.coefficients[i - 1] = a;
                t = prev;
                placed = true;
                break;
            }
        }
        if (!placed) {
            // predecessor is the all-zero prefix: this is the first nonzero
            for (uint32_t a : weights) {
                if (static_cast<uint32_t>((uint64_t(a) * xi) % n) == t) {
                    w.coefficients[i - 1] = a;
                    placed = true;
                    break;
                }
            }
            if (!placed) throw std::logic_error("davenport witness walk failed");
            break;  // everything before i-1 has coefficient 0
        }
    }
    return {true, std::move(w)};
}

DecisionOutcome decide_erdos(const ZnSequence& x, const WeightSet& A,
                             bool want_witness) {
    check_same_modulus(x, A);
    const uint32_t n = x.n;
    const size_t m = x.size();
    if (m < n) return {false, std::nullopt};  // |Supp(a)| = n is impossible
    const auto& weights = A.members();

    if (!want_witness) {
        // rolling layers, support counts pruned to the feasible window
        std::vector<Bitset> cur(n + 1, Bitset(n));
        cur[0].set(0);
        for (size_t i = 0; i < m; ++i) {
            const uint32_t xi = x.entries[i];
            const uint32_t hi = static_cast<uint32_t>(std::min<size_t>(i, n - 1));
            const uint32_t lo = (n + i < m) ? 0 : static_cast<uint32_t>(n + i - m);
            for (uint32_t c = hi + 1; c-- > lo;) {
                if (!cur[c].any()) continue;
                for (uint32_t a : weights) {
                    uint32_t shift = static_cast<uint32_t>((uint64_t(a) * xi) % n);
                    cur[c + 1].or_rotated(cur[c], shift);
                }
            }
            if (cur[n].test(0)) return {true, std::nullopt};
        }
        return {false, std::nullopt};
    }

    const uint64_t bits = uint64_t(m + 1) * (n + 1) * n;
    if (bits > (uint64_t(1) << 34))
        throw budget_exceeded("erdos DP state exceeds the memory guard");

    std::vector<std::vector<Bitset>> layers(m + 1,
                                            std::vector<Bitset>(n + 1, Bitset(n)));
    layers[0][0].set(0);
    for (size_t i = 0; i < m; ++i) {
        const uint32_t xi = x.entries[i];
        for (uint32_t c = 0; c <= n; ++c) {
            if (!layers[i][c].any()) continue;
            layers[i + 1][c] |= layers[i][c];
            if (c < n) {
                for (uint32_t a : weights) {
                    uint32_t shift = static_cast<uint32_t>((uint64_t(a) * xi) % n);
                    layers[i + 1][c + 1].or_rotated(layers[i][c], shift);
                }
            }
        }
    }
    if (!layers[m][n].test(0)) return {false, std::nullopt};

    WitnessVector w;
    w.coefficients.assign(m, 0);
    uint32_t t = 0, c = n;
    for (size_t i = m; i > 0; --i) {
        if (layers[i - 1][c].test(t)) continue;  // coefficient 0
        const uint32_t xi = x.entries[i - 1];
        bool placed = false;
        for (uint32_t a : weights) {
            uint32_t shift = static_cast<uint32_t>((uint64_t(a) * xi) % n);
            uint32_t prev = (t + n - shift) % n;
            if (c > 0 && layers[i - 1][c - 1].test(prev)) {
                w.coefficients[i - 1] = a;
                t = prev;
                --c;
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("erdos witness walk failed");
    }
    return {true, std::move(w)};
}

DecisionOutcome decide(const ZnSequence& x, const WeightSet& A, ZKind kind,
                       bool want_witness) {
    return kind == ZKind::davenport ? decide_davenport(x, A, want_witness)
                                    : decide_erdos(x, A, want_witness);
}

bool brute_force_decide(const ZnSequence& x, const WeightSet& A, ZKind kind) {
    check_same_modulus(x, A);
    const uint32_t n = x.n;
    const auto& weights = A.members();
    const size_t m = x.size();

    uint64_t total = 1;
    for (size_t i = 0; i < m; ++i) {
        total *= weights.size() + 1;
        if (total > 100'000'000ull)
            throw budget_exceeded("instance too large for literal enumeration");
    }

    // odometer over (A u {0})^m; digit 0 means coefficient 0
    std::vector<uint32_t> digit(m, 0);
    for (uint64_t it = 1; it < total; ++it) {
        size_t pos = 0;
        while (digit[pos] == weights.size()) {
            digit[pos] = 0;
            ++pos;
        }
        ++digit[pos];
        uint64_t sum = 0;
        size_t support = 0;
        for (size_t i = 0; i < m; ++i) {
            if (digit[i] == 0) continue;
            ++support;
            sum += uint64_t(weights[digit[i] - 1]) * x.entries[i] % n;
        }
        if (sum % n != 0) continue;
        if (kind == ZKind::davenport || support == n) return true;
    }
    return false;
}

bool witness_valid(const ZnSequence& x, const WeightSet& A, ZKind kind,
                   const WitnessVector& w) {
    if (w.coefficients.size() != x.size()) return false;
    uint64_t sum = 0;
    size_t support = 0;
    for (size_t i = 0; i < w.coefficients.size(); ++i) {
        uint32_t a = w.coefficients[i];
        if (a == 0) continue;
        if (!A.contains(a)) return false;
        ++support;
        sum += uint64_t(a) * x.entries[i] % x.n;
    }
    if (support == 0) return false;
    if (kind == ZKind::erdos && support != x.n) return false;
    return sum % x.n == 0;
}

}  // namespace zerosum
