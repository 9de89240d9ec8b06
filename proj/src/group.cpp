#include "zerosum/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zerosum {

static void check_modulus(uint32_t n) {
    if (n < 2) throw std::invalid_argument("modulus must be >= 2");
}

uint32_t normalize(int64_t x, uint32_t n) {
    check_modulus(n);
    int64_t r = x % static_cast<int64_t>(n);
    if (r < 0) r += n;
    return static_cast<uint32_t>(r);
}

bool is_unit(uint32_t x, uint32_t n) { return std::gcd(x, n) == 1; }

uint32_t euler_phi(uint32_t n) {
    uint32_t result = n, m = n;
    for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ZnSequence::ZnSequence(uint32_t modulus, std::vector<int64_t> raw) : n(modulus) {
    check_modulus(modulus);
    entries.reserve(raw.size());
    for (int64_t v : raw) entries.push_back(normalize(v, modulus));
}

ZnSequence ZnSequence::reduced(uint32_t modulus, std::vector<uint32_t> entries) {
    check_modulus(modulus);
    for (uint32_t v : entries)
        if (v >= modulus) throw std::invalid_argument("entry out of range");
    ZnSequence s;
    s.n = modulus;
    s.entries = std::move(entries);
    return s;
}

std::vector<uint32_t> ZnSequence::multiplicities() const {
    std::vector<uint32_t> mult(n, 0);
    for (uint32_t v : entries) ++mult[v];
    return mult;
}

uint32_t ZnSequence::max_multiplicity() const {
    uint32_t best = 0;
    for (uint32_t m : multiplicities()) best = std::max(best, m);
    return best;
}

bool is_k_restricted(const ZnSequence& x, uint32_t k) {
    if (k < 1) throw std::invalid_argument("multiplicity cap must be >= 1");
    return x.max_multiplicity() <= k;
}

WeightSet WeightSet::singleton(uint32_t n, int64_t a) {
    check_modulus(n);
    uint32_t v = normalize(a, n);
    if (v == 0) throw std::invalid_argument("weight 0 excluded: A subset of [1, n-1]");
    WeightSet w(n, WeightKind::singleton);
    w.members_ = {v};
    return w;
}

WeightSet WeightSet::plus_minus_one(uint32_t n) {
    check_modulus(n);
    WeightSet w(n, WeightKind::plus_minus_one);
    w.members_ = {1};
    if (n - 1 != 1) w.members_.push_back(n - 1);
    return w;
}

WeightSet WeightSet::units(uint32_t n, uint64_t materialize_limit) {
    check_modulus(n);
    WeightSet w(n, WeightKind::units);
    if (n <= materialize_limit) {
        w.members_.reserve(euler_phi(n));
        for (uint32_t v = 1; v < n; ++v)
            if (is_unit(v, n)) w.members_.push_back(v);
    } else {
        w.materialized_ = false;
    }
    return w;
}

WeightSet WeightSet::explicit_set(uint32_t n, std::vector<int64_t> values) {
    check_modulus(n);
    if (values.empty()) throw std::invalid_argument("weight set must be nonempty");
    WeightSet w(n, WeightKind::explicit_set);
    for (int64_t v : values) {
        if (v == 0) throw std::invalid_argument("weight 0 excluded: A subset of [1, n-1]");
        if (v < 1 || v >= static_cast<int64_t>(n))
            throw std::invalid_argument("weight set member out of [1, n-1]");
        w.members_.push_back(static_cast<uint32_t>(v));
    }
    std::sort(w.members_.begin(), w.members_.end());
    w.members_.erase(std::unique(w.members_.begin(), w.members_.end()), w.members_.end());
    return w;
}

bool WeightSet::contains(uint32_t v) const {
    if (v == 0 || v >= n_) return false;
    if (!materialized_) return is_unit(v, n_);
    return std::binary_search(members_.begin(), members_.end(), v);
}

uint64_t WeightSet::size() const {
    if (!materialized_) return euler_phi(n_);
    return members_.size();
}

const std::vector<uint32_t>& WeightSet::members() const {
    if (!materialized_)
        throw std::invalid_argument(
            "units weight set too large to materialize at this modulus");
    return members_;
}

std::string WeightSet::describe() const {
    switch (kind_) {
        case WeightKind::singleton: return "{" + std::to_string(members_[0]) + "}";
        case WeightKind::plus_minus_one: return "pm1";
        case WeightKind::units: return "units";
        case WeightKind::explicit_set: {
            std::string s = "{";
            for (size_t i = 0; i < members_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(members_[i]);
            }
            return s + "}";
        }
    }
    return "?";
}

std::vector<size_t> WitnessVector::support() const {
    std::vector<size_t> idx;
    for (size_t i = 0; i < coefficients.size(); ++i)
        if (coefficients[i] != 0) idx.push_back(i);
    return idx;
}

}  // namespace zerosum
