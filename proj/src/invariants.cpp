#include "zerosum/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "zerosum/common.hpp"

namespace zerosum {

namespace {

struct SearchContext {
    uint32_t n;
    ZKind zkind;
    std::vector<uint32_t> weights;
    uint32_t cap;  // 0 = unlimited multiplicity
    uint64_t budget;
    bool unit_prune = false;         // davenport kinds: fix a scaling orbit rep
    bool translation_prune = false;  // erdos kinds, singleton A: first entry 0

    uint64_t examined = 0;
    std::vector<uint32_t> cur;
    std::vector<uint32_t> mult;
    std::vector<uint32_t> best;

    SearchContext(uint32_t n_, ZKind zk) : n(n_), zkind(zk), mult(n_, 0) {}

    template <class State>
    void dfs(const State& st, uint32_t min_next, bool units_allowed) {
        if (cur.size() > best.size()) best = cur;
        for (uint32_t v = min_next; v < n; ++v) {
            if (cap && mult[v] == cap) continue;
            if (cur.empty()) {
                if (unit_prune && v != 1 && is_unit(v, n)) continue;
                if (translation_prune && v != 0) break;
            } else if (unit_prune && !units_allowed && is_unit(v, n)) {
                continue;
            }
            if (++examined > budget)
                throw budget_exceeded("invariant search budget exceeded");
            State child = st;
            child.push(v, weights);
            bool z = (zkind == ZKind::davenport)
                         ? zero_reached(child)
                         : zero_support_n(child);
            if (z) continue;  // any extension stays a Z-sequence
            cur.push_back(v);
            ++mult[v];
            bool next_units_allowed = units_allowed || (cur.size() == 1 && v == 1);
            dfs(child, v, next_units_allowed);
            --mult[v];
            cur.pop_back();
        }
    }

    static bool zero_reached(const DavenportState& st) { return st.zero_reachable(); }
    static bool zero_reached(const ErdosState&) { return false; }
    static bool zero_support_n(const ErdosState& st) {
        return st.zero_sum_of_support_n();
    }
    static bool zero_support_n(const DavenportState&) { return false; }
};

}  // namespace

InvariantResult compute_invariant(const InvariantQuery& q) {
    if (q.n < 2) throw std::invalid_argument("modulus must be >= 2");
    const bool restricted = q.kind == InvariantKind::restricted_erdos ||
                            q.kind == InvariantKind::restricted_davenport;
    const bool erdos_like = q.kind == InvariantKind::erdos ||
                            q.kind == InvariantKind::restricted_erdos;
    if (restricted && q.k < 1) throw std::invalid_argument("k must be >= 1");
    if (!restricted && !q.A) throw std::invalid_argument("weighted kind needs A");

    WeightSet A = restricted ? WeightSet::singleton(q.n, 1) : *q.A;
    if (A.modulus() != q.n) throw std::invalid_argument("modulus mismatch");

    SearchContext ctx(q.n, erdos_like ? ZKind::erdos : ZKind::davenport);
    ctx.weights = A.members();
    ctx.cap = restricted ? q.k : 0;
    ctx.budget = q.budget;
    if (q.use_symmetry) {
        if (erdos_like) {
            // translation x -> x+c maps witnesses to witnesses when every
            // nonzero weight contributes c once per support slot: singleton A
            ctx.translation_prune = (A.size() == 1);
        } else {
            ctx.unit_prune = true;
        }
    }

    if (erdos_like) {
        ErdosState root(q.n);
        ctx.dfs(root, 0, false);
    } else {
        DavenportState root(q.n);
        ctx.dfs(root, 0, false);
    }

    InvariantResult res;
    res.value = static_cast<uint32_t>(ctx.best.size()) + 1;
    res.extremal_witness = ZnSequence::reduced(q.n, ctx.best);
    res.sequences_examined = ctx.examined;

    if (!erdos_like && res.value > q.n)
        throw verification_failure("computed Davenport constant exceeds n");
    return res;
}

InvariantResult davenport_constant(uint32_t n, const WeightSet& A, uint64_t budget) {
    InvariantQuery q;
    q.n = n;
    q.kind = InvariantKind::davenport;
    q.A = A;
    q.budget = budget;
    return compute_invariant(q);
}

InvariantResult erdos_constant(uint32_t n, const WeightSet& A, uint64_t budget) {
    InvariantQuery q;
    q.n = n;
    q.kind = InvariantKind::erdos;
    q.A = A;
    q.budget = budget;
    return compute_invariant(q);
}

InvariantResult restricted_erdos_constant(uint32_t n, uint32_t k, uint64_t budget) {
    InvariantQuery q;
    q.n = n;
    q.kind = InvariantKind::restricted_erdos;
    q.k = k;
    q.budget = budget;
    return compute_invariant(q);
}

InvariantResult restricted_davenport_constant(uint32_t n, uint32_t k,
                                              uint64_t budget) {
    InvariantQuery q;
    q.n = n;
    q.kind = InvariantKind::restricted_davenport;
    q.k = k;
    q.budget = budget;
    return compute_invariant(q);
}

bool verify_yuan_zeng(uint32_t n, const WeightSet& A, uint64_t budget) {
    return erdos_constant(n, A, budget).value ==
           davenport_constant(n, A, budget).value + n - 1;
}

std::vector<ScanCell> scan_conjecture(uint32_t n_lo, uint32_t n_hi, uint32_t k_lo,
                                      uint32_t k_hi, uint64_t budget) {
    std::vector<ScanCell> cells;
    for (uint32_t n = n_lo; n <= n_hi; ++n) {
        for (uint32_t k = k_lo; k <= k_hi; ++k) {
            ScanCell cell;
            cell.n = n;
            cell.k = k;
            cell.expected = n + k;
            try {
                InvariantResult r = restricted_erdos_constant(n, k, budget);
                cell.value = r.value;
                cell.matches = (r.value == cell.expected);
                cell.witness = r.extremal_witness.entries;
                cell.sequences_examined = r.sequences_examined;
            } catch (const budget_exceeded&) {
                cell.skipped = true;
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

void enumerate_restricted_multisets(
    uint32_t n, uint32_t m, uint32_t k,
    const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (uint64_t(m) > uint64_t(k) * n) return;  // class is empty
    std::vector<uint32_t> cur;
    cur.reserve(m);
    std::vector<uint32_t> mult(n, 0);
    bool stop = false;
    auto rec = [&](auto&& self, uint32_t min_next) -> void {
        if (stop) return;
        if (cur.size() == m) {
            if (!visit(cur)) stop = true;
            return;
        }
        for (uint32_t v = min_next; v < n && !stop; ++v) {
            if (mult[v] == k) continue;
            // remaining slots must still be fillable
            cur.push_back(v);
            ++mult[v];
            uint64_t room = 0;
            for (uint32_t w = v; w < n; ++w) room += k - mult[w];
            if (room >= m - cur.size()) self(self, v);
            --mult[v];
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace zerosum
