// Command-line front end: every subcommand prints one JSON document on stdout
// with the envelope {schema, status, payload, diagnostics}.
// Exit codes: 0 ok, 2 usage/parse error, 3 budget exceeded, 4 internal
// verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerosum/common.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/decision.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/montecarlo.hpp"
#include "zerosum/sumsets.hpp"

using json = nlohmann::json;
using namespace zerosum;

namespace {

struct GlobalOpts {
    bool pretty = false;
    uint32_t threads = 0;  // 0 = available parallelism
};

void emit(const GlobalOpts& g, const std::string& status, json payload,
          std::vector<std::string> diagnostics = {}) {
    json doc{{"schema", "zerosum/1"},
             {"status", status},
             {"payload", std::move(payload)},
             {"diagnostics", diagnostics}};
    if (g.pretty)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << doc.dump() << "\n";
}

std::vector<int64_t> parse_int_list(const std::string& csv) {
    std::vector<int64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: " + csv);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<int64_t> read_int_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::vector<int64_t> out;
    int64_t v;
    while (in >> v) out.push_back(v);
    return out;
}

WeightSet parse_weights(uint32_t n, const std::string& spec) {
    if (spec == "pm1") return WeightSet::plus_minus_one(n);
    if (spec == "units") return WeightSet::units(n);
    return WeightSet::explicit_set(n, parse_int_list(spec));
}

std::pair<uint32_t, uint32_t> parse_range(const std::string& spec) {
    auto pos = spec.find("..");
    if (pos == std::string::npos) {
        uint32_t v = static_cast<uint32_t>(std::stoul(spec));
        return {v, v};
    }
    uint32_t lo = static_cast<uint32_t>(std::stoul(spec.substr(0, pos)));
    uint32_t hi = static_cast<uint32_t>(std::stoul(spec.substr(pos + 2)));
    if (lo > hi) throw std::invalid_argument("empty range: " + spec);
    return {lo, hi};
}

ZKind parse_zkind(const std::string& kind) {
    if (kind == "davenport") return ZKind::davenport;
    if (kind == "erdos") return ZKind::erdos;
    throw std::invalid_argument("kind must be davenport or erdos");
}

json sequence_json(const ZnSequence& s) {
    return json{{"n", s.n}, {"entries", s.entries}};
}

json trial_report_json(const TrialReport& r) {
    json j{{"scenario", scenario_name(r.config.scenario)},
           {"m", r.config.m},
           {"trials", r.config.trials},
           {"seed", r.config.seed},
           {"successes", r.successes},
           {"estimate", r.estimate},
           {"ci95", json::array({r.ci_lo, r.ci_hi})},
           {"method_counts", r.method_counts}};
    if (r.config.primes.empty())
        j["n"] = r.config.n;
    else
        j["primes"] = r.config.primes;
    if (r.config.scenario == Scenario::erdos_ab) {
        j["a"] = r.config.a;
        j["b"] = r.config.b;
    }
    if (r.lower_bound) j["lower_bound"] = true;
    return j;
}

json construction_json(const ConstructionReport& r) {
    return json{{"sequence", sequence_json(r.sequence)},
                {"claimed_kind", r.claimed_kind},
                {"A", r.claimed_A.describe()},
                {"verified", r.verified},
                {"fallback_used", r.fallback_used},
                {"note", r.note}};
}

json law_report_json(const LawReport& r) {
    json j{{"law", law_name(r.law)},
           {"holds", r.holds},
           {"measured", r.measured},
           {"bound", r.bound}};
    if (r.law == SumsetLaw::szemeredi) {
        j["zero_in_sums"] = r.zero_in_sums;
        j["ratio"] = r.ratio;
    }
    return j;
}

// Every admissible pair (A, B) at this modulus (szemeredi: every A).
json exhaustive_law_sweep(SumsetLaw law, uint32_t n) {
    uint64_t checked = 0, violations = 0;
    double min_ratio = 1e300;
    json first_violation = nullptr;
    auto to_set = [&](uint32_t mask) {
        ResidueSet s(n);
        for (uint32_t v = 0; v < n; ++v)
            if (mask >> v & 1) s.bits.set(v);
        return s;
    };
    const uint32_t lim = uint32_t(1) << n;
    if (law == SumsetLaw::szemeredi) {
        for (uint32_t ma = 1; ma < lim; ++ma) {
            LawReport rep = verify_law(law, to_set(ma));
            ++checked;
            if (!rep.zero_in_sums) min_ratio = std::min(min_ratio, rep.ratio);
            if (!rep.holds && ++violations == 1)
                first_violation = json{{"A", to_set(ma).values()}};
        }
    } else {
        for (uint32_t ma = 1; ma < lim; ++ma)
            for (uint32_t mb = 1; mb < lim; ++mb) {
                ResidueSet A = to_set(ma), B = to_set(mb);
                LawReport rep;
                try {
                    rep = verify_law(law, A, B);
                } catch (const std::invalid_argument&) {
                    continue;  // precondition not met: outside the law's scope
                }
                ++checked;
                if (!rep.holds && ++violations == 1)
                    first_violation = json{{"A", A.values()}, {"B", B.values()}};
            }
    }
    json j{{"law", law_name(law)},
           {"n", n},
           {"checked", checked},
           {"violations", violations},
           {"holds", violations == 0}};
    if (law == SumsetLaw::szemeredi && min_ratio < 1e300) j["min_ratio"] = min_ratio;
    if (!first_violation.is_null()) j["first_violation"] = first_violation;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and empirical engine for weighted zero-sum problems over Z_n"};
    app.require_subcommand(1);
    app.fallthrough();  // --pretty / --threads may follow the subcommand

    GlobalOpts g;
    app.add_flag("--pretty", g.pretty, "indent the JSON output");
    app.add_option("--threads", g.threads, "worker threads (0 = all)");

    // decide
    auto* decide_cmd = app.add_subcommand("decide", "Z-sequence membership");
    uint32_t d_n = 0;
    std::string d_A, d_kind = "davenport", d_seq, d_seq_file;
    decide_cmd->add_option("--n", d_n, "modulus")->required();
    decide_cmd->add_option("--A", d_A, "weights: pm1 | units | list")->required();
    decide_cmd->add_option("--kind", d_kind, "davenport | erdos");
    decide_cmd->add_option("--seq", d_seq, "comma-separated entries");
    decide_cmd->add_option("--seq-file", d_seq_file, "file, one integer per line");

    // invariant
    auto* inv_cmd = app.add_subcommand("invariant", "exact zero-sum invariants");
    uint32_t i_n = 0, i_k = 1;
    uint64_t i_budget = 1'000'000'000;
    std::string i_kind, i_A;
    inv_cmd->add_option("--n", i_n, "modulus")->required();
    inv_cmd
        ->add_option("--kind", i_kind,
                     "davenport | erdos | restricted-erdos | restricted-davenport")
        ->required();
    inv_cmd->add_option("--A", i_A, "weights (weighted kinds)");
    inv_cmd->add_option("--k", i_k, "multiplicity cap (restricted kinds)");
    inv_cmd->add_option("--budget", i_budget, "max multisets examined");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "seeded Monte Carlo scenarios");
    TrialConfig s_cfg;
    std::string s_scenario, s_primes;
    sim_cmd->add_option("--scenario", s_scenario, "scenario name")->required();
    sim_cmd->add_option("--n", s_cfg.n, "modulus");
    sim_cmd->add_option("--primes", s_primes, "comma-separated distinct primes");
    sim_cmd->add_option("--m", s_cfg.m, "sequence length")->required();
    sim_cmd->add_option("--trials", s_cfg.trials, "trial count")->required();
    sim_cmd->add_option("--seed", s_cfg.seed, "64-bit seed");
    sim_cmd->add_option("--a", s_cfg.a, "first weight (erdos-ab)");
    sim_cmd->add_option("--b", s_cfg.b, "second weight (erdos-ab)");
    sim_cmd->add_option("--exact-threshold", s_cfg.exact_threshold,
                        "largest n decided by exact DP for the units scenario");

    // construct
    auto* con_cmd = app.add_subcommand("construct", "extremal sequence generators");
    std::string c_kind;
    uint32_t c_n = 0, c_p = 0, c_k = 1;
    con_cmd
        ->add_option("--kind", c_kind,
                     "ones | signed-powers | divisor-chain | egz | harborth2 | "
                     "restricted-erdos-extremal | restricted-davenport")
        ->required();
    con_cmd->add_option("--n", c_n, "modulus");
    con_cmd->add_option("--p", c_p, "prime modulus (restricted-erdos-extremal)");
    con_cmd->add_option("--k", c_k, "multiplicity cap");

    // sumset
    auto* sum_cmd = app.add_subcommand("sumset", "sumset laws over Z_n");
    uint32_t u_n = 0;
    std::string u_law, u_A, u_B;
    bool u_exhaustive = false;
    sum_cmd->add_option("--n", u_n, "modulus")->required();
    sum_cmd
        ->add_option("--law", u_law,
                     "covering | cauchy-davenport | scherk | szemeredi")
        ->required();
    sum_cmd->add_option("--A", u_A, "comma-separated residues");
    sum_cmd->add_option("--B", u_B, "comma-separated residues");
    sum_cmd->add_flag("--exhaustive", u_exhaustive, "sweep every admissible input");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "conjecture grid s^(k)(Z_n) = n+k");
    std::string sc_kinds = "restricted-erdos", sc_n, sc_k;
    uint64_t sc_budget = 1'000'000'000;
    scan_cmd->add_option("--kinds", sc_kinds, "restricted-erdos");
    scan_cmd->add_option("--n", sc_n, "range lo..hi")->required();
    scan_cmd->add_option("--k", sc_k, "range lo..hi")->required();
    scan_cmd->add_option("--budget", sc_budget, "per-cell search budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << json{{"schema", "zerosum/1"},
                          {"status", "error"},
                          {"payload", nullptr},
                          {"diagnostics", json::array({e.what()})}}
                         .dump()
                  << "\n";
        return 2;
    }

    if (const char* env = std::getenv("ZEROSUM_THREADS"))
        g.threads = static_cast<uint32_t>(std::stoul(env));

    try {
        if (*decide_cmd) {
            if (d_seq.empty() == d_seq_file.empty())
                throw std::invalid_argument("exactly one of --seq/--seq-file required");
            auto raw = d_seq.empty() ? read_int_file(d_seq_file) : parse_int_list(d_seq);
            ZnSequence x(d_n, std::move(raw));
            WeightSet A = parse_weights(d_n, d_A);
            DecisionOutcome out = decide(x, A, parse_zkind(d_kind));
            json payload{{"is_z", out.is_z_sequence}};
            if (out.witness) payload["witness"] = out.witness->coefficients;
            emit(g, "ok", payload);
        } else if (*inv_cmd) {
            InvariantQuery q;
            q.n = i_n;
            q.budget = i_budget;
            q.k = i_k;
            if (i_kind == "davenport" || i_kind == "erdos") {
                if (i_A.empty())
                    throw std::invalid_argument("--A required for weighted kinds");
                q.kind = i_kind == "davenport" ? InvariantKind::davenport
                                               : InvariantKind::erdos;
                q.A = parse_weights(i_n, i_A);
            } else if (i_kind == "restricted-erdos") {
                q.kind = InvariantKind::restricted_erdos;
            } else if (i_kind == "restricted-davenport") {
                q.kind = InvariantKind::restricted_davenport;
            } else {
                throw std::invalid_argument("unknown invariant kind: " + i_kind);
            }
            InvariantResult r = compute_invariant(q);
            emit(g, "ok",
                 json{{"value", r.value},
                      {"extremal_witness", r.extremal_witness.entries},
                      {"multisets_examined", r.sequences_examined}});
        } else if (*sim_cmd) {
            s_cfg.scenario = scenario_from_name(s_scenario);
            if (!s_primes.empty())
                for (int64_t p : parse_int_list(s_primes))
                    s_cfg.primes.push_back(static_cast<uint32_t>(p));
            s_cfg.threads = g.threads;
            TrialReport r = run_experiment(s_cfg);
            emit(g, "ok", trial_report_json(r));
        } else if (*con_cmd) {
            ConstructionReport r = [&] {
                if (c_kind == "ones") return gen_classical(ClassicalKind::ones, c_n);
                if (c_kind == "signed-powers")
                    return gen_classical(ClassicalKind::signed_powers, c_n);
                if (c_kind == "divisor-chain")
                    return gen_classical(ClassicalKind::divisor_chain, c_n);
                if (c_kind == "egz") return gen_classical(ClassicalKind::egz, c_n);
                if (c_kind == "harborth2") return gen_harborth2(c_n);
                if (c_kind == "restricted-erdos-extremal")
                    return gen_restricted_erdos_extremal(c_p, c_k);
                if (c_kind == "restricted-davenport")
                    return gen_restricted_davenport(c_n, c_k);
                throw std::invalid_argument("unknown construction kind: " + c_kind);
            }();
            emit(g, "ok", construction_json(r));
        } else if (*sum_cmd) {
            SumsetLaw law = [&] {
                if (u_law == "covering") return SumsetLaw::covering;
                if (u_law == "cauchy-davenport") return SumsetLaw::cauchy_davenport;
                if (u_law == "scherk") return SumsetLaw::scherk;
                if (u_law == "szemeredi") return SumsetLaw::szemeredi;
                throw std::invalid_argument("unknown law: " + u_law);
            }();
            if (u_exhaustive) {
                emit(g, "ok", exhaustive_law_sweep(law, u_n));
            } else if (law == SumsetLaw::szemeredi) {
                if (u_A.empty()) throw std::invalid_argument("--A required");
                ResidueSet A(u_n);
                for (int64_t v : parse_int_list(u_A)) A.bits.set(normalize(v, u_n));
                emit(g, "ok", law_report_json(verify_law(law, A)));
            } else {
                if (u_A.empty() || u_B.empty())
                    throw std::invalid_argument("--A and --B required");
                ResidueSet A(u_n), B(u_n);
                for (int64_t v : parse_int_list(u_A)) A.bits.set(normalize(v, u_n));
                for (int64_t v : parse_int_list(u_B)) B.bits.set(normalize(v, u_n));
                emit(g, "ok", law_report_json(verify_law(law, A, B)));
            }
        } else if (*scan_cmd) {
            if (sc_kinds != "restricted-erdos")
                throw std::invalid_argument("only restricted-erdos is scannable");
            auto [nlo, nhi] = parse_range(sc_n);
            auto [klo, khi] = parse_range(sc_k);
            auto cells = scan_conjecture(nlo, nhi, klo, khi, sc_budget);
            json arr = json::array();
            bool all_match = true;
            for (const auto& c : cells) {
                json jc{{"n", c.n},       {"k", c.k},
                        {"skipped", c.skipped}, {"expected", c.expected}};
                if (!c.skipped) {
                    jc["value"] = c.value;
                    jc["matches"] = c.matches;
                    jc["witness"] = c.witness;
                    jc["multisets_examined"] = c.sequences_examined;
                    all_match = all_match && c.matches;
                }
                arr.push_back(std::move(jc));
            }
            emit(g, "ok", json{{"cells", arr}, {"all_match", all_match}});
        }
    } catch (const budget_exceeded& e) {
        emit(g, "error", nullptr, {e.what()});
        return 3;
    } catch (const verification_failure& e) {
        emit(g, "error", nullptr, {e.what()});
        return 4;
    } catch (const std::exception& e) {
        emit(g, "error", nullptr, {e.what()});
        return 2;
    }
    return 0;
}
