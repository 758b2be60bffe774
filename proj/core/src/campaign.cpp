#include "detsum/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "detsum/delta.hpp"
#include "detsum/fixtures.hpp"
#include "detsum/identity.hpp"
#include "detsum/prng.hpp"
#include "detsum/rmatrix.hpp"
#include "detsum/symfunc.hpp"
#include "detsum/upseq.hpp"

namespace detsum {

namespace {

using json = nlohmann::ordered_json;

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Cell {
    std::string id;
    std::function<json(std::uint64_t cell_seed)> run;   // payload with "pass"
};

json run_protected(const Cell& cell, std::uint64_t campaign_seed) {
    const std::uint64_t cell_seed = derive_seed(campaign_seed, cell.id);
    json j;
    j["id"] = cell.id;
    try {
        json payload = cell.run(cell_seed);
        for (auto& [key, value] : payload.items()) j[key] = std::move(value);
        if (!j.contains("pass")) j["pass"] = false;
    } catch (const std::exception& e) {
        j["error"] = e.what();
        j["pass"] = false;
    }
    return j;
}

void run_cells(const std::vector<Cell>& cells, const CampaignConfig& cfg,
               std::vector<json>& results) {
    results.resize(cells.size());
    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = run_protected(cells[i], cfg.seed);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size();
                 i = next.fetch_add(1))
                results[i] = run_protected(cells[i], cfg.seed);
        });
    for (auto& th : pool) th.join();
}

EvalPoint sample_point(const CampaignConfig& cfg, int n, std::uint64_t seed) {
    SampleOptions so;
    so.modulus = cfg.modulus;
    return sample_admissible(n, cfg.domain, seed, so);
}

std::string seq_id(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(v[i]);
    }
    return s;
}

// ---- cell builders ----------------------------------------------------------

std::vector<Cell> verify_cells(const CampaignConfig& cfg) {
    std::vector<Cell> cells;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (std::int64_t N = cfg.N_lo; N <= cfg.N_hi; ++N)
            for (int t = 0; t < cfg.trials; ++t) {
                std::string id = "verify/" + to_string(cfg.domain) + "/n=" +
                                 std::to_string(n) + "/N=" + std::to_string(N) +
                                 "/t=" + std::to_string(t);
                cells.push_back({id, [=, &cfg](std::uint64_t seed) {
                    EvalPoint pt = sample_point(cfg, n, seed);
                    IdentityReport rep = run_identity(pt, N, seed,
                                                      {cfg.workload_guard, 1});
                    return json{{"n", rep.n},       {"N", rep.N},
                                {"domain", to_string(rep.domain)},
                                {"seed", rep.seed}, {"lhs", rep.lhs},
                                {"rhs", rep.rhs},   {"equal", rep.equal},
                                {"lhs_ns", rep.lhs_ns}, {"rhs_ns", rep.rhs_ns},
                                {"pass", rep.equal}};
                }});
            }
    return cells;
}

std::vector<Cell> reduced_cells(const CampaignConfig& cfg) {
    std::vector<Cell> cells;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (std::int64_t N = cfg.N_lo; N <= cfg.N_hi; ++N)
            for (int t = 0; t < cfg.trials; ++t) {
                std::string id = "reduced/" + to_string(cfg.domain) + "/n=" +
                                 std::to_string(n) + "/N=" + std::to_string(N) +
                                 "/t=" + std::to_string(t);
                cells.push_back({id, [=, &cfg](std::uint64_t seed) {
                    EvalPoint pt = sample_point(cfg, n, seed);
                    const bool ok = reduced_sum_check(pt, N, {cfg.workload_guard, 1});
                    return json{{"n", n}, {"N", N}, {"seed", seed},
                                {"point", pt.str()}, {"pass", ok}};
                }});
            }
    return cells;
}

std::vector<Cell> zerosum_cells(const CampaignConfig& cfg) {
    std::vector<Cell> cells;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (int t = 0; t < cfg.trials; ++t) {
            std::string id = "zerosum/" + to_string(cfg.domain) + "/n=" +
                             std::to_string(n) + "/t=" + std::to_string(t);
            cells.push_back({id, [=, &cfg](std::uint64_t seed) {
                EvalPoint pt = sample_point(cfg, n, seed);
                const bool ok = zerosum_check(pt);
                return json{{"n", n}, {"seed", seed}, {"point", pt.str()},
                            {"pass", ok}};
            }});
        }
    return cells;
}

void strictly_increasing_seqs(int len, int lo, int hi,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(len);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == len) {
            fn(cur);
            return;
        }
        for (int v = start; v <= hi; ++v) {
            cur[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, lo);
}

std::vector<Cell> lemma_cells(const CampaignConfig& cfg) {
    std::vector<Cell> cells;
    const int max_n = cfg.max_n;
    auto want = [&](const std::string& s) { return cfg.suite == "all" || cfg.suite == s; };

    auto add_vanishing = [&](VanishingLemma which, const std::string& tag, int n,
                             int k, int l) {
        for (int t = 0; t < cfg.trials; ++t) {
            std::string id = "lemmas/" + tag + "/n=" + std::to_string(n) + "/k=" +
                             std::to_string(k) + "/l=" + std::to_string(l) +
                             "/t=" + std::to_string(t);
            cells.push_back({id, [=, &cfg](std::uint64_t seed) {
                EvalPoint pt = sample_point(cfg, n, seed);
                const bool ok = vanishing_lemma_check(which, n, k, l, pt);
                return json{{"lemma", tag}, {"n", n}, {"k", k}, {"l", l},
                            {"seed", seed}, {"pass", ok}};
            }});
        }
    };
    auto add_reduction = [&](ReductionLemma which, const std::string& tag, int n,
                             int k, const ExponentSeq& m) {
        for (int t = 0; t < cfg.trials; ++t) {
            std::string id = "lemmas/" + tag + "/n=" + std::to_string(n) + "/k=" +
                             std::to_string(k);
            if (!m.empty()) id += "/m=" + seq_id(m);
            id += "/t=" + std::to_string(t);
            cells.push_back({id, [=, &cfg](std::uint64_t seed) {
                EvalPoint pt = sample_point(cfg, n, seed);
                LemmaParams params{n, k, m};
                const bool ok = reduction_lemma_check(which, params, pt);
                json j{{"lemma", tag}, {"n", n}, {"k", k}, {"seed", seed},
                       {"pass", ok}};
                if (!m.empty()) j["m"] = seq_id(m);
                return j;
            }});
        }
    };

    if (want("L1"))
        for (int n = 3; n <= max_n; ++n)
            for (int k = 0; k <= n - 2; ++k)
                for (int l = 0; k + l <= n - 2; ++l)
                    add_vanishing(VanishingLemma::L1, "L1", n, k, l);
    if (want("L2"))
        for (int n = 3; n <= max_n; ++n)
            for (int k = 1; k <= n - 1; ++k)
                for (int l = std::max(1, n - k); l <= n - 1; ++l)
                    add_vanishing(VanishingLemma::L2, "L2", n, k, l);
    if (want("L3"))
        for (int n = 3; n <= max_n; ++n)
            for (int k = 0; k <= n - 2; ++k)
                add_reduction(ReductionLemma::L3, "L3", n, k, {});
    if (want("L4"))
        for (int n = 3; n <= max_n; ++n)
            add_reduction(ReductionLemma::L4, "L4", n, 0, {});
    if (want("L5"))
        for (int n = 2; n <= max_n; ++n)
            for (int k = 1; k <= n - 1; ++k)
                add_reduction(ReductionLemma::L5, "L5", n, k, {});
    if (want("L5cor"))
        for (int n = 2; n <= max_n; ++n)
            for (int k = 1; k <= n - 1; ++k)
                add_reduction(ReductionLemma::L5cor, "L5cor", n, k, {});
    if (want("L6"))
        for (int n = 2; n <= max_n; ++n)
            strictly_increasing_seqs(n - 1, 1, cfg.max_exp, [&](const std::vector<int>& m) {
                for (int k = 1; k <= n - 1; ++k)
                    add_reduction(ReductionLemma::L6, "L6", n, k, m);
            });
    if (want("L6cor"))
        for (int n = 2; n <= max_n; ++n)
            strictly_increasing_seqs(n - 1, 1, cfg.max_exp, [&](const std::vector<int>& m) {
                for (int k = 1; k <= n; ++k)
                    add_reduction(ReductionLemma::L6cor, "L6cor", n, k, m);
            });
    return cells;
}

std::vector<Cell> pieri_cells(const CampaignConfig& cfg, std::string& text) {
    std::vector<ExponentSeq> targets;
    if (!cfg.m.empty()) {
        targets.push_back(cfg.m);
        std::vector<int> degrees;
        if (cfg.l >= 0) degrees.push_back(cfg.l);
        else for (int l = 0; l <= static_cast<int>(cfg.m.size()); ++l) degrees.push_back(l);
        for (int l : degrees) {
            text += "S_" + std::to_string(l) + " * Delta_(" + seq_id(cfg.m) + ") =";
            const auto expansion = pieri_multiply(l, cfg.m);
            if (expansion.empty()) text += " 0";
            for (std::size_t i = 0; i < expansion.size(); ++i)
                text += (i ? " + Delta_(" : " Delta_(") + seq_id(expansion[i]) + ")";
            text += '\n';
        }
    } else {
        for (int len = 1; len <= 4; ++len)
            strictly_increasing_seqs(len, 0, 6, [&](const std::vector<int>& m) {
                targets.push_back(m);
            });
    }
    std::vector<Cell> cells;
    for (const ExponentSeq& m : targets) {
        const int len = static_cast<int>(m.size());
        std::vector<int> degrees;
        if (cfg.l >= 0) degrees.push_back(cfg.l);
        else for (int l = 0; l <= len; ++l) degrees.push_back(l);
        for (int l : degrees) {
            std::string id = "pieri/m=" + seq_id(m) + "/l=" + std::to_string(l);
            cells.push_back({id, [=, &cfg](std::uint64_t seed) {
                const std::vector<ExponentSeq> expansion = pieri_multiply(l, m);
                json expanded = json::array();
                for (const ExponentSeq& e : expansion) expanded.push_back(seq_id(e));
                bool ok = true;
                // Semantic contract at `trials` random points.
                for (int t = 0; t < cfg.trials; ++t) {
                    SplitMix64 g(seed + static_cast<std::uint64_t>(t));
                    EvalPoint pt = sample_point(cfg, len, g.next());
                    const SubsetMask full = SubsetMask::full(len);
                    ExactScalar lhs =
                        elementary_sym(l, full, pt) * power_delta(m, full, pt);
                    ExactScalar rhs = pt.scalar_zero();
                    for (const ExponentSeq& e : expansion)
                        rhs += power_delta(e, full, pt);
                    if (lhs != rhs) ok = false;
                }
                return json{{"m", seq_id(m)}, {"l", l}, {"expansion", expanded},
                            {"trials", cfg.trials}, {"pass", ok}};
            }});
        }
    }
    return cells;
}

std::vector<Cell> rmatrix_cells(const CampaignConfig& cfg, std::string& text) {
    const RMatrix R = r_matrix(cfg.k, cfg.bound, cfg.p);
    text = R.str();

    std::vector<Cell> cells;
    cells.push_back({"rmatrix/invariants", [=, &cfg](std::uint64_t) {
        const RMatrix M = r_matrix(cfg.k, cfg.bound, cfg.p);
        bool triangular = true, unit_diag = true, prefix_rule = true;
        for (std::size_t i = 0; i < M.seqs.size(); ++i) {
            if (M.at_index(i, i) != 1) unit_diag = false;
            for (std::size_t j = 0; j < M.seqs.size(); ++j) {
                const std::int64_t v = M.at_index(i, j);
                if (!v) continue;
                if (lex_compare(M.seqs[i], M.seqs[j]) == std::strong_ordering::greater)
                    triangular = false;
                long pn = 0, pm = 0;
                for (int r = 0; r < M.k; ++r) {
                    pn += M.seqs[i].entries[r];
                    pm += M.seqs[j].entries[r];
                    if (pn < pm) prefix_rule = false;
                }
            }
        }
        return json{{"triangular", triangular}, {"unit_diagonal", unit_diag},
                    {"prefix_sum_rule", prefix_rule},
                    {"pass", triangular && unit_diag && prefix_rule}};
    }});
    cells.push_back({"rmatrix/order-independence", [=, &cfg](std::uint64_t) {
        const RMatrix desc = r_matrix(cfg.k, cfg.bound, cfg.p, ApplyOrder::descending_index);
        const RMatrix asc = r_matrix(cfg.k, cfg.bound, cfg.p, ApplyOrder::ascending_index);
        const bool same = desc.cells == asc.cells;
        return json{{"pass", same}};
    }});
    return cells;
}

json rmatrix_json(const RMatrix& R) {
    json labels = json::array();
    for (const UpSeq& s : R.seqs) labels.push_back(seq_id(s.entries));
    json rows = json::array();
    for (std::size_t i = 0; i < R.seqs.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < R.seqs.size(); ++j) row.push_back(R.at_index(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"k", R.k}, {"bound", R.bound}, {"p", R.p},
                {"labels", std::move(labels)}, {"rows", std::move(rows)}};
}

std::vector<Cell> cancel_cells(const CampaignConfig& cfg, std::string& text) {
    const int k = static_cast<int>(cfg.m.size());
    const int n = cfg.n_lo;
    const UpSeq m(cfg.m, n - k);
    std::vector<Cell> cells;
    for (int t = 0; t < cfg.trials; ++t) {
        std::string id = "cancel/m=" + seq_id(cfg.m) + "/n=" + std::to_string(n) +
                         "/t=" + std::to_string(t);
        const bool render = t == 0;
        cells.push_back({id, [=, &cfg, &text](std::uint64_t seed) {
            EvalPoint pt = sample_point(cfg, n, seed);
            SubsetMask I = SubsetMask::full(n);
            I.bits = (1ULL << k) - 1;   // I = {1..k}
            const CancellationOutcome out = cancellation_check(m, I, pt);
            json terms = json::array();
            std::string table;
            for (const CancellationTerm& term : out.terms) {
                json tj{{"s", term.s}, {"q", seq_id(term.q)},
                        {"raw", seq_id(term.raw_exponents)},
                        {"degenerate", term.degenerate}};
                if (!term.degenerate) {
                    tj["sorted"] = seq_id(term.sorted_exponents);
                    tj["sign"] = term.sign;
                    tj["partner"] = term.partner;
                }
                terms.push_back(std::move(tj));
                table += "s=" + std::to_string(term.s) + " q=(" + seq_id(term.q) +
                         ") raw=(" + seq_id(term.raw_exponents) + ")" +
                         (term.degenerate
                              ? " -> 0 (repeated exponent)\n"
                              : " -> " + std::string(term.sign > 0 ? "+" : "-") +
                                    "Delta_(" + seq_id(term.sorted_exponents) +
                                    "), partner #" + std::to_string(term.partner) +
                                    "\n");
            }
            if (render) text = table;
            return json{{"m", seq_id(cfg.m)}, {"n", n}, {"seed", seed},
                        {"terms", std::move(terms)},
                        {"perfect_matching", out.perfect_matching},
                        {"sum_is_zero", out.sum_is_zero}, {"pass", out.ok()}};
        }});
    }
    return cells;
}

std::vector<Cell> bench_cells(const CampaignConfig& cfg) {
    std::vector<Cell> cells;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (std::int64_t N = cfg.N_lo; N <= cfg.N_hi; ++N)
            for (int t = 0; t < cfg.trials; ++t) {
                std::string id = "bench/" + to_string(cfg.domain) + "/n=" +
                                 std::to_string(n) + "/N=" + std::to_string(N) +
                                 "/t=" + std::to_string(t);
                cells.push_back({id, [=, &cfg](std::uint64_t seed) {
                    EvalPoint pt = sample_point(cfg, n, seed);
                    json j{{"n", n}, {"N", N}, {"domain", to_string(cfg.domain)},
                           {"seed", seed}};
                    bool pass = true;

                    std::int64_t t0 = now_ns();
                    RhsStats stats;
                    const ExactScalar rhs = rhs_closed(pt, N, &stats);
                    std::int64_t t1 = now_ns();
                    j["rhs"] = rhs.str();
                    j["rhs_ns"] = t1 - t0;
                    j["gamma_evals"] = stats.gamma_evals;

                    bool brute_feasible = true;
                    try {
                        std::int64_t t2 = now_ns();
                        const ExactScalar lhs =
                            lhs_brute(pt, N, {cfg.workload_guard, 1});
                        std::int64_t t3 = now_ns();
                        j["lhs"] = lhs.str();
                        j["lhs_ns"] = t3 - t2;
                        j["equal"] = lhs == rhs;
                        pass = lhs == rhs;
                    } catch (const WorkloadGuardExceeded&) {
                        brute_feasible = false;
                    }
                    j["lhs_skipped"] = !brute_feasible;
                    j["pass"] = pass;
                    return j;
                }});
            }
    return cells;
}

std::vector<Cell> example_cells(const CampaignConfig& cfg) {
    std::vector<Cell> cells;

    cells.push_back({"examples/expansion-term-list", [&cfg](std::uint64_t seed) {
        const auto& golden = fixtures::example1_expansion();
        const auto generated = product_expansion_terms(3, 4);
        bool same = generated.size() == golden.size();
        for (std::size_t i = 0; same && i < golden.size(); ++i)
            same = generated[i].sign == golden[i].sign &&
                   generated[i].nseq.entries == golden[i].entries;
        bool numeric = true;
        for (int t = 0; t < cfg.trials; ++t) {
            SplitMix64 g(seed + static_cast<std::uint64_t>(t));
            EvalPoint pt = sample_admissible(7, Domain::gaussian_rational, g.next());
            numeric = numeric && product_expand_check(SubsetMask::of(7, {1, 2, 3}), pt);
        }
        return json{{"terms", generated.size()}, {"list_matches", same},
                    {"numeric_identity", numeric}, {"pass", same && numeric}};
    }});

    cells.push_back({"examples/r-matrix", [](std::uint64_t) {
        const RMatrix R = r_matrix(3, 4, 6);
        const auto& labels = fixtures::example2_labels();
        const auto& rows = fixtures::example2_r_matrix();
        bool same = R.seqs.size() == labels.size();
        for (std::size_t i = 0; same && i < labels.size(); ++i)
            same = R.seqs[i].entries == labels[i];
        for (std::size_t i = 0; same && i < rows.size(); ++i)
            for (std::size_t j = 0; same && j < rows.size(); ++j)
                same = R.at_index(i, j) == rows[i][j];
        return json{{"matrix", rmatrix_json(R)}, {"pass", same}};
    }});

    cells.push_back({"examples/r-recursion", [](std::uint64_t) {
        const UpSeq m({0, 2, 4}, 4);
        const RMatrix R = r_matrix(3, 4, 6);
        bool ok = true;
        for (const auto& fix : fixtures::example3_recursion()) {
            const UpSeq n(fix.source, 4);
            if (R.at(n, m) != fix.value) ok = false;
            for (int s : fix.source)
                if (!r_recursion_check(n, m, s)) ok = false;
        }
        return json{{"pass", ok}};
    }});

    cells.push_back({"examples/cancellation", [&cfg](std::uint64_t seed) {
        const UpSeq m({0, 2, 4}, 4);
        const SubsetMask I = SubsetMask::of(7, {1, 2, 3});
        bool ok = true;
        json first;
        for (int t = 0; t < cfg.trials; ++t) {
            SplitMix64 g(seed + static_cast<std::uint64_t>(t));
            EvalPoint pt = sample_admissible(7, Domain::gaussian_rational, g.next());
            const CancellationOutcome out = cancellation_check(m, I, pt);
            if (!out.ok()) ok = false;

            // Multiset of nonzero signed terms must equal the worked list.
            std::vector<std::tuple<int, std::vector<int>, int>> got, want;
            for (const CancellationTerm& term : out.terms) {
                if (term.degenerate) {
                    // the worked example's s = 4 branch dies as Delta_{4,1,4}
                    if (term.s == 4 &&
                        term.raw_exponents != fixtures::example3_degenerate_raw())
                        ok = false;
                    continue;
                }
                got.emplace_back(term.s, term.sorted_exponents, term.sign);
            }
            for (const auto& f : fixtures::example3_cancellation())
                want.emplace_back(f.s, f.sorted_exponents, f.sign);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) ok = false;
            if (t == 0) first["nonzero_terms"] = got.size();
        }
        first["pass"] = ok;
        return first;
    }});

    cells.push_back({"examples/n2-closed-form", [&cfg](std::uint64_t seed) {
        EvalPoint fixed = make_eval_point(
            {ExactScalar::integer(2), ExactScalar::integer(3)});
        const ExactScalar six = ExactScalar::integer(6);
        bool ok = lhs_brute(fixed, 2) == six && rhs_closed(fixed, 2) == six;
        for (int t = 0; t < cfg.trials && ok; ++t) {
            SplitMix64 g(seed + static_cast<std::uint64_t>(t));
            EvalPoint pt = sample_admissible(2, Domain::gaussian_rational, g.next());
            const ExactScalar one = pt.scalar_one();
            ExactScalar prefactor = pt[1] / (pt[1] - one) * (pt[2] / (pt[2] - one));
            for (std::int64_t N = 0; N <= 6; ++N) {
                const ExactScalar shaped = prefactor * n2_closed_shape(pt, N);
                if (shaped != rhs_closed(pt, N) || shaped != lhs_brute(pt, N))
                    ok = false;
            }
        }
        return json{{"pass", ok}};
    }});

    cells.push_back({"examples/phi-bead-diagram", [](std::uint64_t) {
        const auto& f = fixtures::phi_10_4();
        const UpSeq input(f.input, 6);
        bool ok = phi(input).entries == f.output;
        const auto& step = fixtures::bead_step_10_4();
        bool found = false;
        for (const UpSeq& next : pieri_step(UpSeq(step.start, 6), step.l))
            if (next.entries == step.reachable) {
                found = true;
                if (phi(next).entries != step.reachable_rows) ok = false;
            }
        return json{{"pass", ok && found}};
    }});

    return cells;
}

void validate(const CampaignConfig& cfg) {
    if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
    if (cfg.n_lo > cfg.n_hi) throw ConfigError("empty n range");
    if (cfg.N_lo > cfg.N_hi) throw ConfigError("empty N range");
    if (cfg.n_lo < 1) throw ConfigError("n must be >= 1");
    if (cfg.n_hi > 62) throw ConfigError("n must be <= 62");
    if (cfg.domain == Domain::prime_field) {
        if (!is_prime_u64(cfg.modulus))
            throw ConfigError("modulus " + std::to_string(cfg.modulus) + " is not prime");
        if (cfg.modulus >= (1ULL << 62))
            throw ConfigError("modulus must fit in 62 bits");
        const std::uint64_t need = 2ULL * cfg.n_hi * cfg.n_hi;
        if (cfg.modulus <= need)
            throw ConfigError("modulus must exceed 2*n^2 = " + std::to_string(need));
    }
    switch (cfg.command) {
        case Command::reduced:
            if (cfg.n_lo < 2) throw ConfigError("reduced needs n >= 2");
            if (cfg.N_lo < 1) throw ConfigError("reduced needs N >= 1");
            break;
        case Command::verify:
        case Command::bench:
            if (cfg.N_lo < 0) throw ConfigError("N must be >= 0");
            if (cfg.command == Command::bench &&
                cfg.domain == Domain::gaussian_rational && cfg.N_hi > 1000)
                throw ConfigError(
                    "benchmarking over gauss-rational refuses N > 1000 "
                    "(coefficient blow-up); use --domain gf");
            break;
        case Command::rmatrix:
            if (cfg.k < 0 || cfg.bound < 0) throw ConfigError("k and bound must be >= 0");
            if (cfg.p < 0 || cfg.p > long(cfg.k) * cfg.bound)
                throw ConfigError("p outside [0, k*bound]");
            if (long(cfg.k) * cfg.bound > 36)
                throw ConfigError("rmatrix guarded at k*bound <= 36");
            break;
        case Command::cancel: {
            if (cfg.m.empty()) throw ConfigError("cancel needs --m");
            if (cfg.m.front() != 0) throw ConfigError("cancel needs m_1 = 0");
            for (std::size_t i = 1; i < cfg.m.size(); ++i)
                if (cfg.m[i] < cfg.m[i - 1])
                    throw ConfigError("cancel needs nondecreasing m");
            const int k = static_cast<int>(cfg.m.size());
            if (cfg.n_lo != cfg.n_hi) throw ConfigError("cancel needs a single --n");
            if (cfg.n_lo <= k) throw ConfigError("cancel needs n > k");
            if (cfg.m.back() > cfg.n_lo - k)
                throw ConfigError("cancel needs entries of m <= n - k");
            break;
        }
        case Command::pieri:
            for (std::size_t i = 1; i < cfg.m.size(); ++i)
                if (cfg.m[i] <= cfg.m[i - 1])
                    throw ConfigError("pieri needs strictly increasing m");
            if (!cfg.m.empty() && cfg.l > static_cast<int>(cfg.m.size()))
                throw ConfigError("pieri degree exceeds |m|");
            break;
        case Command::lemmas: {
            static const char* suites[] = {"all", "L1", "L2", "L3", "L4",
                                           "L5", "L5cor", "L6", "L6cor"};
            bool known = false;
            for (const char* s : suites) known = known || cfg.suite == s;
            if (!known) throw ConfigError("unknown lemma suite '" + cfg.suite + "'");
            if (cfg.max_n < 2 || cfg.max_n > 8)
                throw ConfigError("lemmas needs 2 <= max-n <= 8");
            if (cfg.max_exp < 1 || cfg.max_exp > 12)
                throw ConfigError("lemmas needs 1 <= max-exp <= 12");
            break;
        }
        case Command::zerosum:
        case Command::examples:
            break;
    }
}

} // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::verify: return "verify";
        case Command::reduced: return "reduced";
        case Command::zerosum: return "zerosum";
        case Command::lemmas: return "lemmas";
        case Command::pieri: return "pieri";
        case Command::rmatrix: return "rmatrix";
        case Command::cancel: return "cancel";
        case Command::bench: return "bench";
        case Command::examples: return "examples";
    }
    return "?";
}

std::string strip_timing_fields(const std::string& report_json) {
    json root = json::parse(report_json);
    std::function<void(json&)> strip = [&](json& node) {
        if (node.is_object()) {
            std::vector<std::string> doomed;
            for (auto& [key, value] : node.items()) {
                if (key.size() > 3 && key.ends_with("_ns")) doomed.push_back(key);
                else strip(value);
            }
            for (const std::string& key : doomed) node.erase(key);
        } else if (node.is_array()) {
            for (json& child : node) strip(child);
        }
    };
    strip(root);
    return root.dump(2) + "\n";
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
    };
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base, n);
            base = mulmod(base, base, n);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Report execute(const CampaignConfig& cfg) {
    validate(cfg);
    const std::int64_t t_start = now_ns();

    std::string text;
    std::vector<Cell> cells;
    switch (cfg.command) {
        case Command::verify: cells = verify_cells(cfg); break;
        case Command::reduced: cells = reduced_cells(cfg); break;
        case Command::zerosum: cells = zerosum_cells(cfg); break;
        case Command::lemmas: cells = lemma_cells(cfg); break;
        case Command::pieri: cells = pieri_cells(cfg, text); break;
        case Command::rmatrix: cells = rmatrix_cells(cfg, text); break;
        case Command::cancel: cells = cancel_cells(cfg, text); break;
        case Command::bench: cells = bench_cells(cfg); break;
        case Command::examples: cells = example_cells(cfg); break;
    }

    std::vector<json> results;
    run_cells(cells, cfg, results);

    Report rep;
    rep.config = cfg;
    rep.cells_total = static_cast<int>(results.size());
    for (const json& r : results)
        if (!r.value("pass", false)) ++rep.cells_failed;
    rep.pass = rep.cells_failed == 0;
    rep.total_ns = now_ns() - t_start;

    json root;
    root["command"] = to_string(cfg.command);
    json cfg_echo{{"n_lo", cfg.n_lo},     {"n_hi", cfg.n_hi},
                  {"N_lo", cfg.N_lo},     {"N_hi", cfg.N_hi},
                  {"domain", to_string(cfg.domain)},
                  {"modulus", cfg.modulus},
                  {"trials", cfg.trials}, {"seed", cfg.seed},
                  {"workload_guard", cfg.workload_guard},
                  {"k", cfg.k},           {"bound", cfg.bound},
                  {"p", cfg.p},           {"l", cfg.l},
                  {"m", seq_id(cfg.m)},   {"suite", cfg.suite},
                  {"max_n", cfg.max_n},   {"max_exp", cfg.max_exp}};
    std::string summary = to_string(cfg.command) + ": " +
                          std::to_string(rep.cells_total - rep.cells_failed) + "/" +
                          std::to_string(rep.cells_total) + " cells passed\n";
    if (!text.empty()) summary += text;
    int shown = 0;
    for (const json& r : results) {
        if (r.value("pass", false)) continue;
        if (++shown > 20) { summary += "  ...\n"; break; }
        summary += "  FAIL " + r.value("id", std::string("?"));
        if (r.contains("error")) summary += "  [" + r["error"].get<std::string>() + "]";
        summary += '\n';
    }
    summary += rep.pass ? "PASS\n" : "FAIL\n";
    rep.text = summary;

    root["config"] = std::move(cfg_echo);
    if (cfg.command == Command::rmatrix)
        root["rmatrix"] = rmatrix_json(r_matrix(cfg.k, cfg.bound, cfg.p));
    root["cells"] = json::array();
    for (json& r : results) root["cells"].push_back(std::move(r));
    root["cells_total"] = rep.cells_total;
    root["cells_failed"] = rep.cells_failed;
    root["pass"] = rep.pass;
    root["total_ns"] = rep.total_ns;
    rep.json = root.dump(2) + "\n";
    return rep;
}

} // namespace detsum
