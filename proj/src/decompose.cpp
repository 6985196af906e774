#include "pmpack/decompose.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

#include "pmpack/io.hpp"
#include "pmpack/oracle.hpp"
#include "pmpack/rng.hpp"

namespace pmpack {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Peel: return "peel";
        case Strategy::Proof: return "proof";
        case Strategy::Exact: return "exact";
    }
    return "?";
}

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::TargetUnreachable: return "target-unreachable";
        case RunStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::string DecompositionResult::trace_jsonl() const {
    std::string out;
    for (const nlohmann::json& j : trace) {
        out += j.dump();
        out += '\n';
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

long long us_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

Graph relabel_graph(const Graph& g, const std::vector<int>& perm) {
    EdgeSet es;
    for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.order(), es);
}

Matching map_matching(const Matching& m, const std::vector<int>& inv) {
    EdgeSet es;
    for (const Edge& e : m.edges) es.emplace_back(inv[e.u], inv[e.v]);
    return Matching(std::move(es), m.host_n);
}

struct Runner {
    const Graph& g;
    const DecomposeOptions& opts;
    DecompositionResult res;
    Clock::time_point t0 = Clock::now();

    void log(nlohmann::json j) {
        j["elapsed_us"] = us_since(t0);
        res.trace.push_back(std::move(j));
    }

    void run_exact(const Graph& target_graph, bool as_fallback) {
        PackingResult pr = max_disjoint_pm(target_graph, opts.pm_cap);
        res.family = pr.witness_family;
        res.achieved = pr.max_disjoint;
        res.status = res.achieved >= opts.target ? RunStatus::Ok : RunStatus::TargetUnreachable;
        log({{"step", as_fallback ? "exact-fallback" : "exact"},
             {"pm_count", pr.pm_count},
             {"max_disjoint", pr.max_disjoint},
             {"nodes", pr.nodes_explored}});
    }

    void run_peel() {
        MatchingFamily best(g.order());
        for (int attempt = 0; attempt <= opts.restart_budget; ++attempt) {
            if (attempt > 0) log({{"step", "restart"}, {"attempt", attempt}});
            std::vector<int> perm = Rng(mix_seed(opts.seed, attempt)).permutation(g.order());
            std::vector<int> inv(g.order());
            for (int i = 0; i < g.order(); ++i) inv[perm[i]] = i;
            Graph host = relabel_graph(g, perm);
            Graph residual = host;
            MatchingFamily fam(g.order());
            while (fam.size() < opts.target) {
                auto pm = perfect_matching(residual);
                if (!pm) break;
                residual = residual.remove_edges(pm->edges);
                fam.matchings.push_back(map_matching(*pm, inv));
                log({{"step", "peel"}, {"l", fam.size()}});
            }
            if (fam.size() > best.size()) best = fam;
            if (fam.size() >= opts.target) break;
            log({{"step", "stuck"}, {"l", fam.size()}});
            if (fam.size() == 0) break; // no perfect matching at all: restarts cannot help
        }
        res.family = best;
        res.achieved = best.size();
        res.status = res.achieved >= opts.target ? RunStatus::Ok : RunStatus::BudgetExhausted;
    }

    void write_reproducer(const Graph& base, const MatchingFamily& fam, int attempt) {
        if (opts.reproducer_dir.empty()) return;
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(opts.reproducer_dir, ec);
        std::string stem = opts.reproducer_dir + "/stuck-n" + std::to_string(g.order()) +
                           "-seed" + std::to_string(opts.seed) + "-attempt" +
                           std::to_string(attempt);
        write_graph_file(stem + ".graph.txt", base);
        write_family_file(stem + ".family.txt", fam);
    }

    void run_proof() {
        int n = g.order();
        int k0 = g.min_degree();
        require(is_semiregular(g, k0), ErrorKind::PreconditionViolated,
                "proof strategy needs a {k, k+1}-semi-regular input");
        int dn = n >= 2 && n % 2 == 0 ? d_threshold(n) : 0;

        // peel the degrees above the threshold first; min degree >= dn + 1
        // >= n/2 keeps a Hamiltonian cycle (hence a perfect matching) around
        MatchingFamily outer(n);
        Graph base = g;
        int k = k0;
        while (k > dn && outer.size() < opts.target) {
            Matching m(EdgeSet{}, n);
            if (opts.via_hamilton) {
                VertexCycle c = dirac_cycle(base);
                m = even_cycle_matchings(c, n).first;
            } else {
                auto pm = perfect_matching(base);
                require(pm.has_value(), ErrorKind::InternalContradiction,
                        "high-degree residual lost its perfect matching");
                m = *pm;
            }
            base = base.remove_edges(m.edges);
            outer.matchings.push_back(m);
            --k;
            log({{"step", "peel"}, {"mode", "high-degree"}, {"l", outer.size()}});
        }
        if (outer.size() >= opts.target) {
            res.family = outer;
            res.achieved = outer.size();
            res.status = RunStatus::Ok;
            return;
        }

        int base_target = opts.target - outer.size();
        MatchingFamily best = outer;
        bool done = false;
        bool hopeless = false;
        for (int attempt = 0; attempt <= opts.restart_budget && !done && !hopeless; ++attempt) {
            if (attempt > 0) log({{"step", "restart"}, {"attempt", attempt}});
            std::vector<int> perm = Rng(mix_seed(opts.seed, attempt)).permutation(n);
            std::vector<int> inv(n);
            for (int i = 0; i < n; ++i) inv[perm[i]] = i;
            Graph host = relabel_graph(base, perm);
            Graph residual = host;
            MatchingFamily fam(n);
            for (;;) {
                if (fam.size() >= base_target) {
                    done = true;
                    break;
                }
                auto pm = perfect_matching(residual);
                if (pm) {
                    residual = residual.remove_edges(pm->edges);
                    fam.matchings.push_back(*pm);
                    log({{"step", "peel"}, {"l", outer.size() + fam.size()}});
                    continue;
                }
                log({{"step", "stuck"}, {"l", outer.size() + fam.size()}});
                if (fam.size() == 0) {
                    hopeless = true; // the graph itself has no perfect matching
                    break;
                }
                try {
                    AugmentResult ar = augment(host, fam, opts.augment);
                    fam = apply_augment(fam, ar);
                    residual = host.remove_edges(fam.all_edges());
                    ++res.augment_calls;
                    int slot = ar.case_used == CaseTag::SEq0 ? 0
                               : ar.case_used == CaseTag::SEq1 ? 1
                                                               : 2;
                    ++res.case_hist[slot];
                    log({{"step", "augment"},
                         {"s", ar.witness_s},
                         {"q", ar.witness_q},
                         {"case", to_string(ar.case_used)},
                         {"subcase", ar.subcase},
                         {"replaced", ar.replaced},
                         {"swaps", ar.swaps.size()},
                         {"l", outer.size() + fam.size()}});
                } catch (const ClaimViolation& cv) {
                    ++res.claim_violations;
                    log({{"step", "augment-failed"},
                         {"error", "ClaimViolated"},
                         {"claim", cv.claim()}});
                    MatchingFamily mapped(n);
                    for (const Matching& m : fam.matchings)
                        mapped.matchings.push_back(map_matching(m, inv));
                    write_reproducer(base, mapped, attempt);
                    break;
                } catch (const Error& e) {
                    log({{"step", "augment-failed"}, {"error", to_string(e.kind())}});
                    MatchingFamily mapped(n);
                    for (const Matching& m : fam.matchings)
                        mapped.matchings.push_back(map_matching(m, inv));
                    write_reproducer(base, mapped, attempt);
                    break;
                }
            }
            MatchingFamily candidate = outer;
            for (const Matching& m : fam.matchings)
                candidate.matchings.push_back(map_matching(m, inv));
            if (candidate.size() > best.size()) best = candidate;
        }
        if (done) {
            res.family = best;
            res.achieved = best.size();
            res.status = RunStatus::Ok;
            return;
        }
        // restart budget exhausted
        if (g.order() <= opts.exact_fallback_max_n) {
            res.exact_fallback_used = true;
            if (res.claim_violations > 0) res.claim_escaped = true;
            run_exact(g, true);
            if (res.family.size() < best.size()) {
                res.family = best;
                res.achieved = best.size();
            }
            return;
        }
        log({{"step", "exact-fallback"}, {"ran", false}, {"reason", "order too large"}});
        if (res.claim_violations > 0) res.claim_escaped = true;
        res.family = best;
        res.achieved = best.size();
        res.status = RunStatus::BudgetExhausted;
    }
};

} // namespace

DecompositionResult decompose(const Graph& g, const DecomposeOptions& opts) {
    require(g.order() % 2 == 0, ErrorKind::OddOrder, "decomposition needs an even order");
    require(opts.target >= 0, ErrorKind::PreconditionViolated, "negative target");

    Runner r{g, opts, {}};
    r.res.target = opts.target;
    switch (opts.strategy) {
        case Strategy::Exact: r.run_exact(g, false); break;
        case Strategy::Peel: r.run_peel(); break;
        case Strategy::Proof: r.run_proof(); break;
    }
    FamilyCheck fc = verify_family(g, r.res.family);
    require(fc.ok, ErrorKind::InternalContradiction, "produced family invalid: " + fc.violation);
    r.res.achieved = r.res.family.size();
    r.res.elapsed_ms = static_cast<double>(us_since(r.t0)) / 1000.0;
    return r.res;
}

DecompositionResult decompose(const Graph& g, int target, Strategy strategy,
                              std::uint64_t seed) {
    DecomposeOptions opts;
    opts.target = target;
    opts.strategy = strategy;
    opts.seed = seed;
    return decompose(g, opts);
}

std::optional<Strategy> strategy_from_string(const std::string& s) {
    if (s == "peel") return Strategy::Peel;
    if (s == "proof") return Strategy::Proof;
    if (s == "exact") return Strategy::Exact;
    return std::nullopt;
}

} // namespace pmpack
