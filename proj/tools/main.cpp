#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pmpack/decompose.hpp"
#include "pmpack/generators.hpp"
#include "pmpack/io.hpp"
#include "pmpack/oracle.hpp"

using namespace pmpack;

namespace {

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ParseError: return 2;
        case ErrorKind::InternalContradiction:
        case ErrorKind::ClaimViolated: return 3;
        default: return 1;
    }
}

struct GenArgs {
    std::string family;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    auto fam = family_from_string(a.family);
    if (!fam) {
        std::cerr << "unknown family: " << a.family << "\n";
        return 1;
    }
    GeneratorSpec spec{*fam, a.n, a.k, a.seed};
    Graph g = gen_named(spec);
    write_graph_file(a.out, g);
    std::cout << "n=" << g.order() << " m=" << g.edge_count() << " out=" << a.out << "\n";
    return 0;
}

struct DecomposeArgs {
    std::string in, out, trace, reproducer_dir;
    int target = 1;
    std::string strategy = "proof";
    std::uint64_t seed = 0;
    int restart_budget = 10;
    bool via_hamilton = false;
    long long cap = 200000;
};

int cmd_decompose(const DecomposeArgs& a) {
    auto strat = strategy_from_string(a.strategy);
    if (!strat) {
        std::cerr << "unknown strategy: " << a.strategy << "\n";
        return 1;
    }
    Graph g = read_graph_file(a.in);
    DecomposeOptions opts;
    opts.target = a.target;
    opts.strategy = *strat;
    opts.seed = a.seed;
    opts.restart_budget = a.restart_budget;
    opts.via_hamilton = a.via_hamilton;
    opts.pm_cap = a.cap;
    opts.reproducer_dir = a.reproducer_dir;
    if (opts.reproducer_dir.empty() && !a.out.empty()) {
        auto parent = std::filesystem::path(a.out).parent_path();
        opts.reproducer_dir = parent.empty() ? "." : parent.string();
    }
    DecompositionResult r = decompose(g, opts);
    if (!a.out.empty()) write_family_file(a.out, r.family);
    if (!a.trace.empty()) {
        std::ofstream t(a.trace, std::ios::binary);
        if (!t.good()) {
            std::cerr << "cannot open " << a.trace << "\n";
            return 2;
        }
        t << r.trace_jsonl();
    }
    std::cout << "achieved=" << r.achieved << " target=" << r.target << "\n";
    if (r.achieved >= r.target) return 0;
    if (r.achieved == 0 && !perfect_matching(g)) std::cerr << "no perfect matching\n";
    std::cerr << "status=" << to_string(r.status) << "\n";
    return r.claim_escaped ? 3 : 1;
}

struct VerifyArgs {
    std::string graph, family;
};

int cmd_verify(const VerifyArgs& a) {
    Graph g = read_graph_file(a.graph);
    MatchingFamily fam = read_family_file(a.family, g.order());
    FamilyCheck res = verify_family(g, fam);
    if (res.ok) {
        std::cout << "ok matchings=" << fam.size() << "\n";
        return 0;
    }
    std::cout << res.violation << "\n";
    return 1;
}

struct OracleArgs {
    std::string in, out;
    long long cap = 200000;
};

int cmd_oracle(const OracleArgs& a) {
    Graph g = read_graph_file(a.in);
    PackingResult pr = max_disjoint_pm(g, a.cap);
    std::cout << "pm_count=" << pr.pm_count << " max_disjoint=" << pr.max_disjoint << "\n";
    if (!a.out.empty()) write_family_file(a.out, pr.witness_family);
    return 0;
}

struct BenchArgs {
    std::string range = "34..48";
    int seeds = 25;
    std::string strategy = "proof";
    std::string out;
    int target = -1; // default: quarter bound
};

int cmd_bench(const BenchArgs& a) {
    auto strat = strategy_from_string(a.strategy);
    if (!strat) {
        std::cerr << "unknown strategy: " << a.strategy << "\n";
        return 1;
    }
    int lo, hi;
    auto dots = a.range.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(a.range);
        } else {
            lo = std::stoi(a.range.substr(0, dots));
            hi = std::stoi(a.range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::cerr << "bad range: " << a.range << "\n";
        return 1;
    }
    if (lo % 2 != 0 || hi % 2 != 0 || lo > hi || (*strat == Strategy::Proof && lo < 34)) {
        std::cerr << "range must be even" << (*strat == Strategy::Proof ? " and >= 34" : "")
                  << "\n";
        return 1;
    }
    std::ostream* outp = &std::cout;
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out, std::ios::binary);
        if (!file.good()) {
            std::cerr << "cannot open " << a.out << "\n";
            return 2;
        }
        outp = &file;
    }
    *outp << "n,seed,D,target,achieved,elapsed_ms,augment_calls,case_s_histogram\n";
    bool all_ok = true;
    for (int n = lo; n <= hi; n += 2) {
        int d = d_threshold(n);
        int target = a.target > 0 ? a.target : quarter_ceil(n);
        for (int seed = 0; seed < a.seeds; ++seed) {
            Graph g = gen_random_semiregular(n, d, static_cast<std::uint64_t>(seed));
            DecompositionResult r = decompose(g, target, *strat, static_cast<std::uint64_t>(seed));
            all_ok = all_ok && r.achieved >= target;
            *outp << n << ',' << seed << ',' << d << ',' << target << ',' << r.achieved << ','
                  << r.elapsed_ms << ',' << r.augment_calls << ',' << "s0=" << r.case_hist[0]
                  << ";s1=" << r.case_hist[1] << ";s2+=" << r.case_hist[2] << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify and bound families of disjoint perfect matchings"};
    app.require_subcommand(1);

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate a named graph");
    gen->add_option("--family", ga.family,
                    "sharp-g1|sharp-g2|counterexample|random-semiregular|complete|cycle|petersen")
        ->required();
    gen->add_option("--n", ga.n, "vertex count");
    gen->add_option("--k", ga.k, "base degree (random-semiregular)");
    gen->add_option("--seed", ga.seed, "generator seed")->default_val(0);
    gen->add_option("--out", ga.out, "output graph file")->required();

    DecomposeArgs da;
    CLI::App* dec = app.add_subcommand("decompose", "extract edge-disjoint perfect matchings");
    dec->add_option("--in", da.in, "input graph file")->required();
    dec->add_option("--target", da.target, "family size to reach")->required();
    dec->add_option("--strategy", da.strategy, "peel|proof|exact")->default_val("proof");
    dec->add_option("--seed", da.seed, "restart seed")->default_val(0);
    dec->add_option("--restart-budget", da.restart_budget, "peel restarts before fallback")
        ->default_val(10);
    dec->add_flag("--via-hamilton", da.via_hamilton,
                  "peel above-threshold degrees through Hamiltonian cycles");
    dec->add_option("--cap", da.cap, "perfect matching cap for the exact strategy")
        ->default_val(200000);
    dec->add_option("--out", da.out, "output family file");
    dec->add_option("--trace", da.trace, "JSON-lines trace file");
    dec->add_option("--reproducer-dir", da.reproducer_dir, "where stuck states are written");

    VerifyArgs va;
    CLI::App* ver = app.add_subcommand("verify", "check a family file against its graph");
    ver->add_option("--graph", va.graph, "graph file")->required();
    ver->add_option("--family", va.family, "family file")->required();

    OracleArgs oa;
    CLI::App* ora = app.add_subcommand("oracle", "exact packing number by exhaustive search");
    ora->add_option("--in", oa.in, "input graph file")->required();
    ora->add_option("--cap", oa.cap, "perfect matching cap")->default_val(200000);
    ora->add_option("--out", oa.out, "witness family file");

    BenchArgs ba;
    CLI::App* ben = app.add_subcommand("bench", "decompose a seeded grid of random inputs");
    ben->add_option("--n", ba.range, "order or range, e.g. 34 or 34..48")->required();
    ben->add_option("--seeds", ba.seeds, "seeds per order")->default_val(25);
    ben->add_option("--strategy", ba.strategy, "peel|proof|exact")->default_val("proof");
    ben->add_option("--target", ba.target, "override the quarter-bound target");
    ben->add_option("--out", ba.out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(ga);
        if (dec->parsed()) return cmd_decompose(da);
        if (ver->parsed()) return cmd_verify(va);
        if (ora->parsed()) return cmd_oracle(oa);
        if (ben->parsed()) return cmd_bench(ba);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
