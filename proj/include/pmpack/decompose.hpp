#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pmpack/augment.hpp"
#include "pmpack/family.hpp"

namespace pmpack {

enum class Strategy { Peel, Proof, Exact };
const char* to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& s);

enum class RunStatus { Ok, TargetUnreachable, BudgetExhausted };
const char* to_string(RunStatus s);

struct DecomposeOptions {
    int target = 1;
    Strategy strategy = Strategy::Proof;
    std::uint64_t seed = 0;
    int restart_budget = 10;
    /// Peel the above-threshold degrees through Hamiltonian cycles instead
    /// of direct perfect matchings.
    bool via_hamilton = false;
    /// The exact fallback enumerates all perfect matchings; skip it above
    /// this order.
    int exact_fallback_max_n = 14;
    long long pm_cap = 200000;
    /// When set, stuck states that defeat the augmentation are written here
    /// as graph + family text files.
    std::string reproducer_dir;
    AugmentConfig augment;
};

struct DecompositionResult {
    MatchingFamily family;
    int target = 0;
    int achieved = 0;
    RunStatus status = RunStatus::Ok;
    /// One JSON object per step: peel / augment / restart / exact steps.
    std::vector<nlohmann::json> trace;
    int augment_calls = 0;
    int case_hist[3] = {0, 0, 0}; // s=0, s=1, s>=2
    int claim_violations = 0;
    /// A claim violation survived every restart and reached (or would have
    /// reached) the exact fallback.
    bool claim_escaped = false;
    bool exact_fallback_used = false;
    double elapsed_ms = 0.0;

    std::string trace_jsonl() const;
};

DecompositionResult decompose(const Graph& g, const DecomposeOptions& opts);
DecompositionResult decompose(const Graph& g, int target, Strategy strategy,
                              std::uint64_t seed = 0);

} // namespace pmpack
