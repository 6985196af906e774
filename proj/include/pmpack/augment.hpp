#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmpack/bipartite.hpp"
#include "pmpack/family.hpp"
#include "pmpack/hamilton.hpp"

namespace pmpack {

enum class CaseTag { SGe2, SEq1, SEq0 };
const char* to_string(CaseTag tag);

/// A stuck state: residual graph without a perfect matching plus the family
/// that produced it and the witness that certifies it.
struct AugmentationContext {
    Graph host;
    Graph residual;
    MatchingFamily family;
    BergeWitness witness;
    CaseTag tag = CaseTag::SEq0;
    int base_degree = 0;
};

/// Individually toggleable structural assertions; all enabled by default.
struct AugmentConfig {
    std::vector<std::string> disabled_claims;
    bool claim_enabled(const std::string& id) const;
};

struct AugmentResult {
    /// Same-size member replacements applied before the growing step:
    /// family[index] is exchanged for another perfect matching of the same
    /// residual-plus-member graph.
    std::vector<std::pair<int, Matching>> swaps;
    /// Index (after swaps) of the member replaced by the two new matchings.
    int replaced = -1;
    Matching first, second;
    CaseTag case_used = CaseTag::SEq0;
    std::string subcase;
    int witness_s = 0;
    int witness_q = 0;
};

/// Applies swaps, removes the replaced member and appends the two new
/// matchings; the result has one more member.
MatchingFamily apply_augment(const MatchingFamily& fam, const AugmentResult& r);

/// Builds residual, witness and case tag. Throws
/// ResidualHasPerfectMatching when there is nothing to augment.
AugmentationContext make_context(const Graph& host, const MatchingFamily& fam);

/// Replaces one family member with two edge-disjoint perfect matchings of
/// residual-plus-member, growing the family by one. Dispatches on the
/// witness size. Preconditions: even order >= 34, host {D, D+1}-semi-regular
/// with D >= d_threshold, family size <= ceil(n/4) - 1.
AugmentResult augment(const Graph& host, const MatchingFamily& fam,
                      const AugmentConfig& cfg = {});

AugmentResult augment_s_ge2(const AugmentationContext& ctx, const AugmentConfig& cfg = {});
AugmentResult augment_s_eq1(const AugmentationContext& ctx, const AugmentConfig& cfg = {});
AugmentResult augment_s_eq0(const AugmentationContext& ctx, const AugmentConfig& cfg = {});

/// One attempt of the two-component case with an explicit first replacement
/// matching; exposed so stuck states can be driven with instrumented
/// inputs.
struct SZeroOutcome {
    bool done = false;
    AugmentResult result;
    bool swapped = false;
    Matching replacement;
};
SZeroOutcome s_eq0_try_m0prime(const AugmentationContext& ctx, int m0_index, const Edge& e0,
                               const Matching& m0_prime, const AugmentConfig& cfg = {});

} // namespace pmpack
