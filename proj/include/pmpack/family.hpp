#pragma once

#include <string>
#include <vector>

#include "pmpack/matching.hpp"

namespace pmpack {

/// Ordered list of pairwise edge-disjoint perfect matchings of one host
/// graph.
struct MatchingFamily {
    int host_n = 0;
    std::vector<Matching> matchings;

    MatchingFamily() = default;
    explicit MatchingFamily(int n) : host_n(n) {}

    int size() const { return static_cast<int>(matchings.size()); }

    /// All edges of all members, canonical order.
    EdgeSet all_edges() const;
};

struct FamilyCheck {
    bool ok = true;
    std::string violation;
};

/// True iff every member is a perfect matching of g using only g's edges and
/// all members are pairwise edge-disjoint; reports the first violation.
FamilyCheck verify_family(const Graph& g, const MatchingFamily& fam);

} // namespace pmpack
