#include "pmpack/family.hpp"

#include <algorithm>
#include <map>

namespace pmpack {

EdgeSet MatchingFamily::all_edges() const {
    EdgeSet out;
    for (const Matching& m : matchings) out.insert(out.end(), m.edges.begin(), m.edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace

FamilyCheck verify_family(const Graph& g, const MatchingFamily& fam) {
    FamilyCheck res;
    auto reject = [&](const std::string& why) {
        res.ok = false;
        res.violation = why;
        return res;
    };

    if (fam.host_n != g.order())
        return reject("family host order " + std::to_string(fam.host_n) + " != graph order " +
                      std::to_string(g.order()));

    std::map<Edge, int> first_user;
    for (int i = 0; i < fam.size(); ++i) {
        const Matching& m = fam.matchings[i];
        if (m.host_n != g.order())
            return reject("matching " + std::to_string(i) + " host order mismatch");
        std::vector<char> covered(g.order(), 0);
        for (const Edge& e : m.edges) {
            if (e.u < 0 || e.v >= g.order())
                return reject("matching " + std::to_string(i) + ": edge " + edge_str(e) +
                              " out of range");
            if (!g.has_edge(e.u, e.v))
                return reject("matching " + std::to_string(i) + ": " + edge_str(e) +
                              " not an edge of host");
            if (covered[e.u] || covered[e.v])
                return reject("matching " + std::to_string(i) + ": vertex " +
                              std::to_string(covered[e.u] ? e.u : e.v) + " covered twice");
            covered[e.u] = covered[e.v] = 1;
            auto [it, fresh] = first_user.emplace(e, i);
            if (!fresh)
                return reject("edge " + edge_str(e) + " reused in matchings " +
                              std::to_string(it->second) + "," + std::to_string(i));
        }
        for (int v = 0; v < g.order(); ++v)
            if (!covered[v])
                return reject("matching " + std::to_string(i) + " is not perfect: vertex " +
                              std::to_string(v) + " uncovered");
    }
    return res;
}

} // namespace pmpack
