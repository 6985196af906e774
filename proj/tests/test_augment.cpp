#include <doctest.h>

#include "stuck_states.hpp"

using namespace pmpack;
using namespace pmstuck;

namespace {

// the grown family must verify and be one larger
void check_grows(const StuckState& st, const AugmentResult& r) {
    MatchingFamily grown = apply_augment(st.family, r);
    CHECK(grown.size() == st.family.size() + 1);
    CHECK(verify_family(st.host, grown).ok);
}

} // namespace

TEST_CASE("stuck states are genuine") {
    for (const StuckState& st :
         {make_s0_cliques(), make_sge2_two_across(), make_sge2_none_across(),
          make_sge2_one_across(), make_s1(), make_s0_deep()}) {
        CHECK(st.host.order() == 34);
        CHECK(is_semiregular(st.host, st.host.min_degree()));
        CHECK(st.host.min_degree() >= d_threshold(34));
        CHECK(verify_family(st.host, st.family).ok);
        Graph residual = st.host.remove_edges(st.family.all_edges());
        CHECK_FALSE(perfect_matching(residual).has_value());
    }
}

TEST_CASE("two-clique residual augments through the direct path") {
    StuckState st = make_s0_cliques();
    AugmentationContext ctx = make_context(st.host, st.family);
    CHECK(ctx.tag == CaseTag::SEq0);
    CHECK(ctx.witness.q() == 2);
    CHECK(ctx.witness.comps[0].size() == 17);

    AugmentResult r = augment(st.host, st.family);
    CHECK(r.case_used == CaseTag::SEq0);
    CHECK(r.swaps.empty());
    check_grows(st, r);
}

TEST_CASE("witness-set case, two edges across") {
    StuckState st = make_sge2_two_across();
    AugmentationContext ctx = make_context(st.host, st.family);
    REQUIRE(ctx.tag == CaseTag::SGe2);
    CHECK(ctx.witness.s() == 9);
    CHECK(ctx.witness.q() == 11);
    CHECK(ctx.witness.comps[10].size() == 15);

    AugmentResult r = augment_s_ge2(ctx);
    CHECK(r.subcase == "u-cq-ge2");
    CHECK(r.replaced == 0);
    check_grows(st, r);
}

TEST_CASE("witness-set case, no edge across") {
    StuckState st = make_sge2_none_across();
    AugmentationContext ctx = make_context(st.host, st.family);
    REQUIRE(ctx.tag == CaseTag::SGe2);
    AugmentResult r = augment_s_ge2(ctx);
    CHECK(r.subcase == "u-cq-eq0");
    check_grows(st, r);
}

TEST_CASE("witness-set case, one edge across") {
    StuckState st = make_sge2_one_across();
    AugmentationContext ctx = make_context(st.host, st.family);
    REQUIRE(ctx.tag == CaseTag::SGe2);
    CHECK(ctx.witness.s() == 10);
    AugmentResult r = augment_s_ge2(ctx);
    CHECK(r.subcase == "u-cq-eq1");
    check_grows(st, r);
}

TEST_CASE("one-vertex witness augments through paired even cycles") {
    StuckState st = make_s1();
    AugmentationContext ctx = make_context(st.host, st.family);
    REQUIRE(ctx.tag == CaseTag::SEq1);
    CHECK(ctx.witness.s_set == VertexSet{0});
    CHECK(ctx.witness.q() == 3);

    AugmentResult r = augment_s_eq1(ctx);
    CHECK(r.subcase == "even-cycles");
    CHECK(r.replaced == 0); // the crafted member carries the crossing pair
    CHECK(r.first.size() == 17);
    CHECK(r.second.size() == 17);
    check_grows(st, r);

    // full dispatcher reaches the same case
    AugmentResult r2 = augment(st.host, st.family);
    CHECK(r2.case_used == CaseTag::SEq1);
}

TEST_CASE("two-component second stage with an instrumented replacement") {
    StuckState st = make_s0_deep();
    AugmentationContext ctx = make_context(st.host, st.family);
    REQUIRE(ctx.tag == CaseTag::SEq0);
    CHECK(ctx.witness.comps[0].size() == 11);
    CHECK(ctx.witness.comps[1].size() == 23);

    Matching m0p = deep_m0_prime();
    // the instrumented replacement is a perfect matching of residual+member
    Graph f = ctx.residual.add_edges(ctx.family.matchings[0].edges);
    validate_matching_in(f, m0p);
    CHECK(m0p.perfect);

    SZeroOutcome out = s_eq0_try_m0prime(ctx, 0, Edge(0, 11), m0p);
    REQUIRE(out.done);
    CHECK(out.result.subcase == "mpp-bicritical");
    check_grows(st, out.result);

    // the production dispatcher also augments this state (any valid route)
    AugmentResult r = augment(st.host, st.family);
    CHECK(r.case_used == CaseTag::SEq0);
    check_grows(st, r);
}

TEST_CASE("augment rejects residuals that are not stuck") {
    Graph host = gen_complete(34);
    MatchingFamily fam(34);
    CHECK_THROWS_WITH_AS(augment(host, fam), doctest::Contains("ResidualHasPerfectMatching"),
                         Error);
}

TEST_CASE("augment rejects small or out-of-window hosts") {
    MatchingFamily fam(20);
    CHECK_THROWS_WITH_AS(augment(gen_complete(20), fam),
                         doctest::Contains("PreconditionViolated"), Error);

    // degree below the threshold
    Graph cx = gen_counterexample(34);
    MatchingFamily fam2(34);
    CHECK_THROWS_WITH_AS(augment(cx, fam2), doctest::Contains("PreconditionViolated"), Error);
}

TEST_CASE("claim checks catch corrupted contexts") {
    StuckState st = make_sge2_two_across();
    AugmentationContext ctx = make_context(st.host, st.family);
    ctx.base_degree -= 4; // breaks the degree-budget arithmetic
    CHECK_THROWS_AS(augment_s_ge2(ctx), ClaimViolation);

    // with the first check disabled the failure moves to the budget check
    AugmentConfig cfg;
    cfg.disabled_claims = {"1-i", "1-iv", "1-v"};
    try {
        augment_s_ge2(ctx, cfg);
        FAIL("expected a claim violation");
    } catch (const ClaimViolation& cv) {
        CHECK(cv.claim() == "budget");
    }
}

TEST_CASE("randomized two-component states all augment") {
    // random dense 10-regular components of varying split
    for (int trial = 0; trial < 6; ++trial) {
        int c1 = 11 + 2 * (trial % 3); // 11, 13, 15
        int c2 = 34 - c1;
        Rng rng(mix_seed(trial, 0xA7));
        std::vector<Edge> es;
        add_circulant(es, 0, c1, 5);
        add_circulant(es, c1, c2, 5);
        Graph residual(34, es);
        // randomize by relabeling
        std::vector<int> perm = rng.permutation(34);
        EdgeSet rel;
        for (const Edge& e : residual.edges()) rel.emplace_back(perm[e.u], perm[e.v]);
        residual = Graph(34, rel);

        Graph pool = complement(residual);
        DecomposeOptions opts;
        opts.target = 8;
        opts.strategy = Strategy::Peel;
        opts.seed = trial;
        DecompositionResult fill = decompose(pool, opts);
        REQUIRE(fill.achieved == 8);
        StuckState st{residual.add_edges(fill.family.all_edges()), fill.family};
        REQUIRE(verify_family(st.host, st.family).ok);
        REQUIRE_FALSE(perfect_matching(residual).has_value());

        AugmentResult r = augment(st.host, st.family);
        check_grows(st, r);
    }
}
