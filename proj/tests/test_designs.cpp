#include "doctest.h"

#include <set>

#include "tweight/constructions.hpp"
#include "tweight/designs.hpp"

using namespace tweight;

namespace {

LinearCode drho_code(int m, int u, int rho) {
    return defining_set_code(d_rho_set(make_field(m), u, rho));
}

}  // namespace

TEST_CASE("support blocks of the [6,5,2] code at weight 2 are all pairs") {
    const LinearCode c = drho_code(5, 1, 1);
    const Design d = support_blocks(c, 2);
    CHECK(d.v == 6);
    CHECK(d.r == 2);
    REQUIRE(d.blocks.size() == 15);
    std::set<std::vector<int>> blocks(d.blocks.begin(), d.blocks.end());
    CHECK(blocks.size() == 15);  // all distinct: forced, 15 = C(6,2)
    const DesignVerdict v = verify_t_design(d, 2);
    CHECK(v.is_design);
    CHECK(v.lambda == 1);  // the trivial Steiner system S(2,2,6)
    CHECK(v.identity_ok);
}

TEST_CASE("weight-n supports give a single degenerate block") {
    const LinearCode c = drho_code(5, 1, 1);
    const Design d = support_blocks(c, 6);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(verify_t_design(d, 2).status == DesignStatus::Degenerate);
}

TEST_CASE("absent weight raises the empty-design error") {
    CHECK_THROWS_AS(support_blocks(drho_code(5, 1, 1), 3), std::runtime_error);
}

TEST_CASE("complete pair design") {
    Design d;
    d.v = 4;
    d.r = 2;
    d.blocks = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    const DesignVerdict v = verify_t_design(d, 2);
    CHECK(v.is_design);
    CHECK(v.lambda == 1);
}

TEST_CASE("refuted design carries a witness pair") {
    Design d;
    d.v = 4;
    d.r = 3;
    d.blocks = {{1, 2, 3}, {1, 2, 4}};
    const DesignVerdict v = verify_t_design(d, 2);
    CHECK_FALSE(v.is_design);
    CHECK(v.status == DesignStatus::Refuted);
    CHECK(v.witness == std::vector<int>{3, 4});
    CHECK(v.witness_count == 0);
}

TEST_CASE("t = 1 verification counts point coverage") {
    Design d;
    d.v = 3;
    d.r = 2;
    d.blocks = {{1, 2}, {1, 3}, {2, 3}};
    const DesignVerdict v = verify_t_design(d, 1);
    CHECK(v.is_design);
    CHECK(v.lambda == 2);
    CHECK(v.identity_ok);
}

TEST_CASE("verification rejects unsupported strengths and malformed blocks") {
    Design d;
    d.v = 5;
    d.r = 3;
    d.blocks = {{1, 2, 3}, {2, 3, 4}};
    CHECK_THROWS_AS(verify_t_design(d, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_t_design(d, 0), std::invalid_argument);
    Design bad = d;
    bad.blocks[0] = {1, 2, 7};
    CHECK_THROWS_AS(verify_t_design(bad, 2), std::invalid_argument);
}

TEST_CASE("[28,7,12] supports: 63 blocks at each small weight, pinned indexes") {
    const LinearCode c = drho_code(7, 1, 0);
    const Design d12 = support_blocks(c, 12);
    REQUIRE(d12.blocks.size() == 63);
    const DesignVerdict v12 = verify_t_design(d12, 2);
    CHECK(v12.is_design);
    CHECK(v12.lambda == 11);
    CHECK(v12.identity_ok);

    const Design d16 = support_blocks(c, 16);
    REQUIRE(d16.blocks.size() == 63);
    const DesignVerdict v16 = verify_t_design(d16, 2);
    CHECK(v16.is_design);
    CHECK(v16.lambda == 20);
}

TEST_CASE("closed-form design index") {
    CHECK(predicted_lambda(28, 7, 16).value == 20);
    CHECK(predicted_lambda(28, 7, 12).value == 11);
    CHECK(predicted_lambda(36, 7, 16).value == 12);
    CHECK(predicted_lambda(36, 7, 20).value == 19);
    CHECK(predicted_lambda(6, 5, 2).value == 1);
    CHECK(predicted_lambda(28, 7, 16).integral);
    CHECK_FALSE(predicted_lambda(28, 7, 14).integral);  // 63*14*13/756 is not an integer
}

TEST_CASE("closed-form dual design index") {
    const LambdaPrediction p = predicted_dual_lambda(28, 7, 12, 2);
    CHECK(p.integral);
    CHECK(p.value == 5);
    CHECK_THROWS_AS(predicted_dual_lambda(28, 7, 12, 1), std::invalid_argument);
    CHECK_THROWS_AS(predicted_dual_lambda(28, 7, 12, 14), std::invalid_argument);
}

TEST_CASE("assmus-mattson gate on the [6,5,2] code") {
    const LinearCode c = drho_code(5, 1, 1);
    const AssmusMattsonVerdict v = assmus_mattson_gate(c, 2);
    CHECK(v.s == 0);  // only A_6 of the dual is nonzero, beyond n-t = 4
    CHECK(v.d == 2);
    CHECK(v.pass);
    CHECK(v.certified_code_weights == std::vector<int>{2, 4, 6});
    CHECK(v.certified_dual_weights.empty());
    CHECK_THROWS_AS(assmus_mattson_gate(c, 1 + min_distance(c)), std::invalid_argument);
}

TEST_CASE("assmus-mattson gate on the [28,7,12] code and its dual") {
    // Applied to the code itself the dual spectrum is too rich: s exceeds
    // d - t, so the gate honestly fails in that direction.
    const LinearCode c = drho_code(7, 1, 0);
    const AssmusMattsonVerdict direct = assmus_mattson_gate(c, 2);
    CHECK_FALSE(direct.pass);
    CHECK(direct.s > 10);

    // The design-producing direction runs the gate on the dual: s counts the
    // two small weights of the code, and d of the dual is 4.
    const AssmusMattsonVerdict swapped = assmus_mattson_gate(dual_code(c), 2);
    CHECK(swapped.pass);
    CHECK(swapped.s == 2);
    CHECK(swapped.d == 4);
    // certified on the dual side of the dual = the code's small weights
    CHECK(swapped.certified_dual_weights == std::vector<int>{12, 16});
}

TEST_CASE("dual design of the [28,7,12] code at r=2 is a 2-(28,4,5) design") {
    const DualDesignResult res = dual_design_verify(drho_code(7, 1, 0), 2);
    REQUIRE(res.enumerated);
    CHECK(res.block_count == 315);
    REQUIRE(res.verdict.has_value());
    CHECK(res.verdict->is_design);
    CHECK(res.verdict->lambda == 5);
    CHECK(res.prediction_available);
    CHECK(res.matches_prediction);
}

TEST_CASE("dual design of the [10,5,4] code agrees on both routes") {
    const DualDesignResult res = dual_design_verify(drho_code(5, 1, 0), 2);
    REQUIRE(res.enumerated);
    CHECK(res.block_count == 15);
    REQUIRE(res.verdict.has_value());
    CHECK(res.verdict->is_design);
    CHECK(res.verdict->lambda == 2);  // 2-(10,4,2)
    CHECK(res.prediction_available);
    CHECK(res.matches_prediction);
}

TEST_CASE("degenerate and empty dual design shapes") {
    const LinearCode c = drho_code(5, 1, 1);  // [6,5,2], dual = repetition
    const DualDesignResult single = dual_design_verify(c, 3);
    REQUIRE(single.enumerated);
    CHECK(single.block_count == 1);
    REQUIRE(single.verdict.has_value());
    CHECK(single.verdict->status == DesignStatus::Degenerate);

    const DualDesignResult empty = dual_design_verify(c, 2);  // A_4 of the dual is 0
    REQUIRE(empty.enumerated);
    CHECK(empty.block_count == 0);
    CHECK_FALSE(empty.verdict.has_value());
}

TEST_CASE("observed index equals w - 1 at the anchor weights") {
    // arithmetic identity of the closed form at these parameters
    CHECK(predicted_lambda(28, 7, 12).value == 11);
    CHECK(predicted_lambda(36, 7, 20).value == 19);
    CHECK(predicted_lambda(120, 9, 56).value == 55);
    CHECK(predicted_lambda(136, 9, 72).value == 71);
}

TEST_CASE("index identities of the closed form across the whole family") {
    // short family: lambda at the smallest weight is w1 - 1;
    // long family: lambda at the larger small weight is w2 - 1
    for (int m : {5, 7, 9, 11, 13}) {
        const int off = 1 << ((m - 3) / 2);
        const int n_short = (1 << (m - 2)) - off;
        const int w1 = (1 << (m - 3)) - off;
        CHECK(predicted_lambda(n_short, m, w1).value == w1 - 1);

        const int n_long = (1 << (m - 2)) + off;
        const int w2 = (1 << (m - 3)) + off;
        CHECK(predicted_lambda(n_long, m, w2).value == w2 - 1);
    }
}
