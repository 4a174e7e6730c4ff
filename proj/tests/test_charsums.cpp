#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "tweight/charsums.hpp"

using namespace tweight;

TEST_CASE("direct sums at pinned points") {
    CHECK(weil_sum_direct(make_field(3), 1, 1, 1) == -4);
    CHECK(weil_sum_direct(make_field(4), 1, 0, 0) == 16);
    CHECK(weil_sum_direct(make_field(5), 1, 1, 0) == 0);
}

TEST_CASE("jacobi_sign") {
    CHECK(jacobi_sign(3, 1) == -1);
    CHECK(jacobi_sign(5, 1) == -1);
    CHECK(jacobi_sign(7, 1) == 1);
    CHECK(jacobi_sign(9, 1) == 1);
    CHECK(jacobi_sign(9, 3) == -1);
    CHECK(jacobi_sign(3, 3) == 1);  // m == e
    CHECK_THROWS_AS(jacobi_sign(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_sign(8, 4), std::invalid_argument);  // m/e even
}

TEST_CASE("S(1,1) matches the signed closed form") {
    for (int m : {3, 5, 7}) {
        const FieldContext ctx = make_field(m);
        for (int u = 1; u < m; ++u) {
            if (std::gcd(u, m) != 1) continue;
            CHECK(weil_sum_direct(ctx, u, 1, 1) == jacobi_sign(m, 1) * (1LL << ((m + 1) / 2)));
        }
    }
    // e > 1 regime, checked against the direct sum
    CHECK(weil_sum_direct(make_field(9), 3, 1, 1) == -64);
    CHECK(jacobi_sign(9, 3) * (1LL << 6) == -64);
}

TEST_CASE("closed form: exact case") {
    const WeilSumResult r = weil_sum_closed(make_field(7), 1, 1, 1);
    CHECK(r.kind == PredictionKind::Exact);
    CHECK(r.predicted == 16);
    CHECK(r.value == 16);
    CHECK(r.agrees);
}

TEST_CASE("closed form: zero and sign-ambiguous cases at m=5") {
    const FieldContext ctx = make_field(5);
    int ambiguous = 0;
    for (FieldElement b = 2; b < ctx.q(); ++b) {
        const WeilSumResult r = weil_sum_closed(ctx, 2, 1, b);
        CHECK(r.agrees);
        if (ctx.abs_trace(b) == 0) {
            CHECK(r.kind == PredictionKind::Zero);
            CHECK(r.value == 0);
        } else {
            CHECK(r.kind == PredictionKind::PlusMinus);
            CHECK(r.predicted == 8);
            CHECK((r.value == 8 || r.value == -8));
            ++ambiguous;
        }
    }
    CHECK(ambiguous == 15);  // Tr(b)=1 for 16 elements, one of which is b=1
}

TEST_CASE("closed form: b = 0 and a = 0 cases") {
    const FieldContext ctx = make_field(5);
    for (FieldElement a = 1; a < ctx.q(); ++a) {
        const WeilSumResult r = weil_sum_closed(ctx, 1, a, 0);
        CHECK(r.kind == PredictionKind::Zero);
        CHECK(r.value == 0);
    }
    CHECK(weil_sum_closed(ctx, 1, 0, 0).predicted == 32);
    CHECK(weil_sum_closed(ctx, 1, 0, 7).predicted == 0);
    CHECK(weil_sum_closed(ctx, 1, 0, 7).agrees);
}

TEST_CASE("outside the regime the prediction is not-applicable") {
    const WeilSumResult r = weil_sum_closed(make_field(4), 2, 1, 1);  // m/e = 2
    CHECK(r.kind == PredictionKind::NotApplicable);
    CHECK(r.agrees);
}

TEST_CASE("scaling law S(a,b) = S(1, b/gamma) at m=5, u=1") {
    const FieldContext ctx = make_field(5);
    for (FieldElement a = 1; a < ctx.q(); ++a) {
        const FieldElement gamma = power_map_preimage(ctx, 1, a);
        CHECK(ctx.pow(gamma, 3) == a);
        for (FieldElement b = 1; b < ctx.q(); ++b) {
            CHECK(weil_sum_direct(ctx, 1, a, b) ==
                  weil_sum_direct(ctx, 1, 1, ctx.mul(b, ctx.inv(gamma))));
        }
    }
}

TEST_CASE("sum values stay in {0, +-2^((m+e)/2)} for a != 0 in regime") {
    const FieldContext ctx = make_field(5);
    for (FieldElement a = 1; a < ctx.q(); ++a) {
        for (FieldElement b = 0; b < ctx.q(); ++b) {
            const long long v = weil_sum_direct(ctx, 1, a, b);
            CHECK((v == 0 || v == 8 || v == -8));
        }
    }
}

TEST_CASE("sweeps agree with single-query sums") {
    const FieldContext ctx = make_field(5);
    const auto sa = weil_sweep_a(ctx, 2);
    REQUIRE(sa.size() == 31);
    for (FieldElement a = 1; a < ctx.q(); ++a) CHECK(sa[a - 1] == weil_sum_direct(ctx, 2, a, 0));
    const auto sb = weil_sweep_b(ctx, 2);
    REQUIRE(sb.size() == 32);
    for (FieldElement b = 0; b < ctx.q(); ++b) CHECK(sb[b] == weil_sum_direct(ctx, 2, 1, b));
}

TEST_CASE("preimage search rejects the non-bijective regime") {
    CHECK_THROWS_AS(power_map_preimage(make_field(4), 2, 3), std::invalid_argument);
    CHECK(power_map_preimage(make_field(5), 1, 1) == 1);
}
