#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "tweight/codes.hpp"

using namespace tweight;

namespace {

BitRow row_from_string(const std::string& bits) {
    BitRow r(static_cast<int>(bits.size()));
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j] == '1') r.set(static_cast<int>(j), true);
    return r;
}

LinearCode code_from_strings(const std::vector<std::string>& rows) {
    std::vector<BitRow> r;
    for (const auto& s : rows) r.push_back(row_from_string(s));
    return LinearCode(static_cast<int>(rows[0].size()), std::move(r));
}

/// [n, n-1] even-weight code: rows with bits at (i, i+1).
LinearCode even_weight_code(int n) {
    std::vector<BitRow> rows;
    for (int i = 0; i + 1 < n; ++i) {
        BitRow r(n);
        r.set(i, true);
        r.set(i + 1, true);
        rows.push_back(std::move(r));
    }
    return LinearCode(n, std::move(rows));
}

// Independent oracle for the Gray-walk enumeration: per message, XOR the rows
// selected by its bits.
std::vector<BigInt> naive_distribution(const LinearCode& c) {
    std::vector<BigInt> counts(c.length() + 1, 0);
    for (std::uint32_t msg = 0; msg < (std::uint32_t{1} << c.dimension()); ++msg) {
        BitRow cw(c.length());
        for (int i = 0; i < c.dimension(); ++i)
            if ((msg >> i) & 1) cw.xor_with(c.rows()[i]);
        ++counts[cw.popcount()];
    }
    return counts;
}

WeightDistribution three_weight_dist(int n, int k, int d) {
    WeightDistribution w;
    w.n = n;
    w.k = k;
    w.counts.assign(n + 1, 0);
    w.counts[0] = 1;
    w.counts[d] = pow2(k - 1) - 1;
    w.counts[n - d] = pow2(k - 1) - 1;
    w.counts[n] = 1;
    return w;
}

}  // namespace

TEST_CASE("construction validates the generator") {
    CHECK_THROWS_AS(code_from_strings({"1100", "1100"}), std::invalid_argument);
    CHECK_THROWS_AS(code_from_strings({"110", "011", "101"}), std::invalid_argument);
    CHECK_NOTHROW(code_from_strings({"110", "011"}));
}

TEST_CASE("repetition code distribution") {
    const LinearCode c = code_from_strings({"111111"});
    const auto& w = c.weight_distribution();
    CHECK(w.counts[0] == 1);
    CHECK(w.counts[6] == 1);
    for (int i = 1; i < 6; ++i) CHECK(w.counts[i] == 0);
}

TEST_CASE("even-weight [6,5] code") {
    const LinearCode c = even_weight_code(6);
    const auto& w = c.weight_distribution();
    const std::vector<BigInt> expect = {1, 0, 15, 0, 15, 0, 1};
    CHECK(w.counts == expect);
    CHECK(min_distance(c) == 2);
    CHECK(w.palindromic());

    const LinearCode dual = dual_code(c);
    CHECK(dual.dimension() == 1);
    CHECK(dual.weight_distribution().counts[6] == 1);

    const DualSummary ds = is_projective(c);
    CHECK(ds.projective);
    CHECK(ds.dual_min_distance == 6);
    CHECK(pless_check(w, ds).pass);
}

TEST_CASE("gray enumeration agrees with the naive oracle") {
    const std::vector<LinearCode> cases = {
        even_weight_code(6),
        code_from_strings({"1100110", "0110011", "0001101", "1111000"}),
        code_from_strings({"10011010111", "01010111001", "00111100101"}),
    };
    for (const auto& c : cases) CHECK(c.weight_distribution().counts == naive_distribution(c));
}

TEST_CASE("enumeration cap points at the transform route") {
    std::vector<BitRow> rows;
    for (int i = 0; i < 25; ++i) {
        BitRow r(25);
        r.set(i, true);
        rows.push_back(std::move(r));
    }
    const LinearCode c(25, std::move(rows));
    CHECK_THROWS_WITH_AS(static_cast<void>(c.weight_distribution()),
                         doctest::Contains("MacWilliams"), std::invalid_argument);
}

TEST_CASE("macwilliams transform of the even-weight code") {
    const WeightDistribution dual = macwilliams_dual(even_weight_code(6).weight_distribution());
    const std::vector<BigInt> expect = {1, 0, 0, 0, 0, 0, 1};
    CHECK(dual.counts == expect);
    CHECK(dual.k == 1);
}

TEST_CASE("macwilliams transform pins A_4 of the [28,7,12] dual") {
    const WeightDistribution w = three_weight_dist(28, 7, 12);
    const WeightDistribution dual = macwilliams_dual(w);
    CHECK(dual.counts[4] == 315);
    CHECK(dual.counts[1] == 0);
    CHECK(dual.counts[2] == 0);
    CHECK(dual.counts[3] == 0);

    SUBCASE("transform is an involution") {
        const WeightDistribution back = macwilliams_dual(dual);
        CHECK(back.counts == w.counts);
        CHECK(back.k == 7);
    }
}

TEST_CASE("transform rejects an inconsistent distribution") {
    WeightDistribution w = three_weight_dist(28, 7, 12);
    w.counts[12] -= 1;
    CHECK_THROWS_WITH_AS(macwilliams_dual(w), doctest::Contains("inconsistent distribution"),
                         std::runtime_error);
}

TEST_CASE("transform equals direct dual enumeration") {
    const std::vector<LinearCode> cases = {
        even_weight_code(6),
        code_from_strings({"1100110", "0110011", "0001101", "1111000"}),
        code_from_strings({"110010101", "011001101", "001110011"}),
    };
    for (const auto& c : cases) {
        const WeightDistribution via_transform = macwilliams_dual(c.weight_distribution());
        const WeightDistribution direct = dual_code(c).weight_distribution();
        CHECK(via_transform.counts == direct.counts);
    }
}

TEST_CASE("dual of dual spans the original code") {
    const LinearCode c = code_from_strings({"1100110", "0110011", "1010100"});
    const LinearCode dd = dual_code(dual_code(c));
    CHECK(dd.dimension() == c.dimension());
    CHECK(dd.weight_distribution().counts == c.weight_distribution().counts);
}

TEST_CASE("column permutation leaves the distribution unchanged") {
    const LinearCode c = code_from_strings({"1100110", "0110011", "1010100"});
    std::vector<int> perm = {3, 0, 6, 2, 5, 1, 4};
    std::vector<BitRow> rows;
    for (const BitRow& r : c.rows()) {
        BitRow p(7);
        for (int j = 0; j < 7; ++j)
            if (r.get(j)) p.set(perm[j], true);
        rows.push_back(std::move(p));
    }
    const LinearCode permuted(7, std::move(rows));
    CHECK(permuted.weight_distribution().counts == c.weight_distribution().counts);
}

TEST_CASE("projectivity detects zero and repeated columns") {
    const DualSummary zero_col = is_projective(code_from_strings({"110", "010"}));
    CHECK_FALSE(zero_col.projective);
    CHECK(zero_col.dual_counts[1] >= 1);

    const DualSummary dup_col = is_projective(code_from_strings({"110", "001"}));
    CHECK_FALSE(dup_col.projective);
    CHECK(dup_col.dual_counts[2] >= 1);
}

TEST_CASE("full-space code is projective by convention") {
    const DualSummary ds = is_projective(code_from_strings({"100", "010", "001"}));
    CHECK(ds.projective);
    CHECK(ds.dual_dimension_zero);
    CHECK_FALSE(ds.dual_min_distance.has_value());
}

TEST_CASE("pless moments flag a perturbed count") {
    const LinearCode c = even_weight_code(6);
    const DualSummary ds = is_projective(c);
    WeightDistribution w = c.weight_distribution();
    w.counts[2] -= 1;
    const PlessVerdict v = pless_check(w, ds);
    CHECK_FALSE(v.pass);
    CHECK(v.failed_moment == 1);
    CHECK(v.lhs == 31);
    CHECK(v.rhs == 32);
}

TEST_CASE("second moment certifies A1 of the dual") {
    // [5,4] with weights 2 and 4: sum(j A_j) = 40 = 2^3 * (5 - 0)
    WeightDistribution w;
    w.n = 5;
    w.k = 4;
    w.counts = {1, 0, 10, 0, 5, 0};
    DualSummary ds;
    ds.dual_counts = macwilliams_dual(w).counts;
    ds.projective = ds.dual_counts[1] == 0 && ds.dual_counts[2] == 0;
    CHECK(pless_check(w, ds).pass);
    CHECK(ds.dual_counts[1] == 0);
}

TEST_CASE("three-weight closed forms on the [6,5,2] code") {
    CHECK(three_weight_dual_even_count(6, 5, 2, 2) == 0);  // A_4 of the dual
    CHECK(three_weight_dual_even_count(6, 5, 2, 3) == 1);  // A_6
    const ThreeWeightProfile p = three_weight_profile(even_weight_code(6));
    CHECK(p.hypotheses_ok);
    CHECK(p.w1 == 2);
    CHECK(p.w2 == 4);
    CHECK(p.w3 == 6);
    CHECK(p.all_match());
}

TEST_CASE("closed form matches the transform for the [28,7,12] pattern") {
    CHECK(three_weight_dual_even_count(28, 7, 12, 2) == 315);
    const WeightDistribution dual = macwilliams_dual(three_weight_dist(28, 7, 12));
    for (int r = 1; r <= 14; ++r)
        CHECK(three_weight_dual_even_count(28, 7, 12, r) == dual.counts[2 * r]);
}

TEST_CASE("profile names the failed hypothesis") {
    // three distinct weights {2,4,6} on n = 7, but no all-ones word
    const ThreeWeightProfile no_ones = three_weight_profile(code_from_strings({"1100000", "0011110"}));
    CHECK_FALSE(no_ones.hypotheses_ok);
    CHECK(no_ones.failed_hypothesis == "A_n(C) = 1");

    const ThreeWeightProfile two_w = three_weight_profile(code_from_strings({"110000", "001100"}));
    CHECK_FALSE(two_w.hypotheses_ok);
    CHECK(two_w.failed_hypothesis == "exactly three nonzero weights");
}

TEST_CASE("palindromic distribution iff the all-ones word is present") {
    const LinearCode with = even_weight_code(6);
    CHECK(with.weight_distribution().palindromic());
    CHECK(with.weight_distribution().counts[6] == 1);
    const LinearCode without = code_from_strings({"1100000", "0011110"});
    CHECK_FALSE(without.weight_distribution().palindromic());
    CHECK(without.weight_distribution().counts[7] == 0);
}
