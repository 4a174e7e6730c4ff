#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tweight/bigint.hpp"
#include "tweight/bitrow.hpp"

namespace tweight {

/// Exact weight distribution A_0..A_n of a binary [n,k] code.
struct WeightDistribution {
    int n = 0;
    int k = 0;
    std::vector<BigInt> counts;  // size n+1, counts[i] = A_i

    std::vector<int> nonzero_weights() const;  // i > 0 with A_i > 0, ascending
    int min_positive_weight() const;           // -1 when the code is {0}
    bool palindromic() const;                  // A_w == A_{n-w} for all w
};

// A binary [n,k] linear code given by a generator matrix with independent
// rows (rank k, verified at construction). Immutable; the cached weight
// distribution is computed once, thread-safely, on first use.
class LinearCode {
  public:
    LinearCode(int n, std::vector<BitRow> rows, std::string provenance = {});

    int length() const { return n_; }
    int dimension() const { return k_; }
    const std::vector<BitRow>& rows() const { return rows_; }
    const std::string& provenance() const { return provenance_; }

    /// Exact counts by enumerating all 2^k codewords (k <= 24).
    const WeightDistribution& weight_distribution() const;

  private:
    struct Cache {
        std::once_flag flag;
        WeightDistribution dist;
    };

    int n_ = 0;
    int k_ = 0;
    std::vector<BitRow> rows_;
    std::string provenance_;
    std::shared_ptr<Cache> cache_;
};

/// Walks all 2^k codewords in Gray-code order (one row XOR per step),
/// starting from the zero word. k <= 24 enforced.
template <class F>
void for_each_codeword(const LinearCode& code, F&& fn) {
    if (code.dimension() > 24)
        throw std::invalid_argument("codeword enumeration capped at k <= 24; use the MacWilliams route");
    BitRow cw(code.length());
    fn(static_cast<const BitRow&>(cw));
    const std::uint32_t total = std::uint32_t{1} << code.dimension();
    for (std::uint32_t t = 1; t < total; ++t) {
        cw.xor_with(code.rows()[__builtin_ctz(t)]);
        fn(static_cast<const BitRow&>(cw));
    }
}

struct DualSummary {
    std::vector<BigInt> dual_counts;        // A^perp_0..A^perp_n
    std::optional<int> dual_min_distance;   // empty when the dual is {0}
    bool projective = false;                // A^perp_1 == A^perp_2 == 0
    bool dual_dimension_zero = false;       // k == n convention: projective, d^perp infinite
};

struct PlessVerdict {
    bool pass = false;
    int failed_moment = 0;  // 0 when all three hold, else 1..3
    BigInt lhs, rhs;        // sides of the first violated moment
};

/// Result of checking the closed forms that a projective three-weight code
/// with A_n = 1 must satisfy: weight locations, enumerator shape, and the
/// even-weight dual counts against the MacWilliams transform.
struct ThreeWeightProfile {
    bool hypotheses_ok = false;
    std::string failed_hypothesis;  // names the failed precondition
    int w1 = 0, w2 = 0, w3 = 0;     // expected weights from the closed form
    bool weights_match = false;
    bool enumerator_match = false;
    bool dual_counts_match = false;
    int first_mismatch_weight = -1;  // dual weight of the first mismatch, -1 when none
    BigInt closed_form_value, transform_value;

    bool all_match() const { return hypotheses_ok && weights_match && enumerator_match && dual_counts_match; }
};

/// Exact dual distribution via the MacWilliams transform. Throws
/// std::runtime_error("inconsistent distribution...") when any output count
/// comes out fractional or negative.
WeightDistribution macwilliams_dual(const WeightDistribution& w);

/// Generator of the kernel of the code's generator matrix (the dual code).
LinearCode dual_code(const LinearCode& code);

int min_distance(const LinearCode& code);

/// Dual distribution via the transform; when n-k <= 22 the dual is also
/// enumerated directly and the two routes are required to agree.
DualSummary is_projective(const LinearCode& code);

/// First three power-moment identities relating a distribution to its dual.
PlessVerdict pless_check(const WeightDistribution& w, const DualSummary& dual);

/// Closed-form A_{2r} of the dual of a projective three-weight [n,k,d] code
/// with A_n = 1. Exact; throws when the division does not come out integral.
BigInt three_weight_dual_even_count(int n, int k, int d, int r);

ThreeWeightProfile three_weight_profile(const LinearCode& code);

}  // namespace tweight
