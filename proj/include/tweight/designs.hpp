#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tweight/bigint.hpp"
#include "tweight/codes.hpp"

namespace tweight {

// Support designs: the incidence structure whose blocks are the supports of
// all codewords of one fixed weight. Verification is exhaustive, never sampled.

struct Design {
    int v = 0;  // points 1..v
    int r = 0;  // block size
    int t = 0;  // strength (0 until a verification fixes it)
    std::optional<long long> lambda;
    std::vector<std::vector<int>> blocks;  // sorted 1-based indices, pairwise distinct
};

enum class DesignStatus { Confirmed, Refuted, Degenerate };

struct DesignVerdict {
    DesignStatus status = DesignStatus::Refuted;
    bool is_design = false;
    long long lambda = 0;             // when confirmed
    std::vector<int> witness;         // a t-subset with deviant coverage when refuted
    long long witness_count = -1;
    bool identity_ok = false;         // b*C(r,t) == lambda*C(v,t)
    std::string note;
};

/// Supports of all weight-w codewords; throws when A_w = 0. Blocks come out
/// sorted lexicographically so file output is reproducible.
Design support_blocks(const LinearCode& code, int w);

/// Checks that every t-subset of points lies in the same number of blocks, by
/// per-block subset accumulation (t in {1,2}; the t >= 3 searches this would
/// need are out of scope). Shapes with r >= v or fewer than two blocks are
/// reported Degenerate, never pass/fail.
DesignVerdict verify_t_design(const Design& d, int t);

struct LambdaPrediction {
    BigRat value;
    bool integral = false;

    BigInt as_integer() const { return boost::multiprecision::numerator(value); }
};

/// (2^(k-1)-1) w (w-1) / (n (n-1)): the 2-design index of a weight-w support
/// design of a projective three-weight [n,k] code with A_n = 1. A non-integer
/// value certifies "not a design" before any enumeration.
LambdaPrediction predicted_lambda(int n, int k, int w);

/// 2r(2r-1)/(n(n-1)) * A_2r(dual), with A_2r from the three-weight closed
/// form; r must lie in [2, n/2 - 1].
LambdaPrediction predicted_dual_lambda(int n, int k, int d, int r);

struct AssmusMattsonVerdict {
    int t = 0;
    int d = 0;
    int s = 0;  // number of nonzero dual weights in (0, n-t]
    bool pass = false;
    std::vector<int> certified_code_weights;  // weight-i supports hold t-designs
    std::vector<int> certified_dual_weights;
};

/// The s <= d - t criterion computed from the transform-side dual
/// distribution; requires t < d.
AssmusMattsonVerdict assmus_mattson_gate(const LinearCode& code, int t);

struct DualDesignResult {
    int weight = 0;  // 2r
    bool prediction_available = false;
    LambdaPrediction lambda_predicted;
    bool enumerated = false;  // false: dual too large, prediction-only verdict
    long long block_count = -1;
    std::optional<DesignVerdict> verdict;
    bool matches_prediction = false;
    std::string note;
};

/// Enumerates the dual codewords of weight 2r (when n-k <= 22), extracts
/// supports, verifies the 2-design property, and compares the index against
/// the closed-form prediction.
DualDesignResult dual_design_verify(const LinearCode& code, int r);

}  // namespace tweight
