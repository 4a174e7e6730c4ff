#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tweight/codes.hpp"
#include "tweight/field.hpp"

namespace tweight {

// Defining-set codes: C_D has one coordinate per element of D and codewords
// (Tr(b*d_1), ..., Tr(b*d_n)) as b runs over the field.

struct DefiningSet {
    FieldContext ctx;
    std::vector<FieldElement> elements;  // distinct, nonzero, ascending integer order
    std::string kind;                    // "d-rho" | "custom" | "all-nonzero"
    int u = 0;
    int rho = -1;
    bool regime = false;  // m >= 5 odd and gcd(u,m) = 1: closed-form claims apply
};

/// D_rho = {x : Tr(x) = 1, Tr(x^(2^u+1)) = rho}. In the closed-form regime the
/// set size is asserted against 2^(m-2) -/+ I_m 2^((m-3)/2); a mismatch throws
/// (it signals a field-arithmetic bug, not bad input).
DefiningSet d_rho_set(const FieldContext& ctx, int u, int rho);

/// The code generated by rows (Tr(alpha^i d_1), ..., Tr(alpha^i d_n)) over the
/// polynomial basis, dependent rows removed. For an in-regime D_rho the
/// dimension is asserted to be m.
LinearCode defining_set_code(const DefiningSet& d);

struct WeightPrediction {
    bool applicable = false;
    std::vector<int> weights;  // {|D|/2 - 2^((m-5)/2), |D|/2 + 2^((m-5)/2), |D|}
    int unit_weight = 0;       // weight of the b = 1 codeword, = |D|
};

/// Admissible nonzero weights of an in-regime d-rho code; not-applicable
/// outside the regime.
WeightPrediction codeword_weight_predictions(const DefiningSet& d);

/// Length n+1, dimension k+1: append a zero coordinate to every codeword and
/// close under adding the all-ones word.
LinearCode extend_code(const LinearCode& code);

/// Gate for the two-weight -> three-weight extension: the input must be
/// projective with exactly two nonzero weights summing to length+1; the
/// extension is then checked to be projective three-weight with A_n = 1.
struct ExtensionGate {
    bool input_projective = false;
    bool input_two_weight = false;
    bool input_complementary = false;  // w1 + w2 == length + 1
    std::vector<int> input_weights;
    bool pass = false;  // all input checks hold
    std::optional<LinearCode> extended;
    bool ext_projective = false;
    bool ext_three_weight = false;
    bool ext_all_ones_unique = false;  // A_n = 1

    bool ok() const { return pass && ext_projective && ext_three_weight && ext_all_ones_unique; }
};

ExtensionGate etw_gate(const LinearCode& code);

enum class QuadricVariant { Elliptic, Hyperbolic };

/// Two-weight input codes from quadratic-form zero sets. Nothing is trusted
/// from theory: the report records, by enumeration, whether the code has two
/// nonzero weights, is projective, and has complementary weights; only then
/// is it fit for etw_gate.
struct TwoWeightReport {
    LinearCode code;
    int predicted_n = 0;
    int predicted_k = 0;
    std::vector<int> predicted_weights;
    std::vector<int> observed_weights;
    bool two_weight = false;
    bool projective = false;
    bool complementary = false;

    bool gate_ready() const { return two_weight && projective && complementary; }
};

/// subfield is GF(2^k); the elliptic variant builds its defining set inside
/// GF(2^2k) (modulus big_modulus, default when 0), the hyperbolic variant on
/// pairs over the subfield itself.
TwoWeightReport quadric_two_weight(const FieldContext& subfield, QuadricVariant variant,
                                   std::uint32_t big_modulus = 0);

/// Observed-vs-predicted summary for one constructed code.
struct ReportItem {
    std::string name;       // "length", "dimension", ...
    std::string rule;       // which closed form predicted it
    std::string predicted;
    std::string observed;
    bool match = false;
};

struct ConstructionReport {
    LinearCode code;
    bool in_regime = false;  // false: observed values reported, nothing asserted
    std::vector<ReportItem> items;

    bool all_match() const {
        for (const auto& it : items)
            if (!it.match) return false;
        return true;
    }
};

/// d_rho_set + defining_set_code + closed-form parameter comparison.
ConstructionReport build_d_rho_code(const FieldContext& ctx, int u, int rho);

}  // namespace tweight
