#pragma once

#include <cstdint>
#include <vector>

#include "tweight/field.hpp"

namespace tweight {

// Exponential sums S_u(a,b) = sum over x in GF(2^m) of (-1)^Tr(a x^(2^u+1) + b x),
// evaluated directly and via the closed forms valid when m/gcd(m,u) is odd.

struct WeilSumQuery {
    int u = 1;
    FieldElement a = 0;
    FieldElement b = 0;
    int e = 1;  // gcd(m, u), always recomputed from (m, u)
};

enum class PredictionKind {
    NotApplicable,  // outside the m/e-odd regime
    Zero,
    Exact,      // signed value fully determined
    PlusMinus,  // magnitude determined, sign not
};

struct WeilSumResult {
    long long value = 0;  // exact sum by full enumeration
    PredictionKind kind = PredictionKind::NotApplicable;
    long long predicted = 0;  // Exact: signed value; PlusMinus: magnitude
    bool agrees = true;
};

/// Exact S_u(a,b) by enumerating the whole field. 1 <= u <= 62.
long long weil_sum_direct(const FieldContext& ctx, int u, FieldElement a, FieldElement b);

/// Closed-form prediction compared against the direct sum. When m/gcd(m,u)
/// is even the result carries kind NotApplicable (not an error).
WeilSumResult weil_sum_closed(const FieldContext& ctx, int u, FieldElement a, FieldElement b);

/// (-1)^((m^2 - e^2)/(8e)) for e | m with m/e odd; +1 when m == e.
int jacobi_sign(int m, int e);

/// The unique g with g^(2^u+1) = a, found by exhaustive search; requires the
/// m/e-odd regime where the power map is a bijection. Throws otherwise.
FieldElement power_map_preimage(const FieldContext& ctx, int u, FieldElement a);

/// S_u(a,0) for every a = 1..q-1, in element order (table-backed fast path).
std::vector<long long> weil_sweep_a(const FieldContext& ctx, int u);

/// S_u(1,b) for every b = 0..q-1, in element order.
std::vector<long long> weil_sweep_b(const FieldContext& ctx, int u);

}  // namespace tweight
