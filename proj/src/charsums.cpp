#include "tweight/charsums.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace tweight {

namespace {

void check_u(int u) {
    if (u < 1 || u > 62) throw std::invalid_argument("u must be in [1,62]");
}

std::uint64_t power_exponent(int u) { return (std::uint64_t{1} << u) + 1; }

}  // namespace

long long weil_sum_direct(const FieldContext& ctx, int u, FieldElement a, FieldElement b) {
    check_u(u);
    const std::uint64_t e = power_exponent(u);
    long long s = 0;
    for (FieldElement x = 0; x < ctx.q(); ++x) {
        const int t = ctx.abs_trace(ctx.mul(a, ctx.pow(x, e))) ^ ctx.abs_trace(ctx.mul(b, x));
        s += t ? -1 : 1;
    }
    return s;
}

std::vector<long long> weil_sweep_a(const FieldContext& ctx, int u) {
    check_u(u);
    const std::uint32_t q = ctx.q();
    const std::uint32_t order = q - 1;
    std::vector<long long> out(q - 1);
    if (!ctx.has_log_tables()) {
        for (FieldElement a = 1; a < q; ++a) out[a - 1] = weil_sum_direct(ctx, u, a, 0);
        return out;
    }
    // log of x^(2^u+1) as x walks the multiplicative group
    const std::uint64_t s = power_exponent(u) % order;
    std::vector<std::uint32_t> lp(order);
    for (std::uint32_t i = 0; i < order; ++i)
        lp[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * s) % order);
    std::vector<std::int8_t> tr(2 * order);
    for (std::uint32_t i = 0; i < 2 * order; ++i)
        tr[i] = static_cast<std::int8_t>(ctx.abs_trace(ctx.exp_at(i)));
    for (FieldElement a = 1; a < q; ++a) {
        const std::uint32_t la = ctx.log_of(a);
        long long acc = 1;  // x = 0 contributes +1
        for (std::uint32_t i = 0; i < order; ++i) acc += 1 - 2 * tr[la + lp[i]];
        out[a - 1] = acc;
    }
    return out;
}

std::vector<long long> weil_sweep_b(const FieldContext& ctx, int u) {
    check_u(u);
    const std::uint32_t q = ctx.q();
    const std::uint32_t order = q - 1;
    std::vector<long long> out(q);
    if (!ctx.has_log_tables()) {
        for (FieldElement b = 0; b < q; ++b) out[b] = weil_sum_direct(ctx, u, 1, b);
        return out;
    }
    const std::uint64_t s = power_exponent(u) % order;
    std::vector<std::int8_t> t1(order);  // Tr(x^(2^u+1)) for x = g^i
    for (std::uint32_t i = 0; i < order; ++i) {
        const std::uint32_t j = static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * s) % order);
        t1[i] = static_cast<std::int8_t>(ctx.abs_trace(ctx.exp_at(j)));
    }
    std::vector<std::int8_t> tr(2 * order);
    for (std::uint32_t i = 0; i < 2 * order; ++i)
        tr[i] = static_cast<std::int8_t>(ctx.abs_trace(ctx.exp_at(i)));
    {
        long long acc = 1;
        for (std::uint32_t i = 0; i < order; ++i) acc += 1 - 2 * t1[i];
        out[0] = acc;
    }
    for (FieldElement b = 1; b < q; ++b) {
        const std::uint32_t lb = ctx.log_of(b);
        long long acc = 1;
        for (std::uint32_t i = 0; i < order; ++i) acc += 1 - 2 * (t1[i] ^ tr[lb + i]);
        out[b] = acc;
    }
    return out;
}

int jacobi_sign(int m, int e) {
    if (e < 1 || m < 1 || m % e != 0)
        throw std::invalid_argument("jacobi_sign: e must divide m");
    const long long s = m / e;
    if (s % 2 == 0) throw std::invalid_argument("jacobi_sign: m/e must be odd");
    if (s == 1) return 1;
    const long long exponent = e * ((s * s - 1) / 8);
    return (exponent % 2 == 0) ? 1 : -1;
}

FieldElement power_map_preimage(const FieldContext& ctx, int u, FieldElement a) {
    check_u(u);
    if (a == 0) throw std::invalid_argument("preimage of 0 under the power map");
    const int e = std::gcd(ctx.m(), u);
    if ((ctx.m() / e) % 2 == 0)
        throw std::invalid_argument("power map is not a bijection when m/gcd(m,u) is even");
    const std::uint64_t exp = power_exponent(u);
    FieldElement found = 0;
    int count = 0;
    for (FieldElement g = 1; g < ctx.q(); ++g) {
        if (ctx.pow(g, exp) == a) {
            found = g;
            ++count;
        }
    }
    if (count != 1)
        throw std::logic_error("power map preimage not unique (" + std::to_string(count) +
                               " solutions); field arithmetic bug");
    return found;
}

WeilSumResult weil_sum_closed(const FieldContext& ctx, int u, FieldElement a, FieldElement b) {
    check_u(u);
    WeilSumResult r;
    r.value = weil_sum_direct(ctx, u, a, b);

    const int m = ctx.m();
    const int e = std::gcd(m, u);
    if (a == 0) {
        // Orthogonality of additive characters: sum is q at b = 0, else 0.
        r.kind = PredictionKind::Exact;
        r.predicted = (b == 0) ? static_cast<long long>(ctx.q()) : 0;
        r.agrees = (r.value == r.predicted);
        return r;
    }
    if ((m / e) % 2 == 0) {
        r.kind = PredictionKind::NotApplicable;
        r.agrees = true;
        return r;
    }
    if (b == 0) {
        r.kind = PredictionKind::Zero;
        r.predicted = 0;
        r.agrees = (r.value == 0);
        return r;
    }
    const FieldElement gamma = (a == 1) ? FieldElement{1} : power_map_preimage(ctx, u, a);
    const FieldElement b_reduced = ctx.mul(b, ctx.inv(gamma));
    const long long magnitude = 1LL << ((m + e) / 2);
    if (b_reduced == 1) {
        r.kind = PredictionKind::Exact;
        r.predicted = jacobi_sign(m, e) * magnitude;
        r.agrees = (r.value == r.predicted);
    } else if (ctx.rel_trace(b_reduced, e) == 1) {
        r.kind = PredictionKind::PlusMinus;
        r.predicted = magnitude;
        r.agrees = (r.value == magnitude || r.value == -magnitude);
    } else {
        r.kind = PredictionKind::Zero;
        r.predicted = 0;
        r.agrees = (r.value == 0);
    }
    return r;
}

}  // namespace tweight
