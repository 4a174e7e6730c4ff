#include "tweight/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tweight/charsums.hpp"

namespace tweight {

namespace {

using nlohmann::json;

std::string hex_mask(std::uint32_t mask) {
    std::ostringstream os;
    os << "0x" << std::hex << mask;
    return os.str();
}

/// Earliest maximal linearly independent subset, original row order kept.
std::vector<BitRow> independent_rows(const std::vector<BitRow>& rows) {
    std::vector<BitRow> basis;       // reduced copies
    std::vector<BitRow> selected;    // original rows
    for (const BitRow& row : rows) {
        BitRow red = row;
        for (const BitRow& b : basis) {
            const int lead = b.lowest_set();
            if (lead >= 0 && red.get(lead)) red.xor_with(b);
        }
        if (!red.is_zero()) {
            basis.push_back(red);
            selected.push_back(row);
        }
    }
    return selected;
}

std::string weights_to_string(const std::vector<int>& ws) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) os << ",";
        os << ws[i];
    }
    os << "}";
    return os.str();
}

std::string enumerator_string(const std::vector<BigInt>& counts) {
    std::ostringstream os;
    os << "1";
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        os << " + ";
        if (counts[i] != 1) os << counts[i].str();
        os << "z^" << i;
    }
    return os.str();
}

/// Trace to GF(2) of an element of the degree-e subfield, computed inside the
/// ambient field as the partial Frobenius sum. The input must satisfy
/// y^(2^e) = y; the sum then lands in {0,1}.
int subfield_abs_trace(const FieldContext& ctx, FieldElement y, int e) {
    FieldElement s = 0;
    FieldElement t = y;
    for (int i = 0; i < e; ++i) {
        s ^= t;
        t = ctx.mul(t, t);
    }
    if (t != y) throw std::invalid_argument("element does not lie in the degree-" + std::to_string(e) + " subfield");
    if (s > 1) throw std::logic_error("subfield trace escaped GF(2)");
    return static_cast<int>(s);
}

}  // namespace

DefiningSet d_rho_set(const FieldContext& ctx, int u, int rho) {
    if (rho != 0 && rho != 1) throw std::invalid_argument("rho must be 0 or 1");
    if (u < 1 || u > 62) throw std::invalid_argument("u must be in [1,62]");
    const std::uint64_t exponent = (std::uint64_t{1} << u) + 1;

    DefiningSet d{ctx, {}, "d-rho", u, rho, false};
    for (FieldElement x = 1; x < ctx.q(); ++x) {
        if (ctx.abs_trace(x) == 1 && ctx.abs_trace(ctx.pow(x, exponent)) == rho)
            d.elements.push_back(x);
    }

    const int m = ctx.m();
    d.regime = (m >= 5 && m % 2 == 1 && std::gcd(u, m) == 1);
    if (d.regime) {
        const long long sign = jacobi_sign(m, 1);
        const long long base = 1LL << (m - 2);
        const long long offset = sign * (1LL << ((m - 3) / 2));
        const long long expected = (rho == 0) ? base - offset : base + offset;
        if (static_cast<long long>(d.elements.size()) != expected) {
            throw std::runtime_error("defining set size " + std::to_string(d.elements.size()) +
                                     " != closed-form " + std::to_string(expected) +
                                     " (m=" + std::to_string(m) + ", u=" + std::to_string(u) +
                                     ", rho=" + std::to_string(rho) + "): field-arithmetic bug");
        }
    }
    return d;
}

LinearCode defining_set_code(const DefiningSet& d) {
    if (d.elements.empty()) throw std::invalid_argument("defining set is empty");
    const FieldContext& ctx = d.ctx;
    const int m = ctx.m();
    const int n = static_cast<int>(d.elements.size());

    std::vector<BitRow> rows;
    rows.reserve(m);
    for (int i = 0; i < m; ++i) {
        const FieldElement basis = std::uint32_t{1} << i;
        BitRow row(n);
        for (int j = 0; j < n; ++j) {
            if (ctx.abs_trace(ctx.mul(basis, d.elements[j]))) row.set(j, true);
        }
        rows.push_back(std::move(row));
    }
    std::vector<BitRow> kept = independent_rows(rows);
    if (d.regime && static_cast<int>(kept.size()) != m)
        throw std::runtime_error("in-regime defining-set code has dimension " +
                                 std::to_string(kept.size()) + ", expected " + std::to_string(m));

    json prov;
    prov["construction"] = d.kind;
    prov["m"] = m;
    prov["modulus"] = hex_mask(ctx.modulus());
    if (d.kind == "d-rho") {
        prov["u"] = d.u;
        prov["rho"] = d.rho;
    }
    prov["basis"] = "polynomial";
    return LinearCode(n, std::move(kept), prov.dump());
}

WeightPrediction codeword_weight_predictions(const DefiningSet& d) {
    WeightPrediction p;
    if (d.kind != "d-rho" || !d.regime) return p;
    p.applicable = true;
    const int size = static_cast<int>(d.elements.size());
    const int offset = 1 << ((d.ctx.m() - 5) / 2);
    p.weights = {size / 2 - offset, size / 2 + offset, size};
    p.unit_weight = size;
    return p;
}

LinearCode extend_code(const LinearCode& code) {
    const int n = code.length();
    std::vector<BitRow> rows;
    rows.reserve(code.dimension() + 1);
    for (const BitRow& r : code.rows()) {
        BitRow wide(n + 1);
        for (int j = 0; j < n; ++j)
            if (r.get(j)) wide.set(j, true);
        rows.push_back(std::move(wide));
    }
    BitRow ones(n + 1);
    for (int j = 0; j <= n; ++j) ones.set(j, true);
    rows.push_back(std::move(ones));

    json prov;
    prov["construction"] = "extend";
    if (!code.provenance().empty()) {
        json parent = json::parse(code.provenance(), nullptr, false);
        prov["parent"] = parent.is_discarded() ? json(code.provenance()) : parent;
    }
    return LinearCode(n + 1, std::move(rows), prov.dump());
}

ExtensionGate etw_gate(const LinearCode& code) {
    ExtensionGate g;
    const WeightDistribution& w = code.weight_distribution();
    g.input_weights = w.nonzero_weights();
    g.input_two_weight = g.input_weights.size() == 2;
    g.input_complementary =
        g.input_two_weight && g.input_weights[0] + g.input_weights[1] == code.length() + 1;
    g.input_projective = is_projective(code).projective;
    g.pass = g.input_projective && g.input_two_weight && g.input_complementary;
    if (!g.pass) return g;

    LinearCode ext = extend_code(code);
    const WeightDistribution& ew = ext.weight_distribution();
    const auto ext_weights = ew.nonzero_weights();
    const int ne = ext.length();
    const int d = g.input_weights[0];
    g.ext_three_weight =
        ext_weights.size() == 3 && ext_weights[0] == d && ext_weights[1] == ne - d && ext_weights[2] == ne;
    g.ext_all_ones_unique = ew.counts[ne] == 1;
    g.ext_projective = is_projective(ext).projective;
    g.extended = std::move(ext);
    return g;
}

TwoWeightReport quadric_two_weight(const FieldContext& subfield, QuadricVariant variant,
                                   std::uint32_t big_modulus) {
    const int kk = subfield.m();
    if (kk < 2) throw std::invalid_argument("quadric construction needs subfield degree >= 2");

    std::vector<BitRow> rows;
    int n = 0;
    json prov;
    prov["construction"] = "quadric";

    if (variant == QuadricVariant::Elliptic) {
        const FieldContext big(2 * kk, big_modulus);
        const std::uint64_t norm_exponent = (std::uint64_t{1} << kk) + 1;
        std::vector<FieldElement> d;
        for (FieldElement x = 1; x < big.q(); ++x) {
            const FieldElement y = big.pow(x, norm_exponent);  // lies in GF(2^kk)
            if (subfield_abs_trace(big, y, kk) == 0) d.push_back(x);
        }
        n = static_cast<int>(d.size());
        for (int i = 0; i < 2 * kk; ++i) {
            const FieldElement basis = std::uint32_t{1} << i;
            BitRow row(n);
            for (int j = 0; j < n; ++j)
                if (big.abs_trace(big.mul(basis, d[j]))) row.set(j, true);
            rows.push_back(std::move(row));
        }
        prov["variant"] = "elliptic";
        prov["k"] = kk;
        prov["modulus"] = hex_mask(big.modulus());
    } else {
        // Point set {(x,y) != (0,0) : Tr(xy) = 0} over the subfield, pair order
        // (x asc, y asc); codewords c_(a,b) = (Tr(ax) + Tr(by)).
        std::vector<std::pair<FieldElement, FieldElement>> d;
        for (FieldElement x = 0; x < subfield.q(); ++x) {
            for (FieldElement y = 0; y < subfield.q(); ++y) {
                if (x == 0 && y == 0) continue;
                if (subfield.abs_trace(subfield.mul(x, y)) == 0) d.emplace_back(x, y);
            }
        }
        n = static_cast<int>(d.size());
        for (int i = 0; i < kk; ++i) {
            const FieldElement basis = std::uint32_t{1} << i;
            BitRow row(n);
            for (int j = 0; j < n; ++j)
                if (subfield.abs_trace(subfield.mul(basis, d[j].first))) row.set(j, true);
            rows.push_back(std::move(row));
        }
        for (int i = 0; i < kk; ++i) {
            const FieldElement basis = std::uint32_t{1} << i;
            BitRow row(n);
            for (int j = 0; j < n; ++j)
                if (subfield.abs_trace(subfield.mul(basis, d[j].second))) row.set(j, true);
            rows.push_back(std::move(row));
        }
        prov["variant"] = "hyperbolic";
        prov["k"] = kk;
        prov["modulus"] = hex_mask(subfield.modulus());
    }

    std::vector<BitRow> kept = independent_rows(rows);

    TwoWeightReport rep{LinearCode(n, std::move(kept), prov.dump()), 0, 0, {}, {}, false, false, false};
    if (variant == QuadricVariant::Elliptic) {
        rep.predicted_n = (1 << (2 * kk - 1)) - (1 << (kk - 1)) - 1;
        rep.predicted_weights = {(1 << (2 * kk - 2)) - (1 << (kk - 1)), 1 << (2 * kk - 2)};
    } else {
        rep.predicted_n = (1 << (2 * kk - 1)) + (1 << (kk - 1)) - 1;
        rep.predicted_weights = {1 << (2 * kk - 2), (1 << (2 * kk - 2)) + (1 << (kk - 1))};
    }
    rep.predicted_k = 2 * kk;

    const WeightDistribution& w = rep.code.weight_distribution();
    rep.observed_weights = w.nonzero_weights();
    rep.two_weight = rep.observed_weights.size() == 2;
    rep.complementary = rep.two_weight &&
                        rep.observed_weights[0] + rep.observed_weights[1] == rep.code.length() + 1;
    rep.projective = is_projective(rep.code).projective;
    return rep;
}

ConstructionReport build_d_rho_code(const FieldContext& ctx, int u, int rho) {
    DefiningSet d = d_rho_set(ctx, u, rho);
    LinearCode code = defining_set_code(d);
    const WeightDistribution& w = code.weight_distribution();

    ConstructionReport rep{std::move(code), d.regime, {}};
    const int n = rep.code.length();
    const int k = rep.code.dimension();
    if (!d.regime) {
        rep.items.push_back({"length", "observed-only", "-", std::to_string(n), true});
        rep.items.push_back({"dimension", "observed-only", "-", std::to_string(k), true});
        rep.items.push_back({"weights", "observed-only", "-", weights_to_string(w.nonzero_weights()), true});
        return rep;
    }

    const int m = ctx.m();
    const int sign = jacobi_sign(m, 1);
    const int half_offset = 1 << ((m - 3) / 2);
    const int base = 1 << (m - 2);
    const int expect_n = (rho == 0) ? base - sign * half_offset : base + sign * half_offset;
    // Short family: the rho whose length is 2^(m-2) - 2^((m-3)/2).
    const bool short_family = expect_n == base - half_offset;
    const int expect_d = short_family ? (1 << (m - 3)) - half_offset : (1 << (m - 3));
    const std::vector<int> expect_weights = short_family
        ? std::vector<int>{(1 << (m - 3)) - half_offset, 1 << (m - 3), expect_n}
        : std::vector<int>{1 << (m - 3), (1 << (m - 3)) + half_offset, expect_n};

    auto push = [&rep](std::string name, std::string rule, std::string pred, std::string obs) {
        const bool match = pred == obs;
        rep.items.push_back({std::move(name), std::move(rule), std::move(pred), std::move(obs), match});
    };
    push("length", "defining-set-size", std::to_string(expect_n), std::to_string(n));
    push("dimension", "defining-set-rank", std::to_string(m), std::to_string(k));
    push("min-distance", "three-weight-enumerator", std::to_string(expect_d),
         std::to_string(w.min_positive_weight()));
    push("weights", "three-weight-enumerator", weights_to_string(expect_weights),
         weights_to_string(w.nonzero_weights()));

    // Full enumerator: 1 + (2^(m-1)-1) z^w1 + (2^(m-1)-1) z^w2 + z^n, nothing else.
    const BigInt half_count = pow2(m - 1) - 1;
    std::vector<BigInt> expect_counts(static_cast<std::size_t>(expect_n) + 1, 0);
    expect_counts[0] = 1;
    expect_counts[expect_weights[0]] = half_count;
    expect_counts[expect_weights[1]] = half_count;
    expect_counts[expect_n] = 1;
    const bool coeffs_ok = expect_n == n && w.counts == expect_counts;
    rep.items.push_back({"enumerator", "three-weight-enumerator", enumerator_string(expect_counts),
                         enumerator_string(w.counts), coeffs_ok});
    return rep;
}

}  // namespace tweight
