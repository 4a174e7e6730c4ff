#include "tweight/field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tweight {

namespace {

constexpr int kMinM = 2;
constexpr int kMaxM = 24;
constexpr int kTableLimit = 16;  // log/antilog tables up to 2^16 elements

std::string poly_to_string(std::uint64_t mask) {
    if (mask == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = poly_degree(mask); d >= 0; --d) {
        if (!((mask >> d) & 1)) continue;
        if (!first) os << "+";
        if (d == 0)
            os << "1";
        else if (d == 1)
            os << "x";
        else
            os << "x^" << d;
        first = false;
    }
    return os.str();
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

int poly_degree(std::uint64_t mask) {
    return mask == 0 ? -1 : 63 - __builtin_clzll(mask);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = poly_degree(b);
    while (true) {
        const int da = poly_degree(a);
        if (da < db) return a;
        a ^= b << (da - db);
    }
}

bool poly_irreducible(std::uint64_t mask, std::uint64_t* factor_out) {
    const int d = poly_degree(mask);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every polynomial of degree 1..d/2; the first divisor
    // found is the smallest nontrivial factor.
    for (std::uint64_t f = 2; poly_degree(f) <= d / 2; ++f) {
        if (poly_mod(mask, f) == 0) {
            if (factor_out) *factor_out = f;
            return false;
        }
    }
    return true;
}

FieldContext::FieldContext(int m, std::uint32_t modulus) : m_(m) {
    if (m < kMinM || m > kMaxM) {
        throw std::invalid_argument("field degree m must be in [" + std::to_string(kMinM) + "," +
                                    std::to_string(kMaxM) + "], got " + std::to_string(m));
    }
    q_ = std::uint32_t{1} << m;
    if (modulus == 0) {
        for (std::uint32_t c = q_ + 1; c < (q_ << 1); ++c) {
            if (poly_irreducible(c)) {
                modulus = c;
                break;
            }
        }
    } else {
        if (poly_degree(modulus) != m) {
            throw std::invalid_argument("modulus degree is " + std::to_string(poly_degree(modulus)) +
                                        ", expected " + std::to_string(m));
        }
        std::uint64_t factor = 0;
        if (!poly_irreducible(modulus, &factor)) {
            throw std::invalid_argument("modulus " + poly_to_string(modulus) +
                                        " is reducible: divisible by " + poly_to_string(factor));
        }
    }
    modulus_ = modulus;

    if (m <= kTableLimit) {
        const std::uint32_t order = q_ - 1;
        const auto ps = prime_factors(order);
        // Smallest element generating the full multiplicative group.
        for (FieldElement g = 2; g < q_; ++g) {
            bool ok = true;
            for (std::uint32_t p : ps) {
                FieldElement t = 1;
                std::uint32_t e = order / p;
                FieldElement base = g;
                while (e) {  // plain square-and-multiply, tables not built yet
                    if (e & 1) t = mul_clmul(t, base);
                    base = mul_clmul(base, base);
                    e >>= 1;
                }
                if (t == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator_ = g;
                break;
            }
        }
        log_.assign(q_, 0);
        exp_.assign(2 * order, 0);
        FieldElement x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = x;
            exp_[i + order] = x;
            log_[x] = i;
            x = mul_clmul(x, generator_);
        }
    } else {
        const std::uint32_t order = q_ - 1;
        const auto ps = prime_factors(order);
        for (FieldElement g = 2; g < q_; ++g) {
            bool ok = true;
            for (std::uint32_t p : ps) {
                if (pow(g, order / p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator_ = g;
                break;
            }
        }
    }

    // Trace is GF(2)-linear, so one parity mask over the basis traces suffices.
    for (int i = 0; i < m_; ++i) {
        FieldElement s = 0;
        FieldElement t = std::uint32_t{1} << i;  // basis element alpha^i
        for (int j = 0; j < m_; ++j) {
            s ^= t;
            t = mul(t, t);
        }
        if (s > 1) throw std::logic_error("absolute trace escaped GF(2)");
        if (s) trace_mask_ |= std::uint32_t{1} << i;
    }

    // Relative traces are linear too; cache Tr_e of each basis element per divisor.
    rel_offset_.assign(m_ + 1, -1);
    for (int e = 1; e <= m_; ++e) {
        if (m_ % e != 0) continue;
        rel_offset_[e] = static_cast<int>(rel_basis_.size());
        for (int i = 0; i < m_; ++i) {
            FieldElement s = 0;
            FieldElement t = std::uint32_t{1} << i;
            for (int j = 0; j < m_ / e; ++j) {
                s ^= t;
                for (int f = 0; f < e; ++f) t = mul(t, t);
            }
            rel_basis_.push_back(s);
        }
    }
}

FieldElement FieldContext::mul_clmul(FieldElement x, FieldElement y) const {
    std::uint64_t acc = 0;
    std::uint64_t a = x;
    std::uint32_t b = y;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return static_cast<FieldElement>(poly_mod(acc, modulus_));
}

FieldElement FieldContext::mul(FieldElement x, FieldElement y) const {
    if (x == 0 || y == 0) return 0;
    if (!log_.empty()) {
        return exp_[log_[x] + log_[y]];
    }
    return mul_clmul(x, y);
}

FieldElement FieldContext::inv(FieldElement x) const {
    if (x == 0) throw std::invalid_argument("inverse of 0");
    if (!log_.empty()) {
        const std::uint32_t order = q_ - 1;
        return exp_[(order - log_[x]) % order];
    }
    return pow(x, q_ - 2);
}

FieldElement FieldContext::pow(FieldElement x, std::uint64_t e) const {
    if (e == 0) return 1;  // includes 0^0 = 1
    if (x == 0) return 0;
    if (x == 1) return 1;
    if (!log_.empty()) {
        const std::uint32_t order = q_ - 1;
        const std::uint64_t le = (static_cast<std::uint64_t>(log_[x]) * (e % order)) % order;
        return exp_[le];
    }
    FieldElement r = 1;
    FieldElement base = x;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement FieldContext::rel_trace(FieldElement x, int e) const {
    if (e < 1 || e > m_ || m_ % e != 0) {
        throw std::invalid_argument("trace subfield degree " + std::to_string(e) +
                                    " does not divide m = " + std::to_string(m_));
    }
    const int off = rel_offset_[e];
    FieldElement s = 0;
    std::uint32_t bits = x;
    while (bits) {
        const int i = __builtin_ctz(bits);
        s ^= rel_basis_[off + i];
        bits &= bits - 1;
    }
    return s;
}

std::vector<FieldElement> FieldContext::enumerate_elements() const {
    std::vector<FieldElement> out(q_);
    std::iota(out.begin(), out.end(), 0u);
    return out;
}

FieldContext make_field(int m, std::uint32_t modulus) { return FieldContext(m, modulus); }

std::vector<std::uint32_t> irreducible_moduli(int m, int count) {
    std::vector<std::uint32_t> out;
    const std::uint32_t lo = std::uint32_t{1} << m;
    for (std::uint32_t c = lo + 1; c < (lo << 1) && static_cast<int>(out.size()) < count; ++c) {
        if (poly_irreducible(c)) out.push_back(c);
    }
    return out;
}

}  // namespace tweight
