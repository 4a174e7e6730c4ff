#pragma once

#include <cstdint>
#include <vector>

namespace tweight {

/// Element of GF(2^m) in the polynomial basis, canonical m-bit value.
using FieldElement = std::uint32_t;

// GF(2^m) for 2 <= m <= 24. Addition is XOR; multiplication reduces modulo a
// verified-irreducible polynomial. Immutable after construction and shareable
// across threads; all operations are pure.
class FieldContext {
  public:
    /// Builds GF(2^m). When modulus == 0, picks the lexicographically smallest
    /// irreducible degree-m polynomial, so outputs are reproducible bit for bit.
    /// Throws std::invalid_argument on m out of [2,24], wrong degree, or a
    /// reducible modulus (the message names a nontrivial factor).
    explicit FieldContext(int m, std::uint32_t modulus = 0);

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }

    FieldElement add(FieldElement x, FieldElement y) const { return x ^ y; }
    FieldElement mul(FieldElement x, FieldElement y) const;
    FieldElement inv(FieldElement x) const;  // throws on x == 0

    /// x^e with 0^0 = 1.
    FieldElement pow(FieldElement x, std::uint64_t e) const;

    /// Absolute trace Tr : GF(2^m) -> GF(2), sum of x^(2^i) for i < m.
    int abs_trace(FieldElement x) const { return parity(x & trace_mask_); }

    /// Relative trace Tr_e : GF(2^m) -> GF(2^e), sum of x^(2^(e*i)).
    /// Throws when e does not divide m.
    FieldElement rel_trace(FieldElement x, int e) const;

    /// All 2^m elements in ascending integer order of their bit representation.
    std::vector<FieldElement> enumerate_elements() const;

    /// Smallest primitive element (generator of the multiplicative group).
    FieldElement generator() const { return generator_; }

    bool has_log_tables() const { return !log_.empty(); }
    // Discrete-log internals for table-backed hot loops (charsums sweeps).
    std::uint32_t log_of(FieldElement x) const { return log_[x]; }
    FieldElement exp_at(std::uint32_t i) const { return exp_[i]; }

  private:
    static int parity(std::uint32_t v) { return __builtin_parity(v); }
    FieldElement mul_clmul(FieldElement x, FieldElement y) const;

    int m_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t modulus_ = 0;
    std::uint32_t trace_mask_ = 0;          // abs_trace(x) = parity(x & trace_mask_)
    FieldElement generator_ = 0;
    std::vector<FieldElement> rel_basis_;   // rel_trace of basis elements, all divisors packed
    std::vector<int> rel_offset_;           // offset into rel_basis_ per divisor e (or -1)
    std::vector<std::uint32_t> log_;        // size q, log_[0] unused
    std::vector<FieldElement> exp_;         // size 2(q-1) to skip one mod
};

/// Factory matching the construction contract; see FieldContext::FieldContext.
FieldContext make_field(int m, std::uint32_t modulus = 0);

/// First `count` irreducible degree-m moduli in ascending mask order.
std::vector<std::uint32_t> irreducible_moduli(int m, int count);

/// Degree of a polynomial mask (-1 for the zero polynomial).
int poly_degree(std::uint64_t mask);

/// Remainder of a modulo b over GF(2); b != 0.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b);

/// True when the mask is irreducible over GF(2); if factor_out is non-null and
/// the mask is reducible, *factor_out receives the smallest nontrivial factor.
bool poly_irreducible(std::uint64_t mask, std::uint64_t* factor_out = nullptr);

}  // namespace tweight
