#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tweight {

// A length-n bit vector packed into 64-bit words, bit j = coordinate j+1.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    int word_count() const { return static_cast<int>(words_.size()); }

    bool get(int j) const { return (words_[j >> 6] >> (j & 63)) & 1u; }
    void set(int j, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (j & 63);
        if (v)
            words_[j >> 6] |= mask;
        else
            words_[j >> 6] &= ~mask;
    }

    void xor_with(const BitRow& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    }

    int popcount() const {
        int w = 0;
        for (std::uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    bool is_zero() const {
        for (std::uint64_t x : words_)
            if (x) return false;
        return true;
    }

    /// Index of the lowest set bit, or -1 when zero.
    int lowest_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    /// 0-based indices of all set bits, ascending.
    std::vector<int> set_bits() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t x = words_[i];
            while (x) {
                out.push_back(static_cast<int>(i * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    friend bool operator==(const BitRow& a, const BitRow& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tweight
