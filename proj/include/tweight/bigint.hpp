#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tweight {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    return r << e;
}

/// Exact binomial coefficient C(n, k); 0 when k out of range.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

/// Row n of Pascal's triangle: C(n,0)..C(n,n).
inline std::vector<BigInt> binomial_row(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("binomial_row: negative n");
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (std::int64_t j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j) + 1] = row[static_cast<std::size_t>(j)] * (n - j) / (j + 1);
    }
    return row;
}

}  // namespace tweight
