#include "tweight/codes.hpp"

#include <algorithm>

namespace tweight {

namespace {

int rank_of(std::vector<BitRow> rows, int n) {
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && rows[r].get(col)) rows[r].xor_with(rows[rank]);
        }
        ++rank;
    }
    return rank;
}

BigInt dot_count(const std::vector<BigInt>& counts, int power) {
    BigInt s = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0) continue;
        BigInt term = counts[j];
        for (int p = 0; p < power; ++p) term *= static_cast<int>(j);
        s += term;
    }
    return s;
}

}  // namespace

std::vector<int> WeightDistribution::nonzero_weights() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (counts[i] > 0) out.push_back(i);
    return out;
}

int WeightDistribution::min_positive_weight() const {
    for (int i = 1; i <= n; ++i)
        if (counts[i] > 0) return i;
    return -1;
}

bool WeightDistribution::palindromic() const {
    for (int i = 0; i <= n; ++i)
        if (counts[i] != counts[n - i]) return false;
    return true;
}

LinearCode::LinearCode(int n, std::vector<BitRow> rows, std::string provenance)
    : n_(n), k_(static_cast<int>(rows.size())), rows_(std::move(rows)),
      provenance_(std::move(provenance)), cache_(std::make_shared<Cache>()) {
    if (n_ < 1) throw std::invalid_argument("code length must be positive");
    if (k_ < 1 || k_ > n_) throw std::invalid_argument("code dimension must satisfy 1 <= k <= n");
    for (const BitRow& r : rows_) {
        if (r.size() != n_) throw std::invalid_argument("generator row width does not match code length");
    }
    if (rank_of(rows_, n_) != k_) throw std::invalid_argument("generator rows are linearly dependent");
}

const WeightDistribution& LinearCode::weight_distribution() const {
    std::call_once(cache_->flag, [this] {
        std::vector<std::uint64_t> counts(n_ + 1, 0);
        for_each_codeword(*this, [&](const BitRow& cw) { ++counts[cw.popcount()]; });
        WeightDistribution dist;
        dist.n = n_;
        dist.k = k_;
        dist.counts.assign(counts.begin(), counts.end());
        cache_->dist = std::move(dist);
    });
    return cache_->dist;
}

WeightDistribution macwilliams_dual(const WeightDistribution& w) {
    const int n = w.n;
    if (static_cast<int>(w.counts.size()) != n + 1)
        throw std::invalid_argument("weight distribution has wrong length");
    // coeff_j[(1+z)^(n-i) (1-z)^i], accumulated over all nonzero A_i
    std::vector<BigInt> acc(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        if (w.counts[i] == 0) continue;
        const auto plus = binomial_row(n - i);   // (1+z)^(n-i)
        const auto minus = binomial_row(i);      // (1-z)^i up to sign
        for (int l = 0; l <= i; ++l) {
            BigInt term = w.counts[i] * minus[l];
            if (l % 2 != 0) term = -term;
            for (int j = 0; j <= n - i; ++j) acc[l + j] += term * plus[j];
        }
    }
    const BigInt scale = pow2(w.k);
    WeightDistribution dual;
    dual.n = n;
    dual.k = n - w.k;
    dual.counts.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        if (acc[j] < 0 || acc[j] % scale != 0)
            throw std::runtime_error("inconsistent distribution: transform output at weight " +
                                     std::to_string(j) + " is not a nonnegative integer");
        dual.counts[j] = acc[j] / scale;
    }
    return dual;
}

LinearCode dual_code(const LinearCode& code) {
    const int n = code.length();
    const int k = code.dimension();
    if (k == n) throw std::invalid_argument("dual of a full-space code is the zero code");

    // Row-reduce the generator, then read a kernel basis off the free columns.
    std::vector<BitRow> mat = code.rows();
    std::vector<int> pivot_col(k, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < k; ++col) {
        int pivot = -1;
        for (int r = rank; r < k; ++r) {
            if (mat[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(mat[rank], mat[pivot]);
        for (int r = 0; r < k; ++r) {
            if (r != rank && mat[r].get(col)) mat[r].xor_with(mat[rank]);
        }
        pivot_col[rank] = col;
        ++rank;
    }

    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;

    std::vector<BitRow> kernel;
    kernel.reserve(n - k);
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitRow v(n);
        v.set(f, true);
        for (int r = 0; r < rank; ++r) {
            if (mat[r].get(f)) v.set(pivot_col[r], true);
        }
        kernel.push_back(std::move(v));
    }

    for (const BitRow& v : kernel) {
        for (const BitRow& g : code.rows()) {
            int dot = 0;
            for (int w = 0; w < v.word_count(); ++w)
                dot ^= std::popcount(v.words()[w] & g.words()[w]) & 1;
            if (dot) throw std::logic_error("dual basis vector not orthogonal to generator");
        }
    }
    return LinearCode(n, std::move(kernel));
}

int min_distance(const LinearCode& code) {
    const int d = code.weight_distribution().min_positive_weight();
    if (d < 0) throw std::logic_error("zero code has no minimum distance");
    return d;
}

DualSummary is_projective(const LinearCode& code) {
    const int n = code.length();
    const int k = code.dimension();
    DualSummary out;
    if (k == n) {
        out.dual_counts.assign(n + 1, 0);
        out.dual_counts[0] = 1;
        out.projective = true;
        out.dual_dimension_zero = true;
        return out;
    }
    const WeightDistribution dual = macwilliams_dual(code.weight_distribution());
    out.dual_counts = dual.counts;
    if (n - k <= 22) {
        const WeightDistribution direct = dual_code(code).weight_distribution();
        if (direct.counts != dual.counts)
            throw std::logic_error("MacWilliams transform disagrees with direct dual enumeration");
    }
    for (int i = 1; i <= n; ++i) {
        if (out.dual_counts[i] > 0) {
            out.dual_min_distance = i;
            break;
        }
    }
    out.projective = out.dual_counts[1] == 0 && out.dual_counts[2] == 0;
    return out;
}

PlessVerdict pless_check(const WeightDistribution& w, const DualSummary& dual) {
    const int n = w.n;
    const BigInt a1 = dual.dual_counts[1];
    const BigInt a2 = n >= 2 ? dual.dual_counts[2] : 0;
    PlessVerdict v;

    const BigInt m1 = dot_count(w.counts, 0);
    const BigInt m1_expect = pow2(w.k);
    if (m1 != m1_expect) return {false, 1, m1, m1_expect};

    const BigInt m2 = dot_count(w.counts, 1);
    const BigInt m2_expect = pow2(w.k - 1) * (n - a1);
    if (m2 != m2_expect) return {false, 2, m2, m2_expect};

    const BigInt m3 = dot_count(w.counts, 2);
    const BigInt m3_expect = pow2(w.k - 2) * (BigInt(n) * (n + 1) - 2 * n * a1 + 2 * a2);
    if (m3 != m3_expect) return {false, 3, m3, m3_expect};

    v.pass = true;
    return v;
}

BigInt three_weight_dual_even_count(int n, int k, int d, int r) {
    BigInt sum = 0;
    const int jmax = n / 2 - d;
    for (int i = 0; i <= std::min(d, r); ++i) {
        const int j = r - i;
        if (j < 0 || j > jmax) continue;
        const BigInt term = binomial(d, i) * binomial(n - 2 * d, 2 * j);
        sum += (i % 2 == 0) ? term : -term;
    }
    BigInt total = binomial(n, 2 * r) + (pow2(k - 1) - 1) * sum;
    const BigInt scale = pow2(k - 1);
    if (total < 0 || total % scale != 0)
        throw std::runtime_error("three-weight dual closed form is not integral at 2r = " +
                                 std::to_string(2 * r));
    return total / scale;
}

ThreeWeightProfile three_weight_profile(const LinearCode& code) {
    ThreeWeightProfile p;
    const int n = code.length();
    const int k = code.dimension();
    const WeightDistribution& w = code.weight_distribution();

    const auto weights = w.nonzero_weights();
    if (weights.size() != 3) {
        p.failed_hypothesis = "exactly three nonzero weights";
        return p;
    }
    if (w.counts[n] != 1) {
        p.failed_hypothesis = "A_n(C) = 1";
        return p;
    }
    const DualSummary dual = is_projective(code);
    if (!dual.projective) {
        p.failed_hypothesis = "projective";
        return p;
    }
    p.hypotheses_ok = true;

    const int d = w.min_positive_weight();

    // w1 = (n - sqrt(n(2^(k-1)-n)/(2^(k-1)-1)))/2, exactly
    const BigInt num = BigInt(n) * (pow2(k - 1) - n);
    const BigInt den = pow2(k - 1) - 1;
    p.weights_match = false;
    if (num >= 0 && num % den == 0) {
        const BigInt disc = num / den;
        const BigInt s = boost::multiprecision::sqrt(disc);
        if (s * s == disc && (BigInt(n) - s) % 2 == 0) {
            p.w1 = static_cast<int>((BigInt(n) - s) / 2);
            p.w2 = n - p.w1;
            p.w3 = n;
            p.weights_match = (weights[0] == p.w1 && weights[1] == p.w2 && weights[2] == p.w3);
        }
    }

    // 1 + (2^(k-1)-1) z^d + (2^(k-1)-1) z^(n-d) + z^n
    const BigInt half = pow2(k - 1) - 1;
    p.enumerator_match = true;
    for (int i = 0; i <= n; ++i) {
        BigInt expect = 0;
        if (i == 0) expect = 1;
        else if (i == d) expect = half;
        else if (i == n - d) expect = half;
        else if (i == n) expect = 1;
        if (w.counts[i] != expect) {
            p.enumerator_match = false;
            break;
        }
    }

    p.dual_counts_match = true;
    for (int i = 1; i <= n; i += 2) {
        if (dual.dual_counts[i] != 0) {
            p.dual_counts_match = false;
            p.first_mismatch_weight = i;
            p.closed_form_value = 0;
            p.transform_value = dual.dual_counts[i];
            break;
        }
    }
    if (p.dual_counts_match) {
        for (int r = 1; r <= n / 2; ++r) {
            const BigInt cf = three_weight_dual_even_count(n, k, d, r);
            if (cf != dual.dual_counts[2 * r]) {
                p.dual_counts_match = false;
                p.first_mismatch_weight = 2 * r;
                p.closed_form_value = cf;
                p.transform_value = dual.dual_counts[2 * r];
                break;
            }
        }
    }
    return p;
}

}  // namespace tweight
