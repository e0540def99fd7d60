#include "hds/vector.hpp"

#include <numeric>

namespace hds {

namespace {
// Coordinate numerators are bounded so that sums of squared differences over
// one pair always fit in int64 (mn * (2*max)^2 < 2^62).
constexpr long long kMaxCoord = 1ll << 20;
constexpr long long kMaxDim = 1ll << 20;
} // namespace

ScaledVector::ScaledVector(int n_, int m_, std::vector<int> nums_)
    : n(n_), m(m_), nums(std::move(nums_)) {
    if (n < 2 || m < 1) throw domain_error("ScaledVector needs n >= 2, m >= 1");
    if ((long long)n * m > kMaxDim) throw domain_error("dimension too large");
    if (nums.size() != (size_t)n * m)
        throw domain_error("ScaledVector has wrong number of coordinates");
    for (int v : nums)
        if (v > kMaxCoord || v < -kMaxCoord)
            throw overflow_error("coordinate numerator out of supported range");
    for (int j = 0; j < m; ++j) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += block(j)[i];
        if (s != n) throw domain_error("block does not sum to 1");
    }
}

std::string ScaledVector::str() const {
    std::string s = "(";
    for (int j = 0; j < m; ++j) {
        if (j) s += "|";
        for (int i = 0; i < n; ++i) {
            if (i) s += ",";
            s += std::to_string(block(j)[i]);
        }
    }
    s += ")/" + std::to_string(n);
    return s;
}

ScaledVector embed_word(int n, int m, const std::vector<int>& word) {
    if ((int)word.size() != m) throw domain_error("word length mismatch");
    std::vector<int> nums((size_t)n * m, 0);
    for (int j = 0; j < m; ++j) {
        if (word[j] < 0 || word[j] >= n) throw domain_error("word letter out of range");
        nums[(size_t)j * n + word[j]] = n;
    }
    return ScaledVector(n, m, std::move(nums));
}

long long hamming_count(int n, int m) {
    if (n < 2 || m < 1) throw domain_error("hamming_count needs n >= 2, m >= 1");
    long long c = 1;
    for (int j = 0; j < m; ++j) {
        if (__builtin_mul_overflow(c, (long long)n, &c))
            throw overflow_error("n^m overflows");
    }
    return c;
}

std::vector<ScaledVector> embed_hamming(int n, int m) {
    long long count = hamming_count(n, m);
    if (count > (1ll << 24)) throw domain_error("embedding too large to materialize");
    std::vector<ScaledVector> out;
    out.reserve(count);
    std::vector<int> word(m, 0);
    for (;;) {
        out.push_back(embed_word(n, m, word));
        int j = m - 1;
        while (j >= 0 && word[j] == n - 1) { word[j] = 0; --j; }
        if (j < 0) break;
        ++word[j];
    }
    return out;
}

SquaredDistance sq_dist(const ScaledVector& x, const ScaledVector& y) {
    if (x.n != y.n || x.m != y.m)
        throw domain_error("squared distance between mismatched frames");
    long long s = 0;
    for (size_t i = 0; i < x.nums.size(); ++i) {
        long long d = (long long)x.nums[i] - y.nums[i];
        s += d * d;
    }
    return SquaredDistance{s, (long long)x.n * x.n};
}

std::map<Rat, long long> distance_multiset(const std::vector<ScaledVector>& points) {
    if (points.size() < 2) throw domain_error("distance multiset needs at least 2 points");
    std::map<Rat, long long> hist;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            hist[sq_dist(points[i], points[j]).reduced()] += 1;
    return hist;
}

} // namespace hds
