#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hds/rational.hpp"

namespace hds {

// Point of R^{mn} with every coordinate in (1/n)Z, stored as integer
// numerators over the shared denominator n. Each length-n block of true
// coordinates sums to 1, i.e. each block of numerators sums to n.
struct ScaledVector {
    int n = 0;
    int m = 0;
    std::vector<int> nums;

    ScaledVector() = default;
    ScaledVector(int n_, int m_, std::vector<int> nums_);

    int dim() const { return n * m; }
    const int* block(int j) const { return nums.data() + (size_t)j * n; }

    friend bool operator==(const ScaledVector& x, const ScaledVector& y) {
        return x.n == y.n && x.m == y.m && x.nums == y.nums;
    }
    friend bool operator<(const ScaledVector& x, const ScaledVector& y) {
        if (x.n != y.n) return x.n < y.n;
        if (x.m != y.m) return x.m < y.m;
        return x.nums < y.nums;
    }

    std::string str() const;
};

// Exact squared distance as num/den with den = n^2.
struct SquaredDistance {
    long long num = 0;
    long long den = 1;

    Rat reduced() const { return Rat(num, den); }
    bool is_integer() const { return num % den == 0; }
    long long as_integer() const {
        if (!is_integer()) throw domain_error("squared distance is not an integer");
        return num / den;
    }
};

// Image of the word (x_1,...,x_m) over {0,...,n-1}: one coordinate per block
// carries numerator n, the rest 0.
ScaledVector embed_word(int n, int m, const std::vector<int>& word);

// All n^m embedded words, in lexicographic word order.
std::vector<ScaledVector> embed_hamming(int n, int m);

SquaredDistance sq_dist(const ScaledVector& x, const ScaledVector& y);

// Histogram of squared distances over unordered pairs.
std::map<Rat, long long> distance_multiset(const std::vector<ScaledVector>& points);

// Number of embedded words, guarded against overflow.
long long hamming_count(int n, int m);

} // namespace hds
