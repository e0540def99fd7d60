#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hds/rational.hpp"
#include "hds/vector.hpp"

namespace hds {

using bigint = boost::multiprecision::cpp_int;

// Multiset pattern of one block: level j (0-based) holds the value
// (k0 - j*n)/n with multiplicity mults[j]. Normalized form has nonzero first
// and last multiplicity; interior zeros are allowed (e.g. (5,-1^2)/3 has
// levels 5/3, 2/3, -1/3 with multiplicities 1,0,2).
struct BlockPattern {
    int n = 0;
    long long k0 = 0;
    std::vector<int> mults;

    BlockPattern() = default;
    BlockPattern(int n_, long long k0_, std::vector<int> mults_);

    int t() const { return (int)mults.size(); }
    long long value_num(int level) const { return k0 - (long long)level * n; }
    bool is_all_ones() const { return t() == 1; }

    // All n numerators in descending order (level order).
    std::vector<int> expanded() const;

    // Contribution of this block to the class statistic M:
    // 1 - n - 2*k0 - k0^2/n + sum i^2 k_i + 2t  (levels 1-based).
    Rat m_term() const;

    // Largest squared-distance numerator between two arrangements of this
    // block (opposite sort orders; rearrangement inequality).
    long long internal_max_num() const;

    bigint arrangement_count() const;

    static BlockPattern all_ones(int n);
    // Two-level pattern: ((k0)^{n+1-k0}, (k0-n)^{k0-1})/n for 2 <= k0 <= n.
    static BlockPattern two_level(int n, int k0);

    friend bool operator==(const BlockPattern& a, const BlockPattern& b) {
        return a.n == b.n && a.k0 == b.k0 && a.mults == b.mults;
    }
    friend bool operator<(const BlockPattern& a, const BlockPattern& b) {
        if (a.k0 != b.k0) return a.k0 < b.k0;
        if (a.mults.size() != b.mults.size()) return a.mults.size() < b.mults.size();
        return a.mults < b.mults;
    }

    std::string str() const;
};

// Squared-distance numerator between two arrangements of possibly different
// patterns over the same n: minimum is attained with both blocks sorted the
// same way, maximum with opposite orders.
long long block_min_num(const BlockPattern& a, const BlockPattern& b);
long long block_max_num(const BlockPattern& a, const BlockPattern& b);

// Product of m block patterns: the orbit of one candidate vector under
// within-block coordinate permutations. Block order is significant; the
// variants that permute block positions are distinct classes.
struct CandidateClass {
    int n = 0;
    int m = 0;
    std::vector<BlockPattern> blocks;

    CandidateClass() = default;
    CandidateClass(int n_, std::vector<BlockPattern> blocks_);

    Rat m_value() const;
    bool is_addable() const;

    int sum_t() const;
    bool shape_valid() const; // every t_j <= m and sum t_j <= 2m-1

    // Block modification that strictly lowers M; requires t(block) >= 3.
    CandidateClass modify(int block_index) const;
    // Repeat modification until every block has at most two levels.
    CandidateClass reduce() const;
    // All addable classes that reduce to this one (which must be reduced).
    std::vector<CandidateClass> inverse_expansions() const;

    ScaledVector canonical_element() const;
    bigint class_size() const;
    std::vector<ScaledVector> enumerate(long long cap = 1000000) const;

    // Sum over blocks of the internal max distance numerator; the class fits
    // whole below sqrt(2m) iff this is <= 2m * n^2.
    long long internal_max_num() const;

    CandidateClass with_blocks_permuted(const std::vector<int>& perm) const;
    CandidateClass orbit_representative() const; // blocks sorted descending

    friend bool operator==(const CandidateClass& a, const CandidateClass& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
    friend bool operator<(const CandidateClass& a, const CandidateClass& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.blocks < b.blocks;
    }

    std::string str() const;
    static CandidateClass parse(const std::string& text);
};

// Which level of each block an embedded word hits (-1 when the block has a
// zero multiplicity at the matched value, which cannot happen for normalized
// patterns). At most one level per block is hit.
struct IndicatorProfile {
    std::vector<int> level;
    IndicatorProfile(const CandidateClass& cls, const std::vector<int>& word);
};

// Exact squared distance from a class element to an embedded word via the
// per-block level formula; used as an independent route in tests.
Rat level_formula_sq_dist(const CandidateClass& cls, const IndicatorProfile& prof);

} // namespace hds
