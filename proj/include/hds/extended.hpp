#pragma once

#include <string>
#include <vector>

#include "hds/clique.hpp"
#include "hds/pattern.hpp"
#include "hds/quadratic.hpp"

namespace hds {

// Radicand of the extra coordinate: 1 + 1/n - k + k^2/n. Negative means the
// candidate family with this k does not exist.
Rat beta_sq(int n, int k);

// Candidate point in R^{2n+1}: two rational blocks plus a last coordinate
// sign * sqrt(beta2) kept symbolic.
struct ExtendedPoint {
    ScaledVector base; // m = 2
    int sign = 1;      // +1 when beta2 == 0
    Rat beta2;

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
        return a.base == b.base && a.sign == b.sign && a.beta2 == b.beta2;
    }
    friend bool operator<(const ExtendedPoint& a, const ExtendedPoint& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        if (a.sign != b.sign) return a.sign < b.sign;
        return a.beta2 < b.beta2;
    }
};

QuadraticValue quad_sq_dist(const ExtendedPoint& a, const ExtendedPoint& b);

enum class ExtKind { X, Y, Z };

struct ExtendedFamily {
    ExtKind kind;
    int k = 0;
    int sign = 1;
    Rat beta2;
    std::vector<int> members; // indices into the universe

    std::string name() const;
};

struct ExtendedUniverse {
    int n = 0;
    std::vector<ExtendedPoint> points;
    std::vector<ExtendedFamily> families;
};

// All candidate points and families with a real extra coordinate; every
// member is verified to sit at squared distance 2 or 4 from every embedded
// word.
ExtendedUniverse admissible_candidates(int n);

struct ExtendedEntry {
    std::vector<int> points; // representative set, sorted universe indices
    long long set_count = 1; // how many sets share this shape
    int pair_count = 0;      // for one-per-pair selection families
    std::string name;
};

struct ExtendedClassification {
    ExtendedUniverse universe;
    std::vector<ExtendedEntry> entries; // maximal addable sets of size >= 2
};

// Maximal subsets (size >= 2) of the candidate universe whose pairwise
// squared distances stay in {2,4}, via exact clique search; components whose
// non-edges form a perfect matching are reported as one-per-pair selection
// families instead of being expanded.
ExtendedClassification classify_extended(int n);

// Affine rank over the rationals; every point must have a rational extra
// coordinate (beta2 a perfect square).
int extended_affine_rank(const std::vector<ExtendedPoint>& points, int n,
                         bool include_embedding = true);

} // namespace hds
