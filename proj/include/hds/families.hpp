#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hds/clique.hpp"
#include "hds/pattern.hpp"

namespace hds {

bigint binomial(int n, int k);

// k-subsets of [n] meeting {1,...,t+2r} in at least t+r elements, as bitmasks
// (n <= 32). Every pair of members is t-intersecting.
std::vector<uint32_t> frankl_members(int n, int k, int t, int r);
bigint frankl_count(int n, int k, int t, int r);
bool frankl_feasible(int n, int k, int t, int r);

struct EkrBound {
    bigint bound;
    int r = 0;          // index of the attaining family
    bool case1 = false; // n strictly above the first threshold
    bool tie = false;   // boundary case: the next family is an alternative optimum
    bool tie_feasible = false;
};

// Maximum size of a t-intersecting family of k-subsets of [n] and which
// family attains it.
EkrBound ekr_bound(int n, int k, int t);

// Bound for a cross-intersecting pair: C(n,k) - C(n-k,k) + 1, needs n >= 2k.
bigint cross_pair_bound(int n, int k);

// Bound for s cross-intersecting families, n > 2k and s > n/k: s*C(n-1,k-1).
bigint cross_s_bound(int n, int k, int s);

enum class AnxKind { X, Y, Z };

// Inductive families inside the orbit of (1, 0^k, -1^2); each has
// C(k+3,3) + 2 members and maximum squared distance below the orbit's.
std::vector<std::vector<int>> anx_members(AnxKind kind, int k);

// Entry substitution 1 -> k0, 0 -> k0-n, -1 -> k0-2n; block length must be n = k+3.
std::vector<std::vector<int>> anx_scaled(AnxKind kind, int k, int k0, int n);

struct BoundedSubset {
    std::vector<ScaledVector> points;
    bigint size;
    std::string certificate; // whole-class | brute-force-clique | clique-no-extension | ekr-construction
    std::vector<std::string> alternatives;
};

// Maximum-cardinality subset of the class with all pairwise squared distances
// in {2,...,2m}. Exact clique search below the vertex caps, theorem-backed
// constructions above them.
BoundedSubset largest_bounded_subset(const CandidateClass& cls, uint64_t clique_budget = 20000000);

} // namespace hds
