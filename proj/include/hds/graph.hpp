#pragma once

#include <vector>

#include "hds/clique.hpp"
#include "hds/pattern.hpp"

namespace hds {

enum class Compat { none, some, all };

// Class-level compatibility: "some" when the canonical elements sit at an
// admissible squared distance, "all" when additionally the maximum over the
// class product (opposite-sorted pairing per block) is admissible.
Compat pair_compatible(const CandidateClass& x, const CandidateClass& y);

Rat cross_min_sq(const CandidateClass& x, const CandidateClass& y);
Rat cross_max_sq(const CandidateClass& x, const CandidateClass& y);

struct CompatibilityGraph {
    int n = 0;
    int m = 0;
    std::vector<CandidateClass> vertices; // all block-position variants, sorted
    BitGraph adjacency{0};

    std::vector<std::vector<int>> maximal_cliques() const;
};

// Graph over every addable class (block-position variants are distinct
// vertices); empty vertex set means the embedded configuration is maximal.
CompatibilityGraph build_graph(int n, int m);

// Groups cliques that coincide after a simultaneous block permutation; one
// representative (the lexicographic minimum) per orbit, with multiplicity.
struct CliqueOrbit {
    std::vector<int> representative;
    int orbit_size = 1;
};
std::vector<CliqueOrbit> collapse_block_orbits(const CompatibilityGraph& g,
                                               const std::vector<std::vector<int>>& cliques);

} // namespace hds
