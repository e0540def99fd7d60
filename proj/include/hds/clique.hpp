#pragma once

#include <cstdint>
#include <vector>

#include "hds/rational.hpp"

namespace hds {

// Dense undirected graph as bit rows; vertex count stays in the hundreds.
class BitGraph {
  public:
    explicit BitGraph(int n);

    int size() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    int degree(int u) const;
    BitGraph complement() const;

    const uint64_t* row(int u) const { return rows_.data() + (size_t)u * words_; }
    int words() const { return words_; }

  private:
    int n_;
    int words_;
    std::vector<uint64_t> rows_;
};

struct CliqueResult {
    std::vector<int> vertices; // sorted
    bool proven_optimal = false;
    uint64_t nodes = 0;
};

// Branch-and-bound maximum clique with greedy colouring bounds. The seed (if
// any) must be a clique; it becomes the initial incumbent. node_budget == 0
// means unlimited. When the budget runs out the best clique found so far is
// returned with proven_optimal = false.
CliqueResult max_clique(const BitGraph& g, const std::vector<int>& seed = {},
                        uint64_t node_budget = 0);

// Maximum independent set = maximum clique of the complement.
CliqueResult max_independent_set(const BitGraph& g, const std::vector<int>& seed = {},
                                 uint64_t node_budget = 0);

// All maximal cliques (Bron-Kerbosch with pivoting), deterministically ordered.
std::vector<std::vector<int>> all_maximal_cliques(const BitGraph& g);

} // namespace hds
