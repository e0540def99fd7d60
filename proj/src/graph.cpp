#include "hds/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hds/search.hpp"

namespace hds {

Rat cross_min_sq(const CandidateClass& x, const CandidateClass& y) {
    if (x.n != y.n || x.m != y.m) throw domain_error("cross distance between mismatched frames");
    long long s = 0;
    for (int j = 0; j < x.m; ++j) s += block_min_num(x.blocks[j], y.blocks[j]);
    return Rat(s, (long long)x.n * x.n);
}

Rat cross_max_sq(const CandidateClass& x, const CandidateClass& y) {
    if (x.n != y.n || x.m != y.m) throw domain_error("cross distance between mismatched frames");
    long long s = 0;
    for (int j = 0; j < x.m; ++j) s += block_max_num(x.blocks[j], y.blocks[j]);
    return Rat(s, (long long)x.n * x.n);
}

namespace {

bool admissible(const Rat& v, int m) {
    return v.is_even_integer() && v.num > 0 && v.num <= 2ll * m;
}

} // namespace

Compat pair_compatible(const CandidateClass& x, const CandidateClass& y) {
    if (x == y) throw domain_error("pair_compatible expects distinct classes");
    if (!admissible(cross_min_sq(x, y), x.m)) return Compat::none;
    if (admissible(cross_max_sq(x, y), x.m)) return Compat::all;
    return Compat::some;
}

std::vector<std::vector<int>> CompatibilityGraph::maximal_cliques() const {
    return all_maximal_cliques(adjacency);
}

CompatibilityGraph build_graph(int n, int m) {
    std::set<CandidateClass> verts;
    for (const CandidateClass& rep : enumerate_addable_classes(n, m)) {
        std::vector<int> perm(m);
        for (int j = 0; j < m; ++j) perm[j] = j;
        std::sort(perm.begin(), perm.end());
        do {
            verts.insert(rep.with_blocks_permuted(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    CompatibilityGraph g;
    g.n = n;
    g.m = m;
    g.vertices.assign(verts.begin(), verts.end());
    g.adjacency = BitGraph((int)g.vertices.size());
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = i + 1; j < g.vertices.size(); ++j)
            if (pair_compatible(g.vertices[i], g.vertices[j]) != Compat::none)
                g.adjacency.add_edge((int)i, (int)j);
    return g;
}

std::vector<CliqueOrbit> collapse_block_orbits(const CompatibilityGraph& g,
                                               const std::vector<std::vector<int>>& cliques) {
    std::map<CandidateClass, int> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = (int)i;

    auto orbit_key = [&](const std::vector<int>& clique) {
        std::vector<int> best;
        std::vector<int> perm(g.m);
        for (int j = 0; j < g.m; ++j) perm[j] = j;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> mapped;
            mapped.reserve(clique.size());
            for (int v : clique) {
                auto it = index.find(g.vertices[v].with_blocks_permuted(perm));
                if (it == index.end()) throw domain_error("vertex set not closed under block permutation");
                mapped.push_back(it->second);
            }
            std::sort(mapped.begin(), mapped.end());
            if (best.empty() || mapped < best) best = std::move(mapped);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    std::map<std::vector<int>, CliqueOrbit> orbits;
    for (const auto& clique : cliques) {
        std::vector<int> key = orbit_key(clique);
        auto [it, fresh] = orbits.try_emplace(key);
        if (fresh) {
            it->second.representative = key;
            it->second.orbit_size = 1;
        } else {
            it->second.orbit_size += 1;
        }
    }
    std::vector<CliqueOrbit> out;
    for (auto& [key, orbit] : orbits) out.push_back(orbit);
    return out;
}

} // namespace hds
