#include "hds/clique.hpp"

#include <algorithm>
#include <bit>

namespace hds {

BitGraph::BitGraph(int n) : n_(n), words_((n + 63) / 64), rows_((size_t)n * words_, 0) {
    if (n < 0) throw domain_error("negative graph size");
}

void BitGraph::add_edge(int u, int v) {
    if (u == v) throw domain_error("self loop");
    rows_[(size_t)u * words_ + v / 64] |= 1ull << (v % 64);
    rows_[(size_t)v * words_ + u / 64] |= 1ull << (u % 64);
}

bool BitGraph::adjacent(int u, int v) const {
    return (row(u)[v / 64] >> (v % 64)) & 1;
}

int BitGraph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
    return d;
}

BitGraph BitGraph::complement() const {
    BitGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

namespace {

using Words = std::vector<uint64_t>;

struct MaxCliqueSearch {
    const BitGraph& g;
    int words;
    std::vector<int> best;
    std::vector<int> current;
    uint64_t nodes = 0;
    uint64_t budget;
    bool aborted = false;

    MaxCliqueSearch(const BitGraph& g_, uint64_t budget_) : g(g_), words(g_.words()), budget(budget_) {}

    void collect(const Words& set, std::vector<int>& out) const {
        out.clear();
        for (int w = 0; w < words; ++w) {
            uint64_t bits = set[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    // Greedy colouring of the candidate set; emits vertices grouped by colour
    // (ascending) so the caller can branch on high-colour vertices first.
    void colour_sort(const Words& cand, std::vector<int>& order, std::vector<int>& bound) const {
        order.clear();
        bound.clear();
        Words uncoloured = cand;
        int colour = 0;
        auto lowest = [&](const Words& set) {
            for (int w = 0; w < words; ++w)
                if (set[w]) return w * 64 + std::countr_zero(set[w]);
            return -1;
        };
        while (lowest(uncoloured) >= 0) {
            ++colour;
            Words avail = uncoloured;
            for (int v = lowest(avail); v >= 0; v = lowest(avail)) {
                order.push_back(v);
                bound.push_back(colour);
                uncoloured[v / 64] &= ~(1ull << (v % 64));
                avail[v / 64] &= ~(1ull << (v % 64));
                const uint64_t* nv = g.row(v);
                for (int w = 0; w < words; ++w) avail[w] &= ~nv[w];
            }
        }
    }

    void expand(Words& cand) {
        if (budget && ++nodes > budget) {
            aborted = true;
            return;
        }
        std::vector<int> order, bound;
        colour_sort(cand, order, bound);
        for (int i = (int)order.size() - 1; i >= 0; --i) {
            if (aborted) return;
            if (current.size() + bound[i] <= best.size()) return;
            int v = order[i];
            current.push_back(v);
            Words next((size_t)words);
            const uint64_t* nv = g.row(v);
            for (int w = 0; w < words; ++w) next[w] = cand[w] & nv[w];
            bool empty = true;
            for (int w = 0; w < words; ++w)
                if (next[w]) { empty = false; break; }
            if (empty) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            cand[v / 64] &= ~(1ull << (v % 64));
        }
    }
};

} // namespace

CliqueResult max_clique(const BitGraph& g, const std::vector<int>& seed, uint64_t node_budget) {
    for (size_t i = 0; i < seed.size(); ++i)
        for (size_t j = i + 1; j < seed.size(); ++j)
            if (!g.adjacent(seed[i], seed[j])) throw domain_error("seed is not a clique");
    MaxCliqueSearch search(g, node_budget);
    search.best = seed;
    Words all((size_t)g.words(), 0);
    for (int v = 0; v < g.size(); ++v) all[v / 64] |= 1ull << (v % 64);
    search.expand(all);
    CliqueResult res;
    res.vertices = search.best;
    std::sort(res.vertices.begin(), res.vertices.end());
    res.proven_optimal = !search.aborted;
    res.nodes = search.nodes;
    return res;
}

CliqueResult max_independent_set(const BitGraph& g, const std::vector<int>& seed,
                                 uint64_t node_budget) {
    return max_clique(g.complement(), seed, node_budget);
}

namespace {

void bron_kerbosch(const BitGraph& g, Words& r, Words p, Words x,
                   std::vector<std::vector<int>>& out) {
    int words = g.words();
    bool p_empty = true, x_empty = true;
    for (int w = 0; w < words; ++w) {
        if (p[w]) p_empty = false;
        if (x[w]) x_empty = false;
    }
    if (p_empty && x_empty) {
        std::vector<int> clique;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = std::countr_zero(bits);
                clique.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
        out.push_back(std::move(clique));
        return;
    }
    // pivot: vertex of P|X with the most neighbours inside P
    int pivot = -1, best_cover = -1;
    for (int w = 0; w < words; ++w) {
        uint64_t bits = p[w] | x[w];
        while (bits) {
            int b = std::countr_zero(bits);
            int v = w * 64 + b;
            bits &= bits - 1;
            const uint64_t* nv = g.row(v);
            int cover = 0;
            for (int ww = 0; ww < words; ++ww) cover += std::popcount(p[ww] & nv[ww]);
            if (cover > best_cover) { best_cover = cover; pivot = v; }
        }
    }
    Words branch((size_t)words);
    const uint64_t* np = g.row(pivot);
    for (int w = 0; w < words; ++w) branch[w] = p[w] & ~np[w];
    for (int w = 0; w < words; ++w) {
        uint64_t bits = branch[w];
        while (bits) {
            int b = std::countr_zero(bits);
            int v = w * 64 + b;
            bits &= bits - 1;
            const uint64_t* nv = g.row(v);
            Words np2((size_t)words), nx2((size_t)words);
            for (int ww = 0; ww < words; ++ww) {
                np2[ww] = p[ww] & nv[ww];
                nx2[ww] = x[ww] & nv[ww];
            }
            r[v / 64] |= 1ull << (v % 64);
            bron_kerbosch(g, r, np2, nx2, out);
            r[v / 64] &= ~(1ull << (v % 64));
            p[v / 64] &= ~(1ull << (v % 64));
            x[v / 64] |= 1ull << (v % 64);
        }
    }
}

} // namespace

std::vector<std::vector<int>> all_maximal_cliques(const BitGraph& g) {
    Words r((size_t)g.words()), p((size_t)g.words()), x((size_t)g.words());
    for (int v = 0; v < g.size(); ++v) p[v / 64] |= 1ull << (v % 64);
    std::vector<std::vector<int>> out;
    if (g.size() > 0) bron_kerbosch(g, r, p, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hds
