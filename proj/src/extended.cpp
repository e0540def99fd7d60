#include "hds/extended.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hds {

Rat beta_sq(int n, int k) {
    if (n < 2 || k < 1 || k > n + 1) throw domain_error("beta_sq needs n >= 2, 1 <= k <= n+1");
    return Rat((long long)n + 1 - (long long)k * n + (long long)k * k, n);
}

QuadraticValue quad_sq_dist(const ExtendedPoint& a, const ExtendedPoint& b) {
    Rat base = sq_dist(a.base, b.base).reduced();
    QuadraticValue tail = sqrt_diff_squared(a.sign, a.beta2, b.sign, b.beta2);
    return QuadraticValue(base + tail.a, tail.b, tail.r);
}

std::string ExtendedFamily::name() const {
    const char* kind_name = kind == ExtKind::X ? "X" : (kind == ExtKind::Y ? "Y" : "Z");
    std::string s = std::string(kind_name) + std::to_string(k);
    s += sign >= 0 ? "+" : "-";
    return s;
}

namespace {

// Block with top value k/n on n-k+1 coordinates and k/n - 1 on the rest;
// degenerates to the constant block for k = 1 and k = n+1.
std::vector<std::vector<int>> candidate_block_arrangements(int n, int k) {
    std::vector<int> base;
    for (int i = 0; i < n - k + 1; ++i) base.push_back(k);
    for (int i = 0; i < k - 1; ++i) base.push_back(k - n);
    std::sort(base.begin(), base.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

ScaledVector assemble_base(int n, const std::vector<int>& b1, const std::vector<int>& b2) {
    std::vector<int> nums;
    nums.reserve(2 * n);
    nums.insert(nums.end(), b1.begin(), b1.end());
    nums.insert(nums.end(), b2.begin(), b2.end());
    return ScaledVector(n, 2, std::move(nums));
}

} // namespace

ExtendedUniverse admissible_candidates(int n) {
    if (n < 2) throw domain_error("extended candidates need n >= 2");
    ExtendedUniverse uni;
    uni.n = n;
    std::map<ExtendedPoint, int> index;
    auto intern = [&](ExtendedPoint p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        int id = (int)uni.points.size();
        index.emplace(p, id);
        uni.points.push_back(std::move(p));
        return id;
    };

    std::vector<int> ones(n, 1);
    for (int k = 1; k <= n + 1; ++k) {
        Rat r = beta_sq(n, k);
        if (r.is_negative()) continue;
        std::vector<int> signs = r.is_zero() ? std::vector<int>{1} : std::vector<int>{1, -1};
        auto arrangements = candidate_block_arrangements(n, k);
        for (int sign : signs) {
            ExtendedFamily fy{ExtKind::Y, k, sign, r, {}};
            ExtendedFamily fz{ExtKind::Z, k, sign, r, {}};
            for (const auto& arr : arrangements) {
                fy.members.push_back(intern({assemble_base(n, arr, ones), sign, r}));
                fz.members.push_back(intern({assemble_base(n, ones, arr), sign, r}));
            }
            std::sort(fy.members.begin(), fy.members.end());
            std::sort(fz.members.begin(), fz.members.end());
            ExtendedFamily fx{ExtKind::X, k, sign, r, {}};
            std::set<int> merged(fy.members.begin(), fy.members.end());
            merged.insert(fz.members.begin(), fz.members.end());
            fx.members.assign(merged.begin(), merged.end());
            uni.families.push_back(std::move(fy));
            uni.families.push_back(std::move(fz));
            uni.families.push_back(std::move(fx));
        }
    }

    // every candidate must sit at squared distance 2 or 4 from every word
    std::vector<ScaledVector> words = embed_hamming(n, 2);
    for (const ExtendedPoint& p : uni.points) {
        for (const ScaledVector& w : words) {
            Rat d = sq_dist(p.base, w).reduced() + p.beta2;
            if (d != Rat(2) && d != Rat(4))
                throw domain_error("candidate at inadmissible distance from the embedding");
        }
    }
    return uni;
}

namespace {

BitGraph extended_adjacency(const ExtendedUniverse& uni) {
    BitGraph g((int)uni.points.size());
    for (int i = 0; i < (int)uni.points.size(); ++i)
        for (int j = i + 1; j < (int)uni.points.size(); ++j) {
            QuadraticValue d = quad_sq_dist(uni.points[i], uni.points[j]);
            if (d.equals_rational(Rat(2)) || d.equals_rational(Rat(4))) g.add_edge(i, j);
        }
    return g;
}

std::vector<std::vector<int>> connected_components(const BitGraph& g) {
    int n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = (int)out.size();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < n; ++u)
                if (comp[u] < 0 && g.adjacent(v, u)) {
                    comp[u] = (int)out.size();
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

// True when inside the component every vertex misses exactly one other
// vertex; pairs[i] then holds the partner.
bool is_one_per_pair_component(const BitGraph& g, const std::vector<int>& comp,
                               std::vector<std::pair<int, int>>& pairs) {
    if (comp.size() < 4 || comp.size() % 2 != 0) return false;
    pairs.clear();
    std::set<int> in(comp.begin(), comp.end());
    std::map<int, int> partner;
    for (int v : comp) {
        int missing = -1;
        for (int u : comp) {
            if (u == v || g.adjacent(v, u)) continue;
            if (missing >= 0) return false;
            missing = u;
        }
        if (missing < 0) return false;
        partner[v] = missing;
    }
    for (auto [v, u] : partner) {
        if (partner[u] != v) return false;
        if (v < u) pairs.push_back({v, u});
    }
    return true;
}

std::string entry_name(const ExtendedUniverse& uni, const std::vector<int>& points) {
    std::set<int> pointset(points.begin(), points.end());
    // families fully contained in the set, preferring the merged X form when
    // it coincides with a one-point Y/Z family
    std::vector<const ExtendedFamily*> full;
    for (const ExtendedFamily& f : uni.families) {
        bool inside = std::all_of(f.members.begin(), f.members.end(),
                                  [&](int v) { return pointset.count(v) > 0; });
        if (inside) full.push_back(&f);
    }
    // drop families whose member set duplicates an already chosen one
    std::vector<const ExtendedFamily*> chosen;
    std::set<int> covered;
    auto prefer = [](const ExtendedFamily* f) {
        return f->kind == ExtKind::X ? 0 : (f->kind == ExtKind::Y ? 1 : 2);
    };
    std::sort(full.begin(), full.end(), [&](const ExtendedFamily* a, const ExtendedFamily* b) {
        if (a->members.size() != b->members.size()) return a->members.size() > b->members.size();
        return prefer(a) < prefer(b);
    });
    for (const ExtendedFamily* f : full) {
        bool fresh = std::any_of(f->members.begin(), f->members.end(),
                                 [&](int v) { return covered.count(v) == 0; });
        bool subset_of_covered = !fresh;
        if (subset_of_covered) continue;
        chosen.push_back(f);
        covered.insert(f->members.begin(), f->members.end());
    }
    if (covered.size() != pointset.size())
        return "(mixed selection of " + std::to_string(points.size()) + " points)";
    std::vector<std::string> names;
    for (const ExtendedFamily* f : chosen) names.push_back(f->name());
    std::sort(names.begin(), names.end());
    std::string s;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) s += " u ";
        s += names[i];
    }
    return s;
}

} // namespace

ExtendedClassification classify_extended(int n) {
    ExtendedClassification cls;
    cls.universe = admissible_candidates(n);
    const ExtendedUniverse& uni = cls.universe;
    BitGraph g = extended_adjacency(uni);

    for (const std::vector<int>& comp : connected_components(g)) {
        std::vector<std::pair<int, int>> pairs;
        if (is_one_per_pair_component(g, comp, pairs)) {
            ExtendedEntry entry;
            entry.pair_count = (int)pairs.size();
            entry.set_count = 1ll << pairs.size();
            // representative: the positive-sign element of each pair
            for (auto [a, b] : pairs)
                entry.points.push_back(uni.points[a].sign >= 0 ? a : b);
            std::sort(entry.points.begin(), entry.points.end());
            entry.name = "one per antipodal pair of " + entry_name(uni, comp);
            cls.entries.push_back(std::move(entry));
            continue;
        }
        if (comp.size() == 1) continue; // single points are excluded
        // restrict the graph to the component and enumerate maximal cliques
        BitGraph sub((int)comp.size());
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (g.adjacent(comp[i], comp[j])) sub.add_edge((int)i, (int)j);
        for (const std::vector<int>& clique : all_maximal_cliques(sub)) {
            if (clique.size() < 2) continue;
            ExtendedEntry entry;
            for (int v : clique) entry.points.push_back(comp[v]);
            std::sort(entry.points.begin(), entry.points.end());
            entry.name = entry_name(uni, entry.points);
            cls.entries.push_back(std::move(entry));
        }
    }

    std::sort(cls.entries.begin(), cls.entries.end(),
              [](const ExtendedEntry& a, const ExtendedEntry& b) {
                  if (a.points.size() != b.points.size()) return a.points.size() > b.points.size();
                  return a.points < b.points;
              });
    return cls;
}

int extended_affine_rank(const std::vector<ExtendedPoint>& points, int n, bool include_embedding) {
    std::vector<std::vector<Rat>> rows;
    auto to_row = [&](const ExtendedPoint& p) {
        std::vector<Rat> row;
        row.reserve(2 * n + 1);
        for (int c = 0; c < 2 * n; ++c) row.push_back(Rat(p.base.nums[c], n));
        // rational extra coordinate required
        Rat b2 = p.beta2;
        if (b2.is_zero()) {
            row.push_back(Rat(0));
        } else {
            long long sn, fn, sd, fd;
            detail::extract_square(b2.num, sn, fn);
            detail::extract_square(b2.den, sd, fd);
            if (fn != 1 || fd != 1)
                throw domain_error("affine rank over irrational coordinates is unsupported");
            row.push_back(Rat(p.sign * sn, sd));
        }
        return row;
    };
    for (const ExtendedPoint& p : points) rows.push_back(to_row(p));
    if (include_embedding)
        for (const ScaledVector& w : embed_hamming(n, 2))
            rows.push_back(to_row(ExtendedPoint{w, 1, Rat(0)}));
    if (rows.size() < 2) return 0;

    // differences against the first row, then Gaussian elimination over Q
    std::vector<std::vector<Rat>> mat;
    for (size_t i = 1; i < rows.size(); ++i) {
        std::vector<Rat> d(rows[i].size());
        for (size_t c = 0; c < d.size(); ++c) d[c] = rows[i][c] - rows[0][c];
        mat.push_back(std::move(d));
    }
    int rank = 0;
    size_t cols = mat[0].size();
    for (size_t c = 0; c < cols && rank < (int)mat.size(); ++c) {
        int pivot = -1;
        for (size_t r = rank; r < mat.size(); ++r)
            if (!mat[r][c].is_zero()) { pivot = (int)r; break; }
        if (pivot < 0) continue;
        std::swap(mat[rank], mat[pivot]);
        for (size_t r = 0; r < mat.size(); ++r) {
            if ((int)r == rank || mat[r][c].is_zero()) continue;
            Rat f = mat[r][c] / mat[rank][c];
            for (size_t cc = c; cc < cols; ++cc) mat[r][cc] -= f * mat[rank][cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace hds
