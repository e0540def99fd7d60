#include "hds/families.hpp"

#include <algorithm>
#include <map>

namespace hds {

bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    bigint c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

bool frankl_feasible(int n, int k, int t, int r) {
    return n >= k && k >= t + r && n >= t + 2 * r && t >= 1 && r >= 0;
}

std::vector<uint32_t> frankl_members(int n, int k, int t, int r) {
    if (n > 31) throw domain_error("ground set too large for mask enumeration");
    if (!frankl_feasible(n, k, t, r)) throw domain_error("family parameters out of domain");
    uint32_t window = (1u << (t + 2 * r)) - 1;
    std::vector<uint32_t> out;
    // Gosper's hack over all k-subsets of [n]
    uint32_t set = (1u << k) - 1, limit = 1u << n;
    while (set < limit) {
        if (std::popcount(set & window) >= t + r) out.push_back(set);
        uint32_t c = set & -set, rr = set + c;
        set = (((rr ^ set) >> 2) / c) | rr;
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bigint frankl_count(int n, int k, int t, int r) {
    if (!frankl_feasible(n, k, t, r)) throw domain_error("family parameters out of domain");
    bigint s = 0;
    for (int j = t + r; j <= std::min(k, t + 2 * r); ++j)
        s += binomial(t + 2 * r, j) * binomial(n - t - 2 * r, k - j);
    return s;
}

EkrBound ekr_bound(int n, int k, int t) {
    if (t < 1 || t > k || k > n) throw domain_error("ekr_bound needs 1 <= t <= k <= n");
    EkrBound res;
    bool have = false;
    for (int r = 0; frankl_feasible(n, k, t, r); ++r) {
        bigint c = frankl_count(n, k, t, r);
        if (!have || c > res.bound) {
            res.bound = c;
            res.r = r;
            have = true;
        }
    }
    if (!have) throw domain_error("no feasible family");
    Rat threshold1 = Rat((long long)(k - t + 1) * (t + 1));
    res.case1 = Rat(n) > threshold1;
    // boundary n == (k-t+1)(2 + (t-1)/(r+1)) makes the next family an equal optimum
    for (int r = res.r; r <= res.r; ++r) {
        Rat lower = Rat(k - t + 1) * (Rat(2) + Rat(t - 1, r + 1));
        if (Rat(n) == lower) {
            res.tie = true;
            res.tie_feasible = frankl_feasible(n, k, t, r + 1) &&
                               frankl_count(n, k, t, r + 1) == res.bound;
        }
    }
    if (!res.tie && frankl_feasible(n, k, t, res.r + 1) &&
        frankl_count(n, k, t, res.r + 1) == res.bound) {
        res.tie = true;
        res.tie_feasible = true;
    }
    return res;
}

bigint cross_pair_bound(int n, int k) {
    if (n < 2 * k) throw domain_error("cross pair bound needs n >= 2k");
    return binomial(n, k) - binomial(n - k, k) + 1;
}

bigint cross_s_bound(int n, int k, int s) {
    if (!(n > 2 * k)) throw domain_error("cross family bound needs n > 2k");
    if (!(Rat(s) > Rat(n, k))) throw domain_error("cross family bound needs s > n/k");
    return bigint(s) * binomial(n - 1, k - 1);
}

namespace {

std::vector<std::vector<int>> perms_of(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<std::vector<int>> prefixed(int head, const std::vector<std::vector<int>>& tails) {
    std::vector<std::vector<int>> out;
    out.reserve(tails.size());
    for (const auto& t : tails) {
        std::vector<int> v;
        v.reserve(t.size() + 1);
        v.push_back(head);
        v.insert(v.end(), t.begin(), t.end());
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> tail_pattern(int zeros) {
    std::vector<int> v(zeros, 0);
    v.push_back(-1);
    v.push_back(-1);
    return v;
}

} // namespace

std::vector<std::vector<int>> anx_members(AnxKind kind, int k) {
    int base = kind == AnxKind::Z ? 2 : 1;
    if (k < base) throw domain_error("family index below the base case");
    std::vector<std::vector<int>> cur;
    switch (kind) {
        case AnxKind::X: {
            cur = prefixed(1, perms_of({0, -1, -1}));
            auto more = prefixed(0, perms_of({1, -1, -1}));
            cur.insert(cur.end(), more.begin(), more.end());
            break;
        }
        case AnxKind::Y:
            cur = prefixed(-1, perms_of({1, 0, -1}));
            break;
        case AnxKind::Z:
            cur = prefixed(-1, perms_of({1, 0, 0, -1}));
            break;
    }
    for (int i = base + 1; i <= k; ++i) {
        auto next = prefixed(0, cur);
        auto fresh = prefixed(1, perms_of(tail_pattern(i)));
        next.insert(next.end(), fresh.begin(), fresh.end());
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::vector<std::vector<int>> anx_scaled(AnxKind kind, int k, int k0, int n) {
    if (n != k + 3) throw domain_error("scaled family needs block length k+3");
    auto raw = anx_members(kind, k);
    for (auto& v : raw)
        for (auto& x : v) x = x == 1 ? k0 : (x == 0 ? k0 - n : k0 - 2 * n);
    return raw;
}

namespace {

constexpr long long kEnumCap = 1000000;
constexpr long long kExactCliqueCap = 150;
constexpr long long kBudgetCliqueCap = 500;
constexpr long long kGlobalConflictCap = 2000;

bool admissible_num(long long num, long long n2, int m) {
    if (num <= 0 || num % n2 != 0) return false;
    long long v = num / n2;
    return v % 2 == 0 && v <= 2ll * m;
}

long long pair_num(const ScaledVector& x, const ScaledVector& y) {
    long long s = 0;
    for (size_t i = 0; i < x.nums.size(); ++i) {
        long long d = (long long)x.nums[i] - y.nums[i];
        s += d * d;
    }
    return s;
}

BitGraph admissibility_graph(const std::vector<ScaledVector>& pts, int m) {
    long long n2 = (long long)pts[0].n * pts[0].n;
    BitGraph g((int)pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (admissible_num(pair_num(pts[i], pts[j]), n2, m)) g.add_edge((int)i, (int)j);
    return g;
}

void validate_bounded(const std::vector<ScaledVector>& pts, int m) {
    long long n2 = (long long)pts[0].n * pts[0].n;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (!admissible_num(pair_num(pts[i], pts[j]), n2, m))
                throw domain_error("construction emitted an inadmissible pair");
}

struct Construction {
    std::vector<ScaledVector> points;
    bigint bound;
    std::string note;
    std::vector<std::string> alternatives;
};

// Full arrangement lists for every block except `restricted`, whose
// arrangements are supplied by the caller.
std::vector<ScaledVector> product_points(const CandidateClass& cls, int restricted,
                                         const std::vector<std::vector<int>>& restricted_arr) {
    std::vector<std::vector<std::vector<int>>> arr(cls.m);
    for (int j = 0; j < cls.m; ++j) {
        if (j == restricted) {
            arr[j] = restricted_arr;
        } else {
            std::vector<int> v = cls.blocks[j].expanded();
            std::sort(v.begin(), v.end());
            do {
                arr[j].push_back(v);
            } while (std::next_permutation(v.begin(), v.end()));
        }
    }
    std::vector<ScaledVector> out;
    std::vector<size_t> idx(cls.m, 0);
    for (;;) {
        std::vector<int> nums;
        nums.reserve((size_t)cls.n * cls.m);
        for (int j = 0; j < cls.m; ++j)
            nums.insert(nums.end(), arr[j][idx[j]].begin(), arr[j][idx[j]].end());
        out.push_back(ScaledVector(cls.n, cls.m, std::move(nums)));
        int j = cls.m - 1;
        while (j >= 0 && idx[j] + 1 == arr[j].size()) { idx[j] = 0; --j; }
        if (j < 0) break;
        ++idx[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string frankl_name(int k, int t, int r, long long k0) {
    return "F_" + std::to_string(r) + "(" + std::to_string(k) + "," + std::to_string(t) +
           "," + std::to_string(k0) + ")";
}

// Restrict one block to an intersecting family (or an inductive family for a
// three-level block) and keep every other block whole. Returns the best
// option over restrictable blocks, or nothing when no recipe applies.
std::optional<Construction> best_construction(const CandidateClass& cls) {
    int n = cls.n, m = cls.m;
    long long n2 = (long long)n * n;
    std::optional<Construction> best;
    for (int h = 0; h < m; ++h) {
        const BlockPattern& b = cls.blocks[h];
        long long d_rest = 0;
        for (int j = 0; j < m; ++j)
            if (j != h) d_rest += cls.blocks[j].internal_max_num();
        Rat allowed = Rat(2 * m) - Rat(d_rest, n2);
        if (allowed.is_negative()) continue;

        Construction cand;
        if (b.t() == 2) {
            int top = b.mults[0];
            // within-block distances come in steps of 2 mismatches
            long long half = (allowed.num / allowed.den) / 2;
            long long t_req = top - half;
            if (t_req <= 0 || t_req > top) continue;
            if (n > 31) continue;
            EkrBound ekr = ekr_bound(n, top, (int)t_req);
            std::vector<std::vector<int>> arrangements;
            for (uint32_t mask : frankl_members(n, top, (int)t_req, ekr.r)) {
                std::vector<int> block(n);
                for (int i = 0; i < n; ++i)
                    block[i] = (mask >> i) & 1 ? (int)b.k0 : (int)(b.k0 - n);
                arrangements.push_back(std::move(block));
            }
            cand.points = product_points(cls, h, arrangements);
            cand.bound = ekr.bound;
            for (int j = 0; j < m; ++j)
                if (j != h) cand.bound *= cls.blocks[j].arrangement_count();
            cand.note = frankl_name(top, (int)t_req, ekr.r, b.k0) + " in block " + std::to_string(h + 1);
            if (ekr.tie)
                cand.alternatives.push_back(frankl_name(top, (int)t_req, ekr.r + 1, b.k0) +
                                            (ekr.tie_feasible ? "" : " (formal tie)"));
        } else if (b.t() == 3 && b.mults[0] == 1 && b.mults[2] == 2 && n == b.mults[1] + 3 &&
                   allowed >= Rat(8)) {
            // orbit of (1, 0^k, -1^2): inductive families attain C(k+3,3)+2
            int k = b.mults[1];
            std::vector<std::vector<int>> arrangements = anx_scaled(AnxKind::X, k, (int)b.k0, n);
            cand.points = product_points(cls, h, arrangements);
            cand.bound = binomial(k + 3, 3) + 2;
            for (int j = 0; j < m; ++j)
                if (j != h) cand.bound *= cls.blocks[j].arrangement_count();
            cand.note = "X_" + std::to_string(k) + "(" + std::to_string(b.k0) + ") in block " +
                        std::to_string(h + 1);
            cand.alternatives.push_back("Y_" + std::to_string(k) + "(" + std::to_string(b.k0) + ")");
            cand.alternatives.push_back("Z_" + std::to_string(k) + "(" + std::to_string(b.k0) + ")");
        } else {
            continue;
        }
        if (!best || cand.bound > best->bound) best = std::move(cand);
    }
    if (best) validate_bounded(best->points, m);
    return best;
}

} // namespace

BoundedSubset largest_bounded_subset(const CandidateClass& cls, uint64_t clique_budget) {
    if (!cls.is_addable()) throw domain_error("largest_bounded_subset expects an addable class");
    BoundedSubset res;
    long long n2 = (long long)cls.n * cls.n;

    if (cls.internal_max_num() <= 2ll * cls.m * n2) {
        res.points = cls.enumerate(kEnumCap);
        std::sort(res.points.begin(), res.points.end());
        res.size = cls.class_size();
        res.certificate = "whole-class";
        return res;
    }

    bigint size = cls.class_size();
    std::optional<Construction> built;
    if (size > kExactCliqueCap) built = best_construction(cls);

    if (size <= kBudgetCliqueCap) {
        std::vector<ScaledVector> pts = cls.enumerate(kEnumCap);
        std::sort(pts.begin(), pts.end());
        BitGraph g = admissibility_graph(pts, cls.m);
        std::vector<int> seed;
        if (built) {
            for (const ScaledVector& p : built->points) {
                auto it = std::lower_bound(pts.begin(), pts.end(), p);
                seed.push_back((int)(it - pts.begin()));
            }
        }
        uint64_t budget = size <= kExactCliqueCap ? 0 : clique_budget;
        CliqueResult cr = max_clique(g, seed, budget);
        if (cr.proven_optimal) {
            res.certificate = "brute-force-clique";
        } else {
            // make the incumbent maximal so the downgrade is meaningful
            for (int v = 0; v < g.size(); ++v) {
                bool ext = true;
                for (int u : cr.vertices)
                    if (u == v || !g.adjacent(u, v)) { ext = false; break; }
                if (ext) cr.vertices.push_back(v);
            }
            std::sort(cr.vertices.begin(), cr.vertices.end());
            res.certificate = "clique-no-extension";
        }
        for (int v : cr.vertices) res.points.push_back(pts[v]);
        res.size = (long long)res.points.size();
        if (built) {
            if (cr.proven_optimal && built->bound != res.size)
                throw domain_error("construction bound disagrees with exact clique");
            res.alternatives = built->alternatives;
            if (!built->note.empty()) res.alternatives.insert(res.alternatives.begin(), built->note);
        }
        return res;
    }

    if (!built)
        throw domain_error("class " + cls.str() + " is too large for exact search and no construction applies");
    res.points = std::move(built->points);
    res.size = built->bound;
    if (res.size != (long long)res.points.size())
        throw domain_error("construction size disagrees with its bound");
    res.certificate = "ekr-construction";
    res.alternatives = built->alternatives;
    res.alternatives.insert(res.alternatives.begin(), built->note);
    return res;
}

} // namespace hds
