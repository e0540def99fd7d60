#include "hds/search.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hds {

Rat Profile::m_statistic() const {
    Rat s;
    for (int k0 : k0s) s += Rat((long long)k0 * (n - k0), n);
    s += Rat((long long)(m - l) * (n - 1), n);
    s += Rat(2 * l);
    return s;
}

CandidateClass Profile::realize() const {
    std::vector<BlockPattern> blocks;
    for (int k0 : k0s) blocks.push_back(BlockPattern::two_level(n, k0));
    for (int j = l; j < m; ++j) blocks.push_back(BlockPattern::all_ones(n));
    return CandidateClass(n, std::move(blocks)).orbit_representative();
}

std::vector<Profile> enumerate_profiles(int n, int m) {
    if (n < 2 || m < 1) throw domain_error("profiles need n >= 2, m >= 1");
    std::vector<Profile> out;
    std::vector<int> k0s;
    std::function<void(int, int)> rec = [&](int l, int max_k0) {
        // When l == m the tuple has no constant slots left, so at least one
        // top value must differ from n; otherwise the trailing 1s cover it.
        bool all_n = l == m && std::all_of(k0s.begin(), k0s.end(),
                                           [&](int v) { return v == n; });
        if (!all_n) {
            Profile p{n, m, l, k0s};
            Rat st = p.m_statistic();
            if (st.is_even_integer() && st.num > 0 && st.num <= 2ll * m) out.push_back(p);
        }
        if (l == m) return;
        for (int k0 = std::min(max_k0, n); k0 >= 2; --k0) {
            k0s.push_back(k0);
            rec(l + 1, k0);
            k0s.pop_back();
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CandidateClass> enumerate_addable_classes(int n, int m) {
    std::set<CandidateClass> acc;
    for (const Profile& p : enumerate_profiles(n, m)) {
        CandidateClass reduced = p.realize();
        acc.insert(reduced);
        if (p.m_statistic().num < 2ll * m)
            for (const CandidateClass& e : reduced.inverse_expansions())
                acc.insert(e.orbit_representative());
    }
    return std::vector<CandidateClass>(acc.begin(), acc.end());
}

namespace {

// All normalized multiplicity vectors of length t (ends >= 1, interior >= 0)
// summing to n.
std::vector<std::vector<int>> compositions(int n, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(t, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == t - 1) {
            if (left >= 1) {
                cur[pos] = left;
                out.push_back(cur);
            }
            return;
        }
        int lo = pos == 0 ? 1 : 0;
        for (int v = lo; v <= left - 1; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (t == 1) {
        out.push_back({n});
        return out;
    }
    rec(0, n);
    return out;
}

} // namespace

std::vector<CandidateClass> direct_class_search(int n, int m) {
    // Pattern pool sorted descending so that non-increasing picks enumerate
    // each block multiset once.
    std::vector<BlockPattern> pool;
    for (int t = 1; t <= m; ++t) {
        for (auto& mults : compositions(n, t)) {
            long long weighted = 0;
            for (size_t j = 0; j < mults.size(); ++j) weighted += (long long)j * mults[j];
            pool.push_back(BlockPattern(n, 1 + weighted, std::move(mults)));
        }
    }
    std::sort(pool.begin(), pool.end(), [](const BlockPattern& a, const BlockPattern& b) {
        return b < a;
    });

    std::vector<CandidateClass> out;
    std::vector<BlockPattern> cur;
    std::function<void(size_t, int)> rec = [&](size_t start, int t_budget) {
        if ((int)cur.size() == m) {
            CandidateClass cls(n, cur);
            if (cls.is_addable()) out.push_back(cls);
            return;
        }
        int remaining = m - (int)cur.size();
        for (size_t i = start; i < pool.size(); ++i) {
            int t = pool[i].t();
            // every later block has t >= 1
            if (t + (remaining - 1) > t_budget) continue;
            cur.push_back(pool[i]);
            rec(i, t_budget - t);
            cur.pop_back();
        }
    };
    rec(0, 2 * m - 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool hamming_is_maximal(int n, int m) {
    return enumerate_profiles(n, m).empty();
}

long long max_nonmaximal_n(int m, bool verify) {
    if (m < 2) throw domain_error("max_nonmaximal_n needs m >= 2");
    long long frontier = (long long)m * m + m - 1;
    if (verify) {
        auto at_frontier = enumerate_profiles((int)frontier, m);
        if (at_frontier.empty()) throw domain_error("frontier witness missing");
        // witness: one two-level block with k0 = n - m, the rest constant
        bool found = false;
        for (const Profile& p : at_frontier)
            if (p.l == 1 && p.k0s[0] == frontier - m && p.m_statistic().num == 2ll * m)
                found = true;
        if (!found) throw domain_error("expected frontier profile missing");
        for (long long n = frontier + 1; n <= frontier + 20; ++n)
            if (!enumerate_profiles((int)n, m).empty())
                throw domain_error("profile found beyond the frontier");
    }
    return frontier;
}

CandidateClass lift_class(const CandidateClass& cls, int extra) {
    if (extra < 0) throw domain_error("lift needs a non-negative step");
    if (!cls.is_addable()) throw domain_error("lift expects an addable class");
    if (cls.n % 2 == 0 && extra % 2 == 1)
        throw domain_error("lift step must be even when n is even");
    std::vector<BlockPattern> nb = cls.blocks;
    for (long long j = 0; j < (long long)extra * cls.n; ++j)
        nb.push_back(BlockPattern::all_ones(cls.n));
    return CandidateClass(cls.n, std::move(nb));
}

namespace {

void check_min_m_args(int n, int l, const std::vector<int>& k0s) {
    if (n < 2 || l < 1 || (int)k0s.size() != l)
        throw domain_error("min_m needs n >= 2 and l matching the tuple length");
    for (int k0 : k0s)
        if (k0 < 2 || k0 >= n)
            throw domain_error("min_m needs 2 <= k0 < n in the first l slots");
}

} // namespace

long long min_m_for(int n, int l, const std::vector<int>& k0s) {
    check_min_m_args(n, l, k0s);
    long long s1 = 0, s2 = 0;
    for (int k0 : k0s) {
        s1 += k0;
        s2 += (long long)k0 * k0;
    }
    long long i = ceil_div(s1 + s2, n + 1);
    if (n % 2 == 0 && i % 2 == 1) i += 1;
    return l - s2 + i * n;
}

long long min_m_brute_force(int n, int l, const std::vector<int>& k0s, int max_m) {
    check_min_m_args(n, l, k0s);
    for (int m = l; m <= max_m; ++m) {
        Profile p{n, m, l, k0s};
        std::vector<int> sorted = k0s;
        std::sort(sorted.rbegin(), sorted.rend());
        p.k0s = sorted;
        Rat st = p.m_statistic();
        if (st.is_even_integer() && st.num > 0 && st.num <= 2ll * m) return m;
    }
    throw domain_error("no admissible m found within the scan bound");
}

} // namespace hds
