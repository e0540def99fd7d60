#include "hds/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hds {

BlockPattern::BlockPattern(int n_, long long k0_, std::vector<int> mults_)
    : n(n_), k0(k0_), mults(std::move(mults_)) {
    if (n < 2) throw domain_error("block pattern needs n >= 2");
    if (mults.empty()) throw domain_error("block pattern needs at least one level");
    if (mults.front() < 1 || mults.back() < 1)
        throw domain_error("block pattern not normalized");
    long long sum = 0, weighted = 0;
    for (size_t j = 0; j < mults.size(); ++j) {
        if (mults[j] < 0) throw domain_error("negative multiplicity");
        sum += mults[j];
        weighted += (long long)j * mults[j];
    }
    if (sum != n) throw domain_error("multiplicities do not sum to n");
    if (k0 != 1 + weighted) throw domain_error("top value inconsistent with block sum");
}

std::vector<int> BlockPattern::expanded() const {
    std::vector<int> vals;
    vals.reserve(n);
    for (int j = 0; j < t(); ++j)
        for (int c = 0; c < mults[j]; ++c)
            vals.push_back((int)value_num(j));
    return vals;
}

Rat BlockPattern::m_term() const {
    Rat term = Rat(1 - n) - Rat(2 * k0) - Rat(k0 * k0, n);
    long long s = 0;
    for (int j = 0; j < t(); ++j) s += (long long)(j + 1) * (j + 1) * mults[j];
    return term + Rat(s) + Rat(2 * t());
}

long long BlockPattern::internal_max_num() const {
    std::vector<int> v = expanded();
    long long s = 0;
    for (int i = 0; i < n; ++i) {
        long long d = (long long)v[i] - v[n - 1 - i];
        s += d * d;
    }
    return s;
}

bigint BlockPattern::arrangement_count() const {
    bigint c = 1;
    int used = 0;
    for (int mult : mults) {
        for (int i = 1; i <= mult; ++i) {
            ++used;
            c *= used;
            c /= i;
        }
    }
    return c;
}

BlockPattern BlockPattern::all_ones(int n) {
    return BlockPattern(n, 1, {n});
}

BlockPattern BlockPattern::two_level(int n, int k0) {
    if (k0 < 2 || k0 > n) throw domain_error("two-level pattern needs 2 <= k0 <= n");
    return BlockPattern(n, k0, {n + 1 - k0, k0 - 1});
}

std::string BlockPattern::str() const {
    if (is_all_ones()) return "1^" + std::to_string(n);
    std::string s = "(";
    bool first = true;
    for (int j = 0; j < t(); ++j) {
        if (mults[j] == 0) continue;
        if (!first) s += ",";
        first = false;
        s += std::to_string(value_num(j));
        if (mults[j] > 1) s += "^" + std::to_string(mults[j]);
    }
    s += ")^P";
    return s;
}

long long block_min_num(const BlockPattern& a, const BlockPattern& b) {
    std::vector<int> va = a.expanded(), vb = b.expanded();
    long long s = 0;
    for (int i = 0; i < a.n; ++i) {
        long long d = (long long)va[i] - vb[i];
        s += d * d;
    }
    return s;
}

long long block_max_num(const BlockPattern& a, const BlockPattern& b) {
    std::vector<int> va = a.expanded(), vb = b.expanded();
    long long s = 0;
    for (int i = 0; i < a.n; ++i) {
        long long d = (long long)va[i] - vb[a.n - 1 - i];
        s += d * d;
    }
    return s;
}

CandidateClass::CandidateClass(int n_, std::vector<BlockPattern> blocks_)
    : n(n_), m((int)blocks_.size()), blocks(std::move(blocks_)) {
    if (m < 1) throw domain_error("class needs at least one block");
    for (const auto& b : blocks)
        if (b.n != n) throw domain_error("block with mismatched n");
}

Rat CandidateClass::m_value() const {
    Rat s;
    for (const auto& b : blocks) s += b.m_term();
    return s;
}

bool CandidateClass::is_addable() const {
    Rat mv = m_value();
    return mv.is_even_integer() && mv.num > 0 && mv.num <= 2ll * m;
}

int CandidateClass::sum_t() const {
    int s = 0;
    for (const auto& b : blocks) s += b.t();
    return s;
}

bool CandidateClass::shape_valid() const {
    for (const auto& b : blocks)
        if (b.t() > m) return false;
    return sum_t() <= 2 * m - 1;
}

namespace {

// Strip zero multiplicities at both ends; a stripped top level lowers k0 by n.
BlockPattern normalize_raw(int n, long long k0, std::vector<int> mults) {
    size_t lead = 0;
    while (lead < mults.size() && mults[lead] == 0) ++lead;
    if (lead == mults.size()) throw domain_error("empty block pattern");
    size_t tail = mults.size();
    while (tail > lead && mults[tail - 1] == 0) --tail;
    std::vector<int> core(mults.begin() + lead, mults.begin() + tail);
    return BlockPattern(n, k0 - (long long)lead * n, std::move(core));
}

} // namespace

CandidateClass CandidateClass::modify(int block_index) const {
    const BlockPattern& p = blocks.at(block_index);
    int t = p.t();
    if (t < 3) throw domain_error("modification needs a block with at least 3 levels");
    std::vector<int> k = p.mults;
    if (t == 3) {
        k[0] -= 1;
        k[1] += 2;
        k[2] -= 1;
    } else {
        k[0] -= 1;
        k[1] += 1;
        k[t - 2] += 1;
        k[t - 1] -= 1;
    }
    std::vector<BlockPattern> nb = blocks;
    nb[block_index] = normalize_raw(n, p.k0, std::move(k));
    return CandidateClass(n, std::move(nb));
}

CandidateClass CandidateClass::reduce() const {
    if (!is_addable()) throw domain_error("reduce expects an addable class");
    CandidateClass cur = *this;
    for (;;) {
        int idx = -1;
        for (int j = 0; j < cur.m; ++j)
            if (cur.blocks[j].t() >= 3) { idx = j; break; }
        if (idx < 0) return cur;
        cur = cur.modify(idx);
    }
}

std::vector<CandidateClass> CandidateClass::inverse_expansions() const {
    for (const auto& b : blocks)
        if (b.t() > 2) throw domain_error("inverse expansion expects a reduced class");
    if (!is_addable()) throw domain_error("inverse expansion expects an addable class");

    std::set<CandidateClass> seen;
    std::vector<CandidateClass> frontier{*this}, result;
    while (!frontier.empty()) {
        std::vector<CandidateClass> next;
        for (const CandidateClass& cur : frontier) {
            for (int j = 0; j < m; ++j) {
                const BlockPattern& q = cur.blocks[j];
                int tq = q.t();
                // The forward rule can zero out at most the first and last
                // multiplicity, so the raw pre-strip image extends q by at
                // most one zero on each side.
                for (int a = 0; a <= 1; ++a) {
                    for (int b = 0; b <= 1; ++b) {
                        int t = tq + a + b;
                        if (t < 3 || t > m) continue;
                        std::vector<int> raw((size_t)t, 0);
                        for (int i = 0; i < tq; ++i) raw[a + i] = q.mults[i];
                        long long k0_raw = q.k0 + (long long)a * n;
                        std::vector<int> pre = raw;
                        if (t == 3) {
                            if (pre[1] < 2) continue;
                            pre[0] += 1;
                            pre[1] -= 2;
                            pre[2] += 1;
                        } else {
                            if (pre[1] < 1 || pre[t - 2] < 1) continue;
                            pre[0] += 1;
                            pre[1] -= 1;
                            pre[t - 2] -= 1;
                            pre[t - 1] += 1;
                        }
                        std::vector<BlockPattern> nb = cur.blocks;
                        nb[j] = BlockPattern(n, k0_raw, std::move(pre));
                        CandidateClass cand(n, std::move(nb));
                        if (!cand.shape_valid() || !cand.is_addable()) continue;
                        if (seen.insert(cand).second) {
                            next.push_back(cand);
                            result.push_back(cand);
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

ScaledVector CandidateClass::canonical_element() const {
    std::vector<int> nums;
    nums.reserve((size_t)n * m);
    for (const auto& b : blocks) {
        std::vector<int> v = b.expanded();
        nums.insert(nums.end(), v.begin(), v.end());
    }
    return ScaledVector(n, m, std::move(nums));
}

bigint CandidateClass::class_size() const {
    bigint c = 1;
    for (const auto& b : blocks) c *= b.arrangement_count();
    return c;
}

std::vector<ScaledVector> CandidateClass::enumerate(long long cap) const {
    bigint size = class_size();
    if (size > cap)
        throw domain_error("class of size " + size.str() + " exceeds enumeration cap " +
                           std::to_string(cap));
    // Per-block arrangements in lexicographic order, then an odometer over blocks.
    std::vector<std::vector<std::vector<int>>> arr(m);
    for (int j = 0; j < m; ++j) {
        std::vector<int> v = blocks[j].expanded();
        std::sort(v.begin(), v.end());
        do {
            arr[j].push_back(v);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::vector<ScaledVector> out;
    out.reserve((size_t)size);
    std::vector<size_t> idx(m, 0);
    for (;;) {
        std::vector<int> nums;
        nums.reserve((size_t)n * m);
        for (int j = 0; j < m; ++j)
            nums.insert(nums.end(), arr[j][idx[j]].begin(), arr[j][idx[j]].end());
        out.push_back(ScaledVector(n, m, std::move(nums)));
        int j = m - 1;
        while (j >= 0 && idx[j] + 1 == arr[j].size()) { idx[j] = 0; --j; }
        if (j < 0) break;
        ++idx[j];
    }
    return out;
}

long long CandidateClass::internal_max_num() const {
    long long s = 0;
    for (const auto& b : blocks) s += b.internal_max_num();
    return s;
}

CandidateClass CandidateClass::with_blocks_permuted(const std::vector<int>& perm) const {
    if ((int)perm.size() != m) throw domain_error("bad block permutation");
    std::vector<BlockPattern> nb;
    nb.reserve(m);
    for (int j : perm) nb.push_back(blocks.at(j));
    return CandidateClass(n, std::move(nb));
}

CandidateClass CandidateClass::orbit_representative() const {
    std::vector<BlockPattern> nb = blocks;
    std::sort(nb.begin(), nb.end(), [](const BlockPattern& a, const BlockPattern& b) {
        return b < a;
    });
    return CandidateClass(n, std::move(nb));
}

std::string CandidateClass::str() const {
    std::string s = "(";
    for (int j = 0; j < m; ++j) {
        if (j) s += ",";
        s += blocks[j].str();
    }
    s += ")/" + std::to_string(n);
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw domain_error("class notation: expected '" + std::string(1, c) +
                               "' at position " + std::to_string(pos));
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)s[start])))
            throw domain_error("class notation: expected integer at position " +
                               std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }

    // value list "(v1^m1,v2^m2,...)" or bare "v^m"
    std::vector<std::pair<long long, int>> block_tokens() {
        std::vector<std::pair<long long, int>> toks;
        if (eat('(')) {
            do {
                long long v = integer();
                int mult = 1;
                if (eat('^')) mult = (int)integer();
                toks.push_back({v, mult});
            } while (eat(','));
            expect(')');
            if (eat('^')) {
                skip_ws();
                if (pos < s.size() && (s[pos] == 'P' || s[pos] == 'p')) ++pos;
                else throw domain_error("class notation: expected P after ^");
            }
        } else {
            long long v = integer();
            int mult = 1;
            if (eat('^')) mult = (int)integer();
            toks.push_back({v, mult});
        }
        return toks;
    }
};

BlockPattern pattern_from_tokens(int n, const std::vector<std::pair<long long, int>>& toks) {
    long long k0 = toks.front().first;
    int max_level = 0;
    for (const auto& [v, mult] : toks) {
        (void)mult;
        long long diff = k0 - v;
        if (diff < 0 || diff % n != 0)
            throw domain_error("class notation: values are not n apart within a block");
        max_level = std::max<int>(max_level, (int)(diff / n));
    }
    std::vector<int> mults((size_t)max_level + 1, 0);
    for (const auto& [v, mult] : toks) mults[(size_t)((k0 - v) / n)] += mult;
    return BlockPattern(n, k0, std::move(mults));
}

} // namespace

CandidateClass CandidateClass::parse(const std::string& text) {
    Parser p(text);
    p.expect('(');
    std::vector<std::vector<std::pair<long long, int>>> blocks_toks;
    do {
        blocks_toks.push_back(p.block_tokens());
    } while (p.eat(','));
    p.expect(')');
    p.expect('/');
    int n = (int)p.integer();
    std::vector<BlockPattern> blocks;
    for (const auto& toks : blocks_toks) blocks.push_back(pattern_from_tokens(n, toks));
    return CandidateClass(n, std::move(blocks));
}

IndicatorProfile::IndicatorProfile(const CandidateClass& cls, const std::vector<int>& word) {
    if ((int)word.size() != cls.m) throw domain_error("word length mismatch");
    ScaledVector canon = cls.canonical_element();
    level.resize(cls.m, -1);
    for (int j = 0; j < cls.m; ++j) {
        int matched = canon.block(j)[word[j]];
        const BlockPattern& b = cls.blocks[j];
        for (int lv = 0; lv < b.t(); ++lv) {
            if (b.value_num(lv) == matched && b.mults[lv] > 0) {
                level[j] = lv;
                break;
            }
        }
    }
}

Rat level_formula_sq_dist(const CandidateClass& cls, const IndicatorProfile& prof) {
    Rat s;
    for (int j = 0; j < cls.m; ++j) {
        const BlockPattern& b = cls.blocks[j];
        Rat term = b.m_term() - Rat(2 * b.t());
        s += term + Rat(2 * (prof.level[j] + 1));
    }
    return s;
}

} // namespace hds
