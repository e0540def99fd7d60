#include "hds/scan.hpp"

#include <omp.h>
#include <random>

namespace hds {

void ScanOutcome::merge(const ScanOutcome& other) {
    if (!other.ok && (ok || std::pair(other.bad_a, other.bad_b) < std::pair(bad_a, bad_b))) {
        ok = false;
        bad_a = other.bad_a;
        bad_b = other.bad_b;
        bad_num = other.bad_num;
    }
    pairs += other.pairs;
    for (const auto& [num, count] : other.value_counts) value_counts[num] += count;
}

namespace {

bool admissible_num(long long num, long long n2, int m) {
    if (num <= 0 || num % n2 != 0) return false;
    long long v = num / n2;
    return v % 2 == 0 && v <= 2ll * m;
}

void check_frames(const std::vector<ScaledVector>& pts, int n, int m) {
    for (const auto& p : pts)
        if (p.n != n || p.m != m) throw domain_error("scan over mismatched frames");
}

ScanOutcome scan_internal_rows(const std::vector<ScaledVector>& pts, int m, size_t row_begin,
                               size_t row_end) {
    ScanOutcome out;
    if (pts.empty()) return out;
    long long n2 = (long long)pts[0].n * pts[0].n;
    size_t dim = pts[0].nums.size();
    for (size_t i = row_begin; i < row_end; ++i) {
        const int* a = pts[i].nums.data();
        for (size_t j = i + 1; j < pts.size(); ++j) {
            const int* b = pts[j].nums.data();
            long long s = 0;
            for (size_t c = 0; c < dim; ++c) {
                long long d = (long long)a[c] - b[c];
                s += d * d;
            }
            out.value_counts[s] += 1;
            out.pairs += 1;
            if (!admissible_num(s, n2, m) && out.ok) {
                out.ok = false;
                out.bad_a = (long long)i;
                out.bad_b = (long long)j;
                out.bad_num = s;
            }
        }
    }
    return out;
}

// One point against every word, walking words in base-n order and updating
// the block-lookup sum incrementally as digits roll.
ScanOutcome scan_cross_point(const ScaledVector& p, int n, int m, long long point_index) {
    ScanOutcome out;
    long long n2 = (long long)n * n;
    long long self = 0;
    for (int v : p.nums) self += (long long)v * v;
    long long base = self + (long long)m * n2;

    std::vector<int> word(m, 0);
    long long lookup = 0;
    for (int j = 0; j < m; ++j) lookup += p.block(j)[0];
    long long words = 1;
    for (int j = 0; j < m; ++j) words *= n;

    for (long long w = 0;; ++w) {
        long long num = base - 2ll * n * lookup;
        out.value_counts[num] += 1;
        out.pairs += 1;
        if (!admissible_num(num, n2, m) && out.ok) {
            out.ok = false;
            out.bad_a = point_index;
            out.bad_b = w;
            out.bad_num = num;
        }
        if (w + 1 == words) break;
        int j = m - 1;
        while (word[j] == n - 1) {
            lookup -= p.block(j)[word[j]];
            word[j] = 0;
            lookup += p.block(j)[0];
            --j;
        }
        lookup -= p.block(j)[word[j]];
        word[j] += 1;
        lookup += p.block(j)[word[j]];
    }
    return out;
}

} // namespace

ScanOutcome scan_internal_serial(const std::vector<ScaledVector>& pts, int m) {
    if (pts.empty()) return {};
    check_frames(pts, pts[0].n, m);
    return scan_internal_rows(pts, m, 0, pts.size());
}

ScanOutcome scan_internal_parallel(const std::vector<ScaledVector>& pts, int m) {
    if (pts.empty()) return {};
    check_frames(pts, pts[0].n, m);
    int threads = omp_get_max_threads();
    std::vector<ScanOutcome> partial(threads);
#pragma omp parallel num_threads(threads)
    {
        int tid = omp_get_thread_num();
        ScanOutcome local;
#pragma omp for schedule(static, 16)
        for (long long i = 0; i < (long long)pts.size(); ++i)
            local.merge(scan_internal_rows(pts, m, (size_t)i, (size_t)i + 1));
        partial[tid] = std::move(local);
    }
    ScanOutcome out;
    for (const auto& part : partial) out.merge(part);
    return out;
}

ScanOutcome scan_cross_serial(const std::vector<ScaledVector>& pts, int n, int m) {
    check_frames(pts, n, m);
    ScanOutcome out;
    for (size_t i = 0; i < pts.size(); ++i) out.merge(scan_cross_point(pts[i], n, m, (long long)i));
    return out;
}

ScanOutcome scan_cross_parallel(const std::vector<ScaledVector>& pts, int n, int m) {
    check_frames(pts, n, m);
    int threads = omp_get_max_threads();
    std::vector<ScanOutcome> partial(threads);
#pragma omp parallel num_threads(threads)
    {
        int tid = omp_get_thread_num();
        ScanOutcome local;
#pragma omp for schedule(static, 1)
        for (long long i = 0; i < (long long)pts.size(); ++i)
            local.merge(scan_cross_point(pts[i], n, m, i));
        partial[tid] = std::move(local);
    }
    ScanOutcome out;
    for (const auto& part : partial) out.merge(part);
    return out;
}

ScanOutcome scan_cross_sampled(const std::vector<ScaledVector>& pts, int n, int m,
                               long long samples, uint64_t seed) {
    check_frames(pts, n, m);
    ScanOutcome out;
    if (pts.empty()) return out;
    std::mt19937_64 rng(seed);
    long long words = 1;
    for (int j = 0; j < m; ++j) words *= n;
    long long n2 = (long long)n * n;
    for (long long s = 0; s < samples; ++s) {
        long long pi = (long long)(rng() % pts.size());
        long long wi = (long long)(rng() % (uint64_t)words);
        const ScaledVector& p = pts[pi];
        long long self = 0;
        for (int v : p.nums) self += (long long)v * v;
        long long lookup = 0, rest = wi;
        for (int j = m - 1; j >= 0; --j) {
            lookup += p.block(j)[rest % n];
            rest /= n;
        }
        long long num = self + (long long)m * n2 - 2ll * n * lookup;
        out.value_counts[num] += 1;
        out.pairs += 1;
        if (!admissible_num(num, n2, m) && out.ok) {
            out.ok = false;
            out.bad_a = pi;
            out.bad_b = wi;
            out.bad_num = num;
        }
    }
    return out;
}

} // namespace hds
