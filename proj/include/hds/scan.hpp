#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hds/vector.hpp"

namespace hds {

// Pairwise-scan outcome. Squared distances are tracked as numerators over
// n^2; a pair is admissible when the value is an even integer in [2, 2m].
// The witness is the lexicographically first offending pair so serial and
// parallel runs agree bit for bit.
struct ScanOutcome {
    bool ok = true;
    long long bad_a = -1;
    long long bad_b = -1; // second point index, or word index for cross scans
    long long bad_num = 0;
    long long pairs = 0;
    std::map<long long, long long> value_counts;

    void merge(const ScanOutcome& other);
};

// Unordered pairs within the point set.
ScanOutcome scan_internal_serial(const std::vector<ScaledVector>& pts, int m);
ScanOutcome scan_internal_parallel(const std::vector<ScaledVector>& pts, int m);

// Point set against every embedded word of H(n,m) (word index = base-n value).
ScanOutcome scan_cross_serial(const std::vector<ScaledVector>& pts, int n, int m);
ScanOutcome scan_cross_parallel(const std::vector<ScaledVector>& pts, int n, int m);

// Random (point, word) samples with a fixed seed; value_counts collects the
// sampled distances only.
ScanOutcome scan_cross_sampled(const std::vector<ScaledVector>& pts, int n, int m,
                               long long samples, uint64_t seed);

} // namespace hds
