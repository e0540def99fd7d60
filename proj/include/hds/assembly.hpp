#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hds/families.hpp"
#include "hds/graph.hpp"
#include "hds/scan.hpp"

namespace hds {

struct VerificationCertificate {
    bool pass = false;
    bool exhaustive = true;
    long long pairs_checked = 0;
    std::map<Rat, long long> histogram; // full union histogram when exhaustive
    std::string witness_kind;           // "internal" or "cross" on failure
    long long witness_a = -1;
    long long witness_b = -1;
    Rat witness_value;
};

// Exact check that added ∪ embedded words is an m-distance set. The pairs
// inside the embedding itself realize {2,4,...,2m} with known counts (the
// squared distance is twice the word distance), so the scans cover the added
// points internally and against every word; fast mode samples the cross side.
VerificationCertificate verify_union(const std::vector<ScaledVector>& added, int n, int m,
                                     bool exhaustive, bool parallel = true,
                                     long long samples = 1000000, uint64_t seed = 0x5eed5eed);

struct AssembledComponent {
    CandidateClass cls;
    long long chosen = 0;
    std::string certificate;
    std::vector<std::string> alternatives;
};

struct AssembledSet {
    int n = 0;
    int m = 0;
    std::vector<AssembledComponent> components;
    std::vector<ScaledVector> points;
    long long added = 0;
    long long total = 0; // n^m + added
    int orbit_size = 1;
    VerificationCertificate verification;
};

struct ClassifyOptions {
    bool verify_full = false;
    bool parallel = true;
    long long samples = 1000000;
    uint64_t clique_budget = 20000000; // branch-and-bound node budget
    long long conflict_cap = 2000;     // vector-level conflict resolution cap
};

struct ClassificationReport {
    int n = 0;
    int m = 0;
    bool maximal = false;
    std::vector<CandidateClass> classes;              // orbit representatives
    std::vector<std::vector<std::string>> clique_orbits; // member class notations
    std::vector<int> clique_orbit_sizes;
    std::vector<AssembledSet> assembled;
    long long largest_total = 0;
    std::vector<std::string> notes;
};

// Substitute each clique vertex with its largest bounded subset, resolve
// vector-level conflicts where class pairs are only "some"-compatible, and
// verify every assembled union exactly.
ClassificationReport classify(int n, int m, const ClassifyOptions& opts = {});

long long largest_total(int n, int m, const ClassifyOptions& opts = {});

} // namespace hds
