#include "hds/assembly.hpp"

#include <algorithm>
#include <set>

#include "hds/search.hpp"

namespace hds {

namespace {

// Pair counts inside the embedding: squared distance 2k pairs number
// n^m * C(m,k) * (n-1)^k / 2.
std::map<Rat, long long> embedding_histogram(int n, int m) {
    long long total = hamming_count(n, m);
    std::map<Rat, long long> hist;
    for (int k = 1; k <= m; ++k) {
        bigint count = bigint(total) * binomial(m, k);
        for (int i = 0; i < k; ++i) count *= n - 1;
        count /= 2;
        if (count > bigint(INT64_MAX)) throw overflow_error("pair count overflows");
        hist[Rat(2 * k)] = (long long)count;
    }
    return hist;
}

} // namespace

VerificationCertificate verify_union(const std::vector<ScaledVector>& added, int n, int m,
                                     bool exhaustive, bool parallel, long long samples,
                                     uint64_t seed) {
    VerificationCertificate cert;
    cert.exhaustive = exhaustive;
    long long n2 = (long long)n * n;

    ScanOutcome internal;
    if (added.size() >= 2)
        internal = parallel ? scan_internal_parallel(added, m) : scan_internal_serial(added, m);
    ScanOutcome cross;
    if (!added.empty()) {
        if (exhaustive)
            cross = parallel ? scan_cross_parallel(added, n, m) : scan_cross_serial(added, n, m);
        else
            cross = scan_cross_sampled(added, n, m, samples, seed);
    }
    cert.pairs_checked = internal.pairs + cross.pairs;

    if (!internal.ok) {
        cert.pass = false;
        cert.witness_kind = "internal";
        cert.witness_a = internal.bad_a;
        cert.witness_b = internal.bad_b;
        cert.witness_value = Rat(internal.bad_num, n2);
        return cert;
    }
    if (!cross.ok) {
        cert.pass = false;
        cert.witness_kind = "cross";
        cert.witness_a = cross.bad_a;
        cert.witness_b = cross.bad_b;
        cert.witness_value = Rat(cross.bad_num, n2);
        return cert;
    }
    cert.pass = true;
    if (exhaustive) {
        cert.histogram = embedding_histogram(n, m);
        for (const auto& [num, count] : internal.value_counts)
            cert.histogram[Rat(num, n2)] += count;
        for (const auto& [num, count] : cross.value_counts)
            cert.histogram[Rat(num, n2)] += count;
    }
    return cert;
}

namespace {

struct CliqueAssembly {
    std::vector<AssembledComponent> components;
    std::vector<ScaledVector> points;
    std::vector<std::string> notes;
};

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

// Vector-level resolution for cliques with "some"-only pairs: take the union
// of the full classes, drop nothing that conflicts with nothing, and solve an
// exact maximum independent set on the conflict part.
CliqueAssembly resolve_conflicts(const std::vector<CandidateClass>& classes, int n, int m,
                                 const ClassifyOptions& opts) {
    long long n2 = (long long)n * n;
    std::vector<ScaledVector> pts;
    std::vector<int> owner;
    for (size_t c = 0; c < classes.size(); ++c) {
        for (ScaledVector& p : classes[c].enumerate(opts.conflict_cap)) {
            pts.push_back(std::move(p));
            owner.push_back((int)c);
        }
        if ((long long)pts.size() > opts.conflict_cap)
            throw domain_error("conflict resolution exceeds the vector-level cap");
    }

    int total = (int)pts.size();
    std::vector<std::vector<int>> conflicts(total);
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j)
            if (!admissible_num(pair_num(pts[i], pts[j]), n2, m)) {
                conflicts[i].push_back(j);
                conflicts[j].push_back(i);
            }

    std::vector<int> active;
    for (int i = 0; i < total; ++i)
        if (!conflicts[i].empty()) active.push_back(i);

    std::vector<char> keep(total, 1);
    CliqueAssembly out;
    if (!active.empty()) {
        std::vector<int> pos(total, -1);
        for (size_t i = 0; i < active.size(); ++i) pos[active[i]] = (int)i;
        // complement of the conflict graph restricted to active vertices
        BitGraph compat((int)active.size());
        for (size_t i = 0; i < active.size(); ++i) {
            std::set<int> bad(conflicts[active[i]].begin(), conflicts[active[i]].end());
            for (size_t j = i + 1; j < active.size(); ++j)
                if (!bad.count(active[j])) compat.add_edge((int)i, (int)j);
        }
        CliqueResult mis = max_clique(compat, {}, opts.clique_budget);
        if (!mis.proven_optimal)
            out.notes.push_back("conflict resolution hit the search budget; selection may be sub-optimal");
        for (int v : active) keep[v] = 0;
        for (int v : mis.vertices) keep[active[v]] = 1;
    }

    std::vector<long long> chosen(classes.size(), 0);
    for (int i = 0; i < total; ++i)
        if (keep[i]) {
            out.points.push_back(pts[i]);
            chosen[owner[i]] += 1;
        }
    for (size_t c = 0; c < classes.size(); ++c) {
        AssembledComponent comp;
        comp.cls = classes[c];
        comp.chosen = chosen[c];
        comp.certificate = "conflict-resolution";
        out.components.push_back(std::move(comp));
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

} // namespace

ClassificationReport classify(int n, int m, const ClassifyOptions& opts) {
    ClassificationReport report;
    report.n = n;
    report.m = m;
    report.classes = enumerate_addable_classes(n, m);
    report.maximal = report.classes.empty();
    report.largest_total = hamming_count(n, m);
    if (report.maximal) return report;

    CompatibilityGraph graph = build_graph(n, m);
    std::vector<std::vector<int>> cliques = graph.maximal_cliques();
    std::vector<CliqueOrbit> orbits = collapse_block_orbits(graph, cliques);

    for (const CliqueOrbit& orbit : orbits) {
        std::vector<std::string> names;
        std::vector<CandidateClass> members;
        for (int v : orbit.representative) {
            names.push_back(graph.vertices[v].str());
            members.push_back(graph.vertices[v]);
        }
        report.clique_orbits.push_back(names);
        report.clique_orbit_sizes.push_back(orbit.orbit_size);

        bool some_only = false;
        for (size_t i = 0; i < members.size() && !some_only; ++i)
            for (size_t j = i + 1; j < members.size() && !some_only; ++j)
                if (pair_compatible(members[i], members[j]) == Compat::some) some_only = true;

        CliqueAssembly asmb;
        if (!some_only) {
            for (const CandidateClass& cls : members) {
                BoundedSubset sub = largest_bounded_subset(cls, opts.clique_budget);
                AssembledComponent comp;
                comp.cls = cls;
                comp.chosen = (long long)sub.size;
                comp.certificate = sub.certificate;
                comp.alternatives = sub.alternatives;
                asmb.components.push_back(std::move(comp));
                asmb.points.insert(asmb.points.end(), sub.points.begin(), sub.points.end());
            }
            std::sort(asmb.points.begin(), asmb.points.end());
        } else {
            asmb = resolve_conflicts(members, n, m, opts);
        }

        AssembledSet set;
        set.n = n;
        set.m = m;
        set.components = std::move(asmb.components);
        set.points = std::move(asmb.points);
        set.added = (long long)set.points.size();
        set.total = hamming_count(n, m) + set.added;
        set.orbit_size = orbit.orbit_size;
        set.verification =
            verify_union(set.points, n, m, opts.verify_full, opts.parallel, opts.samples);
        if (!set.verification.pass) {
            std::string msg = "assembled union failed verification (" +
                              set.verification.witness_kind + " pair " +
                              std::to_string(set.verification.witness_a) + "," +
                              std::to_string(set.verification.witness_b) + " at d^2=" +
                              set.verification.witness_value.str() + ")";
            throw domain_error(msg);
        }
        for (const std::string& note : asmb.notes) report.notes.push_back(note);
        report.largest_total = std::max(report.largest_total, set.total);
        report.assembled.push_back(std::move(set));
    }

    std::sort(report.assembled.begin(), report.assembled.end(),
              [](const AssembledSet& a, const AssembledSet& b) { return a.total > b.total; });
    return report;
}

long long largest_total(int n, int m, const ClassifyOptions& opts) {
    return classify(n, m, opts).largest_total;
}

} // namespace hds
