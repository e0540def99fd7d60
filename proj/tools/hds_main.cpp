#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hds/assembly.hpp"
#include "hds/json_io.hpp"
#include "hds/search.hpp"

namespace {

constexpr const char* kVersion = "hds 1.0.0";

struct GlobalOptions {
    int threads = 0;
    std::string format = "text";
    std::string cache_dir;
    std::string verify_level = "fast";
    long long clique_budget = 20; // millions of search nodes
};

hds::ClassifyOptions classify_options(const GlobalOptions& g) {
    hds::ClassifyOptions opts;
    opts.verify_full = g.verify_level == "full";
    opts.clique_budget = (uint64_t)g.clique_budget * 1000000ull;
    return opts;
}

std::string cache_path(const GlobalOptions& g, int n, int m) {
    return g.cache_dir + "/classify_m" + std::to_string(m) + "_n" + std::to_string(n) + "_" +
           g.verify_level + "_v1.json";
}

std::string classify_json_cached(const GlobalOptions& g, int n, int m) {
    if (!g.cache_dir.empty()) {
        std::ifstream in(cache_path(g, n, m));
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }
    std::string json = hds::report_to_json(hds::classify(n, m, classify_options(g)));
    if (!g.cache_dir.empty()) {
        std::filesystem::create_directories(g.cache_dir);
        std::ofstream out(cache_path(g, n, m));
        out << json;
    }
    return json;
}

void print_report_text(const hds::ClassificationReport& r, std::ostream& os) {
    os << "n=" << r.n << " m=" << r.m;
    if (r.maximal) {
        os << ": H(" << r.n << "," << r.m << ") embedding is maximal; total " << r.largest_total
           << "\n";
        return;
    }
    os << ": " << r.classes.size() << " addable classes (up to block position)\n";
    for (const auto& cls : r.classes) os << "  class " << cls.str() << "\n";
    for (size_t i = 0; i < r.clique_orbits.size(); ++i) {
        os << "  clique[" << i << "] (orbit size " << r.clique_orbit_sizes[i] << "):";
        for (const auto& s : r.clique_orbits[i]) os << " " << s;
        os << "\n";
    }
    for (const auto& set : r.assembled) {
        os << "  assembled total " << set.total << " = " << r.n << "^" << r.m << " + " << set.added
           << (set.verification.pass ? " [verified" : " [FAILED")
           << (set.verification.exhaustive ? ", exhaustive]" : ", sampled]") << "\n";
        for (const auto& comp : set.components)
            os << "    " << comp.cls.str() << " -> " << comp.chosen << " (" << comp.certificate
               << ")\n";
    }
    for (const auto& note : r.notes) os << "  note: " << note << "\n";
    os << "  largest total " << r.largest_total << "\n";
}

int run_enumerate(const GlobalOptions& g, int n, int m, bool expanded) {
    (void)g;
    auto classes = hds::enumerate_addable_classes(n, m);
    if (classes.empty()) {
        std::cout << "H(" << n << "," << m << ") embedding is maximal\n";
        return 0;
    }
    for (const auto& cls : classes) {
        bool reduced = true;
        for (const auto& b : cls.blocks)
            if (b.t() > 2) reduced = false;
        if (reduced || expanded)
            std::cout << cls.str() << "  M=" << cls.m_value().str() << (reduced ? "" : "  (expanded)")
                      << "\n";
    }
    return 0;
}

int run_classify(const GlobalOptions& g, int m, int n_opt) {
    std::vector<int> ns;
    if (n_opt > 0) {
        ns.push_back(n_opt);
    } else {
        long long frontier = hds::max_nonmaximal_n(m);
        for (int n = 2; n <= frontier; ++n) ns.push_back(n);
    }
    if (g.format == "csv") std::cout << "n,d,total\n";
    for (int n : ns) {
        if (g.format == "json") {
            std::cout << classify_json_cached(g, n, m);
            continue;
        }
        hds::ClassificationReport r = hds::classify(n, m, classify_options(g));
        if (g.format == "csv") {
            if (!r.maximal) std::cout << hds::report_csv_row(r);
        } else {
            print_report_text(r, std::cout);
        }
    }
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hds::domain_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    hds::PointSetFile file = hds::read_point_set(ss.str());

    if (!file.root_points.empty()) {
        if (file.m != 2) throw hds::domain_error("root points require m = 2");
        std::vector<hds::ExtendedPoint> all;
        for (const auto& p : file.points) all.push_back({p, 1, hds::Rat(0)});
        for (const auto& p : file.root_points) all.push_back(p);
        auto words = hds::embed_hamming(file.n, 2);
        for (size_t i = 0; i < all.size(); ++i) {
            for (const auto& w : words) {
                hds::Rat d = hds::sq_dist(all[i].base, w).reduced() + all[i].beta2;
                if (d != hds::Rat(2) && d != hds::Rat(4)) {
                    std::cout << "FAIL point " << i << " against embedding at d^2=" << d.str()
                              << "\n";
                    return 1;
                }
            }
            for (size_t j = i + 1; j < all.size(); ++j) {
                hds::QuadraticValue d = hds::quad_sq_dist(all[i], all[j]);
                if (!d.equals_rational(hds::Rat(2)) && !d.equals_rational(hds::Rat(4))) {
                    std::cout << "FAIL pair " << i << "," << j << " at d^2=" << d.str() << "\n";
                    return 1;
                }
            }
        }
        std::cout << "PASS " << all.size() << " added points, 2-distance with the embedding\n";
        return 0;
    }

    bool full = g.verify_level == "full";
    hds::VerificationCertificate cert =
        hds::verify_union(file.points, file.n, file.m, full, true);
    if (!cert.pass) {
        std::cout << "FAIL " << cert.witness_kind << " pair (" << cert.witness_a << ","
                  << cert.witness_b << ") at d^2=" << cert.witness_value.str() << "\n";
        return 1;
    }
    std::cout << "PASS " << file.points.size() << " added points ("
              << (cert.exhaustive ? "exhaustive" : "sampled") << ", " << cert.pairs_checked
              << " pairs)";
    if (cert.exhaustive) {
        std::cout << " distances:";
        for (const auto& [v, c] : cert.histogram) std::cout << " " << v.str() << "x" << c;
    }
    std::cout << "\n";
    return 0;
}

int run_section6(const GlobalOptions& g, int n) {
    hds::ExtendedClassification cls = hds::classify_extended(n);
    if (g.format == "json") {
        std::cout << hds::extended_to_json(cls);
        return 0;
    }
    std::cout << "n=" << n << ": " << cls.universe.points.size() << " candidate points\n";
    for (const auto& e : cls.entries) {
        std::cout << "  " << e.name << " [" << e.points.size() << " points]";
        if (e.set_count != 1) std::cout << " (" << e.set_count << " sets, one per pair)";
        std::cout << "\n";
    }
    return 0;
}

int run_tables(const GlobalOptions& g, std::vector<int> ms) {
    if (ms.empty()) ms = {2, 3, 4};
    for (int m : ms) {
        std::cout << "m=" << m << "\nn,d,total\n";
        long long frontier = hds::max_nonmaximal_n(m);
        for (int n = 2; n <= frontier; ++n) {
            hds::ClassificationReport r = hds::classify(n, m, classify_options(g));
            if (!r.maximal) std::cout << hds::report_csv_row(r);
        }
    }
    return 0;
}

int run_bench(const GlobalOptions& g) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    };

    // realistic workload: the largest added set for n=19, m=4
    hds::CandidateClass cls =
        hds::CandidateClass::parse("((15^5,-4^14)^P,1^19,1^19,1^19)/19");
    hds::BoundedSubset sub = hds::largest_bounded_subset(cls);
    std::cout << "workload: " << sub.points.size() << " added points vs 19^4 = "
              << hds::hamming_count(19, 4) << " embedded words\n";

    auto t0 = clock::now();
    hds::ScanOutcome serial_cross = hds::scan_cross_serial(sub.points, 19, 4);
    long long t_serial = ms_since(t0);
    t0 = clock::now();
    hds::ScanOutcome par_cross = hds::scan_cross_parallel(sub.points, 19, 4);
    long long t_par = ms_since(t0);
    bool same = serial_cross.value_counts == par_cross.value_counts &&
                serial_cross.ok == par_cross.ok;
    std::cout << "cross scan   " << serial_cross.pairs << " pairs: serial " << t_serial
              << " ms, openmp(" << omp_get_max_threads() << " threads) " << t_par << " ms"
              << (same ? "" : "  MISMATCH") << "\n";

    t0 = clock::now();
    hds::ScanOutcome serial_int = hds::scan_internal_serial(sub.points, 4);
    long long t_serial_i = ms_since(t0);
    t0 = clock::now();
    hds::ScanOutcome par_int = hds::scan_internal_parallel(sub.points, 4);
    long long t_par_i = ms_since(t0);
    same = serial_int.value_counts == par_int.value_counts && serial_int.ok == par_int.ok;
    std::cout << "internal scan " << serial_int.pairs << " pairs: serial " << t_serial_i
              << " ms, openmp " << t_par_i << " ms" << (same ? "" : "  MISMATCH") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact search for maximal few-distance sets containing Hamming configurations"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--threads", g.threads, "worker threads (0 = all)")->envname("HDS_THREADS");
    app.add_option("--format", g.format, "output format: text|json|csv")
        ->envname("HDS_FORMAT")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache-dir", g.cache_dir, "cache directory for classification results")
        ->envname("HDS_CACHE_DIR");
    app.add_option("--verify", g.verify_level, "verification level: fast|full")
        ->envname("HDS_VERIFY")
        ->check(CLI::IsMember({"fast", "full"}));
    app.add_option("--clique-budget", g.clique_budget,
                   "clique solver budget in millions of search nodes")
        ->envname("HDS_CLIQUE_BUDGET");

    int n = 0, m = 0;
    bool expanded = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "list addable classes for (n, m)");
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_option("--m", m)->required();
    cmd_enum->add_flag("--expanded", expanded, "include classes with three or more levels");

    int cls_n = 0, cls_m = 0;
    auto* cmd_classify = app.add_subcommand("classify", "full classification for one m");
    cmd_classify->add_option("--m", cls_m)->required();
    cmd_classify->add_option("--n", cls_n, "restrict to one n");

    std::string verify_file;
    auto* cmd_verify = app.add_subcommand("verify", "verify a point-set file");
    cmd_verify->add_option("file", verify_file)->required();

    int s6_n = 0;
    auto* cmd_s6 = app.add_subcommand("section6", "codimension-one 2-distance classification");
    cmd_s6->add_option("--n", s6_n)->required();

    std::vector<int> table_ms;
    auto* cmd_tables = app.add_subcommand("tables", "emit the summary tables as CSV");
    cmd_tables->add_option("--m", table_ms, "values of m (default 2 3 4)");

    auto* cmd_bench = app.add_subcommand("bench", "compare serial and OpenMP kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (g.threads > 0) omp_set_num_threads(g.threads);

    try {
        if (cmd_enum->parsed()) return run_enumerate(g, n, m, expanded);
        if (cmd_classify->parsed()) return run_classify(g, cls_m, cls_n);
        if (cmd_verify->parsed()) return run_verify(g, verify_file);
        if (cmd_s6->parsed()) return run_section6(g, s6_n);
        if (cmd_tables->parsed()) return run_tables(g, table_ms);
        if (cmd_bench->parsed()) return run_bench(g);
    } catch (const hds::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hds::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
