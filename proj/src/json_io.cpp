#include "hds/json_io.hpp"

#include <json.hpp>

namespace hds {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string write_point_set(const PointSetFile& file) {
    ordered_json j;
    j["n"] = file.n;
    j["m"] = file.m;
    j["points"] = json::array();
    for (const ScaledVector& p : file.points) j["points"].push_back(p.nums);
    j["root_points"] = json::array();
    for (const ExtendedPoint& p : file.root_points) {
        ordered_json rp;
        rp["nums"] = p.base.nums;
        rp["beta_num"] = p.beta2.num;
        rp["beta_den"] = p.beta2.den;
        rp["sign"] = p.sign;
        j["root_points"].push_back(rp);
    }
    return j.dump(2) + "\n";
}

PointSetFile read_point_set(const std::string& json_text) {
    json j = json::parse(json_text);
    PointSetFile file;
    file.n = j.at("n").get<int>();
    file.m = j.at("m").get<int>();
    if (j.contains("points"))
        for (const auto& row : j.at("points"))
            file.points.push_back(ScaledVector(file.n, file.m, row.get<std::vector<int>>()));
    if (j.contains("root_points")) {
        for (const auto& rp : j.at("root_points")) {
            ExtendedPoint p;
            p.base = ScaledVector(file.n, 2, rp.at("nums").get<std::vector<int>>());
            p.beta2 = Rat(rp.at("beta_num").get<long long>(), rp.at("beta_den").get<long long>());
            p.sign = rp.at("sign").get<int>();
            if (p.beta2.is_negative()) throw domain_error("negative squared extra coordinate");
            if (p.beta2.is_zero()) p.sign = 1;
            file.root_points.push_back(std::move(p));
        }
    }
    return file;
}

namespace {

ordered_json certificate_json(const VerificationCertificate& cert) {
    ordered_json v;
    v["pass"] = cert.pass;
    v["exhaustive"] = cert.exhaustive;
    v["pairs_checked"] = cert.pairs_checked;
    if (cert.pass) {
        if (cert.exhaustive) {
            ordered_json hist = json::array();
            for (const auto& [value, count] : cert.histogram) {
                ordered_json item;
                item["sq_dist"] = value.str();
                item["pairs"] = count;
                hist.push_back(item);
            }
            v["histogram"] = hist;
        }
    } else {
        v["witness_kind"] = cert.witness_kind;
        v["witness_a"] = cert.witness_a;
        v["witness_b"] = cert.witness_b;
        v["witness_sq_dist"] = cert.witness_value.str();
    }
    return v;
}

} // namespace

std::string report_to_json(const ClassificationReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["maximal"] = report.maximal;
    j["classes"] = json::array();
    for (const CandidateClass& cls : report.classes) j["classes"].push_back(cls.str());
    j["cliques"] = json::array();
    for (size_t i = 0; i < report.clique_orbits.size(); ++i) {
        ordered_json c;
        c["members"] = report.clique_orbits[i];
        c["orbit_size"] = report.clique_orbit_sizes[i];
        j["cliques"].push_back(c);
    }
    j["assembled"] = json::array();
    for (const AssembledSet& set : report.assembled) {
        ordered_json a;
        a["components"] = json::array();
        for (const AssembledComponent& comp : set.components) {
            ordered_json c;
            c["class"] = comp.cls.str();
            c["chosen"] = comp.chosen;
            c["certificate"] = comp.certificate;
            if (!comp.alternatives.empty()) c["alternatives"] = comp.alternatives;
            a["components"].push_back(c);
        }
        a["added"] = set.added;
        a["total"] = set.total;
        a["verified"] = set.verification.pass;
        a["verification"] = certificate_json(set.verification);
        j["assembled"].push_back(a);
    }
    j["largest_total"] = report.largest_total;
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

std::string extended_to_json(const ExtendedClassification& cls) {
    ordered_json j;
    j["n"] = cls.universe.n;
    j["candidates"] = (long long)cls.universe.points.size();
    j["entries"] = json::array();
    for (const ExtendedEntry& e : cls.entries) {
        ordered_json item;
        item["name"] = e.name;
        item["points"] = (long long)e.points.size();
        if (e.set_count != 1) {
            item["set_count"] = e.set_count;
            item["pair_count"] = e.pair_count;
        }
        ordered_json reps = json::array();
        for (int v : e.points) {
            const ExtendedPoint& p = cls.universe.points[v];
            ordered_json rp;
            rp["nums"] = p.base.nums;
            rp["beta_num"] = p.beta2.num;
            rp["beta_den"] = p.beta2.den;
            rp["sign"] = p.sign;
            reps.push_back(rp);
        }
        item["representative"] = reps;
        j["entries"].push_back(item);
    }
    return j.dump(2) + "\n";
}

std::string report_csv_row(const ClassificationReport& report) {
    return std::to_string(report.n) + "," + std::to_string((long long)report.m * (report.n - 1)) +
           "," + std::to_string(report.largest_total) + "\n";
}

} // namespace hds
