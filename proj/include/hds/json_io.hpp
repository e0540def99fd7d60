#pragma once

#include <string>
#include <vector>

#include "hds/assembly.hpp"
#include "hds/extended.hpp"

namespace hds {

// Point-set file: {"n", "m", "points": [[numerators...]], "root_points":
// [{"nums": [...], "beta_num", "beta_den", "sign"}]} where the beta fields
// encode the squared extra coordinate.
struct PointSetFile {
    int n = 0;
    int m = 0;
    std::vector<ScaledVector> points;
    std::vector<ExtendedPoint> root_points;
};

std::string write_point_set(const PointSetFile& file);
PointSetFile read_point_set(const std::string& json_text);

std::string report_to_json(const ClassificationReport& report);
std::string extended_to_json(const ExtendedClassification& cls);

// CSV rows n, d = m(n-1), total for the non-maximal n of one m.
std::string report_csv_row(const ClassificationReport& report);

} // namespace hds
