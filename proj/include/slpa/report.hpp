#pragma once

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace slpa {

/// One metric measurement with run provenance; empty fields print blank.
struct MetricRow {
    std::string metric;
    std::optional<double> value; // nullopt: score undefined for this input
    std::string run_id;
    std::string r;
    std::string iterations;
    std::string seed;
};

inline void write_metric_csv(const std::vector<MetricRow>& rows, std::ostream& out,
                             const std::vector<std::string>& header_comments = {}) {
    for (const auto& comment : header_comments) out << "# " << comment << '\n';
    out << "metric,value,run_id,r,T,seed\n";
    out << std::setprecision(12);
    for (const auto& row : rows) {
        out << row.metric << ',';
        if (row.value)
            out << *row.value;
        else
            out << "undefined";
        out << ',' << row.run_id << ',' << row.r << ',' << row.iterations << ',' << row.seed
            << '\n';
    }
}

inline void write_metric_summary(const std::vector<MetricRow>& rows, std::ostream& out) {
    std::size_t name_width = 8;
    for (const auto& row : rows) name_width = std::max(name_width, row.metric.size());
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << "metric"
        << std::setw(16) << "value" << "run\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(static_cast<int>(name_width) + 2) << row.metric;
        if (row.value)
            out << std::setw(16) << std::setprecision(6) << *row.value;
        else
            out << std::setw(16) << "undefined";
        out << row.run_id << '\n';
    }
}

/// Mean and sample standard deviation (0 for a single value).
inline std::pair<double, double> mean_stddev(const std::vector<double>& values) {
    if (values.empty()) return {0.0, 0.0};
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    if (values.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

} // namespace slpa
