#pragma once

#include <string>
#include <vector>

#include "skinsim/calibrate.hpp"
#include "skinsim/optics.hpp"
#include "skinsim/scenarios.hpp"

namespace skinsim {

/// Value formatted with 9 significant digits (%.9g).
std::string format_value(double v);

/// Record serialized with the normative header
/// time_s,indent_mm,force_n,voltage_v,output_v and one row per sample.
std::string sim_record_to_csv(const SimRecord& rec);
void write_sim_record_csv(const std::string& path, const SimRecord& rec);

/// Simple column table for reading CSV logs back.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values; ///< values[c][row]

    bool has_column(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;
    std::size_t rows() const { return values.empty() ? 0 : values.front().size(); }
};

CsvTable read_csv(const std::string& path);

/// Sweep file: header distance_mm,voltage_v, strictly increasing distances.
std::string sweep_to_csv(const std::vector<SweepSample>& samples);
void write_sweep_csv(const std::string& path, const std::vector<SweepSample>& samples);
std::vector<SweepSample> read_sweep_csv(const std::string& path);

} // namespace skinsim
