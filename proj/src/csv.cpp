#include "skinsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skinsim/errors.hpp"

namespace skinsim {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string sim_record_to_csv(const SimRecord& rec) {
    std::string out = "time_s,indent_mm,force_n,voltage_v,output_v\n";
    const std::size_t n = rec.time.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += format_value(rec.time.samples[i]);
        out += ',';
        out += format_value(rec.indent.samples[i]);
        out += ',';
        out += format_value(rec.force.samples[i]);
        out += ',';
        out += format_value(rec.voltage.samples[i]);
        out += ',';
        out += format_value(rec.output.samples[i]);
        out += '\n';
    }
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    f << content;
    if (!f)
        throw IoError("failed while writing " + path);
}

} // namespace

void write_sim_record_csv(const std::string& path, const SimRecord& rec) {
    write_file(path, sim_record_to_csv(rec));
}

bool CsvTable::has_column(const std::string& name) const {
    for (const auto& c : columns)
        if (c == name)
            return true;
    return false;
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return values[i];
    throw DataError("CSV has no column named " + name);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open " + path);

    CsvTable table;
    std::string line;
    if (!std::getline(f, line))
        throw DataError(path + ": empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ','))
        table.columns.push_back(cell);
    if (table.columns.empty())
        throw DataError(path + ": no header columns");
    table.values.resize(table.columns.size());

    std::size_t row = 1;
    while (std::getline(f, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::size_t col = 0;
        while (std::getline(ss, cell, ',')) {
            if (col >= table.columns.size())
                throw DataError(path + ": too many fields on line " + std::to_string(row));
            try {
                table.values[col].push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw DataError(path + ": bad number '" + cell + "' on line " +
                                std::to_string(row));
            }
            ++col;
        }
        if (col != table.columns.size())
            throw DataError(path + ": expected " + std::to_string(table.columns.size()) +
                            " fields on line " + std::to_string(row));
    }
    return table;
}

std::string sweep_to_csv(const std::vector<SweepSample>& samples) {
    std::string out = "distance_mm,voltage_v\n";
    for (const auto& s : samples) {
        out += format_value(s.distance_mm);
        out += ',';
        out += format_value(s.voltage_v);
        out += '\n';
    }
    return out;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepSample>& samples) {
    write_file(path, sweep_to_csv(samples));
}

std::vector<SweepSample> read_sweep_csv(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.columns.size() != 2 || table.columns[0] != "distance_mm" ||
        table.columns[1] != "voltage_v")
        throw DataError(path + ": sweep files need the header distance_mm,voltage_v");
    std::vector<SweepSample> samples;
    const auto& xs = table.values[0];
    const auto& vs = table.values[1];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw DataError(path + ": distances must be strictly increasing");
        samples.push_back({xs[i], vs[i]});
    }
    return samples;
}

} // namespace skinsim
