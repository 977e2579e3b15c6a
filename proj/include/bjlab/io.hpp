// io.hpp — Number formatting, atomic file output and CSV read/write

#pragma once

#include "bjlab/config.hpp"
#include "bjlab/ode.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace bjlab {

// 17 significant digits, so every double survives a text round trip.
std::string format_number(double v);

// Writes to a sibling temporary file and renames it into place; a failed
// write leaves no file at `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Trajectory CSV: `#` comment lines carrying the config, then the header
// `t,p_s[,p_k{K}...],p_tot`, then one row per sample.
std::string trajectory_csv(const RunConfig& cfg, const Trajectory& traj);

struct CsvTable {
    std::vector<std::string> comments; // without the leading '#'
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // Throws std::out_of_range for an unknown column name.
    std::vector<double> column(const std::string& name) const;
};

// Parses numeric CSV produced by this library. Comment lines start with '#'.
CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);

} // namespace bjlab
