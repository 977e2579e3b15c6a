// io.cpp — CSV and file output helpers

#include "bjlab/io.hpp"

#include "bjlab/analysis.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bjlab {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string trajectory_csv(const RunConfig& cfg, const Trajectory& traj) {
    const auto ks = tracked_states(cfg);
    std::vector<std::size_t> cols;
    cols.reserve(ks.size());
    for (int k : ks) cols.push_back(StateIndex::dark(k).position(traj.params));

    std::ostringstream out;
    for (const auto& [key, value] : config_entries(cfg)) out << "# " << key << " = " << value << '\n';
    out << "t,p_s";
    for (int k : ks) out << ",p_k" << k;
    out << ",p_tot\n";
    for (std::size_t j = 0; j < traj.size(); ++j) {
        const auto& x = traj.states[j];
        out << format_number(traj.times[j]) << ',' << format_number(std::norm(x[0]));
        for (auto c : cols) out << ',' << format_number(std::norm(x[c]));
        out << ',' << format_number(total_probability(x)) << '\n';
    }
    return out.str();
}

std::vector<double> CsvTable::column(const std::string& name) const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c] != name) continue;
        std::vector<double> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(r.at(c));
        return out;
    }
    throw std::out_of_range("no CSV column named " + name);
}

namespace {

// Non-numeric cells (status text, empty fields) read as NaN.
double parse_cell(const std::string& cell) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        return used == cell.size() ? v : std::numeric_limits<double>::quiet_NaN();
    } catch (const std::exception&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

} // namespace

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            table.comments.push_back(line.substr(1));
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (table.columns.empty()) {
            table.columns = std::move(cells);
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_cell(c));
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

} // namespace bjlab
