#include "qdom/io.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qdom {

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

Orientation parse_orientation(const std::string& name) {
    if (name == "maximize" || name == "max") return Orientation::Maximize;
    if (name == "minimize" || name == "min") return Orientation::Minimize;
    throw std::invalid_argument("unknown orientation: " + name);
}

std::string orientation_name(Orientation o) {
    return o == Orientation::Maximize ? "maximize" : "minimize";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_number(const std::string& s, const std::string& path) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(path + ": not a number: '" + s + "'");
    }
}

}  // namespace

SampleSet read_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    SampleSet set;
    set.label = std::filesystem::path(path).stem().string();

    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument(path + ": empty file");
    std::size_t d = split_csv_line(line).size();

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != d)
            throw std::invalid_argument(path + ": ragged row");
        Vec p;
        p.reserve(d);
        for (const auto& f : fields) p.push_back(parse_number(f, path));
        set.points.push_back(std::move(p));
    }
    return set;
}

SampleSet read_samples_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    in >> j;
    SampleSet set;
    set.label = j.value("label", std::filesystem::path(path).stem().string());
    if (j.contains("orientation")) set.orientation = parse_orientation(j.at("orientation"));
    for (const auto& row : j.at("points")) set.points.push_back(row.get<Vec>());
    return set;
}

SampleSet read_samples(const std::string& path) {
    return std::filesystem::path(path).extension() == ".json" ? read_samples_json(path)
                                                              : read_samples_csv(path);
}

void write_samples_csv(const SampleSet& set, std::ostream& out) {
    int d = set.dimension();
    for (int c = 0; c < d; ++c) out << (c ? "," : "") << "f" << c;
    out << "\n";
    for (const auto& p : set.points) {
        for (int c = 0; c < d; ++c) out << (c ? "," : "") << format_double(p[c]);
        out << "\n";
    }
}

void write_grid_csv(const AugmentedGrid& grid, std::ostream& out) {
    out << "k,radius,dir_index";
    for (int c = 0; c < grid.spec.d; ++c) out << ",x" << c;
    out << "\n";
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        int idx = static_cast<int>(i);
        out << grid.shell_of(idx) << "," << format_double(grid.radius_of(idx)) << ","
            << grid.direction_of(idx);
        for (double x : grid.points[i]) out << "," << format_double(x);
        out << "\n";
    }
}

void write_map_csv(const EmpiricalCOMap& map, std::ostream& out) {
    int d = map.grid().spec.d;
    out << "sample_index,rank";
    for (int c = 0; c < d; ++c) out << ",sign_" << c;
    out << ",grid_index\n";
    for (int i = 0; i < map.size(); ++i) {
        out << i << "," << map.rank(i);
        for (double s : map.sign(i)) out << "," << format_double(s);
        out << "," << map.grid_index_of(i) << "\n";
    }
}

void write_history_csv(const std::vector<RunHistory>& replications, std::ostream& out) {
    out << "replication,generation,evaluations,delta_hv\n";
    for (std::size_t r = 0; r < replications.size(); ++r)
        for (const auto& row : replications[r].rows)
            out << r << "," << row.generation << "," << row.evaluations << ","
                << format_double(row.delta_hv) << "\n";
}

}  // namespace qdom
