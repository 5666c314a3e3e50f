#include "harness/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace ifoi::harness {

std::string format_real(double value) { return fmt::format("{:.16e}", value); }

std::string csv_row(const cases::SolveReport& r) {
    const bool is_ifoi = r.method == cases::Method::ifoi;
    return fmt::format("{},{},{},{},{},{},{},{},{}", cases::to_string(r.id),
                       cases::to_string(r.method),
                       is_ifoi ? std::string(fracops::to_string(r.params.scheme)) : "",
                       r.params.n, is_ifoi ? std::to_string(r.params.m) : "",
                       is_ifoi ? std::string(to_string(r.params.spacing)) : "",
                       r.sup_error ? format_real(*r.sup_error) : "", format_real(r.wall_time),
                       cases::to_string(r.status));
}

std::string to_csv(const std::vector<cases::SolveReport>& reports) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : reports) {
        out += csv_row(r);
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const std::vector<cases::SolveReport>& reports) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    file << to_csv(reports);
    if (!file) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

double parse_real(const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw std::runtime_error("bad real '" + text + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& text) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw std::runtime_error("bad integer '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<CsvRecord> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("missing or unexpected CSV header");
    }
    std::vector<CsvRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 9) {
            throw std::runtime_error("expected 9 fields, got " + std::to_string(f.size()));
        }
        CsvRecord r;
        r.case_id = f[0];
        r.method = f[1];
        r.scheme = f[2];
        r.n = parse_count(f[3]);
        if (!f[4].empty()) r.m = parse_count(f[4]);
        r.spacing = f[5];
        if (!f[6].empty()) r.error = parse_real(f[6]);
        r.time_s = parse_real(f[7]);
        r.status = f[8];
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace ifoi::harness
