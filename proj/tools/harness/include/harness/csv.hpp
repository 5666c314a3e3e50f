#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ifoi/cases.hpp"

namespace ifoi::harness {

inline constexpr const char* kCsvHeader = "case,method,scheme,n,m,spacing,error,time_s,status";

/// Shortest scientific form that reads back bit-exactly: 17 significant digits.
std::string format_real(double value);

/// One data line (no trailing newline). Alpha fields are blank for FDM rows
/// and the error is blank unless the solve converged.
std::string csv_row(const cases::SolveReport& report);

std::string to_csv(const std::vector<cases::SolveReport>& reports);

/// Writes header plus rows with LF line endings. Throws std::runtime_error on I/O failure.
void write_csv(const std::filesystem::path& path, const std::vector<cases::SolveReport>& reports);

struct CsvRecord {
    std::string case_id;
    std::string method;
    std::string scheme;
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::string spacing;
    std::optional<double> error;
    double time_s = 0.0;
    std::string status;
};

/// Parses text produced by to_csv. Throws std::runtime_error on malformed input.
std::vector<CsvRecord> parse_csv(const std::string& text);

}  // namespace ifoi::harness
