#pragma once

#include <iosfwd>
#include <string>

#include "bellsim/counts_table.hpp"
#include "bellsim/simulation.hpp"

namespace bellsim {

/// Shortest decimal form that parses back to exactly the same double
/// ("22.5", "0.125", "96"). Keeps the file formats round-trip exact.
std::string format_number(double v);

/// Strict double parse of a whole field; ParseError carries `line`.
double parse_number(const std::string& field, std::size_t line);

inline constexpr const char* kFormatLine = "# format=1";
inline constexpr const char* kCountsHeader =
    "setting,coincidences,accidentals,singlesA,singlesB";

/// counts.csv: the format line, the fixed header, then one row per setting.
/// Settings are `phi:<degrees>` for relative angles and `z` / `Z` for the
/// polarizer-absent rows. Empty cells stand for absent optional fields.
void write_counts_csv(std::ostream& out, const CountsTable& table);
std::string counts_csv_string(const CountsTable& table);

/// Inverse of write_counts_csv; ParseError (with line number) on malformed
/// input, including a missing or unsupported format line.
CountsTable read_counts_csv(std::istream& in);
CountsTable read_counts_csv_file(const std::string& path);

/// Detector stream as tab-separated (timestamp_ns, truth_tag) rows, where
/// the tag is the emission index or `NOISE` for dark counts.
void write_stream_tsv(std::ostream& out, const DetectionStream& stream);

}  // namespace bellsim
