#ifndef SUNDET_REPORTING_HPP
#define SUNDET_REPORTING_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sundet/sun_core.hpp"

namespace sundet {

enum class SweepMode { verify, explore, decompose, composite_audit };
enum class OutputFormat { json_lines, csv };

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0; // inclusive
};

// "a..b" (inclusive) or a single value "a". Throws std::invalid_argument
// on malformed or empty intervals.
Interval parse_interval(const std::string& text);

struct SweepConfig {
    Interval n_range{4, 4};
    Interval c_range{0, 0};
    Interval d_range{0, 0};
    SweepMode mode = SweepMode::verify;
    OutputFormat format = OutputFormat::json_lines;
    std::string output_path; // empty = standard output
    unsigned jobs = 1;
};

// Fixed column order: n,c,d,n_class,symbol_d,hypothesis_met,d_mod_n2,theorem_holds,rank,ms
std::string csv_header();

// One output line (no trailing newline). Residues are serialized as decimal
// strings; symbol_d as one of "-1"/"0"/"1"/"na"; absent rank is null (json)
// or an empty field (csv).
std::string serialize_record(const VerificationRecord& rec, OutputFormat format);

// Inverse of serialize_record for a single line (csv lines without the header).
VerificationRecord parse_record(const std::string& line, OutputFormat format);

// Runs the sweep described by config. Exit status: 0 all assertions held,
// 1 an asserted invariant failed (all records still emitted) or an internal
// check tripped, 2 configuration or output error.
int run_sweep(const SweepConfig& config);
int run_sweep(const SweepConfig& config, std::ostream& out);

} // namespace sundet

#endif // SUNDET_REPORTING_HPP
