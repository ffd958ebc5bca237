#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bisect/rational.hpp"

namespace bisect::cli {

// Exit codes are a stable contract.
inline constexpr int exit_ok = 0;               // success / Constructible
inline constexpr int exit_internal_failure = 1; // a machine-checked identity failed
inline constexpr int exit_usage = 2;            // bad flags or malformed q
inline constexpr int exit_not_constructible = 3;

enum class output_format { text, json, csv };

struct config {
    std::string q_input;                          // rational text or "symbolic"
    rat eps = rat(bigint(1), pow10(12)); // refinement width
    int digits = 12;                              // decimal display digits
    output_format format = output_format::text;
    std::uint64_t seed = 1729;
    rat s_min;
    rat s_max;
    rat s_step;
};

int cmd_analyze(const config& cfg, std::ostream& out, std::ostream& err);
int cmd_solve(const config& cfg, std::ostream& out, std::ostream& err);
int cmd_derive(const config& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const config& cfg, std::ostream& out, std::ostream& err);
int cmd_selftest(const config& cfg, std::ostream& out, std::ostream& err);

/// Parses flags (BISECTORC_FORMAT overrides the default format, --out
/// redirects the report to a file) and dispatches. args excludes the
/// program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

} // namespace bisect::cli
