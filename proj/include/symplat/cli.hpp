#pragma once

// Command-line front end: each subcommand reads one JSON document and
// writes one report. Exit status 0 on success, 1 on domain errors, 2 on
// usage, I/O, parse and schema errors.

#include "symplat/bounds.hpp"
#include "symplat/error.hpp"
#include "symplat/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace symplat::cli {

enum class Subcommand { disc, dual, reflect, zariski, bound, moduli_bound, walls, chamber, mld };
enum class OutputFormat { json, text };

std::string_view subcommand_name(Subcommand s);

struct RunConfig {
  Subcommand subcommand = Subcommand::disc;
  std::string input_path = "-";
  OutputFormat format = OutputFormat::json;
  std::size_t budget = 1000;           // monodromy orbit size
  std::uint64_t pairing_max = 20;      // enumeration bound on q(x, h)
  std::uint64_t exact_threshold = kDefaultExactThreshold;
  bool color = false;                  // bold keys in text output
};

// The report for one parsed input. Throws Error.
io::Json execute(Subcommand subcommand, const io::Json& input, const RunConfig& config);

// Renders a report in the configured format, newline terminated.
std::string render(const io::Json& report, const RunConfig& config);

// Reads config.input_path, executes, writes the report (or the error
// report) to out, returns the exit status.
int run(const RunConfig& config, std::ostream& out);

// JSON schemas of every subcommand input, keyed by subcommand name.
const io::Json& input_schemas();

int exit_code(ErrorCode code);

// Full argument parsing; used by the symplat executable.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace symplat::cli
