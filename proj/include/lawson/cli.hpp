#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lawson/engine.hpp"
#include "lawson/series.hpp"

namespace lawson::cli {

enum class OutputFormat { PlainTable, Json, Csv };

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,  // also usage errors
  kValidationError = 2,
  kUnsupported = 3,
  kChecksFailed = 4,
};

/// Only nonzero ranks are written, sorted by (r, k). `max_r` drops rows r > max_r.
void write_table(std::ostream& os, const EvaluationResult& result, OutputFormat format,
                 std::optional<std::int64_t> max_r = std::nullopt);

/// Rows t^1 .. t^max_t of a series, z^0 .. z^max_z each.
void write_series(std::ostream& os, const TruncatedBiSeries& series, OutputFormat format);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lawson::cli
