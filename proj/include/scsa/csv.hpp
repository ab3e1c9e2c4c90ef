#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "scsa/signal.hpp"

namespace scsa {

/// Shortest decimal that parses back to the same double.
std::string format_number(double value);

/// Reads a two-column `t,y` file (header line first). The time column must be
/// uniformly spaced; its spacing becomes the signal's delta.
Signal read_signal_csv(const std::filesystem::path& path);

/// Writes `t,<value_name>` with one row per sample.
void write_signal_csv(const std::filesystem::path& path, const Signal& y,
                      std::string_view value_name = "y");

/// Writes a header plus rows of pre-formatted cells.
void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

}  // namespace scsa
