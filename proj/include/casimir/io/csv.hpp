#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

namespace casimir::io {

using CsvCell = std::variant<std::int64_t, double, std::string>;

/// Doubles as %.11e (12 significant digits), integers verbatim, strings as given.
std::string format_cell(const CsvCell& cell);

class CsvWriter {
 public:
  /// Creates parent directories; throws InputError if the file cannot be opened.
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);
  /// Throws PreconditionError if the row width differs from the header.
  void row(const std::vector<CsvCell>& cells);

 private:
  std::ofstream out_;
  std::size_t width_;
};

}  // namespace casimir::io
