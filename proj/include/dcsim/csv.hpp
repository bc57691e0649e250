#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dcsim {

/// In-memory CSV table with a fixed header. Cells are preformatted text.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }

  /// Throws std::invalid_argument if the cell count differs from the header.
  void add_row(std::vector<std::string> cells);

  /// Comma separated, '\n' terminated lines, header first.
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes `contents` to a sibling temporary file, then renames it over
/// `path`, so readers never observe a partial file. Creates parent dirs.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace dcsim
