#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lowsnr {

/// Serialize with 12 significant digits, '.' decimal, no locale surprises.
std::string format_sig12(double v);

/// A cell is either a number (rendered via format_sig12) or empty.
using CsvCell = std::optional<double>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
};

/// UTF-8, comma-separated, header row, LF line endings.
std::string to_csv(const CsvTable& table);

/// Parse CSV emitted by to_csv; ParsedCsv round-trips byte-identically.
struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
ParsedCsv parse_csv(const std::string& text);
std::string serialize_csv(const ParsedCsv& parsed);

}  // namespace lowsnr
