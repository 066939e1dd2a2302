#include "lowsnr/csv.hpp"

#include <cstdio>

namespace lowsnr {

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += format_sig12(*row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

ParsedCsv parse_csv(const std::string& text) {
  ParsedCsv out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    const std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty() && pos >= text.size()) break;
    if (first) {
      out.header = split_line(line);
      first = false;
    } else {
      out.rows.push_back(split_line(line));
    }
  }
  return out;
}

std::string serialize_csv(const ParsedCsv& parsed) {
  std::string out;
  for (std::size_t i = 0; i < parsed.header.size(); ++i) {
    if (i) out += ',';
    out += parsed.header[i];
  }
  out += '\n';
  for (const auto& row : parsed.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace lowsnr
