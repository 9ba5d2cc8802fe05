#include "noosphere/pattern_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace noosphere {

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Grid parse_pattern(std::string_view text, Boundary boundary) {
  struct Row {
    std::size_t line;
    std::string cells;
  };
  std::vector<Row> rows;
  std::size_t trailing_blank_line = 0;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '!') continue;
    if (is_blank(line)) {
      if (!rows.empty() && trailing_blank_line == 0) trailing_blank_line = lineno;
      continue;
    }
    if (trailing_blank_line != 0) {
      throw ParseError(trailing_blank_line, "blank line inside pattern");
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '.' && line[i] != '#') {
        throw ParseError(lineno, "unexpected character '" + std::string(1, line[i]) +
                                     "' at column " + std::to_string(i + 1));
      }
    }
    if (!rows.empty() && line.size() != rows.front().cells.size()) {
      throw ParseError(lineno, "row has " + std::to_string(line.size()) + " cells, expected " +
                                   std::to_string(rows.front().cells.size()));
    }
    rows.push_back({lineno, std::string(line)});
  }
  if (rows.empty()) throw ParseError(lineno, "pattern has no rows");

  Grid grid = boundary == Boundary::kToroidal
                  ? Grid::toroidal(rows.front().cells.size(), rows.size())
                  : Grid::unbounded();
  std::vector<Cell> live;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].cells.size(); ++c) {
      if (rows[r].cells[c] == '#') {
        live.push_back({static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)});
      }
    }
  }
  if (boundary == Boundary::kUnbounded) return Grid::unbounded(std::move(live));
  for (const auto& c : live) grid.set(c.row, c.col);
  return grid;
}

Grid read_pattern_file(const std::filesystem::path& path, Boundary boundary) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open pattern file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pattern(buf.str(), boundary);
}

std::string format_pattern(const Grid& grid) {
  std::int64_t top = 0, left = 0, rows = 0, cols = 0;
  if (grid.is_toroidal()) {
    rows = static_cast<std::int64_t>(grid.height());
    cols = static_cast<std::int64_t>(grid.width());
  } else {
    const auto box = grid.bounds();
    top = box.top;
    left = box.left;
    rows = box.height();
    cols = box.width();
  }
  std::string out;
  out.reserve(static_cast<std::size_t>(rows * (cols + 1)));
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) out += grid.alive(top + r, left + c) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace noosphere
