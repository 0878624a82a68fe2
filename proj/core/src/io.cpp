#include "parlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace parlab {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Data rows of a CSV with the given header; blank lines are skipped.
std::vector<std::vector<std::string>> read_rows(const std::string& text, const std::string& header) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool seen_header = false;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) throw FormatError("expected header '" + header + "', got '" + line + "'");
      seen_header = true;
      continue;
    }
    auto fields = split_fields(line);
    auto expected = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
    if (fields.size() != expected) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected) +
                        " fields");
    }
    rows.push_back(std::move(fields));
  }
  if (!seen_header) throw FormatError("missing header '" + header + "'");
  return rows;
}

template <typename T>
T parse_uint(const std::string& s, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw FormatError(std::string("bad ") + what + ": '" + s + "'");
  }
  return value;
}

void check_cell(Index row, Index col, Index rows, Index cols) {
  if (row >= rows || col >= cols) {
    throw FormatError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") outside " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
}

// Groups cells by region id in id order; keeps one tag per region.
struct Grouped {
  std::vector<std::vector<Cell>> cells;
  std::vector<std::string> tags;
};

Grouped group(const std::vector<std::vector<std::string>>& rows, Index nrows, Index ncols, bool tagged) {
  std::map<std::uint64_t, std::size_t> slot;
  Grouped g;
  for (const auto& f : rows) {
    auto id = parse_uint<std::uint64_t>(f[0], "region id");
    Cell c{parse_uint<Index>(f[1], "row"), parse_uint<Index>(f[2], "col")};
    check_cell(c.row, c.col, nrows, ncols);
    auto [it, fresh] = slot.emplace(id, g.cells.size());
    if (fresh) {
      g.cells.emplace_back();
      if (tagged) g.tags.push_back(f[3]);
    } else if (tagged && g.tags[it->second] != f[3]) {
      throw FormatError("region " + f[0] + " has two transcripts");
    }
    g.cells[it->second].push_back(c);
  }
  // Reorder by id so that output order does not depend on line order.
  Grouped sorted;
  for (const auto& [id, i] : slot) {
    sorted.cells.push_back(std::move(g.cells[i]));
    if (tagged) sorted.tags.push_back(std::move(g.tags[i]));
  }
  return sorted;
}

std::optional<Rectangle> as_rectangle(const std::vector<Cell>& cells) {
  std::set<Index> rows;
  std::set<Index> cols;
  std::set<Cell> unique(cells.begin(), cells.end());
  for (Cell c : unique) {
    rows.insert(c.row);
    cols.insert(c.col);
  }
  if (rows.size() * cols.size() != unique.size()) return std::nullopt;
  return Rectangle({rows.begin(), rows.end()}, {cols.begin(), cols.end()});
}

Partition build(Grouped g, Index rows, Index cols) {
  std::vector<Rectangle> rects;
  for (const auto& cells : g.cells) {
    auto r = as_rectangle(cells);
    if (!r) break;
    rects.push_back(std::move(*r));
  }
  try {
    if (rects.size() == g.cells.size()) return Partition::from_rectangles(rows, cols, std::move(rects), g.tags);
    std::vector<Region> regions;
    for (auto& cells : g.cells) regions.emplace_back(std::move(cells));
    return Partition::from_regions(rows, cols, std::move(regions), g.tags);
  } catch (const InvalidPartition& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

std::string matrix_csv(const ValueMatrix& m) {
  std::ostringstream os;
  os << "row,col,label\n";
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) os << r << ',' << c << ',' << m.at(r, c) << '\n';
  }
  return os.str();
}

ValueMatrix parse_matrix_csv(const std::string& text) {
  auto rows = read_rows(text, "row,col,label");
  if (rows.empty()) throw FormatError("matrix has no cells");
  std::map<Cell, Label> cells;
  Index nrows = 0;
  Index ncols = 0;
  for (const auto& f : rows) {
    Cell c{parse_uint<Index>(f[0], "row"), parse_uint<Index>(f[1], "col")};
    if (!cells.emplace(c, parse_uint<Label>(f[2], "label")).second) {
      throw FormatError("cell (" + f[0] + "," + f[1] + ") listed twice");
    }
    nrows = std::max(nrows, c.row + 1);
    ncols = std::max(ncols, c.col + 1);
  }
  if (cells.size() != static_cast<std::size_t>(nrows) * ncols) throw FormatError("matrix has missing cells");
  std::vector<Label> entries;
  entries.reserve(cells.size());
  for (const auto& [c, label] : cells) entries.push_back(label);
  return ValueMatrix(nrows, ncols, std::move(entries));
}

std::string partition_csv(const Partition& p) {
  std::ostringstream os;
  os << "region_id,row,col\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (Cell c : p.region(i).cells()) os << i << ',' << c.row << ',' << c.col << '\n';
  }
  return os.str();
}

Partition parse_partition_csv(const std::string& text, Index rows, Index cols) {
  return build(group(read_rows(text, "region_id,row,col"), rows, cols, false), rows, cols);
}

std::string tiling_csv(const Partition& t, const ValueMatrix& m) {
  std::ostringstream os;
  os << "region_id,row,col,transcript,outcome\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string tag = t.has_tags() ? t.tag(i) : "";
    for (Cell c : t.region(i).cells()) os << i << ',' << c.row << ',' << c.col << ',' << tag << ',' << m.at(c) << '\n';
  }
  return os.str();
}

Partition parse_tiling_csv(const std::string& text, Index rows, Index cols) {
  auto data = read_rows(text, "region_id,row,col,transcript,outcome");
  for (const auto& f : data) parse_uint<Label>(f[4], "outcome");
  return build(group(data, rows, cols, true), rows, cols);
}

Distribution parse_distribution_csv(const std::string& text, Index rows, Index cols, std::string id) {
  auto data = read_rows(text, "row,col,num,den");
  std::vector<Rational> weights(static_cast<std::size_t>(rows) * cols, Rational(0));
  std::vector<bool> seen(weights.size(), false);
  for (const auto& f : data) {
    auto r = parse_uint<Index>(f[0], "row");
    auto c = parse_uint<Index>(f[1], "col");
    check_cell(r, c, rows, cols);
    auto i = static_cast<std::size_t>(r) * cols + c;
    if (seen[i]) throw FormatError("cell (" + f[0] + "," + f[1] + ") listed twice");
    seen[i] = true;
    Rational w;
    try {
      w = parse_rational(f[2] + "/" + f[3]);
    } catch (const std::exception&) {
      throw FormatError("bad weight " + f[2] + "/" + f[3]);
    }
    weights[i] = w;
  }
  try {
    return Distribution::from_weights(rows, cols, std::move(weights), std::move(id));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string ascii_tiling(const Partition& t) {
  if (!t.has_tags()) throw std::invalid_argument("ascii_tiling: tiling carries no transcripts");
  std::size_t width = 1;
  for (std::size_t i = 0; i < t.size(); ++i) width = std::max(width, t.tag(i).size());
  std::ostringstream os;
  for (Index r = 0; r < t.rows(); ++r) {
    for (Index c = 0; c < t.cols(); ++c) {
      std::string tag = t.tag(t.owner({r, c}));
      if (tag.empty()) tag = "-";
      if (c > 0) os << ' ';
      os << tag;
      if (c + 1 < t.cols()) os << std::string(width - tag.size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace parlab
