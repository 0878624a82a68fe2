#include "parlab/matrix.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

namespace parlab {

namespace {

constexpr std::uint32_t kUnowned = std::numeric_limits<std::uint32_t>::max();

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Relabels an owner map by order of first appearance.
std::vector<std::uint32_t> canonical_owners(const Partition& p, std::size_t cells) {
  std::vector<std::uint32_t> remap(p.size(), kUnowned);
  std::vector<std::uint32_t> out(cells);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    auto o = p.owner_flat(i);
    if (remap[o] == kUnowned) remap[o] = next++;
    out[i] = remap[o];
  }
  return out;
}

}  // namespace

InputIndex::InputIndex(Index value, unsigned bits) : value_(value), bits_(bits) {
  if (bits > 31) throw std::invalid_argument("InputIndex: bit-width too large");
  if (value >= (Index{1} << bits)) throw std::invalid_argument("InputIndex: value out of range");
}

InputIndex InputIndex::encode(const std::set<unsigned>& elements, unsigned bits) {
  Index value = 0;
  for (unsigned e : elements) {
    if (e < 1 || e > bits) throw std::invalid_argument("InputIndex: element outside {1..k}");
    value |= Index{1} << (e - 1);
  }
  return {value, bits};
}

std::set<unsigned> InputIndex::decode() const {
  std::set<unsigned> out;
  for (unsigned e = 1; e <= bits_; ++e) {
    if (value_ & (Index{1} << (e - 1))) out.insert(e);
  }
  return out;
}

std::string InputIndex::bitstring() const {
  std::string s(bits_, '0');
  for (unsigned j = 0; j < bits_; ++j) {
    if (value_ & (Index{1} << j)) s[bits_ - 1 - j] = '1';
  }
  return s;
}

ValueMatrix::ValueMatrix(Index rows, Index cols, std::vector<Label> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("ValueMatrix: empty shape");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("ValueMatrix: entry count does not match shape");
  }
  if (rows == cols && (rows & (rows - 1)) == 0) {
    unsigned k = 0;
    while ((Index{1} << k) < rows) ++k;
    bits_ = k;
  }
}

ValueMatrix ValueMatrix::from_function(unsigned k, const std::function<Label(Index, Index)>& f) {
  if (k > 15) throw std::invalid_argument("ValueMatrix: k too large");
  Index n = Index{1} << k;
  std::vector<Label> entries(static_cast<std::size_t>(n) * n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) entries[static_cast<std::size_t>(r) * n + c] = f(r, c);
  }
  return {n, n, std::move(entries)};
}

ValueMatrix ValueMatrix::constant(unsigned k, Label label) {
  return from_function(k, [label](Index, Index) { return label; });
}

Region::Region(std::vector<Cell> cells) : cells_(std::move(cells)) {
  sort_unique(cells_);
  if (cells_.empty()) throw std::invalid_argument("Region: empty region");
}

bool Region::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

Rectangle::Rectangle(std::vector<Index> rows, std::vector<Index> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  sort_unique(rows_);
  sort_unique(cols_);
  if (rows_.empty() || cols_.empty()) throw std::invalid_argument("Rectangle: empty side");
}

bool Rectangle::contains(Cell c) const {
  return std::binary_search(rows_.begin(), rows_.end(), c.row) &&
         std::binary_search(cols_.begin(), cols_.end(), c.col);
}

Region Rectangle::region() const {
  std::vector<Cell> cells;
  cells.reserve(size());
  for (Index r : rows_) {
    for (Index c : cols_) cells.push_back({r, c});
  }
  return Region(std::move(cells));
}

Partition Partition::from_regions(Index rows, Index cols, std::vector<Region> regions,
                                  std::vector<std::string> tags) {
  Partition p;
  p.kind_ = Kind::general;
  p.rows_ = rows;
  p.cols_ = cols;
  p.regions_ = std::move(regions);
  p.tags_ = std::move(tags);
  p.index_cells();
  return p;
}

Partition Partition::from_rectangles(Index rows, Index cols, std::vector<Rectangle> rectangles,
                                     std::vector<std::string> tags) {
  Partition p;
  p.kind_ = Kind::tiling;
  p.rows_ = rows;
  p.cols_ = cols;
  p.regions_.reserve(rectangles.size());
  for (const auto& r : rectangles) p.regions_.push_back(r.region());
  p.rectangles_ = std::move(rectangles);
  p.tags_ = std::move(tags);
  p.index_cells();
  return p;
}

void Partition::index_cells() {
  if (!tags_.empty() && tags_.size() != regions_.size()) {
    throw InvalidPartition("Partition: tag count does not match region count");
  }
  owner_.assign(static_cast<std::size_t>(rows_) * cols_, kUnowned);
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    for (Cell c : regions_[i].cells()) {
      if (c.row >= rows_ || c.col >= cols_) throw InvalidPartition("Partition: cell out of range");
      auto& o = owner_[static_cast<std::size_t>(c.row) * cols_ + c.col];
      if (o != kUnowned) throw InvalidPartition("Partition: regions overlap");
      o = static_cast<std::uint32_t>(i);
    }
  }
  if (std::find(owner_.begin(), owner_.end(), kUnowned) != owner_.end()) {
    throw InvalidPartition("Partition: regions do not cover the matrix");
  }
}

const Rectangle& Partition::rectangle(std::size_t i) const {
  if (kind_ != Kind::tiling) throw std::logic_error("Partition: not a tiling");
  return rectangles_[i];
}

const std::string& Partition::tag(std::size_t i) const {
  if (tags_.empty()) throw std::logic_error("Partition: untagged");
  return tags_[i];
}

bool Partition::same_blocks(const Partition& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || size() != other.size()) return false;
  return canonical_owners(*this, owner_.size()) == canonical_owners(other, owner_.size());
}

bool Partition::same_tagged_blocks(const Partition& other) const {
  if (!same_blocks(other) || has_tags() != other.has_tags()) return false;
  if (!has_tags()) return true;
  for (std::size_t i = 0; i < size(); ++i) {
    auto j = other.owner(regions_[i].cells().front());
    if (tags_[i] != other.tags_[j]) return false;
  }
  return true;
}

Partition ideal_partition(const ValueMatrix& m) {
  std::unordered_map<Label, std::size_t> slot;
  std::vector<std::vector<Cell>> cells;
  for (std::size_t i = 0; i < m.cell_count(); ++i) {
    Label label = m.entries()[i];
    auto [it, inserted] = slot.try_emplace(label, cells.size());
    if (inserted) cells.emplace_back();
    cells[it->second].push_back(m.cell(i));
  }
  std::vector<Region> regions;
  regions.reserve(cells.size());
  for (auto& c : cells) regions.emplace_back(std::move(c));
  return Partition::from_regions(m.rows(), m.cols(), std::move(regions));
}

std::vector<Rectangle> i_partition(const Region& r, Player i) {
  std::map<Index, std::vector<Index>> lines;
  for (Cell c : r.cells()) {
    if (i == Player::one) {
      lines[c.row].push_back(c.col);
    } else {
      lines[c.col].push_back(c.row);
    }
  }
  std::vector<Rectangle> out;
  out.reserve(lines.size());
  for (auto& [key, others] : lines) {
    if (i == Player::one) {
      out.emplace_back(std::vector<Index>{key}, std::move(others));
    } else {
      out.emplace_back(std::move(others), std::vector<Index>{key});
    }
  }
  return out;
}

Partition i_refine(const Partition& p, Player i) {
  std::vector<Rectangle> rects;
  std::vector<std::string> tags;
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (auto& piece : i_partition(p.region(r), i)) {
      rects.push_back(std::move(piece));
      if (p.has_tags()) tags.push_back(p.tag(r));
    }
  }
  return Partition::from_rectangles(p.rows(), p.cols(), std::move(rects), std::move(tags));
}

bool is_monochromatic(const Region& r, const ValueMatrix& m) {
  Label first = m.at(r.cells().front());
  return std::all_of(r.cells().begin(), r.cells().end(),
                     [&](Cell c) { return m.at(c) == first; });
}

bool is_monochromatic(const Rectangle& r, const ValueMatrix& m) {
  Label first = m.at(r.rows().front(), r.cols().front());
  for (Index row : r.rows()) {
    for (Index col : r.cols()) {
      if (m.at(row, col) != first) return false;
    }
  }
  return true;
}

bool is_monochromatic(const Partition& p, const ValueMatrix& m) {
  for (const auto& r : p.regions()) {
    if (!is_monochromatic(r, m)) return false;
  }
  return true;
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.rows() != coarse.rows() || fine.cols() != coarse.cols()) return false;
  for (const auto& r : fine.regions()) {
    auto target = coarse.owner(r.cells().front());
    for (Cell c : r.cells()) {
      if (coarse.owner(c) != target) return false;
    }
  }
  return true;
}

}  // namespace parlab
