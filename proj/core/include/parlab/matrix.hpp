#ifndef PARLAB_MATRIX_HPP
#define PARLAB_MATRIX_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parlab {

using Index = std::uint32_t;
using Label = std::uint64_t;

enum class Player { one = 1, two = 2 };

inline Player other(Player p) { return p == Player::one ? Player::two : Player::one; }

// A k-bit encoding of a subset of {1..k}: element j is bit j-1, so the most
// significant bit stands for element k and 1011 encodes {1,2,4}.
class InputIndex {
 public:
  InputIndex(Index value, unsigned bits);

  static InputIndex encode(const std::set<unsigned>& elements, unsigned bits);
  std::set<unsigned> decode() const;

  Index value() const { return value_; }
  unsigned bits() const { return bits_; }
  // MSB first, e.g. "1011".
  std::string bitstring() const;

  friend bool operator==(const InputIndex&, const InputIndex&) = default;

 private:
  Index value_;
  unsigned bits_;
};

struct Cell {
  Index row;
  Index col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// The outcome matrix A(f): rows are player 1's inputs, columns player 2's.
class ValueMatrix {
 public:
  ValueMatrix(Index rows, Index cols, std::vector<Label> entries);

  // 2^k x 2^k matrix with entry f(row, col).
  static ValueMatrix from_function(unsigned k, const std::function<Label(Index, Index)>& f);
  static ValueMatrix constant(unsigned k, Label label);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t cell_count() const { return entries_.size(); }
  // Bit-width k when the matrix is 2^k x 2^k, otherwise nullopt.
  std::optional<unsigned> bits() const { return bits_; }

  Label at(Index row, Index col) const { return entries_[flat(row, col)]; }
  Label at(Cell c) const { return at(c.row, c.col); }
  std::size_t flat(Index row, Index col) const {
    return static_cast<std::size_t>(row) * cols_ + col;
  }
  Cell cell(std::size_t flat_index) const {
    return {static_cast<Index>(flat_index / cols_), static_cast<Index>(flat_index % cols_)};
  }
  std::span<const Label> entries() const { return entries_; }

  friend bool operator==(const ValueMatrix&, const ValueMatrix&) = default;

 private:
  Index rows_;
  Index cols_;
  std::vector<Label> entries_;
  std::optional<unsigned> bits_;
};

// Any nonempty set of cells. Cells are kept sorted row-major.
class Region {
 public:
  explicit Region(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(Cell c) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Cell> cells_;
};

// rows x cols, both nonempty; index sets are kept sorted.
class Rectangle {
 public:
  Rectangle(std::vector<Index> rows, std::vector<Index> cols);

  std::span<const Index> rows() const { return rows_; }
  std::span<const Index> cols() const { return cols_; }
  std::size_t size() const { return rows_.size() * cols_.size(); }
  bool contains(Cell c) const;
  Region region() const;
  Rectangle transposed() const { return {cols_, rows_}; }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  std::vector<Index> rows_;
  std::vector<Index> cols_;
};

class InvalidPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A partition of a rows x cols matrix into disjoint regions covering every
 * cell. A `tiling` additionally knows each region as a Rectangle.
 *
 * Regions may carry a string tag; protocol-induced tilings use it for the
 * transcript. Construction validates disjointness and coverage and throws
 * InvalidPartition otherwise.
 */
class Partition {
 public:
  enum class Kind { general, tiling };

  static Partition from_regions(Index rows, Index cols, std::vector<Region> regions,
                                std::vector<std::string> tags = {});
  static Partition from_rectangles(Index rows, Index cols, std::vector<Rectangle> rectangles,
                                   std::vector<std::string> tags = {});

  Kind kind() const { return kind_; }
  bool is_tiling() const { return kind_ == Kind::tiling; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t size() const { return regions_.size(); }

  const Region& region(std::size_t i) const { return regions_[i]; }
  std::span<const Region> regions() const { return regions_; }
  // Tilings only; throws std::logic_error otherwise.
  const Rectangle& rectangle(std::size_t i) const;
  std::span<const Rectangle> rectangles() const { return rectangles_; }

  bool has_tags() const { return !tags_.empty(); }
  const std::string& tag(std::size_t i) const;

  std::size_t owner(Cell c) const { return owner_[static_cast<std::size_t>(c.row) * cols_ + c.col]; }
  std::size_t owner_flat(std::size_t flat_index) const { return owner_[flat_index]; }

  // True iff both partitions group cells identically (tile-set equality).
  bool same_blocks(const Partition& other) const;
  // same_blocks plus equal tags on corresponding regions.
  bool same_tagged_blocks(const Partition& other) const;

  // Tags mapped to region index; empty when untagged.
  std::vector<std::string> tags() const { return tags_; }

 private:
  Partition() = default;
  void index_cells();

  Kind kind_ = Kind::general;
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Region> regions_;
  std::vector<Rectangle> rectangles_;
  std::vector<std::string> tags_;
  std::vector<std::uint32_t> owner_;
};

// One region per distinct label, holding all cells with that label. Regions
// are ordered by first appearance in a row-major scan.
Partition ideal_partition(const ValueMatrix& m);

// 1-partition: one rectangle per row meeting r; 2-partition: one per column.
std::vector<Rectangle> i_partition(const Region& r, Player i);

// Replaces each region by its i-partition. Tags are inherited.
Partition i_refine(const Partition& p, Player i);

bool is_monochromatic(const Region& r, const ValueMatrix& m);
bool is_monochromatic(const Rectangle& r, const ValueMatrix& m);
bool is_monochromatic(const Partition& p, const ValueMatrix& m);

// Every region of `fine` lies inside one region of `coarse`.
bool is_refinement(const Partition& fine, const Partition& coarse);

}  // namespace parlab

#endif  // PARLAB_MATRIX_HPP
