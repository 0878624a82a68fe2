#ifndef PARLAB_PROTOCOL_HPP
#define PARLAB_PROTOCOL_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parlab/matrix.hpp"

namespace parlab {

class InvalidProtocol : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A deterministic two-party protocol as a binary decision tree.
 *
 * An internal node names the speaker and the set of the speaker's inputs
 * for which the transmitted bit is 1. A leaf carries the outcome that the
 * final message announces. The tree itself is unvalidated; wrap it in a
 * `Protocol` to check it against a matrix.
 */
class ProtocolTree {
 public:
  static ProtocolTree leaf(Label outcome);
  static ProtocolTree split(Player speaker, std::vector<Index> one_set, ProtocolTree zero,
                            ProtocolTree one);

  bool is_leaf() const;
  // Leaf accessors.
  Label outcome() const;
  // Internal-node accessors.
  Player speaker() const;
  const std::vector<Index>& one_set() const;
  const ProtocolTree& zero() const;
  const ProtocolTree& one() const;

  std::size_t leaf_count() const;
  std::size_t depth() const;

 private:
  struct Node;
  explicit ProtocolTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Transcript {
  std::vector<std::pair<Player, bool>> bits;
  Label outcome = 0;

  // Bits concatenated, e.g. "10".
  std::string str() const;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// A protocol tree validated against the matrix it computes. Construction
// throws InvalidProtocol if any split is not a strict nonempty subset of the
// speaker's live inputs, or if a leaf rectangle is not monochromatic with the
// leaf's outcome.
class Protocol {
 public:
  Protocol(ProtocolTree tree, const ValueMatrix& m);

  const ProtocolTree& tree() const { return tree_; }
  Index rows() const { return tiling_.rows(); }
  Index cols() const { return tiling_.cols(); }
  // Induced tiling; region i is tagged with its transcript string.
  const Partition& tiling() const { return tiling_; }
  Label outcome_of_tile(std::size_t i) const { return outcomes_[i]; }

 private:
  ProtocolTree tree_;
  Partition tiling_;
  std::vector<Label> outcomes_;
};

Transcript run(const Protocol& p, Index x1, Index x2);

// Validates `tree` against `m` and returns its transcript-tagged tiling.
Partition induced_tiling(const ProtocolTree& tree, const ValueMatrix& m);
inline const Partition& induced_tiling(const Protocol& p) { return p.tiling(); }
Partition induced_i_tiling(const Protocol& p, Player i);

// Returns a protocol inducing `t` when one exists. Blocks are split along
// connected components of the row graph (rows joined when a tile spans both),
// falling back to the column graph; a block of two or more tiles with both
// graphs connected cannot be split without cutting a tile. Throws
// InvalidPartition when `t` is not a monochromatic tiling of `m`.
std::optional<ProtocolTree> inducing_protocol(const Partition& t, const ValueMatrix& m);
bool is_inducible(const Partition& t, const ValueMatrix& m);

// The 3x3 pinwheel on a constant matrix: four dominoes turning around the
// centre cell. Monochromatic, but no row or column cut avoids a tile.
struct Pinwheel {
  ValueMatrix matrix;
  Partition tiling;
};
Pinwheel pinwheel();

enum class PrivacyMode { objective, wrt1, wrt2, subjective };

bool perfect_privacy(const Protocol& p, const ValueMatrix& m, PrivacyMode mode);

// {"speaker":1|2,"one_set":[...],"zero":{...},"one":{...}} | {"outcome":n}
std::string to_json(const ProtocolTree& tree);
// Throws std::invalid_argument on malformed input.
ProtocolTree protocol_from_json(const std::string& text);

}  // namespace parlab

#endif  // PARLAB_PROTOCOL_HPP
