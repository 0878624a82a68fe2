#include "parlab/protocol.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace parlab {

struct ProtocolTree::Node {
  bool is_leaf = true;
  Label outcome = 0;
  Player speaker = Player::one;
  std::vector<Index> one_set;
  std::optional<ProtocolTree> zero;
  std::optional<ProtocolTree> one;
};

ProtocolTree ProtocolTree::leaf(Label outcome) {
  auto node = std::make_shared<Node>();
  node->outcome = outcome;
  return ProtocolTree(std::move(node));
}

ProtocolTree ProtocolTree::split(Player speaker, std::vector<Index> one_set, ProtocolTree zero,
                                 ProtocolTree one) {
  std::sort(one_set.begin(), one_set.end());
  one_set.erase(std::unique(one_set.begin(), one_set.end()), one_set.end());
  auto node = std::make_shared<Node>();
  node->is_leaf = false;
  node->speaker = speaker;
  node->one_set = std::move(one_set);
  node->zero = std::move(zero);
  node->one = std::move(one);
  return ProtocolTree(std::move(node));
}

bool ProtocolTree::is_leaf() const { return node_->is_leaf; }

Label ProtocolTree::outcome() const {
  if (!node_->is_leaf) throw std::logic_error("ProtocolTree: not a leaf");
  return node_->outcome;
}

Player ProtocolTree::speaker() const {
  if (node_->is_leaf) throw std::logic_error("ProtocolTree: leaf has no speaker");
  return node_->speaker;
}

const std::vector<Index>& ProtocolTree::one_set() const {
  if (node_->is_leaf) throw std::logic_error("ProtocolTree: leaf has no split");
  return node_->one_set;
}

const ProtocolTree& ProtocolTree::zero() const {
  if (node_->is_leaf) throw std::logic_error("ProtocolTree: leaf has no children");
  return *node_->zero;
}

const ProtocolTree& ProtocolTree::one() const {
  if (node_->is_leaf) throw std::logic_error("ProtocolTree: leaf has no children");
  return *node_->one;
}

std::size_t ProtocolTree::leaf_count() const {
  if (is_leaf()) return 1;
  return zero().leaf_count() + one().leaf_count();
}

std::size_t ProtocolTree::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(zero().depth(), one().depth());
}

std::string Transcript::str() const {
  std::string s;
  s.reserve(bits.size());
  for (const auto& [speaker, bit] : bits) s.push_back(bit ? '1' : '0');
  return s;
}

namespace {

struct TilingBuilder {
  const ValueMatrix& m;
  std::vector<Rectangle> rects;
  std::vector<std::string> tags;
  std::vector<Label> outcomes;
  std::string path;

  void walk(const ProtocolTree& node, const std::vector<Index>& rows,
            const std::vector<Index>& cols) {
    if (node.is_leaf()) {
      Rectangle rect(rows, cols);
      for (Index r : rows) {
        for (Index c : cols) {
          if (m.at(r, c) != node.outcome()) {
            throw InvalidProtocol("leaf " + (path.empty() ? std::string("<root>") : path) +
                                  " is not monochromatic with its outcome");
          }
        }
      }
      rects.push_back(std::move(rect));
      tags.push_back(path);
      outcomes.push_back(node.outcome());
      return;
    }
    const auto& live = node.speaker() == Player::one ? rows : cols;
    const auto& one_set = node.one_set();
    std::vector<Index> ones;
    std::vector<Index> zeros;
    std::set_intersection(live.begin(), live.end(), one_set.begin(), one_set.end(),
                          std::back_inserter(ones));
    if (ones.size() != one_set.size()) {
      throw InvalidProtocol("split at " + path + " names inputs that cannot reach it");
    }
    std::set_difference(live.begin(), live.end(), one_set.begin(), one_set.end(),
                        std::back_inserter(zeros));
    if (ones.empty() || zeros.empty()) {
      throw InvalidProtocol("split at " + path + " is not a strict nonempty subset");
    }
    path.push_back('0');
    if (node.speaker() == Player::one) {
      walk(node.zero(), zeros, cols);
    } else {
      walk(node.zero(), rows, zeros);
    }
    path.back() = '1';
    if (node.speaker() == Player::one) {
      walk(node.one(), ones, cols);
    } else {
      walk(node.one(), rows, ones);
    }
    path.pop_back();
  }
};

std::vector<Index> iota_vector(Index n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

TilingBuilder build_tiling(const ProtocolTree& tree, const ValueMatrix& m) {
  TilingBuilder b{m, {}, {}, {}, {}};
  b.walk(tree, iota_vector(m.rows()), iota_vector(m.cols()));
  return b;
}

}  // namespace

Protocol::Protocol(ProtocolTree tree, const ValueMatrix& m)
    : tree_(std::move(tree)), tiling_(induced_tiling(tree_, m)) {
  outcomes_.reserve(tiling_.size());
  for (std::size_t i = 0; i < tiling_.size(); ++i) outcomes_.push_back(m.at(tiling_.region(i).cells().front()));
}

Partition induced_tiling(const ProtocolTree& tree, const ValueMatrix& m) {
  auto b = build_tiling(tree, m);
  return Partition::from_rectangles(m.rows(), m.cols(), std::move(b.rects), std::move(b.tags));
}

Transcript run(const Protocol& p, Index x1, Index x2) {
  if (x1 >= p.rows() || x2 >= p.cols()) throw std::out_of_range("run: input out of range");
  Transcript t;
  const ProtocolTree* node = &p.tree();
  while (!node->is_leaf()) {
    Index input = node->speaker() == Player::one ? x1 : x2;
    const auto& one_set = node->one_set();
    bool bit = std::binary_search(one_set.begin(), one_set.end(), input);
    t.bits.emplace_back(node->speaker(), bit);
    node = bit ? &node->one() : &node->zero();
  }
  t.outcome = node->outcome();
  return t;
}

Partition induced_i_tiling(const Protocol& p, Player i) { return i_refine(p.tiling(), i); }

namespace {

class Inducer {
 public:
  Inducer(const Partition& t, const ValueMatrix& m) : t_(t), m_(m) {}

  std::optional<ProtocolTree> block(const std::vector<Index>& rows, const std::vector<Index>& cols,
                                    const std::vector<std::size_t>& tiles) {
    if (tiles.size() == 1) return ProtocolTree::leaf(m_.at(t_.region(tiles.front()).cells().front()));
    if (auto tree = try_split(Player::one, rows, cols, tiles)) return tree;
    return try_split(Player::two, rows, cols, tiles);
  }

 private:
  // Splits off the connected component containing the first live index.
  std::optional<ProtocolTree> try_split(Player axis, const std::vector<Index>& rows,
                                        const std::vector<Index>& cols,
                                        const std::vector<std::size_t>& tiles) {
    const auto& live = axis == Player::one ? rows : cols;
    // Union-find over the live indices of this axis.
    std::vector<Index> parent(axis == Player::one ? t_.rows() : t_.cols());
    for (Index x : live) parent[x] = x;
    auto find = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t tile : tiles) {
      const auto& rect = t_.rectangle(tile);
      auto side = axis == Player::one ? rect.rows() : rect.cols();
      Index root = find(side.front());
      for (Index x : side) {
        Index r = find(x);
        if (r != root) parent[r] = root;
      }
    }
    Index anchor = find(live.front());
    std::vector<Index> component;
    for (Index x : live) {
      if (find(x) == anchor) component.push_back(x);
    }
    std::vector<bool> tile_used(tiles.size(), false);
    for (std::size_t j = 0; j < tiles.size(); ++j) {
      const auto& rect = t_.rectangle(tiles[j]);
      auto side = axis == Player::one ? rect.rows() : rect.cols();
      tile_used[j] = find(side.front()) == anchor;
    }
    if (component.size() == live.size()) return std::nullopt;
    std::vector<Index> rest;
    std::set_difference(live.begin(), live.end(), component.begin(), component.end(),
                        std::back_inserter(rest));
    std::vector<std::size_t> tiles_in;
    std::vector<std::size_t> tiles_out;
    for (std::size_t j = 0; j < tiles.size(); ++j) (tile_used[j] ? tiles_in : tiles_out).push_back(tiles[j]);

    std::optional<ProtocolTree> one;
    std::optional<ProtocolTree> zero;
    if (axis == Player::one) {
      one = block(component, cols, tiles_in);
      if (one) zero = block(rest, cols, tiles_out);
    } else {
      one = block(rows, component, tiles_in);
      if (one) zero = block(rows, rest, tiles_out);
    }
    if (!one || !zero) return std::nullopt;
    return ProtocolTree::split(axis, std::move(component), std::move(*zero), std::move(*one));
  }

  const Partition& t_;
  const ValueMatrix& m_;
};

}  // namespace

std::optional<ProtocolTree> inducing_protocol(const Partition& t, const ValueMatrix& m) {
  if (!t.is_tiling()) throw InvalidPartition("inducing_protocol: not a tiling");
  if (t.rows() != m.rows() || t.cols() != m.cols()) throw InvalidPartition("inducing_protocol: shape mismatch");
  if (!is_monochromatic(t, m)) throw InvalidPartition("inducing_protocol: tiling is not monochromatic");
  std::vector<std::size_t> tiles(t.size());
  std::iota(tiles.begin(), tiles.end(), std::size_t{0});
  return Inducer(t, m).block(iota_vector(m.rows()), iota_vector(m.cols()), tiles);
}

bool is_inducible(const Partition& t, const ValueMatrix& m) { return inducing_protocol(t, m).has_value(); }

Pinwheel pinwheel() {
  ValueMatrix m(3, 3, std::vector<Label>(9, 0));
  std::vector<Rectangle> tiles{{{0}, {0, 1}}, {{0, 1}, {2}}, {{2}, {1, 2}}, {{1, 2}, {0}}, {{1}, {1}}};
  Partition t = Partition::from_rectangles(3, 3, std::move(tiles));
  return {std::move(m), std::move(t)};
}

bool perfect_privacy(const Protocol& p, const ValueMatrix& m, PrivacyMode mode) {
  const Partition ideal = ideal_partition(m);
  auto wrt = [&](Player i) { return i_refine(p.tiling(), i).same_blocks(i_refine(ideal, i)); };
  switch (mode) {
    case PrivacyMode::objective:
      return p.tiling().same_blocks(ideal);
    case PrivacyMode::wrt1:
      return wrt(Player::one);
    case PrivacyMode::wrt2:
      return wrt(Player::two);
    case PrivacyMode::subjective:
      return wrt(Player::one) && wrt(Player::two);
  }
  return false;
}

namespace {

nlohmann::json tree_json(const ProtocolTree& tree) {
  if (tree.is_leaf()) return {{"outcome", tree.outcome()}};
  return {{"speaker", tree.speaker() == Player::one ? 1 : 2},
          {"one_set", tree.one_set()},
          {"zero", tree_json(tree.zero())},
          {"one", tree_json(tree.one())}};
}

ProtocolTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("protocol node must be an object");
  if (j.contains("outcome")) return ProtocolTree::leaf(j.at("outcome").get<Label>());
  int speaker = j.at("speaker").get<int>();
  if (speaker != 1 && speaker != 2) throw std::invalid_argument("speaker must be 1 or 2");
  return ProtocolTree::split(speaker == 1 ? Player::one : Player::two,
                             j.at("one_set").get<std::vector<Index>>(), tree_from_json(j.at("zero")),
                             tree_from_json(j.at("one")));
}

}  // namespace

std::string to_json(const ProtocolTree& tree) { return tree_json(tree).dump(); }

ProtocolTree protocol_from_json(const std::string& text) {
  try {
    return tree_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed protocol JSON: ") + e.what());
  }
}

}  // namespace parlab
