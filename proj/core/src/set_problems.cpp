#include "parlab/set_problems.hpp"

#include <numeric>
#include <stdexcept>

namespace parlab {

namespace {

void check_k(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > kMaxExplicitBits) {
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds the explicit cap of " +
                                std::to_string(kMaxExplicitBits));
  }
}

bool bit(Index x, int j) { return ((x >> j) & 1u) != 0; }

std::vector<Index> all_inputs(unsigned k) {
  std::vector<Index> v(Index{1} << k);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

std::pair<std::vector<Index>, std::vector<Index>> split_by(const std::vector<Index>& live, int j) {
  std::vector<Index> zeros;
  std::vector<Index> ones;
  for (Index x : live) (bit(x, j) ? ones : zeros).push_back(x);
  return {std::move(zeros), std::move(ones)};
}

class ProtocolBuilder {
 public:
  ProtocolBuilder(ProblemKind p, ProtocolKind kind) : p_(p), kind_(kind) {}

  ProtocolTree build() {
    auto inputs = all_inputs(p_.k);
    if (kind_ == ProtocolKind::trivial) return reveal(static_cast<int>(p_.k) - 1, inputs, inputs);
    return exchange(static_cast<int>(p_.k) - 1, Player::one, inputs, inputs);
  }

 private:
  ProtocolTree outcome_leaf(const std::vector<Index>& rows, const std::vector<Index>& cols) const {
    return ProtocolTree::leaf(set_function(p_.problem, rows.front(), cols.front()));
  }

  // Bit j is exchanged with `lead` speaking first.
  ProtocolTree exchange(int j, Player lead, const std::vector<Index>& rows,
                        const std::vector<Index>& cols) {
    if (j < 0) return outcome_leaf(rows, cols);
    const auto& lead_live = lead == Player::one ? rows : cols;
    const auto& follow_live = lead == Player::one ? cols : rows;
    auto [lead0, lead1] = split_by(lead_live, j);
    auto [follow0, follow1] = split_by(follow_live, j);
    auto arrange = [&](const std::vector<Index>& lead_side, const std::vector<Index>& follow_side,
                       Player next, int next_j) {
      return lead == Player::one ? exchange(next_j, next, lead_side, follow_side)
                                 : exchange(next_j, next, follow_side, lead_side);
    };

    Player after_zero = kind_ == ProtocolKind::alternating ? other(lead) : lead;
    ProtocolTree lead_zero = arrange(lead0, follow_live, after_zero, j - 1);

    ProtocolTree follow_zero = arrange(lead1, follow0, lead, j - 1);
    ProtocolTree follow_one = p_.problem == SetProblem::disjointness
                                  ? ProtocolTree::leaf(0)
                                  : arrange(lead1, follow1, lead, j - 1);
    ProtocolTree lead_one =
        ProtocolTree::split(other(lead), follow1, std::move(follow_zero), std::move(follow_one));
    return ProtocolTree::split(lead, lead1, std::move(lead_zero), std::move(lead_one));
  }

  // Player 1 reveals bit j of x1, then the reply follows once x1 is known.
  ProtocolTree reveal(int j, const std::vector<Index>& rows, const std::vector<Index>& cols) {
    if (j < 0) return reply(rows.front(), cols);
    auto [zeros, ones] = split_by(rows, j);
    return ProtocolTree::split(Player::one, ones, reveal(j - 1, zeros, cols), reveal(j - 1, ones, cols));
  }

  ProtocolTree reply(Index x1, const std::vector<Index>& cols) {
    if (p_.problem == SetProblem::disjointness) {
      if (x1 == 0) return ProtocolTree::leaf(1);
      std::vector<Index> disjoint;
      for (Index c : cols) {
        if ((c & x1) == 0) disjoint.push_back(c);
      }
      return ProtocolTree::split(Player::two, std::move(disjoint), ProtocolTree::leaf(0),
                                 ProtocolTree::leaf(1));
    }
    return reply_bits(x1, static_cast<int>(p_.k) - 1, cols);
  }

  // Player 2 sends x2's bit at each position of x1's elements, MSB first.
  ProtocolTree reply_bits(Index x1, int j, const std::vector<Index>& cols) {
    while (j >= 0 && !bit(x1, j)) --j;
    if (j < 0) return ProtocolTree::leaf(x1 & cols.front());
    auto [zeros, ones] = split_by(cols, j);
    return ProtocolTree::split(Player::two, ones, reply_bits(x1, j - 1, zeros),
                               reply_bits(x1, j - 1, ones));
  }

  ProblemKind p_;
  ProtocolKind kind_;
};

struct Tile {
  std::vector<Index> rows;
  std::vector<Index> cols;
  std::string tag;
};

std::vector<Index> lift(const std::vector<Index>& v, bool high, unsigned k) {
  std::vector<Index> out;
  out.reserve(v.size());
  for (Index x : v) out.push_back(high ? (x | (Index{1} << k)) : x);
  return out;
}

std::vector<Index> concat(std::vector<Index> a, const std::vector<Index>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// T_k -> T_{k+1}. Quadrants: top = row MSB 0, bottom = row MSB 1, left = col
// MSB 0, right = col MSB 1.
std::vector<Tile> grow(const std::vector<Tile>& tiles, unsigned k, SetProblem problem,
                       ProtocolKind proto) {
  std::vector<Tile> next;
  const auto all = all_inputs(k);
  const bool transpose_top = proto == ProtocolKind::alternating;

  for (const auto& t : tiles) {
    const auto& r = transpose_top ? t.cols : t.rows;
    const auto& c = transpose_top ? t.rows : t.cols;
    next.push_back({lift(r, false, k), concat(lift(c, false, k), lift(c, true, k)), "0" + t.tag});
  }

  if (problem == SetProblem::disjointness && proto == ProtocolKind::trivial) {
    for (const auto& t : tiles) {
      auto rows = lift(t.rows, true, k);
      if (t.tag.size() == k) {
        // Row of the empty set: the new bit forces a reply.
        next.push_back({rows, lift(t.cols, false, k), "1" + t.tag + "1"});
        next.push_back({rows, lift(all, true, k), "1" + t.tag + "0"});
      } else if (t.tag.back() == '1') {
        next.push_back({rows, lift(t.cols, false, k), "1" + t.tag});
      } else {
        next.push_back({rows, concat(lift(t.cols, false, k), lift(all, true, k)), "1" + t.tag});
      }
    }
    return next;
  }

  if (problem == SetProblem::intersection && proto == ProtocolKind::trivial) {
    for (const auto& t : tiles) {
      std::string head = "1" + t.tag.substr(0, k);
      std::string tail = t.tag.substr(k);
      next.push_back({lift(t.rows, true, k), lift(t.cols, false, k), head + "0" + tail});
      next.push_back({lift(t.rows, true, k), lift(t.cols, true, k), head + "1" + tail});
    }
    return next;
  }

  for (const auto& t : tiles) {
    next.push_back({lift(t.rows, true, k), lift(t.cols, false, k), "10" + t.tag});
  }
  if (problem == SetProblem::disjointness) {
    next.push_back({lift(all, true, k), lift(all, true, k), "11"});
  } else {
    for (const auto& t : tiles) {
      next.push_back({lift(t.rows, true, k), lift(t.cols, true, k), "11" + t.tag});
    }
  }
  return next;
}

}  // namespace

std::string_view name(SetProblem p) {
  return p == SetProblem::disjointness ? "disjointness" : "intersection";
}

std::string_view name(ProtocolKind p) {
  switch (p) {
    case ProtocolKind::trivial:
      return "trivial";
    case ProtocolKind::one_first:
      return "one-first";
    case ProtocolKind::alternating:
      return "alternating";
  }
  return "?";
}

SetProblem parse_problem(std::string_view text) {
  if (text == "disjointness") return SetProblem::disjointness;
  if (text == "intersection") return SetProblem::intersection;
  throw std::invalid_argument("unknown problem: " + std::string(text));
}

ProtocolKind parse_protocol(std::string_view text) {
  if (text == "trivial") return ProtocolKind::trivial;
  if (text == "one-first" || text == "1-first") return ProtocolKind::one_first;
  if (text == "alternating") return ProtocolKind::alternating;
  throw std::invalid_argument("unknown protocol: " + std::string(text));
}

Label set_function(SetProblem p, Index x1, Index x2) {
  if (p == SetProblem::disjointness) return (x1 & x2) == 0 ? 1 : 0;
  return x1 & x2;
}

ValueMatrix build_matrix(ProblemKind p) {
  check_k(p.k);
  return ValueMatrix::from_function(p.k, [&](Index r, Index c) { return set_function(p.problem, r, c); });
}

ProtocolTree build_protocol(ProblemKind p, ProtocolKind proto) {
  check_k(p.k);
  return ProtocolBuilder(p, proto).build();
}

Partition recursive_tiling(ProblemKind p, ProtocolKind proto) {
  check_k(p.k);
  std::vector<Tile> tiles{{{0}, {0}, ""}};
  for (unsigned k = 0; k < p.k; ++k) tiles = grow(tiles, k, p.problem, proto);

  std::vector<Rectangle> rects;
  std::vector<std::string> tags;
  rects.reserve(tiles.size());
  tags.reserve(tiles.size());
  for (auto& t : tiles) {
    rects.emplace_back(std::move(t.rows), std::move(t.cols));
    tags.push_back(std::move(t.tag));
  }
  Index n = Index{1} << p.k;
  return Partition::from_rectangles(n, n, std::move(rects), std::move(tags));
}

std::vector<std::pair<Index, Index>> fooling_set(unsigned k) {
  check_k(k);
  Index full = (Index{1} << k) - 1;
  std::vector<std::pair<Index, Index>> out;
  out.reserve(full + 1);
  for (Index s = 0; s <= full; ++s) out.emplace_back(s, full & ~s);
  return out;
}

bool certify_fooling_set(const std::vector<std::pair<Index, Index>>& pairs, const ValueMatrix& m) {
  for (const auto& [a, abar] : pairs) {
    if (m.at(a, abar) != 1) return false;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto& [a, abar] = pairs[i];
      const auto& [b, bbar] = pairs[j];
      if (m.at(a, bbar) == 1 && m.at(b, abar) == 1) return false;
    }
  }
  return true;
}

}  // namespace parlab
