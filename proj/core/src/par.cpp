#include "parlab/par.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace parlab {

std::string_view name(Scope s) {
  switch (s) {
    case Scope::objective:
      return "objective";
    case Scope::wrt1:
      return "wrt1";
    case Scope::wrt2:
      return "wrt2";
    case Scope::subjective:
      return "subjective";
  }
  return "?";
}

std::string_view name(Mode m) { return m == Mode::worst ? "worst" : "average"; }

Scope parse_scope(std::string_view text) {
  if (text == "objective") return Scope::objective;
  if (text == "wrt1") return Scope::wrt1;
  if (text == "wrt2") return Scope::wrt2;
  if (text == "subjective") return Scope::subjective;
  throw std::invalid_argument("unknown scope: " + std::string(text));
}

Mode parse_mode(std::string_view text) {
  if (text == "worst") return Mode::worst;
  if (text == "average") return Mode::average;
  throw std::invalid_argument("unknown mode: " + std::string(text));
}

std::string_view name(GVariant g) {
  switch (g) {
    case GVariant::cardinality:
      return "cardinality";
    case GVariant::probability_mass:
      return "probability-mass";
    case GVariant::additive_distance:
      return "additive-distance";
    case GVariant::max_distance:
      return "max-distance";
    case GVariant::plausible_deniability:
      return "plausible-deniability";
    case GVariant::relative_size:
      return "relative-size";
  }
  return "?";
}

GVariant parse_g_variant(std::string_view text) {
  for (auto g : {GVariant::cardinality, GVariant::probability_mass, GVariant::additive_distance,
                 GVariant::max_distance, GVariant::plausible_deniability, GVariant::relative_size}) {
    if (text == name(g)) return g;
  }
  throw std::invalid_argument("unknown g-function: " + std::string(text));
}

DistanceKind parse_distance(std::string_view text) {
  if (text == "hamming") return DistanceKind::hamming;
  if (text == "discrete") return DistanceKind::discrete;
  if (text == "zero") return DistanceKind::zero;
  throw std::invalid_argument("unknown distance: " + std::string(text));
}

std::string GFunction::describe() const {
  std::string out(name(variant));
  switch (variant) {
    case GVariant::additive_distance:
    case GVariant::max_distance:
    case GVariant::plausible_deniability:
    case GVariant::relative_size:
      out += distance == DistanceKind::hamming ? "(hamming" : distance == DistanceKind::discrete ? "(discrete" : "(zero";
      if (variant == GVariant::plausible_deniability) out += ",t=" + to_string(threshold);
      if (variant == GVariant::relative_size && !size_measure) out += ",|x|=1+row";
      out += ")";
      break;
    default:
      break;
  }
  return out;
}

unsigned distance(DistanceKind kind, Cell a, Cell b) {
  switch (kind) {
    case DistanceKind::hamming:
      return static_cast<unsigned>(std::popcount(a.row ^ b.row) + std::popcount(a.col ^ b.col));
    case DistanceKind::discrete:
      return a == b ? 0u : 1u;
    case DistanceKind::zero:
      return 0u;
  }
  return 0u;
}

Distribution Distribution::uniform(Index rows, Index cols) {
  Distribution d;
  d.rows_ = rows;
  d.cols_ = cols;
  d.id_ = "uniform";
  d.uniform_weight_ = Rational(1, static_cast<unsigned long>(rows) * cols);
  return d;
}

Distribution Distribution::from_weights(Index rows, Index cols, std::vector<Rational> weights,
                                        std::string id) {
  if (weights.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("distribution: weight count does not match shape");
  }
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("distribution: negative weight");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("distribution: weights sum to " + to_string(total) + ", not 1");
  Distribution d;
  d.rows_ = rows;
  d.cols_ = cols;
  d.id_ = std::move(id);
  d.weights_ = std::move(weights);
  return d;
}

Distribution Distribution::point_mass(Index rows, Index cols, Cell cell) {
  std::vector<Rational> w(static_cast<std::size_t>(rows) * cols, Rational(0));
  w.at(static_cast<std::size_t>(cell.row) * cols + cell.col) = 1;
  return from_weights(rows, cols, std::move(w),
                      "point(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")");
}

Rational Distribution::mass(const Region& r) const {
  if (is_uniform()) return uniform_weight_ * static_cast<unsigned long>(r.size());
  Rational total = 0;
  for (Cell c : r.cells()) total += weight(c);
  return total;
}

namespace {

// The tiling and ideal partition, both refined for a single-player scope.
struct View {
  Partition tiles;
  Partition ideal;

  std::size_t ideal_size_of_tile(std::size_t tile) const {
    return ideal.region(ideal.owner(tiles.region(tile).cells().front())).size();
  }
};

void require_tiling(const Partition& t, const ValueMatrix& m) {
  if (!t.is_tiling()) throw InvalidPartition("PAR: partition is not a tiling");
  if (t.rows() != m.rows() || t.cols() != m.cols()) throw InvalidPartition("PAR: shape mismatch");
  if (!is_monochromatic(t, m)) throw InvalidPartition("PAR: tiling is not monochromatic");
}

View make_view(const Partition& t, const ValueMatrix& m, Scope scope) {
  Partition ideal = ideal_partition(m);
  switch (scope) {
    case Scope::objective:
      return {t, std::move(ideal)};
    case Scope::wrt1:
      return {i_refine(t, Player::one), i_refine(ideal, Player::one)};
    case Scope::wrt2:
      return {i_refine(t, Player::two), i_refine(ideal, Player::two)};
    case Scope::subjective:
      break;
  }
  throw std::logic_error("make_view: subjective scope has no single view");
}

template <typename F>
Rational max_over_players(F&& f) {
  Rational a = f(Scope::wrt1);
  Rational b = f(Scope::wrt2);
  return a > b ? a : b;
}

void require_distribution(const Distribution& d, const ValueMatrix& m) {
  if (d.rows() != m.rows() || d.cols() != m.cols()) throw std::invalid_argument("distribution shape mismatch");
}

class GEvaluator {
 public:
  GEvaluator(const GFunction& g, const Distribution& d, const Partition& p)
      : g_(g), d_(d), p_(p), cache_(p.size()) {}

  Rational operator()(std::size_t region, Cell x) {
    const Region& r = p_.region(region);
    switch (g_.variant) {
      case GVariant::cardinality:
        return Rational(static_cast<unsigned long>(r.size()));
      case GVariant::probability_mass:
        return cached(region, [&] { return d_.mass(r); });
      case GVariant::additive_distance: {
        unsigned long total = 0;
        for (Cell y : r.cells()) total += distance(g_.distance, x, y);
        return Rational(1 + total);
      }
      case GVariant::max_distance: {
        unsigned best = 0;
        for (Cell y : r.cells()) best = std::max(best, distance(g_.distance, y, x));
        return Rational(1 + best);
      }
      case GVariant::plausible_deniability:
        return plausible(region, x);
      case GVariant::relative_size: {
        Rational diam = cached(region, [&] {
          unsigned best = 0;
          auto cells = r.cells();
          for (std::size_t i = 0; i < cells.size(); ++i) {
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
              best = std::max(best, distance(g_.distance, cells[i], cells[j]));
            }
          }
          return Rational(best);
        });
        Rational size = g_.size_measure ? g_.size_measure(x) : Rational(1 + x.row);
        if (size <= 0) throw std::domain_error("relative-size: |x| must be positive");
        return diam / size;
      }
    }
    return 0;
  }

 private:
  template <typename F>
  const Rational& cached(std::size_t region, F&& compute) {
    if (!cache_[region]) cache_[region] = compute();
    return *cache_[region];
  }

  Rational plausible(std::size_t region, Cell x) {
    if (g_.threshold <= 0 || g_.threshold > 1) throw std::domain_error("plausible-deniability: threshold outside (0,1]");
    const Region& r = p_.region(region);
    const Rational& total = cached(region, [&] { return d_.mass(r); });
    if (total == 0) throw std::domain_error("plausible-deniability: region has zero mass");
    std::map<unsigned, Rational, std::greater<>> by_distance;
    for (Cell y : r.cells()) by_distance[distance(g_.distance, y, x)] += d_.weight(y);
    Rational far = 0;
    for (const auto& [d0, w] : by_distance) {
      far += w;
      if (far / total >= g_.threshold) return Rational(1 + d0);
    }
    return 1;
  }

  const GFunction& g_;
  const Distribution& d_;
  const Partition& p_;
  std::vector<std::optional<Rational>> cache_;
};

Rational g_par_single(const Partition& t, const ValueMatrix& m, Scope scope, const Distribution& d,
                      const GFunction& g, Mode mode) {
  View v = make_view(t, m, scope);
  GEvaluator g_ideal(g, d, v.ideal);
  GEvaluator g_tile(g, d, v.tiles);
  Rational acc = 0;
  bool any = false;
  for (std::size_t i = 0; i < m.cell_count(); ++i) {
    const Rational& w = d.weight(i);
    if (w == 0) continue;
    Cell x = m.cell(i);
    Rational num = g_ideal(v.ideal.owner_flat(i), x);
    Rational den = g_tile(v.tiles.owner_flat(i), x);
    if (num == 0 || den == 0) {
      throw std::domain_error(std::string(name(g.variant)) + ": g(R, x) = 0 at cell (" +
                              std::to_string(x.row) + "," + std::to_string(x.col) + ")");
    }
    Rational ratio = num / den;
    if (mode == Mode::average) {
      acc += w * ratio;
    } else if (!any || ratio > acc) {
      acc = ratio;
    }
    any = true;
  }
  return acc;
}

}  // namespace

Rational worst_case_par(const Partition& t, const ValueMatrix& m, Scope scope) {
  require_tiling(t, m);
  if (scope == Scope::subjective) {
    return max_over_players([&](Scope s) { return worst_case_par(t, m, s); });
  }
  View v = make_view(t, m, scope);
  Rational best = 0;
  for (std::size_t i = 0; i < v.tiles.size(); ++i) {
    Rational ratio(static_cast<unsigned long>(v.ideal_size_of_tile(i)),
                   static_cast<unsigned long>(v.tiles.region(i).size()));
    ratio.canonicalize();
    if (ratio > best) best = ratio;
  }
  return best;
}

Rational avg_par(const Partition& t, const ValueMatrix& m, Scope scope, const Distribution& d) {
  require_tiling(t, m);
  require_distribution(d, m);
  if (scope == Scope::subjective) {
    return max_over_players([&](Scope s) { return avg_par(t, m, s, d); });
  }
  View v = make_view(t, m, scope);
  Rational acc = 0;
  for (std::size_t i = 0; i < m.cell_count(); ++i) {
    const Rational& w = d.weight(i);
    if (w == 0) continue;
    auto ideal_size = v.ideal.region(v.ideal.owner_flat(i)).size();
    auto tile_size = v.tiles.region(v.tiles.owner_flat(i)).size();
    Rational ratio(static_cast<unsigned long>(ideal_size), static_cast<unsigned long>(tile_size));
    ratio.canonicalize();
    acc += w * ratio;
  }
  return acc;
}

Rational avg_par_uniform(const Partition& t, const ValueMatrix& m, Scope scope) {
  require_tiling(t, m);
  if (scope == Scope::subjective) {
    return max_over_players([&](Scope s) { return avg_par_uniform(t, m, s); });
  }
  View v = make_view(t, m, scope);
  Integer total = 0;
  for (std::size_t i = 0; i < v.tiles.size(); ++i) total += static_cast<unsigned long>(v.ideal_size_of_tile(i));
  Rational out(total, Integer(static_cast<unsigned long>(m.cell_count())));
  out.canonicalize();
  return out;
}

Rational subjective_ratio(const Partition& t, const ValueMatrix& m, const Distribution& d) {
  Rational a = avg_par(t, m, Scope::wrt1, d);
  Rational b = avg_par(t, m, Scope::wrt2, d);
  return a > b ? Rational(a / b) : Rational(b / a);
}

Rational g_par(const Partition& t, const ValueMatrix& m, Scope scope, const Distribution& d,
               const GFunction& g, Mode mode) {
  require_tiling(t, m);
  require_distribution(d, m);
  if (scope == Scope::subjective) {
    return max_over_players([&](Scope s) { return g_par_single(t, m, s, d, g, mode); });
  }
  return g_par_single(t, m, scope, d, g, mode);
}

std::map<Label, TileContribution> tile_contributions(const Partition& t, const ValueMatrix& m,
                                                     Scope scope) {
  require_tiling(t, m);
  if (scope == Scope::subjective) throw std::invalid_argument("tile_contributions: pick a single scope");
  View v = make_view(t, m, scope);
  std::map<Label, TileContribution> out;
  for (std::size_t i = 0; i < v.tiles.size(); ++i) {
    auto& entry = out[m.at(v.tiles.region(i).cells().front())];
    entry.sum += static_cast<unsigned long>(v.ideal_size_of_tile(i));
    ++entry.count;
  }
  return out;
}

namespace {

class OptimalSearch {
 public:
  explicit OptimalSearch(const ValueMatrix& m)
      : m_(m), rows_(m.rows()), cols_(m.cols()),
        memo_(std::size_t{1} << (rows_ + cols_), kUnknown),
        choice_(std::size_t{1} << (rows_ + cols_), 0) {
    Partition ideal = ideal_partition(m);
    for (const auto& r : ideal.regions()) ideal_size_[m.at(r.cells().front())] = r.size();
  }

  std::uint64_t cost(std::uint32_t rmask, std::uint32_t cmask) {
    auto key = state(rmask, cmask);
    if (memo_[key] != kUnknown) return memo_[key];
    std::uint64_t best;
    if (auto label = monochrome(rmask, cmask)) {
      best = ideal_size_.at(*label);
      choice_[key] = kLeaf;
    } else {
      best = std::numeric_limits<std::uint64_t>::max();
      // Rows first, then columns; submasks containing the lowest set bit
      // enumerate each bipartition once.
      for (int axis = 0; axis < 2; ++axis) {
        std::uint32_t mask = axis == 0 ? rmask : cmask;
        std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
          if (!(sub & low)) continue;
          std::uint64_t c = axis == 0 ? cost(sub, cmask) + cost(rmask & ~sub, cmask)
                                      : cost(rmask, sub) + cost(rmask, cmask & ~sub);
          if (c < best) {
            best = c;
            choice_[key] = (static_cast<std::uint32_t>(axis) << 16) | sub;
          }
        }
      }
    }
    memo_[key] = best;
    return best;
  }

  ProtocolTree protocol(std::uint32_t rmask, std::uint32_t cmask) {
    cost(rmask, cmask);
    auto c = choice_[state(rmask, cmask)];
    if (c == kLeaf) return ProtocolTree::leaf(*monochrome(rmask, cmask));
    bool rows = (c >> 16) == 0;
    std::uint32_t sub = c & 0xffffu;
    std::vector<Index> one_set;
    for (Index i = 0; i < 16; ++i) {
      if (sub & (1u << i)) one_set.push_back(i);
    }
    if (rows) {
      return ProtocolTree::split(Player::one, std::move(one_set), protocol(rmask & ~sub, cmask),
                                 protocol(sub, cmask));
    }
    return ProtocolTree::split(Player::two, std::move(one_set), protocol(rmask, cmask & ~sub),
                               protocol(rmask, sub));
  }

 private:
  static constexpr std::uint64_t kUnknown = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint32_t kLeaf = 0xffffffffu;

  std::size_t state(std::uint32_t rmask, std::uint32_t cmask) const {
    return (static_cast<std::size_t>(rmask) << cols_) | cmask;
  }

  std::optional<Label> monochrome(std::uint32_t rmask, std::uint32_t cmask) const {
    std::optional<Label> label;
    for (Index r = 0; r < rows_; ++r) {
      if (!(rmask & (1u << r))) continue;
      for (Index c = 0; c < cols_; ++c) {
        if (!(cmask & (1u << c))) continue;
        if (!label) {
          label = m_.at(r, c);
        } else if (*label != m_.at(r, c)) {
          return std::nullopt;
        }
      }
    }
    return label;
  }

  const ValueMatrix& m_;
  Index rows_;
  Index cols_;
  std::vector<std::uint64_t> memo_;
  std::vector<std::uint32_t> choice_;
  std::map<Label, std::size_t> ideal_size_;
};

}  // namespace

OptimalProtocol optimal_avg_objective_par(const ValueMatrix& m) {
  if (m.rows() > kMaxOptimalSide || m.cols() > kMaxOptimalSide) {
    throw std::invalid_argument("optimal search is capped at " + std::to_string(kMaxOptimalSide) +
                                " rows and columns (k <= 3)");
  }
  OptimalSearch search(m);
  std::uint32_t all_rows = (1u << m.rows()) - 1;
  std::uint32_t all_cols = (1u << m.cols()) - 1;
  Rational value(Integer(static_cast<unsigned long>(search.cost(all_rows, all_cols))),
                 Integer(static_cast<unsigned long>(m.cell_count())));
  value.canonicalize();
  return {value, search.protocol(all_rows, all_cols)};
}

namespace {

nlohmann::ordered_json rational_json(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ParReport::json() const {
  nlohmann::ordered_json j;
  j["problem"] = problem;
  j["protocol"] = protocol;
  j["k"] = k;
  j["scope"] = std::string(name(scope));
  j["mode"] = std::string(name(mode));
  j["distribution"] = distribution;
  j["g"] = g;
  j["value"] = rational_json(value);
  j["value_decimal"] = to_decimal(value);
  if (ratio_of_subjective) {
    j["ratio_of_subjective"] = rational_json(*ratio_of_subjective);
    j["ratio_of_subjective_decimal"] = to_decimal(*ratio_of_subjective);
  }
  return j.dump();
}

std::string ParReport::csv_header() {
  return "problem,protocol,k,scope,mode,distribution,g,value,value_decimal,ratio_of_subjective";
}

std::string ParReport::csv_row() const {
  std::ostringstream os;
  os << csv_field(problem) << ',' << csv_field(protocol) << ',' << k << ',' << name(scope) << ','
     << name(mode) << ',' << csv_field(distribution) << ',' << csv_field(g) << ',' << to_string(value)
     << ',' << to_decimal(value) << ',' << (ratio_of_subjective ? to_string(*ratio_of_subjective) : "");
  return os.str();
}

namespace {

ProtocolTree bisect_columns(Index lo, Index hi) {
  if (hi - lo == 1) return ProtocolTree::leaf(lo);
  Index mid = lo + (hi - lo) / 2;
  std::vector<Index> upper;
  for (Index c = mid; c < hi; ++c) upper.push_back(c);
  return ProtocolTree::split(Player::two, std::move(upper), bisect_columns(lo, mid), bisect_columns(mid, hi));
}

}  // namespace

MassCounterexample probability_mass_counterexample(unsigned n, const Rational& epsilon) {
  if (n < 1) throw std::invalid_argument("counterexample: n must be positive");
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("counterexample: epsilon must lie in (0,1)");
  Index rows = n + 1;
  Index cols = n;
  std::vector<Label> entries(static_cast<std::size_t>(rows) * cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) entries[static_cast<std::size_t>(r) * cols + c] = c;
  }
  ValueMatrix matrix(rows, cols, std::move(entries));

  std::vector<Index> nonzero;
  for (Index r = 1; r < rows; ++r) nonzero.push_back(r);
  ProtocolTree tree = ProtocolTree::split(Player::one, std::move(nonzero), bisect_columns(0, cols),
                                          bisect_columns(0, cols));
  Protocol protocol(std::move(tree), matrix);

  Rational nn(n);
  std::vector<Rational> w1(matrix.cell_count());
  std::vector<Rational> w2(matrix.cell_count());
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      auto i = matrix.flat(r, c);
      if (r == 0) {
        w1[i] = epsilon / nn;
        w2[i] = (1 - epsilon) / nn;
      } else {
        w1[i] = (1 - epsilon) / (nn * nn);
        w2[i] = epsilon / (nn * nn);
      }
    }
  }
  auto d1 = Distribution::from_weights(rows, cols, std::move(w1), "D1");
  auto d2 = Distribution::from_weights(rows, cols, std::move(w2), "D2");
  return {std::move(matrix), std::move(protocol), std::move(d1), std::move(d2)};
}

}  // namespace parlab
