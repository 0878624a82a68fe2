#ifndef PARLAB_PAR_HPP
#define PARLAB_PAR_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parlab/exact.hpp"
#include "parlab/matrix.hpp"
#include "parlab/protocol.hpp"

namespace parlab {

// Which pair of partitions a PAR compares: the tiling against the ideal
// partition (objective), or their i-refinements (wrt1, wrt2). Subjective is
// the max over the two players.
enum class Scope { objective, wrt1, wrt2, subjective };
enum class Mode { worst, average };

std::string_view name(Scope s);
std::string_view name(Mode m);
Scope parse_scope(std::string_view text);
Mode parse_mode(std::string_view text);

// Exact probability table over the cells of a rows x cols matrix.
class Distribution {
 public:
  static Distribution uniform(Index rows, Index cols);
  // Throws std::invalid_argument if a weight is negative or the total is not 1.
  static Distribution from_weights(Index rows, Index cols, std::vector<Rational> weights,
                                   std::string id = "explicit");
  static Distribution point_mass(Index rows, Index cols, Cell cell);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool is_uniform() const { return weights_.empty(); }
  const std::string& id() const { return id_; }

  const Rational& weight(std::size_t flat_index) const {
    return weights_.empty() ? uniform_weight_ : weights_[flat_index];
  }
  const Rational& weight(Cell c) const { return weight(static_cast<std::size_t>(c.row) * cols_ + c.col); }
  Rational mass(const Region& r) const;

 private:
  Distribution() = default;
  Index rows_ = 0;
  Index cols_ = 0;
  std::string id_;
  Rational uniform_weight_;
  std::vector<Rational> weights_;
};

enum class GVariant {
  cardinality,
  probability_mass,
  additive_distance,
  max_distance,
  plausible_deniability,
  relative_size,
};

// Distance between input pairs. Hamming counts differing bits of the two
// encodings; discrete is 1 for distinct pairs.
enum class DistanceKind { hamming, discrete, zero };

std::string_view name(GVariant g);
GVariant parse_g_variant(std::string_view text);
DistanceKind parse_distance(std::string_view text);

/**
 * A region measure g(R, x) replacing cardinality in the PAR ratio.
 *
 * probability_mass       Pr_D(R)
 * additive_distance      1 + sum over y in R, y != x, of d(x, y)
 * max_distance           1 + max over y in R, y != x, of d(y, x)
 * plausible_deniability  1 + max{d0 : Pr_D({y in R : d(y,x) >= d0}) / Pr_D(R) >= threshold},
 *                        d0 ranging over the distances realized in R
 * relative_size          diam_d(R) / |x|, |x| = size_measure(x), default 1 + row
 */
struct GFunction {
  GVariant variant = GVariant::cardinality;
  DistanceKind distance = DistanceKind::hamming;
  Rational threshold{1, 2};
  std::function<Rational(Cell)> size_measure;

  std::string describe() const;
};

unsigned distance(DistanceKind kind, Cell a, Cell b);

// All PAR entry points require `t` to be a monochromatic tiling of `m` and
// throw InvalidPartition otherwise.
Rational worst_case_par(const Partition& t, const ValueMatrix& m, Scope scope);
// Expectation over D of |R^I(x)| / |R^P(x)|, summed cell by cell.
Rational avg_par(const Partition& t, const ValueMatrix& m, Scope scope, const Distribution& d);
// Uniform shortcut: sum of |R^I(S)| over tiles S, divided by the cell count.
Rational avg_par_uniform(const Partition& t, const ValueMatrix& m, Scope scope);
// max(PAR wrt1, PAR wrt2) / min(PAR wrt1, PAR wrt2), average case under D.
Rational subjective_ratio(const Partition& t, const ValueMatrix& m, const Distribution& d);

// Worst case maximizes over the support of D; average case is E_D. Throws
// std::domain_error when g(R, x) = 0 for a region that enters a ratio.
Rational g_par(const Partition& t, const ValueMatrix& m, Scope scope, const Distribution& d,
               const GFunction& g, Mode mode);

// Per outcome label: sum of |R^I(S)| and number of tiles S, over the tiling
// refined for `scope` (objective, wrt1 or wrt2).
struct TileContribution {
  Integer sum;
  std::size_t count = 0;
};
std::map<Label, TileContribution> tile_contributions(const Partition& t, const ValueMatrix& m,
                                                     Scope scope);

inline constexpr Index kMaxOptimalSide = 8;

struct OptimalProtocol {
  Rational value;
  ProtocolTree protocol;
};

// Minimum average-case objective PAR (uniform) over all protocols for m, by
// memoized search over row/column bipartitions of each live block. Sides of
// at most kMaxOptimalSide (k <= 3); throws std::invalid_argument beyond.
OptimalProtocol optimal_avg_objective_par(const ValueMatrix& m);

struct ParReport {
  std::string problem;
  std::string protocol;
  unsigned k = 0;
  Scope scope = Scope::objective;
  Mode mode = Mode::average;
  std::string distribution = "uniform";
  std::string g = "cardinality";
  Rational value;
  std::optional<Rational> ratio_of_subjective;

  std::string json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

// The probability-mass counterexample: an (n+1) x n matrix whose maximal
// regions are the columns, a protocol in which player 1 reveals whether its
// input is 0, and the two distributions D1 (mass eps on row 0) and D2 (mass
// 1 - eps on row 0).
struct MassCounterexample {
  ValueMatrix matrix;
  Protocol protocol;
  Distribution d1;
  Distribution d2;
};
MassCounterexample probability_mass_counterexample(unsigned n, const Rational& epsilon);

}  // namespace parlab

#endif  // PARLAB_PAR_HPP
