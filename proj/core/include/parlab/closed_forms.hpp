#ifndef PARLAB_CLOSED_FORMS_HPP
#define PARLAB_CLOSED_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "parlab/exact.hpp"
#include "parlab/par.hpp"
#include "parlab/set_problems.hpp"

namespace parlab {

// Formulas are evaluated for k up to this bound.
inline constexpr unsigned kMaxFormulaBits = 32;
// Brute-force legs of the cross-check stay at or below this bound.
inline constexpr unsigned kMaxBruteBits = 8;

/**
 * The tile-sum sequences behind the subjective PARs.
 *
 * For disjointness, h* sum |R^I(S)| over the tiles S of the induced
 * 1-partition and v* over the induced 2-partition; the suffix 1 or 0 restricts
 * to tiles where f is 1 or 0, and nH0/nV0 count the 0-tiles. For
 * intersection, h and v sum over all tiles.
 */
enum class SequenceId {
  dis_trivial_v0,
  dis_trivial_v1,
  dis_one_first_h0,
  dis_one_first_h1,
  dis_one_first_v0,
  dis_one_first_v1,
  dis_one_first_nH0,
  dis_one_first_nV0,
  dis_alternating_h0,
  dis_alternating_h1,
  dis_alternating_v0,
  dis_alternating_v1,
  dis_alternating_nH0,
  dis_alternating_nV0,
  int_trivial_v,
  int_alternating_h,
  int_alternating_v,
};

inline constexpr SequenceId kAllSequences[] = {
    SequenceId::dis_trivial_v0,      SequenceId::dis_trivial_v1,      SequenceId::dis_one_first_h0,
    SequenceId::dis_one_first_h1,    SequenceId::dis_one_first_v0,    SequenceId::dis_one_first_v1,
    SequenceId::dis_one_first_nH0,   SequenceId::dis_one_first_nV0,   SequenceId::dis_alternating_h0,
    SequenceId::dis_alternating_h1,  SequenceId::dis_alternating_v0,  SequenceId::dis_alternating_v1,
    SequenceId::dis_alternating_nH0, SequenceId::dis_alternating_nV0, SequenceId::int_trivial_v,
    SequenceId::int_alternating_h,   SequenceId::int_alternating_v,
};

// e.g. "disjointness/alternating/h0".
std::string name(SequenceId id);
SequenceId parse_sequence(const std::string& text);

// How a sequence is read off a brute-force tiling.
struct SequenceSource {
  SetProblem problem;
  ProtocolKind protocol;
  Scope scope;                 // wrt1 or wrt2
  std::optional<Label> label;  // restrict to tiles with this outcome
  bool count;                  // number of tiles instead of the |R^I| sum
};
SequenceSource source(SequenceId id);

// Iterates the recurrence from its k = 1 initial values. Throws
// std::invalid_argument for k = 0.
ExactNumber eval_recurrence(SequenceId id, unsigned k);
ExactNumber eval_closed_form(SequenceId id, unsigned k);
// |R^I| sum or tile count from the induced tiling; k <= kMaxBruteBits.
Integer eval_brute_force(SequenceId id, unsigned k);

enum class Quantity { objective, wrt1, wrt2, subjective, ratio };
std::string_view name(Quantity q);
Quantity parse_quantity(std::string_view text);

/**
 * One cell of the results table, or one of the per-player PARs it is built
 * from. All values are average-case PARs under the uniform distribution. An
 * empty protocol stands for "all protocols" and only carries a lower bound
 * on the objective PAR.
 */
struct Table1Row {
  SetProblem problem;
  std::optional<ProtocolKind> protocol;
  Quantity quantity;

  std::string name() const;
  bool is_bound() const { return !protocol.has_value(); }
  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

// Every protocol row with all five quantities, then the two bound rows.
std::vector<Table1Row> table1_rows();
Table1Row parse_table1_row(const std::string& text);

// Throws std::invalid_argument for bound rows.
ExactNumber eval_closed_form(const Table1Row& row, unsigned k);
// Leading term for rows whose table entry is asymptotic; exact rows return
// the closed form itself. Bound rows return the bound.
ExactNumber asymptote(const Table1Row& row, unsigned k);
bool has_asymptote(const Table1Row& row);
// (3/2)^k for disjointness, (7/4)^k for intersection.
Rational lower_bound(SetProblem p, unsigned k);

// Brute-force value from the induced tiling (k <= kMaxBruteBits). For bound
// rows: the least objective PAR over the three protocols.
Rational eval_brute_force(const Table1Row& row, unsigned k);

struct CheckEntry {
  std::string identity;
  unsigned k = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct CrossCheckOptions {
  unsigned k_max = 6;
  // Adds 1 to the closed form of the named sequence or row (negative control).
  std::optional<std::string> mutate;
};

struct CrossCheckReport {
  std::vector<CheckEntry> entries;

  bool all_pass() const;
  std::vector<CheckEntry> failures() const;
  // JSON list of {"identity","k","lhs","rhs","pass"}.
  std::string json() const;
};

/**
 * Runs every identity: recurrence = closed form and the conjugate
 * cancellation for k <= 32, closed form = brute force and the lower bounds
 * for k <= k_max, the stated k = 1 boundary values, and monotone asymptotic
 * convergence for k in 8..32. Throws std::invalid_argument if k_max > 8.
 */
CrossCheckReport cross_check(const CrossCheckOptions& options);

}  // namespace parlab

#endif  // PARLAB_CLOSED_FORMS_HPP
