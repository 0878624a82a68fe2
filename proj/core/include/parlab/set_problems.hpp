#ifndef PARLAB_SET_PROBLEMS_HPP
#define PARLAB_SET_PROBLEMS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parlab/matrix.hpp"
#include "parlab/protocol.hpp"

namespace parlab {

// Explicit matrices and protocols are built up to this many bits (16M cells).
inline constexpr unsigned kMaxExplicitBits = 12;

enum class SetProblem { disjointness, intersection };
enum class ProtocolKind { trivial, one_first, alternating };

struct ProblemKind {
  SetProblem problem;
  unsigned k;
};

std::string_view name(SetProblem p);
std::string_view name(ProtocolKind p);
// Accepts the CLI spellings ("disjointness", "one-first", ...); throws std::invalid_argument.
SetProblem parse_problem(std::string_view text);
ProtocolKind parse_protocol(std::string_view text);

inline constexpr SetProblem kAllProblems[] = {SetProblem::disjointness, SetProblem::intersection};
inline constexpr ProtocolKind kAllProtocols[] = {ProtocolKind::trivial, ProtocolKind::one_first,
                                                 ProtocolKind::alternating};

// Disjointness: 1 iff row & col == 0. Intersection: row & col.
Label set_function(SetProblem p, Index x1, Index x2);
ValueMatrix build_matrix(ProblemKind p);

/**
 * Builds the named protocol for the problem. Bits are announced from the
 * most significant (element k) down.
 *
 * trivial:     player 1 sends every bit of x1, then player 2 sends the
 *              outcome: one bit (1 = disjoint) for disjointness, omitted
 *              when x1 = 0; for intersection, x2's bits at the positions
 *              of x1's elements.
 * one_first:   per bit, player 1 announces; on 1, player 2 announces its own.
 * alternating: like one_first, except that a leading 0 hands the lead
 *              for the next bit to the other player.
 *
 * Disjointness protocols stop as soon as both players announced a 1.
 */
ProtocolTree build_protocol(ProblemKind p, ProtocolKind proto);

// Tiling assembled from the quadrant recursion T_k -> T_{k+1} alone, tagged
// with the transcripts of the corresponding protocol. Covers all six pairs.
Partition recursive_tiling(ProblemKind p, ProtocolKind proto);

// The 2^k pairs (S, complement of S), ordered by S.
std::vector<std::pair<Index, Index>> fooling_set(unsigned k);

// True iff no two pairs of `pairs` can share a 1-monochromatic rectangle of
// the disjointness matrix: for every two pairs one of the crossed cells is 0.
bool certify_fooling_set(const std::vector<std::pair<Index, Index>>& pairs, const ValueMatrix& m);

}  // namespace parlab

#endif  // PARLAB_SET_PROBLEMS_HPP
