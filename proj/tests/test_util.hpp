#ifndef PARLAB_TESTS_TEST_UTIL_HPP
#define PARLAB_TESTS_TEST_UTIL_HPP

#include <string>

#include "parlab/exact.hpp"
#include "parlab/matrix.hpp"
#include "parlab/protocol.hpp"
#include "parlab/set_problems.hpp"

namespace parlab::testing {

inline Rational q(const std::string& text) { return parse_rational(text); }

inline Partition tiling_of(SetProblem p, ProtocolKind proto, unsigned k) {
  ProblemKind pk{p, k};
  return induced_tiling(build_protocol(pk, proto), build_matrix(pk));
}

}  // namespace parlab::testing

#endif  // PARLAB_TESTS_TEST_UTIL_HPP
