#include <iostream>

#include "parlab/par.hpp"
#include "parlab/set_problems.hpp"

int main() {
  using namespace parlab;
  ProblemKind pk{SetProblem::intersection, 2};
  ValueMatrix m = build_matrix(pk);
  Partition t = induced_tiling(build_protocol(pk, ProtocolKind::alternating), m);
  Rational v = avg_par_uniform(t, m, Scope::objective);
  std::cout << to_string(v) << '\n';
  return v == Rational(49, 16) ? 0 : 1;
}
