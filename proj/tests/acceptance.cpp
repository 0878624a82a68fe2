// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parlab/closed_forms.hpp"
#include "parlab/par.hpp"
#include "parlab/protocol.hpp"
#include "parlab/set_problems.hpp"

namespace {

using namespace parlab;

constexpr unsigned kK = 8;

struct Criterion {
  int id;
  std::string title;
  std::function<void(std::vector<std::string>&)> body;
};

Rational r(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational p2(unsigned k) { return pow(r(2), k); }

template <typename A, typename B>
void expect_eq(std::vector<std::string>& errs, const std::string& what, const A& got, const B& want) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    errs.push_back(os.str());
  }
}

void expect(std::vector<std::string>& errs, const std::string& what, bool ok) {
  if (!ok) errs.push_back(what);
}

std::string tag(SetProblem p, ProtocolKind proto, unsigned k) {
  return std::string(name(p)) + "/" + std::string(name(proto)) + " k=" + std::to_string(k);
}

struct Instance {
  ValueMatrix m;
  Partition t;
};

Instance instance(SetProblem p, ProtocolKind proto, unsigned k) {
  ValueMatrix m = build_matrix({p, k});
  Partition t = induced_tiling(build_protocol({p, k}, proto), m);
  return {std::move(m), std::move(t)};
}

void disjointness_objective(std::vector<std::string>& errs) {
  for (auto proto : kAllProtocols) {
    for (unsigned k = 1; k <= kK; ++k) {
      auto [m, t] = instance(SetProblem::disjointness, proto, k);
      Rational v = avg_par_uniform(t, m, Scope::objective);
      expect_eq(errs, tag(SetProblem::disjointness, proto, k), v, p2(k) - 1 + pow(r(3, 4), k));
      expect(errs, tag(SetProblem::disjointness, proto, k) + " below (3/2)^k", v >= pow(r(3, 2), k));
    }
  }
}

void intersection_objective(std::vector<std::string>& errs) {
  for (unsigned k = 1; k <= kK; ++k) {
    for (auto proto : kAllProtocols) {
      auto [m, t] = instance(SetProblem::intersection, proto, k);
      expect_eq(errs, tag(SetProblem::intersection, proto, k), avg_par_uniform(t, m, Scope::objective),
                pow(r(7, 4), k));
    }
    expect(errs, "trivial and one-first tilings differ at k=" + std::to_string(k),
           instance(SetProblem::intersection, ProtocolKind::trivial, k)
               .t.same_blocks(instance(SetProblem::intersection, ProtocolKind::one_first, k).t));
  }
}

void disjointness_subjective(std::vector<std::string>& errs) {
  const auto d = SetProblem::disjointness;
  for (unsigned k = 1; k <= kK; ++k) {
    Rational kq = r(k);
    auto triv = instance(d, ProtocolKind::trivial, k);
    expect_eq(errs, tag(d, ProtocolKind::trivial, k) + " wrt1", avg_par_uniform(triv.t, triv.m, Scope::wrt1), r(1));
    expect_eq(errs, tag(d, ProtocolKind::trivial, k) + " wrt2", avg_par_uniform(triv.t, triv.m, Scope::wrt2),
              p2(k) - 2 * pow(r(3, 2), k) + 2 * pow(r(5, 4), k));

    auto of = instance(d, ProtocolKind::one_first, k);
    expect_eq(errs, tag(d, ProtocolKind::one_first, k) + " wrt1", avg_par_uniform(of.t, of.m, Scope::wrt1),
              kq / 2 - kq / 3 * pow(r(3, 4), k) + pow(r(3, 4), k));
    expect_eq(errs, tag(d, ProtocolKind::one_first, k) + " wrt2", avg_par_uniform(of.t, of.m, Scope::wrt2),
              pow(r(3, 2), k) + r(1, 2) * pow(r(5, 4), k) - 1 + r(1, 2) * pow(r(3, 4), k));

    auto alt = instance(d, ProtocolKind::alternating, k);
    for (auto q : {Quantity::wrt1, Quantity::wrt2}) {
      ExactNumber closed = eval_closed_form(Table1Row{d, ProtocolKind::alternating, q}, k);
      expect(errs, tag(d, ProtocolKind::alternating, k) + " closed form not rational", closed.is_rational());
      Scope s = q == Quantity::wrt1 ? Scope::wrt1 : Scope::wrt2;
      expect_eq(errs, tag(d, ProtocolKind::alternating, k) + " " + std::string(name(s)),
                ExactNumber(avg_par_uniform(alt.t, alt.m, s)), closed);
    }
  }
}

void intersection_subjective(std::vector<std::string>& errs) {
  const auto i = SetProblem::intersection;
  for (unsigned k = 1; k <= kK; ++k) {
    Index n = Index{1} << k;
    auto u = Distribution::uniform(n, n);
    for (auto proto : {ProtocolKind::trivial, ProtocolKind::one_first}) {
      auto [m, t] = instance(i, proto, k);
      expect_eq(errs, tag(i, proto, k) + " wrt1", avg_par_uniform(t, m, Scope::wrt1), r(1));
      expect_eq(errs, tag(i, proto, k) + " wrt2", avg_par_uniform(t, m, Scope::wrt2), pow(r(3, 2), k));
      expect_eq(errs, tag(i, proto, k) + " ratio", subjective_ratio(t, m, u), pow(r(3, 2), k));
    }
    auto [m, t] = instance(i, ProtocolKind::alternating, k);
    expect_eq(errs, tag(i, ProtocolKind::alternating, k) + " wrt1", avg_par_uniform(t, m, Scope::wrt1),
              r(4, 5) * pow(r(5, 4), k));
    expect_eq(errs, tag(i, ProtocolKind::alternating, k) + " wrt2", avg_par_uniform(t, m, Scope::wrt2),
              r(6, 5) * pow(r(5, 4), k));
    expect_eq(errs, tag(i, ProtocolKind::alternating, k) + " ratio", subjective_ratio(t, m, u), r(3, 2));
  }
}

void recurrences(std::vector<std::string>& errs) {
  for (auto id : kAllSequences) {
    for (unsigned k = 1; k <= kMaxFormulaBits; ++k) {
      ExactNumber rec = eval_recurrence(id, k);
      ExactNumber closed = eval_closed_form(id, k);
      expect_eq(errs, name(id) + " k=" + std::to_string(k), rec, closed);
      expect(errs, name(id) + " irrational at k=" + std::to_string(k), closed.is_rational());
    }
  }
  const std::pair<SequenceId, long> boundary[] = {
      {SequenceId::dis_one_first_h1, 3},   {SequenceId::dis_one_first_v1, 5},   {SequenceId::dis_trivial_v1, 5},
      {SequenceId::dis_alternating_h1, 3}, {SequenceId::dis_alternating_v1, 5}, {SequenceId::int_alternating_h, 4},
      {SequenceId::int_alternating_v, 6},
  };
  for (auto [id, value] : boundary) {
    expect_eq(errs, name(id) + " at k=1", eval_recurrence(id, 1), ExactNumber(value));
    expect_eq(errs, name(id) + " brute force at k=1", eval_brute_force(id, 1), Integer(value));
  }
}

void fooling_sets(std::vector<std::string>& errs) {
  for (unsigned k = 1; k <= kK; ++k) {
    ValueMatrix m = build_matrix({SetProblem::disjointness, k});
    auto pairs = fooling_set(k);
    expect_eq(errs, "fooling set size k=" + std::to_string(k), pairs.size(), std::size_t{1} << k);
    expect(errs, "fooling set rejected at k=" + std::to_string(k), certify_fooling_set(pairs, m));
    for (auto proto : kAllProtocols) {
      Partition t = instance(SetProblem::disjointness, proto, k).t;
      std::size_t ones = 0;
      for (std::size_t i = 0; i < t.size(); ++i) ones += m.at(t.region(i).cells().front()) == 1;
      expect_eq(errs, tag(SetProblem::disjointness, proto, k) + " 1-tiles", ones, std::size_t{1} << k);
    }
  }
}

void optimal(std::vector<std::string>& errs) {
  expect_eq(errs, "disjointness k=1", optimal_avg_objective_par(build_matrix({SetProblem::disjointness, 1})).value,
            r(7, 4));
  expect_eq(errs, "intersection k=1", optimal_avg_objective_par(build_matrix({SetProblem::intersection, 1})).value,
            r(7, 4));
  expect_eq(errs, "intersection k=2", optimal_avg_objective_par(build_matrix({SetProblem::intersection, 2})).value,
            r(49, 16));
  Rational d2 = optimal_avg_objective_par(build_matrix({SetProblem::disjointness, 2})).value;
  expect(errs, "disjointness k=2 outside [9/4, 57/16]: " + to_string(d2), d2 >= r(9, 4) && d2 <= r(57, 16));
}

void quadrants(std::vector<std::string>& errs) {
  for (auto p : kAllProblems) {
    for (auto proto : kAllProtocols) {
      for (unsigned k = 1; k <= kK; ++k) {
        expect(errs, tag(p, proto, k),
               recursive_tiling({p, k}, proto).same_tagged_blocks(instance(p, proto, k).t));
      }
    }
  }
}

void inducibility(std::vector<std::string>& errs) {
  Pinwheel pw = pinwheel();
  expect(errs, "pinwheel accepted", !is_inducible(pw.tiling, pw.matrix));
  for (auto p : kAllProblems) {
    for (auto proto : kAllProtocols) {
      for (unsigned k = 1; k <= 6; ++k) {
        auto [m, t] = instance(p, proto, k);
        expect(errs, tag(p, proto, k) + " rejected", is_inducible(t, m));
      }
    }
  }
  auto opt = optimal_avg_objective_par(build_matrix({SetProblem::disjointness, 2}));
  ValueMatrix m = build_matrix({SetProblem::disjointness, 2});
  expect(errs, "optimal protocol tiling rejected", is_inducible(induced_tiling(opt.protocol, m), m));
}

void counterexample(std::vector<std::string>& errs) {
  auto cx = probability_mass_counterexample(10, r(1, 10));
  const Partition& t = cx.protocol.tiling();
  GFunction mass{GVariant::probability_mass};
  Rational m1 = g_par(t, cx.matrix, Scope::objective, cx.d1, mass, Mode::average);
  Rational m2 = g_par(t, cx.matrix, Scope::objective, cx.d2, mass, Mode::average);
  Rational c1 = avg_par(t, cx.matrix, Scope::objective, cx.d1);
  Rational c2 = avg_par(t, cx.matrix, Scope::objective, cx.d2);
  expect_eq(errs, "mass D1", m1, r(2));
  expect_eq(errs, "mass D2", m2, r(2));
  expect_eq(errs, "cardinality D1", c1, r(209, 100));
  expect_eq(errs, "cardinality D2", c2, r(1001, 100));
  expect(errs, "cardinality PARs equal", c1 != c2);
}

Rational definitional_avg(const Partition& t, const ValueMatrix& m, Scope s) {
  Partition ideal = ideal_partition(m);
  Partition tt = t;
  if (s != Scope::objective) {
    Player i = s == Scope::wrt1 ? Player::one : Player::two;
    ideal = i_refine(ideal, i);
    tt = i_refine(t, i);
  }
  Rational sum = 0;
  for (std::size_t f = 0; f < m.cell_count(); ++f) {
    Cell x = m.cell(f);
    sum += r(static_cast<long>(ideal.region(ideal.owner(x)).size()), static_cast<long>(tt.region(tt.owner(x)).size()));
  }
  return sum / r(static_cast<long>(m.cell_count()));
}

void properties(std::vector<std::string>& errs) {
  for (auto p : kAllProblems) {
    for (auto proto : kAllProtocols) {
      for (unsigned k = 1; k <= 5; ++k) {
        auto [m, t] = instance(p, proto, k);
        std::string where = tag(p, proto, k);
        for (Scope s : {Scope::objective, Scope::wrt1, Scope::wrt2, Scope::subjective}) {
          Rational worst = worst_case_par(t, m, s);
          Rational avg = avg_par_uniform(t, m, s);
          expect(errs, where + " PAR below 1", avg >= 1);
          expect(errs, where + " worst below average", worst >= avg);
          if (s != Scope::subjective) expect_eq(errs, where + " shortcut", avg, definitional_avg(t, m, s));
        }
        // Splitting every tile into its rows is a finer monochromatic tiling.
        Partition finer = i_refine(t, Player::one);
        for (Scope s : {Scope::objective, Scope::wrt2}) {
          expect(errs, where + " refinement lowered PAR",
                 avg_par_uniform(finer, m, s) >= avg_par_uniform(t, m, s) &&
                     worst_case_par(finer, m, s) >= worst_case_par(t, m, s));
        }
      }
    }
  }
  for (const auto& row : table1_rows()) {
    if (!has_asymptote(row)) continue;
    std::optional<ExactNumber> previous;
    for (unsigned k = 8; k <= kMaxFormulaBits; ++k) {
      ExactNumber gap = (eval_closed_form(row, k) / asymptote(row, k) - ExactNumber(1)).abs();
      if (previous) expect(errs, row.name() + " gap grew at k=" + std::to_string(k), !(*previous < gap));
      previous = gap;
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "objective PAR, disjointness", disjointness_objective},
      {2, "objective PAR, intersection", intersection_objective},
      {3, "subjective PARs, disjointness", disjointness_subjective},
      {4, "subjective PARs, intersection", intersection_subjective},
      {5, "recurrence and closed-form identities", recurrences},
      {6, "fooling set and 1-tile counts", fooling_sets},
      {7, "optimal-protocol search", optimal},
      {8, "quadrant recursions", quadrants},
      {9, "inducibility", inducibility},
      {10, "probability-mass counterexample", counterexample},
      {11, "property suite", properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> errs;
    try {
      c.body(errs);
    } catch (const std::exception& e) {
      errs.push_back(std::string("exception: ") + e.what());
    }
    if (errs.empty()) {
      std::printf("criterion %2d PASS  %s\n", c.id, c.title.c_str());
    } else {
      ++failed;
      std::printf("criterion %2d FAIL  %s (%zu problems; first: %s)\n", c.id, c.title.c_str(), errs.size(),
                  errs.front().c_str());
    }
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
