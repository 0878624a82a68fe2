#include "parlab/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace parlab {

namespace {

using E = ExactNumber;

Rational pw(long base, unsigned k) { return pow(Rational(base), k); }
Rational pw(long num, long den, unsigned k) { return pow(Rational(num, den), k); }
Integer two_to(unsigned k) { return pow(Integer(2), k); }
Rational sign_pow(unsigned k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

const E kSqrt2 = E::sqrt2();

void check_k(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

// Coupled sequence states, advanced from k to k + 1.
struct DisTrivialState {
  Integer v0 = 1, v1 = 5;
  void step(unsigned k) {
    Integer p2 = two_to(k), p3 = pow(Integer(3), k), p4 = pow(Integer(4), k);
    v0 = 5 * v0 + 2 * p2 * (p4 - p3) + pow(Integer(8), k);
    v1 = 5 * v1;
  }
};

struct DisOneFirstState {
  Integer h0 = 1, h1 = 3, v0 = 1, v1 = 5, nH0 = 1, nV0 = 1;
  void step(unsigned k) {
    Integer p2 = two_to(k), p3 = pow(Integer(3), k), p4 = pow(Integer(4), k);
    Integer corner = 2 * p4 - p3;
    Integer h0n = 3 * h0 + p2 * nH0 + corner;
    Integer v0n = 5 * v0 + p2 * nV0 + corner;
    nH0 = 2 * nH0 + p2;
    nV0 = 3 * nV0 + p2;
    h0 = h0n;
    v0 = v0n;
    h1 = 3 * h1;
    v1 = 5 * v1;
  }
};

struct DisAlternatingState {
  Integer h0 = 1, h1 = 3, v0 = 1, v1 = 5, nH0 = 1, nV0 = 1;
  void step(unsigned k) {
    Integer p2 = two_to(k), p3 = pow(Integer(3), k), p4 = pow(Integer(4), k);
    Integer corner = 2 * p4 - p3;
    Integer bottom_left = h0 + nH0 * p2;
    Integer h0n = bottom_left + 2 * v0 + corner;
    Integer v0n = 2 * v0 + 2 * h0 + bottom_left + corner;
    Integer h1n = h1 + 2 * v1;
    Integer v1n = 2 * v1 + 3 * h1;
    Integer nH0n = nH0 + nV0 + p2;
    Integer nV0n = nV0 + 2 * nH0 + p2;
    h0 = h0n;
    v0 = v0n;
    h1 = h1n;
    v1 = v1n;
    nH0 = nH0n;
    nV0 = nV0n;
  }
};

struct IntState {
  Integer trivial_v = 6, h = 4, v = 6;
  void step(unsigned) {
    trivial_v = 6 * trivial_v;
    Integer s = h + v;
    h = 2 * s;
    v = 3 * s;
  }
};

template <typename State>
State iterate(unsigned k) {
  State s;
  for (unsigned j = 1; j < k; ++j) s.step(j);
  return s;
}

E nH0_alternating(unsigned k) {
  E one_minus = (E(1) - kSqrt2).pow(k);
  E one_plus = (E(1) + kSqrt2).pow(k);
  return E(-2 * pw(2, k)) + (E(1) - E(3) / (E(2) * kSqrt2)) * one_minus +
         one_plus * (E(4) + E(3) * kSqrt2) / E(4);
}

E nV0_alternating(unsigned k) {
  E one_minus = (E(1) - kSqrt2).pow(k);
  E one_plus = (E(1) + kSqrt2).pow(k);
  return E(-3 * pw(2, k)) + one_minus * (E(Rational(3, 2)) - kSqrt2) +
         one_plus * (E(Rational(3, 2)) + kSqrt2);
}

E h0_alternating(unsigned k) {
  E one_minus = (E(1) - kSqrt2).pow(k);
  E one_plus = (E(1) + kSqrt2).pow(k);
  E c = E(5 * pw(2, k + 1));
  E inner = c * one_minus * (E(-3) + E(2) * kSqrt2) + c * one_plus * (E(3) + E(2) * kSqrt2) +
            kSqrt2 * E(sign_pow(k) - 7 * pw(2, 2 * k + 3) + 5 * pw(3, k + 1));
  return inner / (E(20) * kSqrt2);
}

E v0_alternating(unsigned k) {
  E one_minus = (E(1) - kSqrt2).pow(k);
  E one_plus = (E(1) + kSqrt2).pow(k);
  E c = E(5 * pw(2, k + 1));
  E inner = E(-sign_pow(k) + 25 * pw(3, k) - 21 * pw(4, k + 1)) -
            c * one_minus * (E(-3) + E(2) * kSqrt2) + c * one_plus * (E(3) + E(2) * kSqrt2);
  return inner / E(20);
}

E par_alternating_1(unsigned k) {
  E inner = E(sign_pow(k) - pw(2, 2 * k + 3) + pw(3, k + 1)) +
            (E(4) - E(3) * kSqrt2) * (E(2) - E(2) * kSqrt2).pow(k) +
            (E(2) + E(2) * kSqrt2).pow(k) * (E(4) + E(3) * kSqrt2);
  return inner / E(pw(4, k + 1));
}

E par_alternating_2(unsigned k) {
  E c = E(pw(2, k + 1));
  E inner = E(-sign_pow(k) + 5 * pw(3, k) - 3 * pw(4, k + 1)) +
            c * (E(3) - E(2) * kSqrt2) * (E(1) - kSqrt2).pow(k) +
            c * (E(3) + E(2) * kSqrt2) * (E(1) + kSqrt2).pow(k);
  return inner / E(pw(4, k + 1));
}

// Per-player closed forms.
E wrt(SetProblem problem, ProtocolKind protocol, Player i, unsigned k) {
  const Rational K(k);
  if (problem == SetProblem::disjointness) {
    switch (protocol) {
      case ProtocolKind::trivial:
        if (i == Player::one) return E(1);
        return E(pw(2, k) - 2 * pw(3, 2, k) + 2 * pw(5, 4, k));
      case ProtocolKind::one_first:
        if (i == Player::one) return E(K / 2 - K / 3 * pw(3, 4, k) + pw(3, 4, k));
        return E(pw(3, 2, k) + pw(5, 4, k) / 2 - 1 + pw(3, 4, k) / 2);
      case ProtocolKind::alternating:
        return i == Player::one ? par_alternating_1(k) : par_alternating_2(k);
    }
  }
  if (protocol == ProtocolKind::alternating) {
    return E((i == Player::one ? Rational(4, 5) : Rational(6, 5)) * pw(5, 4, k));
  }
  return i == Player::one ? E(1) : E(pw(3, 2, k));
}

E golden_sqrt2_power(unsigned k) { return ((E(1) + kSqrt2) / E(2)).pow(k); }

}  // namespace

std::string name(SequenceId id) {
  switch (id) {
    case SequenceId::dis_trivial_v0:
      return "disjointness/trivial/v0";
    case SequenceId::dis_trivial_v1:
      return "disjointness/trivial/v1";
    case SequenceId::dis_one_first_h0:
      return "disjointness/one-first/h0";
    case SequenceId::dis_one_first_h1:
      return "disjointness/one-first/h1";
    case SequenceId::dis_one_first_v0:
      return "disjointness/one-first/v0";
    case SequenceId::dis_one_first_v1:
      return "disjointness/one-first/v1";
    case SequenceId::dis_one_first_nH0:
      return "disjointness/one-first/nH0";
    case SequenceId::dis_one_first_nV0:
      return "disjointness/one-first/nV0";
    case SequenceId::dis_alternating_h0:
      return "disjointness/alternating/h0";
    case SequenceId::dis_alternating_h1:
      return "disjointness/alternating/h1";
    case SequenceId::dis_alternating_v0:
      return "disjointness/alternating/v0";
    case SequenceId::dis_alternating_v1:
      return "disjointness/alternating/v1";
    case SequenceId::dis_alternating_nH0:
      return "disjointness/alternating/nH0";
    case SequenceId::dis_alternating_nV0:
      return "disjointness/alternating/nV0";
    case SequenceId::int_trivial_v:
      return "intersection/trivial/v";
    case SequenceId::int_alternating_h:
      return "intersection/alternating/h";
    case SequenceId::int_alternating_v:
      return "intersection/alternating/v";
  }
  return "?";
}

SequenceId parse_sequence(const std::string& text) {
  for (auto id : kAllSequences) {
    if (name(id) == text) return id;
  }
  throw std::invalid_argument("unknown sequence: " + text);
}

SequenceSource source(SequenceId id) {
  using SP = SetProblem;
  using PK = ProtocolKind;
  const auto d = SP::disjointness;
  switch (id) {
    case SequenceId::dis_trivial_v0:
      return {d, PK::trivial, Scope::wrt2, 0, false};
    case SequenceId::dis_trivial_v1:
      return {d, PK::trivial, Scope::wrt2, 1, false};
    case SequenceId::dis_one_first_h0:
      return {d, PK::one_first, Scope::wrt1, 0, false};
    case SequenceId::dis_one_first_h1:
      return {d, PK::one_first, Scope::wrt1, 1, false};
    case SequenceId::dis_one_first_v0:
      return {d, PK::one_first, Scope::wrt2, 0, false};
    case SequenceId::dis_one_first_v1:
      return {d, PK::one_first, Scope::wrt2, 1, false};
    case SequenceId::dis_one_first_nH0:
      return {d, PK::one_first, Scope::wrt1, 0, true};
    case SequenceId::dis_one_first_nV0:
      return {d, PK::one_first, Scope::wrt2, 0, true};
    case SequenceId::dis_alternating_h0:
      return {d, PK::alternating, Scope::wrt1, 0, false};
    case SequenceId::dis_alternating_h1:
      return {d, PK::alternating, Scope::wrt1, 1, false};
    case SequenceId::dis_alternating_v0:
      return {d, PK::alternating, Scope::wrt2, 0, false};
    case SequenceId::dis_alternating_v1:
      return {d, PK::alternating, Scope::wrt2, 1, false};
    case SequenceId::dis_alternating_nH0:
      return {d, PK::alternating, Scope::wrt1, 0, true};
    case SequenceId::dis_alternating_nV0:
      return {d, PK::alternating, Scope::wrt2, 0, true};
    case SequenceId::int_trivial_v:
      return {SP::intersection, PK::trivial, Scope::wrt2, std::nullopt, false};
    case SequenceId::int_alternating_h:
      return {SP::intersection, PK::alternating, Scope::wrt1, std::nullopt, false};
    case SequenceId::int_alternating_v:
      return {SP::intersection, PK::alternating, Scope::wrt2, std::nullopt, false};
  }
  throw std::invalid_argument("unknown sequence id");
}

ExactNumber eval_recurrence(SequenceId id, unsigned k) {
  check_k(k);
  switch (id) {
    case SequenceId::dis_trivial_v0:
      return E(Rational(iterate<DisTrivialState>(k).v0));
    case SequenceId::dis_trivial_v1:
      return E(Rational(iterate<DisTrivialState>(k).v1));
    case SequenceId::dis_one_first_h0:
      return E(Rational(iterate<DisOneFirstState>(k).h0));
    case SequenceId::dis_one_first_h1:
      return E(Rational(iterate<DisOneFirstState>(k).h1));
    case SequenceId::dis_one_first_v0:
      return E(Rational(iterate<DisOneFirstState>(k).v0));
    case SequenceId::dis_one_first_v1:
      return E(Rational(iterate<DisOneFirstState>(k).v1));
    case SequenceId::dis_one_first_nH0:
      return E(Rational(iterate<DisOneFirstState>(k).nH0));
    case SequenceId::dis_one_first_nV0:
      return E(Rational(iterate<DisOneFirstState>(k).nV0));
    case SequenceId::dis_alternating_h0:
      return E(Rational(iterate<DisAlternatingState>(k).h0));
    case SequenceId::dis_alternating_h1:
      return E(Rational(iterate<DisAlternatingState>(k).h1));
    case SequenceId::dis_alternating_v0:
      return E(Rational(iterate<DisAlternatingState>(k).v0));
    case SequenceId::dis_alternating_v1:
      return E(Rational(iterate<DisAlternatingState>(k).v1));
    case SequenceId::dis_alternating_nH0:
      return E(Rational(iterate<DisAlternatingState>(k).nH0));
    case SequenceId::dis_alternating_nV0:
      return E(Rational(iterate<DisAlternatingState>(k).nV0));
    case SequenceId::int_trivial_v:
      return E(Rational(iterate<IntState>(k).trivial_v));
    case SequenceId::int_alternating_h:
      return E(Rational(iterate<IntState>(k).h));
    case SequenceId::int_alternating_v:
      return E(Rational(iterate<IntState>(k).v));
  }
  throw std::invalid_argument("unknown sequence id");
}

ExactNumber eval_closed_form(SequenceId id, unsigned k) {
  check_k(k);
  const Rational K(k);
  switch (id) {
    case SequenceId::dis_trivial_v0:
      return E(pw(8, k) - 2 * pw(2, k) * pw(3, k) + pw(5, k));
    case SequenceId::dis_trivial_v1:
    case SequenceId::dis_one_first_v1:
      return E(pw(5, k));
    case SequenceId::dis_one_first_h0:
      return E(K / 6 * (3 * pw(4, k) - 2 * pw(3, k)));
    case SequenceId::dis_one_first_h1:
      return E(pw(3, k));
    case SequenceId::dis_one_first_v0:
      // Printed under the name v1; it is the 0-tile sum.
      return E(-pw(4, k) + pw(3, k) / 2 + pw(6, k) - pw(5, k) / 2);
    case SequenceId::dis_one_first_nH0:
      return E(K * pw(2, k) / 2);
    case SequenceId::dis_one_first_nV0:
      return E(pw(3, k) - pw(2, k));
    case SequenceId::dis_alternating_h0:
      return h0_alternating(k);
    case SequenceId::dis_alternating_h1:
      return E(Rational(4, 5) * pw(4, k) + sign_pow(k) / 5);
    case SequenceId::dis_alternating_v0:
      return v0_alternating(k);
    case SequenceId::dis_alternating_v1:
      return E(Rational(6, 5) * pw(4, k) - sign_pow(k) / 5);
    case SequenceId::dis_alternating_nH0:
      return nH0_alternating(k);
    case SequenceId::dis_alternating_nV0:
      return nV0_alternating(k);
    case SequenceId::int_trivial_v:
      return E(pw(6, k));
    case SequenceId::int_alternating_h:
      return E(4 * pw(5, k - 1));
    case SequenceId::int_alternating_v:
      return E(6 * pw(5, k - 1));
  }
  throw std::invalid_argument("unknown sequence id");
}

namespace {

struct BruteData {
  Rational objective;
  Rational wrt1;
  Rational wrt2;
  std::map<Label, TileContribution> c1;
  std::map<Label, TileContribution> c2;
};

BruteData compute_brute(SetProblem problem, ProtocolKind protocol, unsigned k) {
  check_k(k);
  if (k > kMaxBruteBits) {
    throw std::invalid_argument("brute force is capped at k = " + std::to_string(kMaxBruteBits));
  }
  ProblemKind pk{problem, k};
  ValueMatrix m = build_matrix(pk);
  Partition t = induced_tiling(build_protocol(pk, protocol), m);
  BruteData b;
  b.objective = avg_par_uniform(t, m, Scope::objective);
  b.c1 = tile_contributions(t, m, Scope::wrt1);
  b.c2 = tile_contributions(t, m, Scope::wrt2);
  Rational cells(pow(Integer(4), k));
  auto total = [&](const std::map<Label, TileContribution>& c) {
    Integer s = 0;
    for (const auto& [label, entry] : c) s += entry.sum;
    return Rational(Rational(s) / cells);
  };
  b.wrt1 = total(b.c1);
  b.wrt2 = total(b.c2);
  return b;
}

Integer sequence_from(const BruteData& b, const SequenceSource& s) {
  const auto& c = s.scope == Scope::wrt1 ? b.c1 : b.c2;
  Integer out = 0;
  for (const auto& [label, entry] : c) {
    if (s.label && *s.label != label) continue;
    out += s.count ? Integer(static_cast<unsigned long>(entry.count)) : entry.sum;
  }
  return out;
}

Rational row_from(const BruteData& b, Quantity q) {
  switch (q) {
    case Quantity::objective:
      return b.objective;
    case Quantity::wrt1:
      return b.wrt1;
    case Quantity::wrt2:
      return b.wrt2;
    case Quantity::subjective:
      return std::max(b.wrt1, b.wrt2);
    case Quantity::ratio:
      return std::max(b.wrt1, b.wrt2) / std::min(b.wrt1, b.wrt2);
  }
  return 0;
}

class BruteCache {
 public:
  const BruteData& get(SetProblem problem, ProtocolKind protocol, unsigned k) {
    auto key = std::make_tuple(problem, protocol, k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, compute_brute(problem, protocol, k)).first;
    return it->second;
  }

 private:
  std::map<std::tuple<SetProblem, ProtocolKind, unsigned>, BruteData> cache_;
};

Rational brute_row(BruteCache& cache, const Table1Row& row, unsigned k) {
  if (row.is_bound()) {
    std::optional<Rational> best;
    for (auto proto : kAllProtocols) {
      Rational v = cache.get(row.problem, proto, k).objective;
      if (!best || v < *best) best = v;
    }
    return *best;
  }
  return row_from(cache.get(row.problem, *row.protocol, k), row.quantity);
}

}  // namespace

Integer eval_brute_force(SequenceId id, unsigned k) {
  auto s = source(id);
  return sequence_from(compute_brute(s.problem, s.protocol, k), s);
}

std::string_view name(Quantity q) {
  switch (q) {
    case Quantity::objective:
      return "objective";
    case Quantity::wrt1:
      return "wrt1";
    case Quantity::wrt2:
      return "wrt2";
    case Quantity::subjective:
      return "subjective";
    case Quantity::ratio:
      return "ratio";
  }
  return "?";
}

Quantity parse_quantity(std::string_view text) {
  for (auto q : {Quantity::objective, Quantity::wrt1, Quantity::wrt2, Quantity::subjective, Quantity::ratio}) {
    if (text == name(q)) return q;
  }
  throw std::invalid_argument("unknown quantity: " + std::string(text));
}

std::string Table1Row::name() const {
  std::string out(parlab::name(problem));
  out += "/";
  out += protocol ? std::string(parlab::name(*protocol)) : std::string("all");
  out += "/";
  out += parlab::name(quantity);
  return out;
}

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (auto p : kAllProblems) {
    for (auto proto : kAllProtocols) {
      for (auto q : {Quantity::objective, Quantity::wrt1, Quantity::wrt2, Quantity::subjective, Quantity::ratio}) {
        rows.push_back({p, proto, q});
      }
    }
  }
  for (auto p : kAllProblems) rows.push_back({p, std::nullopt, Quantity::objective});
  return rows;
}

Table1Row parse_table1_row(const std::string& text) {
  for (const auto& row : table1_rows()) {
    if (row.name() == text) return row;
  }
  throw std::invalid_argument("unknown table row: " + text);
}

ExactNumber eval_closed_form(const Table1Row& row, unsigned k) {
  check_k(k);
  if (row.is_bound()) throw std::invalid_argument(row.name() + " is a lower bound, not a closed form");
  const auto proto = *row.protocol;
  switch (row.quantity) {
    case Quantity::objective:
      if (row.problem == SetProblem::disjointness) return E(pw(2, k) - 1 + pw(3, 4, k));
      return E(pw(7, 4, k));
    case Quantity::wrt1:
      return wrt(row.problem, proto, Player::one, k);
    case Quantity::wrt2:
      return wrt(row.problem, proto, Player::two, k);
    case Quantity::subjective:
    case Quantity::ratio: {
      E a = wrt(row.problem, proto, Player::one, k);
      E b = wrt(row.problem, proto, Player::two, k);
      E hi = a < b ? b : a;
      E lo = a < b ? a : b;
      return row.quantity == Quantity::subjective ? hi : hi / lo;
    }
  }
  throw std::invalid_argument("unknown quantity");
}

bool has_asymptote(const Table1Row& row) {
  if (row.is_bound() || row.problem == SetProblem::intersection) return false;
  return !(row.protocol == ProtocolKind::trivial && row.quantity == Quantity::wrt1);
}

ExactNumber asymptote(const Table1Row& row, unsigned k) {
  check_k(k);
  if (row.is_bound()) return E(lower_bound(row.problem, k));
  if (!has_asymptote(row)) return eval_closed_form(row, k);
  if (row.quantity == Quantity::objective) return E(pw(2, k));
  switch (*row.protocol) {
    case ProtocolKind::trivial:
      return E(pw(2, k));
    case ProtocolKind::one_first:
      switch (row.quantity) {
        case Quantity::wrt1:
          return E(Rational(k) / 2);
        case Quantity::ratio:
          return E(Rational(2) / Rational(k) * pw(3, 2, k));
        default:
          return E(pw(3, 2, k));
      }
    case ProtocolKind::alternating:
      switch (row.quantity) {
        case Quantity::wrt1:
          return (E(4) + E(3) * kSqrt2) / E(4) * golden_sqrt2_power(k);
        case Quantity::ratio:
          return kSqrt2;
        default:
          return (E(3) + E(2) * kSqrt2) / E(2) * golden_sqrt2_power(k);
      }
  }
  throw std::invalid_argument("unknown row");
}

Rational lower_bound(SetProblem p, unsigned k) {
  return p == SetProblem::disjointness ? pw(3, 2, k) : pw(7, 4, k);
}

Rational eval_brute_force(const Table1Row& row, unsigned k) {
  BruteCache cache;
  return brute_row(cache, row, k);
}

bool CrossCheckReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

std::vector<CheckEntry> CrossCheckReport::failures() const {
  std::vector<CheckEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [](const CheckEntry& e) { return !e.pass; });
  return out;
}

std::string CrossCheckReport::json() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["identity"] = e.identity;
    j["k"] = e.k;
    j["lhs"] = e.lhs;
    j["rhs"] = e.rhs;
    j["pass"] = e.pass;
    list.push_back(std::move(j));
  }
  return list.dump();
}

namespace {

class Checker {
 public:
  explicit Checker(const CrossCheckOptions& o) : options_(o) {}

  E closed(SequenceId id, unsigned k) const {
    E v = eval_closed_form(id, k);
    return mutated(name(id)) ? v + E(1) : v;
  }

  E closed(const Table1Row& row, unsigned k) const {
    E v = eval_closed_form(row, k);
    return mutated(row.name()) ? v + E(1) : v;
  }

  void equal(const std::string& identity, unsigned k, const E& lhs, const E& rhs) {
    report_.entries.push_back({identity, k, lhs.str(), rhs.str(), lhs == rhs});
  }

  void holds(const std::string& identity, unsigned k, const E& lhs, const E& rhs, bool pass) {
    report_.entries.push_back({identity, k, lhs.str(), rhs.str(), pass});
  }

  CrossCheckReport run() {
    sequences();
    boundaries();
    rows();
    bounds();
    convergence();
    return std::move(report_);
  }

 private:
  bool mutated(const std::string& id) const { return options_.mutate && *options_.mutate == id; }

  void sequences() {
    for (auto id : kAllSequences) {
      for (unsigned k = 1; k <= kMaxFormulaBits; ++k) {
        E c = closed(id, k);
        equal("recurrence = closed form: " + name(id), k, eval_recurrence(id, k), c);
        holds("rational closed form: " + name(id), k, c, E(c.rational_part()), c.is_rational());
      }
      auto s = source(id);
      for (unsigned k = 1; k <= options_.k_max; ++k) {
        E brute(Rational(sequence_from(cache_.get(s.problem, s.protocol, k), s)));
        equal("closed form = brute force: " + name(id), k, closed(id, k), brute);
      }
    }
  }

  void boundaries() {
    const std::pair<SequenceId, long> stated[] = {
        {SequenceId::dis_trivial_v0, 1},      {SequenceId::dis_trivial_v1, 5},
        {SequenceId::dis_one_first_h1, 3},    {SequenceId::dis_one_first_v1, 5},
        {SequenceId::dis_one_first_h0, 1},    {SequenceId::dis_one_first_v0, 1},
        {SequenceId::dis_one_first_nH0, 1},   {SequenceId::dis_one_first_nV0, 1},
        {SequenceId::dis_alternating_h1, 3},  {SequenceId::dis_alternating_v1, 5},
        {SequenceId::dis_alternating_h0, 1},  {SequenceId::dis_alternating_v0, 1},
        {SequenceId::dis_alternating_nH0, 1}, {SequenceId::dis_alternating_nV0, 1},
        {SequenceId::int_alternating_h, 4},   {SequenceId::int_alternating_v, 6},
        {SequenceId::int_trivial_v, 6},
    };
    for (const auto& [id, value] : stated) {
      equal("boundary value (closed form): " + name(id), 1, closed(id, 1), E(value));
      equal("boundary value (recurrence): " + name(id), 1, eval_recurrence(id, 1), E(value));
    }
  }

  void rows() {
    for (const auto& row : table1_rows()) {
      if (row.is_bound()) continue;
      for (unsigned k = 1; k <= kMaxFormulaBits; ++k) {
        E c = closed(row, k);
        holds("rational closed form: " + row.name(), k, c, E(c.rational_part()), c.is_rational());
      }
      for (unsigned k = 1; k <= options_.k_max; ++k) {
        equal("closed form = brute force: " + row.name(), k, closed(row, k), E(brute_row(cache_, row, k)));
      }
    }
  }

  void bounds() {
    for (auto p : kAllProblems) {
      Table1Row bound{p, std::nullopt, Quantity::objective};
      for (unsigned k = 1; k <= options_.k_max; ++k) {
        Rational b = lower_bound(p, k);
        for (auto proto : kAllProtocols) {
          Rational v = cache_.get(p, proto, k).objective;
          holds("lower bound (brute force): " + bound.name() + " via " + std::string(name(proto)), k, E(v), E(b),
                v >= b);
        }
      }
      for (unsigned k = 1; k <= kMaxFormulaBits; ++k) {
        E c = closed(Table1Row{p, ProtocolKind::trivial, Quantity::objective}, k);
        E b(lower_bound(p, k));
        holds("lower bound (closed form): " + bound.name(), k, c, b, !(c < b));
      }
      for (unsigned k = 1; k <= std::min(options_.k_max, 3u); ++k) {
        Rational opt = optimal_avg_objective_par(build_matrix({p, k})).value;
        Rational b = lower_bound(p, k);
        holds("lower bound (optimal protocol): " + bound.name(), k, E(opt), E(b), opt >= b);
      }
    }
  }

  void convergence() {
    constexpr unsigned kFrom = 8;
    for (const auto& row : table1_rows()) {
      if (!has_asymptote(row)) continue;
      std::optional<E> previous;
      for (unsigned k = kFrom; k <= kMaxFormulaBits; ++k) {
        E gap = (closed(row, k) / asymptote(row, k) - E(1)).abs();
        if (previous) {
          holds("asymptotic gap nonincreasing: " + row.name(), k, gap, *previous, !(*previous < gap));
        }
        previous = gap;
      }
    }
  }

  const CrossCheckOptions& options_;
  BruteCache cache_;
  CrossCheckReport report_;
};

}  // namespace

CrossCheckReport cross_check(const CrossCheckOptions& options) {
  if (options.k_max > kMaxBruteBits) {
    throw std::invalid_argument("cross_check: k_max is capped at " + std::to_string(kMaxBruteBits));
  }
  if (options.mutate) {
    bool known = std::ranges::any_of(kAllSequences, [&](SequenceId id) { return name(id) == *options.mutate; }) ||
                 std::ranges::any_of(table1_rows(), [&](const Table1Row& r) { return r.name() == *options.mutate; });
    if (!known) throw std::invalid_argument("cross_check: no sequence or row named " + *options.mutate);
  }
  return Checker(options).run();
}

}  // namespace parlab
