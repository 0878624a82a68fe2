#include "parlab/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parlab/io.hpp"

namespace parlab::cli {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

// Rationals as {"num","den"}; anything with a surd as its printed form.
Json exact_json(const ExactNumber& x) {
  if (x.is_rational()) return rational_json(x.rational());
  return x.str();
}

unsigned bits_for(Index side) {
  unsigned k = 0;
  while ((Index{1} << k) < side) ++k;
  return k;
}

void check_cap(unsigned k, unsigned cap, const std::string& what) {
  if (k < 1) throw UsageError(what + ": k must be at least 1");
  if (k > cap) throw UsageError(what + ": k = " + std::to_string(k) + " exceeds the cap of " + std::to_string(cap));
}

template <typename F>
auto usage_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  } catch (const InvalidPartition& e) {
    throw UsageError(e.what());
  } catch (const InvalidProtocol& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

struct Instance {
  std::string problem;
  std::string protocol;
  unsigned k;
  ValueMatrix matrix;
  Partition tiling;
};

Rational evaluate(const Instance& inst, Scope scope, Mode mode, const Distribution& d, const GFunction& g) {
  const auto& t = inst.tiling;
  const auto& m = inst.matrix;
  if (g.variant != GVariant::cardinality) return g_par(t, m, scope, d, g, mode);
  if (mode == Mode::average) return d.is_uniform() ? avg_par_uniform(t, m, scope) : avg_par(t, m, scope, d);
  return d.is_uniform() ? worst_case_par(t, m, scope) : g_par(t, m, scope, d, g, mode);
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "ascii") return Format::ascii;
  throw UsageError("unknown format: " + text);
}

std::vector<unsigned> parse_k_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4) {
      throw UsageError("bad k: '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  auto dots = text.find("..");
  unsigned lo = number(dots == std::string::npos ? text : text.substr(0, dots));
  unsigned hi = dots == std::string::npos ? lo : number(text.substr(dots + 2));
  if (lo < 1 || hi < lo) throw UsageError("bad k range: '" + text + "'");
  std::vector<unsigned> ks;
  for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

GFunction parse_g(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, ':')) parts.push_back(part);
  if (parts.empty() || parts.size() > 3) throw UsageError("bad g-function: '" + text + "'");
  return usage_guard([&] {
    GFunction g;
    g.variant = parse_g_variant(parts[0]);
    if (parts.size() > 1) g.distance = parse_distance(parts[1]);
    if (parts.size() > 2) g.threshold = parse_rational(parts[2]);
    return g;
  });
}

std::vector<ParReport> analyze(const AnalyzeConfig& cfg) {
  return usage_guard([&] {
    if (cfg.matrix_file.has_value() != cfg.protocol_file.has_value()) {
      throw UsageError("--matrix and --protocol-file go together");
    }
    GFunction g = parse_g(cfg.g);
    std::vector<Instance> instances;
    if (cfg.matrix_file) {
      ValueMatrix m = parse_matrix_csv(read_file(*cfg.matrix_file));
      Protocol p(protocol_from_json(read_file(*cfg.protocol_file)), m);
      unsigned k = m.bits().value_or(bits_for(std::max(m.rows(), m.cols())));
      instances.push_back({"custom", "custom", k, m, p.tiling()});
    } else {
      for (unsigned k : cfg.ks) {
        check_cap(k, kMaxExplicitBits, "analyze");
        ProblemKind pk{cfg.problem, k};
        ValueMatrix m = build_matrix(pk);
        Partition t = induced_tiling(build_protocol(pk, cfg.protocol), m);
        instances.push_back({std::string(name(cfg.problem)), std::string(name(cfg.protocol)), k, std::move(m),
                             std::move(t)});
      }
    }

    std::vector<ParReport> out;
    for (const auto& inst : instances) {
      const auto& m = inst.matrix;
      Distribution d = cfg.distribution == "uniform"
                           ? Distribution::uniform(m.rows(), m.cols())
                           : parse_distribution_csv(read_file(cfg.distribution), m.rows(), m.cols(), cfg.distribution);
      for (Scope scope : cfg.scopes) {
        for (Mode mode : cfg.modes) {
          ParReport r;
          r.problem = inst.problem;
          r.protocol = inst.protocol;
          r.k = inst.k;
          r.scope = scope;
          r.mode = mode;
          r.distribution = d.id();
          r.g = g.variant == GVariant::cardinality ? "cardinality" : g.describe();
          r.value = evaluate(inst, scope, mode, d, g);
          if (scope == Scope::subjective && mode == Mode::average && g.variant == GVariant::cardinality) {
            r.ratio_of_subjective = subjective_ratio(inst.tiling, m, d);
          }
          out.push_back(std::move(r));
        }
      }
    }
    return out;
  });
}

std::string Table1Entry::json() const {
  Json j;
  j["row"] = row.name();
  j["k"] = k;
  j["brute"] = rational_json(brute);
  j["brute_decimal"] = to_decimal(brute);
  j[row.is_bound() ? "bound" : "closed"] = exact_json(closed);
  j[row.is_bound() ? "bound_decimal" : "closed_decimal"] = closed.decimal();
  j["asymptotic"] = asymptotic;
  j["asymptote"] = exact_json(asymptote);
  j["asymptote_decimal"] = asymptote.decimal();
  j["match"] = match;
  return j.dump();
}

std::vector<Table1Entry> table1(unsigned k) {
  check_cap(k, kMaxBruteBits, "table1");
  std::vector<Table1Entry> out;
  for (const auto& row : table1_rows()) {
    Table1Entry e;
    e.row = row;
    e.k = k;
    e.brute = eval_brute_force(row, k);
    e.asymptotic = has_asymptote(row);
    e.asymptote = asymptote(row, k);
    if (row.is_bound()) {
      e.closed = ExactNumber(lower_bound(row.problem, k));
      e.match = e.brute >= e.closed.rational();
    } else {
      e.closed = eval_closed_form(row, k);
      e.match = e.closed == ExactNumber(e.brute);
    }
    out.push_back(std::move(e));
  }
  return out;
}

CrossCheckReport verify(const VerifyConfig& cfg) {
  if (cfg.k_max < 1 || cfg.k_max > kMaxBruteBits) {
    throw UsageError("verify: --k-max must lie in 1.." + std::to_string(kMaxBruteBits));
  }
  CrossCheckReport report = cross_check({cfg.k_max, cfg.mutate});
  auto add = [&](std::string identity, unsigned k, std::string lhs, std::string rhs, bool pass) {
    report.entries.push_back({std::move(identity), k, std::move(lhs), std::move(rhs), pass});
  };

  for (unsigned k = 1; k <= cfg.k_max; ++k) {
    ProblemKind dis{SetProblem::disjointness, k};
    ValueMatrix dm = build_matrix(dis);
    add("fooling set certified", k, std::to_string(1u << k) + " pairs", "pairwise incompatible",
        certify_fooling_set(fooling_set(k), dm));
    for (auto proto : kAllProtocols) {
      Partition t = induced_tiling(build_protocol(dis, proto), dm);
      std::size_t ones = 0;
      for (std::size_t i = 0; i < t.size(); ++i) ones += dm.at(t.region(i).cells().front()) == 1 ? 1 : 0;
      add("tiles of f^-1(1): disjointness/" + std::string(name(proto)), k, std::to_string(ones),
          std::to_string(1u << k), ones == (std::size_t{1} << k));
    }
    for (auto problem : kAllProblems) {
      ProblemKind pk{problem, k};
      ValueMatrix m = problem == SetProblem::disjointness ? dm : build_matrix(pk);
      for (auto proto : kAllProtocols) {
        std::string tag = std::string(name(problem)) + "/" + std::string(name(proto));
        Partition induced = induced_tiling(build_protocol(pk, proto), m);
        Partition recursive = recursive_tiling(pk, proto);
        add("quadrant recursion = induced tiling: " + tag, k, std::to_string(recursive.size()) + " tiles",
            std::to_string(induced.size()) + " tiles", recursive.same_tagged_blocks(induced));
        add("induced tiling is inducible: " + tag, k, "inducible", "inducible", is_inducible(induced, m));
      }
      if (problem == SetProblem::intersection) {
        Partition a = induced_tiling(build_protocol(pk, ProtocolKind::trivial), m);
        Partition b = induced_tiling(build_protocol(pk, ProtocolKind::one_first), m);
        add("trivial and one-first tilings coincide: intersection", k, std::to_string(a.size()) + " tiles",
            std::to_string(b.size()) + " tiles", a.same_blocks(b));
      }
    }
  }

  auto pw = pinwheel();
  add("pinwheel rejected", 0, is_inducible(pw.tiling, pw.matrix) ? "inducible" : "not inducible", "not inducible",
      !is_inducible(pw.tiling, pw.matrix));

  auto opt = [&](SetProblem p, unsigned k) { return optimal_avg_objective_par(build_matrix({p, k})).value; };
  for (auto p : kAllProblems) {
    Rational v = opt(p, 1);
    add("optimal objective PAR: " + std::string(name(p)), 1, to_string(v), "7/4", v == Rational(7, 4));
  }
  if (cfg.k_max >= 2) {
    Rational vi = opt(SetProblem::intersection, 2);
    add("optimal objective PAR: intersection", 2, to_string(vi), "49/16", vi == Rational(49, 16));
    Rational vd = opt(SetProblem::disjointness, 2);
    add("optimal objective PAR within [9/4, 57/16]: disjointness", 2, to_string(vd), "[9/4, 57/16]",
        vd >= Rational(9, 4) && vd <= Rational(57, 16));
  }
  return report;
}

CounterexampleValues counterexample(unsigned n, const Rational& epsilon) {
  return usage_guard([&] {
    auto ce = probability_mass_counterexample(n, epsilon);
    const auto& t = ce.protocol.tiling();
    GFunction mass;
    mass.variant = GVariant::probability_mass;
    CounterexampleValues v;
    v.n = n;
    v.epsilon = epsilon;
    v.mass_d1 = g_par(t, ce.matrix, Scope::objective, ce.d1, mass, Mode::average);
    v.mass_d2 = g_par(t, ce.matrix, Scope::objective, ce.d2, mass, Mode::average);
    v.cardinality_d1 = avg_par(t, ce.matrix, Scope::objective, ce.d1);
    v.cardinality_d2 = avg_par(t, ce.matrix, Scope::objective, ce.d2);
    return v;
  });
}

CrossCheckReport verify_counterexample(unsigned n, const Rational& epsilon) {
  auto v = counterexample(n, epsilon);
  Rational n1(n + 1);
  Rational nn(n);
  // Row 0 tiles are single cells, the others span the n nonzero rows.
  Rational card1 = n1 * (epsilon + (1 - epsilon) / nn);
  Rational card2 = n1 * ((1 - epsilon) + epsilon / nn);
  CrossCheckReport r;
  r.entries.push_back({"mass PAR under D1", n, to_string(v.mass_d1), "2", v.mass_d1 == 2});
  r.entries.push_back({"mass PAR under D2", n, to_string(v.mass_d2), "2", v.mass_d2 == 2});
  r.entries.push_back({"cardinality PAR under D1", n, to_string(v.cardinality_d1), to_string(card1),
                       v.cardinality_d1 == card1});
  r.entries.push_back({"cardinality PAR under D2", n, to_string(v.cardinality_d2), to_string(card2),
                       v.cardinality_d2 == card2});
  if (epsilon != Rational(1, 2)) {
    r.entries.push_back({"cardinality PARs differ", n, to_string(v.cardinality_d1), to_string(v.cardinality_d2),
                         v.cardinality_d1 != v.cardinality_d2});
  }
  return r;
}

namespace {

void write_reports(const std::vector<ParReport>& reports, Format f, std::ostream& os) {
  if (f == Format::csv) {
    os << ParReport::csv_header() << '\n';
    for (const auto& r : reports) os << r.csv_row() << '\n';
    return;
  }
  for (const auto& r : reports) {
    if (f == Format::json) {
      os << r.json() << '\n';
    } else {
      os << r.problem << ' ' << r.protocol << " k=" << r.k << ' ' << name(r.scope) << ' ' << name(r.mode) << ' '
         << r.g << " = " << to_string(r.value) << " (" << to_decimal(r.value) << ")";
      if (r.ratio_of_subjective) os << " ratio=" << to_string(*r.ratio_of_subjective);
      os << '\n';
    }
  }
}

void write_checks(const CrossCheckReport& r, Format f, std::ostream& os) {
  if (f == Format::json) {
    os << r.json() << '\n';
  } else if (f == Format::csv) {
    os << "identity,k,lhs,rhs,pass\n";
    for (const auto& e : r.entries) {
      os << '"' << e.identity << "\"," << e.k << ",\"" << e.lhs << "\",\"" << e.rhs << "\"," << (e.pass ? 1 : 0)
         << '\n';
    }
  } else {
    for (const auto& e : r.entries) {
      if (!e.pass) os << "FAIL " << e.identity << " k=" << e.k << ": " << e.lhs << " vs " << e.rhs << '\n';
    }
    os << (r.all_pass() ? "PASS" : "FAIL") << ": " << r.entries.size() - r.failures().size() << "/"
       << r.entries.size() << " checks\n";
  }
}

void write_table1(const std::vector<Table1Entry>& rows, Format f, std::ostream& os) {
  if (f == Format::json) {
    for (const auto& e : rows) os << e.json() << '\n';
    return;
  }
  if (f == Format::csv) {
    os << "row,k,brute,closed,asymptote,asymptote_decimal,match\n";
    for (const auto& e : rows) {
      os << e.row.name() << ',' << e.k << ',' << to_string(e.brute) << ',' << e.closed.str() << ",\""
         << e.asymptote.str() << "\"," << e.asymptote.decimal() << ',' << (e.match ? 1 : 0) << '\n';
    }
    return;
  }
  os << std::left << std::setw(36) << "row" << std::setw(22) << "brute force" << std::setw(22) << "closed form"
     << std::setw(22) << "asymptote" << "match\n";
  for (const auto& e : rows) {
    std::string closed = (e.row.is_bound() ? ">= " : "") + e.closed.str();
    std::string asym = e.row.is_bound() ? "-" : e.asymptotic ? "~ " + e.asymptote.decimal(8) : "exact";
    os << std::setw(36) << e.row.name() << std::setw(22) << to_string(e.brute) << std::setw(22) << closed
       << std::setw(22) << asym << (e.match ? "yes" : "NO") << '\n';
  }
}

struct Globals {
  std::string format;
  std::string out;
  bool seed_free = false;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write " + path);
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

Format resolve(const Globals& g, Format fallback) { return g.format.empty() ? fallback : parse_format(g.format); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Privacy approximation ratios for two-party set problems"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "json, csv or ascii")->check(CLI::IsMember({"json", "csv", "ascii"}));
  app.add_option("--out", globals.out, "Write output to this file");
  app.add_flag("--seed-free", globals.seed_free, "Accepted for compatibility; no randomness is used");

  std::string problem = "disjointness";
  std::string protocol = "trivial";
  std::string k_text = "1";
  auto problem_opt = [&](CLI::App* sub) {
    sub->add_option("--problem", problem, "disjointness or intersection")
        ->check(CLI::IsMember({"disjointness", "intersection"}));
  };
  auto protocol_opt = [&](CLI::App* sub) {
    sub->add_option("--protocol", protocol, "trivial, one-first or alternating")
        ->check(CLI::IsMember({"trivial", "one-first", "1-first", "alternating"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "PAR reports for one instance");
  std::vector<std::string> scopes{"objective"};
  std::vector<std::string> modes{"average"};
  AnalyzeConfig acfg;
  std::string matrix_file;
  std::string protocol_file;
  problem_opt(analyze_cmd);
  protocol_opt(analyze_cmd);
  analyze_cmd->add_option("-k", k_text, "Bits per input, or a range a..b");
  analyze_cmd->add_option("--scope", scopes, "objective, wrt1, wrt2, subjective")
      ->check(CLI::IsMember({"objective", "wrt1", "wrt2", "subjective"}));
  analyze_cmd->add_option("--mode", modes, "worst or average")->check(CLI::IsMember({"worst", "average"}));
  analyze_cmd->add_option("--dist", acfg.distribution, "uniform or a row,col,num,den CSV file");
  analyze_cmd->add_option("--g", acfg.g, "g-function: name[:distance[:threshold]]");
  analyze_cmd->add_option("--matrix", matrix_file, "row,col,label CSV for a custom instance");
  analyze_cmd->add_option("--protocol-file", protocol_file, "Protocol JSON tree for --matrix");

  auto* table_cmd = app.add_subcommand("table1", "Every results-table cell at one k");
  unsigned table_k = 2;
  table_cmd->add_option("-k", table_k, "Bits per input (at most 8)");

  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check");
  VerifyConfig vcfg;
  std::string mutate;
  std::string counter;
  unsigned counter_n = 10;
  std::string counter_eps = "1/10";
  verify_cmd->add_option("--k-max", vcfg.k_max, "Largest k for brute-force checks (at most 8)");
  verify_cmd->add_option("--mutate", mutate, "Perturb the named closed form by +1 (negative control)");
  verify_cmd->add_option("--counterexample", counter, "Check a counterexample instead")
      ->check(CLI::IsMember({"prob-mass"}));
  verify_cmd->add_option("-n", counter_n, "Counterexample size");
  verify_cmd->add_option("--epsilon", counter_eps, "Counterexample epsilon");

  auto* tiling_cmd = app.add_subcommand("tiling", "Render an induced tiling");
  std::string from = "protocol";
  problem_opt(tiling_cmd);
  protocol_opt(tiling_cmd);
  tiling_cmd->add_option("-k", k_text, "Bits per input");
  tiling_cmd->add_option("--from", from, "protocol or recursion")->check(CLI::IsMember({"protocol", "recursion"}));

  auto* search_cmd = app.add_subcommand("search-optimal", "Least objective PAR over all protocols");
  problem_opt(search_cmd);
  search_cmd->add_option("-k", k_text, "Bits per input (at most 3)");

  auto* counter_cmd = app.add_subcommand("counterexample", "Probability-mass PAR counterexample");
  counter_cmd->add_option("-n", counter_n, "Number of nonzero rows and of columns");
  counter_cmd->add_option("--epsilon", counter_eps, "Mass parameter in (0,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output output(globals.out, out);
    std::ostream& os = output.stream();
    if (analyze_cmd->parsed()) {
      acfg.problem = parse_problem(problem);
      acfg.protocol = parse_protocol(protocol);
      acfg.ks = parse_k_range(k_text);
      acfg.scopes.clear();
      for (const auto& s : scopes) acfg.scopes.push_back(parse_scope(s));
      acfg.modes.clear();
      for (const auto& m : modes) acfg.modes.push_back(parse_mode(m));
      if (!matrix_file.empty()) acfg.matrix_file = matrix_file;
      if (!protocol_file.empty()) acfg.protocol_file = protocol_file;
      write_reports(analyze(acfg), resolve(globals, Format::json), os);
      return kExitOk;
    }
    if (table_cmd->parsed()) {
      write_table1(table1(table_k), resolve(globals, Format::ascii), os);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      CrossCheckReport r;
      if (!counter.empty()) {
        r = verify_counterexample(counter_n, usage_guard([&] { return parse_rational(counter_eps); }));
      } else {
        if (!mutate.empty()) vcfg.mutate = mutate;
        r = verify(vcfg);
      }
      write_checks(r, resolve(globals, Format::ascii), os);
      return r.all_pass() ? kExitOk : kExitCheckFailed;
    }
    if (tiling_cmd->parsed()) {
      auto ks = parse_k_range(k_text);
      if (ks.size() != 1) throw UsageError("tiling takes a single k");
      Format f = resolve(globals, Format::ascii);
      check_cap(ks[0], f == Format::ascii ? 6u : kMaxExplicitBits, "tiling");
      if (f == Format::json) throw UsageError("tiling renders as ascii or csv");
      ProblemKind pk{parse_problem(problem), ks[0]};
      ProtocolKind proto = parse_protocol(protocol);
      ValueMatrix m = build_matrix(pk);
      Partition t = from == "recursion" ? recursive_tiling(pk, proto) : induced_tiling(build_protocol(pk, proto), m);
      os << (f == Format::ascii ? ascii_tiling(t) : tiling_csv(t, m));
      return kExitOk;
    }
    if (search_cmd->parsed()) {
      auto ks = parse_k_range(k_text);
      if (ks.size() != 1) throw UsageError("search-optimal takes a single k");
      check_cap(ks[0], 3, "search-optimal");
      SetProblem p = parse_problem(problem);
      auto result = optimal_avg_objective_par(build_matrix({p, ks[0]}));
      Format f = resolve(globals, Format::json);
      if (f == Format::csv) {
        os << "problem,k,value,value_decimal\n"
           << name(p) << ',' << ks[0] << ',' << to_string(result.value) << ',' << to_decimal(result.value) << '\n';
      } else if (f == Format::json) {
        Json j;
        j["problem"] = std::string(name(p));
        j["k"] = ks[0];
        j["value"] = rational_json(result.value);
        j["value_decimal"] = to_decimal(result.value);
        j["protocol"] = Json::parse(to_json(result.protocol));
        os << j.dump() << '\n';
      } else {
        os << name(p) << " k=" << ks[0] << " optimal objective PAR = " << to_string(result.value) << " ("
           << to_decimal(result.value) << ")\n";
      }
      return kExitOk;
    }
    if (counter_cmd->parsed()) {
      auto v = counterexample(counter_n, usage_guard([&] { return parse_rational(counter_eps); }));
      Format f = resolve(globals, Format::json);
      const std::pair<const char*, const Rational*> rows[] = {{"D1", &v.cardinality_d1},
                                                              {"D2", &v.cardinality_d2}};
      const Rational* mass[] = {&v.mass_d1, &v.mass_d2};
      if (f == Format::csv) os << "distribution,g,value,value_decimal\n";
      for (int i = 0; i < 2; ++i) {
        for (int which = 0; which < 2; ++which) {
          const char* g = which == 0 ? "probability-mass" : "cardinality";
          const Rational& value = which == 0 ? *mass[i] : *rows[i].second;
          if (f == Format::csv) {
            os << rows[i].first << ',' << g << ',' << to_string(value) << ',' << to_decimal(value) << '\n';
          } else if (f == Format::json) {
            Json j;
            j["n"] = v.n;
            j["epsilon"] = to_string(v.epsilon);
            j["distribution"] = rows[i].first;
            j["g"] = g;
            j["value"] = rational_json(value);
            j["value_decimal"] = to_decimal(value);
            os << j.dump() << '\n';
          } else {
            os << rows[i].first << ' ' << g << " = " << to_string(value) << " (" << to_decimal(value) << ")\n";
          }
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"parlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace parlab::cli
