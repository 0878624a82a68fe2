#ifndef PARLAB_CLI_HPP
#define PARLAB_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parlab/closed_forms.hpp"
#include "parlab/par.hpp"
#include "parlab/set_problems.hpp"

namespace parlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

// Bad flags, cap violations and malformed input files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, ascii };
Format parse_format(const std::string& text);

// "3" or "1..4".
std::vector<unsigned> parse_k_range(const std::string& text);
// "name[:distance[:threshold]]", e.g. "plausible-deniability:hamming:1/2".
GFunction parse_g(const std::string& text);

struct AnalyzeConfig {
  SetProblem problem = SetProblem::disjointness;
  ProtocolKind protocol = ProtocolKind::trivial;
  std::vector<unsigned> ks{1};
  std::vector<Scope> scopes{Scope::objective};
  std::vector<Mode> modes{Mode::average};
  // "uniform" or a `row,col,num,den` file.
  std::string distribution = "uniform";
  std::string g = "cardinality";
  // Custom instance instead of a set problem: `row,col,label` CSV and a
  // protocol JSON tree. Both or neither.
  std::optional<std::string> matrix_file;
  std::optional<std::string> protocol_file;
};

// One report per (k, scope, mode), in that nesting order.
std::vector<ParReport> analyze(const AnalyzeConfig& cfg);

struct Table1Entry {
  Table1Row row;
  unsigned k = 0;
  Rational brute;
  // Closed form, or the lower bound for "all" rows.
  ExactNumber closed;
  ExactNumber asymptote;
  bool asymptotic = false;
  bool match = false;

  std::string json() const;
};

std::vector<Table1Entry> table1(unsigned k);

struct VerifyConfig {
  unsigned k_max = 6;
  std::optional<std::string> mutate;
};

// Cross-check identities plus fooling-set certificates, tile counts, quadrant
// recursions, inducibility and the optimal-protocol values.
CrossCheckReport verify(const VerifyConfig& cfg);

struct CounterexampleValues {
  unsigned n = 0;
  Rational epsilon;
  Rational mass_d1;
  Rational mass_d2;
  Rational cardinality_d1;
  Rational cardinality_d2;
};

CounterexampleValues counterexample(unsigned n, const Rational& epsilon);
// Mass PARs equal 2 under both distributions, cardinality PARs match their
// direct expressions and differ whenever epsilon != 1/2.
CrossCheckReport verify_counterexample(unsigned n, const Rational& epsilon);

// Parses, dispatches and writes to `out` (or --out). Returns the process
// exit status. The vector form takes the arguments without the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parlab::cli

#endif  // PARLAB_CLI_HPP
