#pragma once

// Command-level runs and their text, CSV and JSON renderings. Everything the
// command-line front end prints is produced here so the C API can expose it.

#include <optional>
#include <string>
#include <vector>

#include "nroots/oracle.hpp"

namespace nroots {

struct RunOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  unsigned polya_max = kDefaultPolyaMax;
  PivotPolicy pivot = PivotPolicy::FirstMixed;
  unsigned n_cap = 5;
  bool force = false;

  SampleConfig sample_config() const;
};

/// Throws SizeCap when n exceeds the cap without force, or the hard limit.
void check_size(unsigned n, const RunOptions& options);

enum class OutputFormat { Text, Csv, Json };
OutputFormat parse_output_format(std::string_view text);

// ---------------------------------------------------------------------------
// check

struct EntryFactorization {
  std::size_t column = 0;
  Sign sign = Sign::Zero;
  std::string expression;
  std::string factored;
  bool plain = true;
};

struct CheckResult {
  NeumannCase c;
  OrderedScene scene;
  Decision<GapPolynomial> decision;
  /// Offending row of an Infeasible verdict, entry by entry.
  std::vector<EntryFactorization> offending;
  /// Some offending entry is not a signed product of scene differences.
  bool pf = false;
  double duration_ms = 0;
};

CheckResult run_check(const NeumannCase& c, const RunOptions& options);
std::string render_check(const CheckResult& result, OutputFormat format, bool trace, const RunOptions& options);
/// 0 feasible, 1 infeasible, 2 indeterminate.
int verdict_exit_code(Verdict::Kind k);

// ---------------------------------------------------------------------------
// table

struct TableRow {
  std::string name;
  Verdict::Kind verdict = Verdict::Kind::Infeasible;
  std::optional<std::size_t> fail_level;
  bool pf = false;
  unsigned polya_level = 0;
  double duration_ms = 0;

  /// Level 0 is the first step.
  std::optional<std::size_t> step() const { return fail_level ? std::optional(*fail_level + 1) : std::nullopt; }
};

struct VerdictTable {
  unsigned n = 0;
  std::vector<TableRow> rows;
};

VerdictTable run_table(unsigned n, const RunOptions& options);
std::string render_table(const VerdictTable& table, OutputFormat format, const RunOptions& options);

struct GoldenRow {
  std::string name;
  int verdict = 0;
  std::optional<std::size_t> step;
  bool pf = false;
};

/// CSV with header "case,verdict,step,pf"; empty step for feasible rows.
std::vector<GoldenRow> parse_golden(std::string_view text);
std::vector<GoldenRow> load_golden(const std::string& path);

struct GoldenComparison {
  std::size_t compared = 0;
  std::size_t verdict_mismatches = 0;
  std::size_t missing = 0;  // golden rows absent from the table, or the reverse
  std::size_t step_differences = 0;
  std::size_t pf_differences = 0;
  std::vector<std::string> lines;

  /// Verdicts are binding; step and pf are informational.
  bool ok() const { return verdict_mismatches == 0 && missing == 0; }
  std::string str() const;
};

GoldenComparison compare_golden(const VerdictTable& table, const std::vector<GoldenRow>& golden);

// ---------------------------------------------------------------------------
// witness

struct WitnessReport {
  NeumannCase c;
  InstanceParameters instance;
  bool sampled = false;
  std::size_t sample_index = 0;
  Verdict::Kind symbolic = Verdict::Kind::Indeterminate;
  Verdict::Kind verdict = Verdict::Kind::Infeasible;  // on the instance
  std::optional<std::vector<Rational>> qsq;
  Rational constraint;
  std::optional<UnivariatePolynomial> u;
  std::optional<RootCheck> roots;
  std::vector<unsigned> zero_weights;
  std::string refusal;

  bool ok() const { return refusal.empty() && roots && roots->match; }
};

/// With no instance, samples the class (index 0, 1, ... up to options.samples)
/// until an instance is feasible.
WitnessReport run_witness(const NeumannCase& c, const std::optional<InstanceParameters>& instance,
                          const RunOptions& options);
std::string render_witness(const WitnessReport& report, OutputFormat format, const RunOptions& options);

// ---------------------------------------------------------------------------
// enumerate

std::string render_enumeration(unsigned n, OutputFormat format);

// ---------------------------------------------------------------------------
// oracle

struct OracleSweep {
  std::vector<CrossCheckReport> reports;
  std::size_t agreements() const;
  bool ok() const { return agreements() == reports.size(); }
};

OracleSweep run_oracle(const std::vector<NeumannCase>& cases, const RunOptions& options);
/// JSON: one compact report per line, then a summary line. Text: one line per
/// case, then the summary. No timing anywhere, so output is reproducible.
std::string render_oracle(const OracleSweep& sweep, OutputFormat format, const RunOptions& options);

}  // namespace nroots
