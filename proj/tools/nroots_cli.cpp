// nroots: command-line front end over the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nroots/nroots.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(nr_status s) {
  switch (s) {
    case NR_ERR_INVALID_ARGUMENT:
    case NR_ERR_PARSE:
    case NR_ERR_MALFORMED_NAME:
    case NR_ERR_PLACEMENT_MISMATCH:
    case NR_ERR_SIZE_CAP:
    case NR_ERR_NULL_ARGUMENT:
      return kExitUsage;
    case NR_ERR_ENDPOINT_IS_ROOT:
    case NR_ERR_CONSTRAINT_VIOLATED:
    case NR_ERR_NON_POSITIVE_GAP:
      return kExitData;
    case NR_ERR_IO:
      return kExitNoInput;
    default:
      return kExitSoftware;
  }
}

void check(nr_status s) {
  if (s != NR_OK) throw Failure{exit_for(s), std::string(nr_status_name(s)) + ": " + nr_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using ConfigPtr = std::unique_ptr<nr_config, Deleter<nr_config, nr_config_destroy>>;
using CasePtr = std::unique_ptr<nr_case, Deleter<nr_case, nr_case_destroy>>;
using CheckPtr = std::unique_ptr<nr_check, Deleter<nr_check, nr_check_destroy>>;
using TablePtr = std::unique_ptr<nr_table, Deleter<nr_table, nr_table_destroy>>;
using WitnessPtr = std::unique_ptr<nr_witness, Deleter<nr_witness, nr_witness_destroy>>;
using OraclePtr = std::unique_ptr<nr_oracle, Deleter<nr_oracle, nr_oracle_destroy>>;

std::string take(char* s) {
  std::string out(s ? s : "");
  nr_string_free(s);
  return out;
}

struct Options {
  std::string case_name;
  std::optional<unsigned> n;
  std::string subset;
  std::string placement;
  std::string a;
  std::string lambda;
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  unsigned polya_max = 4;
  std::string pivot = "first";
  std::string format;
  bool json = false;
  std::string golden;
  std::string output;
  bool trace = false;
  bool force = false;
  bool all = false;
};

std::vector<unsigned> parse_index_list(const std::string& text, const char* flag) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Failure{kExitUsage, std::string("bad index list for ") + flag + ": '" + text + "'"};
    out.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

nr_format format_of(const Options& o, nr_format fallback) {
  if (o.json) return NR_FORMAT_JSON;
  if (o.format.empty()) return fallback;
  if (o.format == "text") return NR_FORMAT_TEXT;
  if (o.format == "csv") return NR_FORMAT_CSV;
  if (o.format == "json") return NR_FORMAT_JSON;
  throw Failure{kExitUsage, "unknown format '" + o.format + "' (text|csv|json)"};
}

ConfigPtr make_config(const Options& o) {
  nr_config* raw = nullptr;
  check(nr_config_create(&raw));
  ConfigPtr cfg(raw);
  check(nr_config_set_seed(cfg.get(), o.seed));
  check(nr_config_set_samples(cfg.get(), o.samples));
  check(nr_config_set_polya_max(cfg.get(), o.polya_max));
  if (o.pivot != "first" && o.pivot != "minpq") throw Failure{kExitUsage, "unknown pivot '" + o.pivot + "' (first|minpq)"};
  check(nr_config_set_pivot(cfg.get(), o.pivot == "first" ? NR_PIVOT_FIRST : NR_PIVOT_MINPQ));
  check(nr_config_set_force(cfg.get(), o.force ? 1 : 0));
  return cfg;
}

CasePtr make_case(const Options& o) {
  nr_case* raw = nullptr;
  const bool parts = !o.subset.empty() || !o.placement.empty();
  if (!o.case_name.empty()) {
    if (parts) throw Failure{kExitUsage, "give either --case or --subset/--placement, not both"};
    check(nr_case_parse(o.case_name.c_str(), &raw));
    CasePtr c(raw);
    if (o.n) {
      unsigned n = 0;
      check(nr_case_n(c.get(), &n));
      if (n != *o.n) throw Failure{kExitUsage, "--n does not match the case name"};
    }
    return c;
  }
  if (o.subset.empty() || o.placement.empty())
    throw Failure{kExitUsage, "a case is required: --case NAME, or --subset and --placement (with optional --n)"};
  const auto s = parse_index_list(o.subset, "--subset");
  const auto p = parse_index_list(o.placement, "--placement");
  const unsigned n = o.n ? *o.n : static_cast<unsigned>(p.size());
  check(nr_case_from_parts(n, s.data(), s.size(), p.data(), p.size(), &raw));
  return CasePtr(raw);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Failure{kExitNoInput, "cannot write '" + o.output + "'"};
  out << text;
}

int run_check(const Options& o) {
  auto cfg = make_config(o);
  auto c = make_case(o);
  nr_check* raw = nullptr;
  check(nr_check_run(cfg.get(), c.get(), &raw));
  CheckPtr r(raw);
  char* text = nullptr;
  check(nr_check_render(r.get(), format_of(o, NR_FORMAT_TEXT), o.trace ? 1 : 0, &text));
  emit(o, take(text));
  nr_verdict v;
  check(nr_check_verdict(r.get(), &v));
  return v == NR_FEASIBLE ? 0 : (v == NR_INFEASIBLE ? 1 : 2);
}

int run_table(const Options& o) {
  if (!o.n) throw Failure{kExitUsage, "table requires --n"};
  auto cfg = make_config(o);
  nr_table* raw = nullptr;
  check(nr_table_run(cfg.get(), *o.n, &raw));
  TablePtr t(raw);
  char* text = nullptr;
  check(nr_table_render(t.get(), format_of(o, NR_FORMAT_TEXT), &text));
  emit(o, take(text));
  if (o.golden.empty()) return 0;
  int ok = 0;
  char* report = nullptr;
  check(nr_table_compare_golden(t.get(), o.golden.c_str(), &ok, &report));
  std::cerr << take(report);
  return ok ? 0 : 1;
}

int run_witness(const Options& o) {
  if (o.a.empty() != o.lambda.empty()) throw Failure{kExitUsage, "--a and --lambda must be given together"};
  auto cfg = make_config(o);
  auto c = make_case(o);
  nr_witness* raw = nullptr;
  check(nr_witness_run(cfg.get(), c.get(), o.a.empty() ? nullptr : o.a.c_str(), o.lambda.empty() ? nullptr : o.lambda.c_str(),
                       &raw));
  WitnessPtr w(raw);
  char* text = nullptr;
  check(nr_witness_render(w.get(), format_of(o, NR_FORMAT_TEXT), &text));
  emit(o, take(text));
  int ok = 0;
  check(nr_witness_ok(w.get(), &ok));
  return ok ? 0 : 1;
}

int run_enumerate(const Options& o) {
  if (!o.n) throw Failure{kExitUsage, "enumerate requires --n"};
  char* text = nullptr;
  check(nr_enumerate(*o.n, format_of(o, NR_FORMAT_TEXT), &text));
  emit(o, take(text));
  return 0;
}

int run_oracle(const Options& o) {
  auto cfg = make_config(o);
  nr_oracle* raw = nullptr;
  if (o.all) {
    if (!o.case_name.empty() || !o.subset.empty() || !o.placement.empty())
      throw Failure{kExitUsage, "--all does not take a case"};
    if (!o.n) throw Failure{kExitUsage, "--all requires --n"};
    check(nr_oracle_run_all(cfg.get(), *o.n, &raw));
  } else {
    auto c = make_case(o);
    check(nr_oracle_run_case(cfg.get(), c.get(), &raw));
  }
  OraclePtr r(raw);
  char* text = nullptr;
  check(nr_oracle_render(r.get(), format_of(o, NR_FORMAT_JSON), &text));
  emit(o, take(text));
  std::size_t cases = 0, agreements = 0;
  check(nr_oracle_case_count(r.get(), &cases));
  check(nr_oracle_agreements(r.get(), &agreements));
  return agreements == cases ? 0 : 1;
}

void add_case_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--case", o.case_name, "Case name, e.g. S13L12 (long form S1,3L1,2)");
  cmd->add_option("--n", o.n, "Number of roots n");
  cmd->add_option("--subset", o.subset, "Subset members, comma-separated, e.g. 1,3");
  cmd->add_option("--placement", o.placement, "Interval index per root, comma-separated, e.g. 0,0");
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  cmd->add_option("--samples", o.samples, "Samples per case")->capture_default_str();
  cmd->add_option("--polya-max", o.polya_max, "Largest Polya multiplier exponent")->capture_default_str();
  cmd->add_option("--pivot", o.pivot, "Pivot policy: first (first Mixed row) or minpq (smallest P*Q)")
      ->capture_default_str()
      ->check(CLI::IsMember({"first", "minpq"}));
  cmd->add_flag("--force", o.force, "Run beyond the size cap n <= 5");
}

void add_output_flags(CLI::App* cmd, Options& o, const char* default_format) {
  cmd->add_option("--format", o.format, std::string("Output format: text, csv or json (default ") + default_format + ")")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_flag("--json", o.json, "Same as --format json");
  cmd->add_option("-o,--output", o.output, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether the real roots of the Neumann polynomial U_S can sit in a given interval placement"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: check 0 feasible, 1 infeasible, 2 indeterminate; table 1 on golden mismatch; witness 1 when the case\n"
      "or instance is infeasible; oracle 1 on any disagreement; 64 usage error; 65 bad data; 66 I/O; 70 internal.");
  Options o;

  auto* check_cmd = app.add_subcommand("check", "Decide one case symbolically");
  add_case_flags(check_cmd, o);
  add_run_flags(check_cmd, o);
  add_output_flags(check_cmd, o, "text");
  check_cmd->add_flag("--trace", o.trace, "Print every level: sign matrix, pivot partition, column ancestry");

  auto* table_cmd = app.add_subcommand("table", "Verdict for every subset and placement of size n");
  table_cmd->add_option("--n", o.n, "Number of roots n")->required();
  add_run_flags(table_cmd, o);
  add_output_flags(table_cmd, o, "text");
  table_cmd->add_option("--golden", o.golden, "Golden CSV (case,verdict,step,pf); verdict mismatches exit 1");

  auto* witness_cmd = app.add_subcommand("witness", "Positive solution, U polynomial and Sturm root check");
  add_case_flags(witness_cmd, o);
  add_run_flags(witness_cmd, o);
  add_output_flags(witness_cmd, o, "text");
  witness_cmd->add_option("--a", o.a, "Values a_1 < ... < a_{n+1}, comma-separated rationals p/q");
  witness_cmd->add_option("--lambda", o.lambda, "Roots lambda_1 < ... < lambda_n, comma-separated rationals p/q");

  auto* enum_cmd = app.add_subcommand("enumerate", "List the placements for n");
  enum_cmd->add_option("--n", o.n, "Number of roots n")->required();
  add_output_flags(enum_cmd, o, "text");

  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-validate against direct solves on sampled instances");
  add_case_flags(oracle_cmd, o);
  add_run_flags(oracle_cmd, o);
  add_output_flags(oracle_cmd, o, "json");
  oracle_cmd->add_flag("--all", o.all, "Every case of size --n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check_cmd) return run_check(o);
    if (*table_cmd) return run_table(o);
    if (*witness_cmd) return run_witness(o);
    if (*enum_cmd) return run_enumerate(o);
    if (*oracle_cmd) return run_oracle(o);
  } catch (const Failure& f) {
    std::cerr << "nroots: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
