#include "nroots/report.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace nroots {

using nlohmann::ordered_json;

namespace {

constexpr unsigned kHardSizeLimit = 8;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join_indices(const std::vector<std::size_t>& v, std::size_t offset = 1) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k] + offset);
  }
  return out;
}

std::string join_unsigned(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out;
}

std::string sign_row_text(std::span<const Sign> row) {
  std::string out = "[";
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out += " ";
    out += sign_token(row[k]);
  }
  return out + "]";
}

ordered_json sign_json(Sign s) {
  if (s == Sign::Indeterminate) return nullptr;
  return static_cast<int>(s);
}

ordered_json sign_row_json(std::span<const Sign> row) {
  ordered_json out = ordered_json::array();
  for (Sign s : row) out.push_back(sign_json(s));
  return out;
}

ordered_json options_json(const RunOptions& o) {
  return {{"seed", o.seed},
          {"samples", o.samples},
          {"polya_max", o.polya_max},
          {"pivot", pivot_policy_name(o.pivot)}};
}

std::string origin_text(const ColumnOrigin& o) {
  switch (o.kind) {
    case ColumnOrigin::Kind::Input: return std::to_string(o.first + 1);
    case ColumnOrigin::Kind::Pair: return "(" + std::to_string(o.first + 1) + "," + std::to_string(o.second + 1) + ")";
    case ColumnOrigin::Kind::Carry: return "=" + std::to_string(o.first + 1);
  }
  return "?";
}

ordered_json origin_json(const ColumnOrigin& o) {
  switch (o.kind) {
    case ColumnOrigin::Kind::Input: return o.first + 1;
    case ColumnOrigin::Kind::Pair: return ordered_json::array({o.first + 1, o.second + 1});
    case ColumnOrigin::Kind::Carry: return {{"carry", o.first + 1}};
  }
  return nullptr;
}

ordered_json sampling_json(const SamplingSummary& s) {
  return {{"seed", s.seed},
          {"samples", s.samples},
          {"positive", s.positive},
          {"negative", s.negative},
          {"zero", s.zero},
          {"class_dependent", s.class_dependent()}};
}

std::string verdict_bit(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Feasible: return "1";
    case Verdict::Kind::Infeasible: return "0";
    case Verdict::Kind::Indeterminate: return "?";
  }
  return "?";
}

std::vector<EntryFactorization> factor_row(const DenseMatrix<GapPolynomial>& m, const DenseMatrix<Sign>& signs,
                                           std::size_t row, const OrderedScene& scene) {
  std::vector<EntryFactorization> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    EntryFactorization e;
    e.column = c;
    e.sign = signs(row, c);
    e.expression = m(row, c).str();
    if (!m(row, c).is_zero()) {
      const PlainFactorization f = factor_differences(m(row, c), scene);
      e.factored = f.str();
      e.plain = f.plain();
    } else {
      e.factored = "0";
    }
    out.push_back(std::move(e));
  }
  return out;
}

ordered_json case_json(const NeumannCase& c) {
  return {{"case", c.name()},
          {"n", c.n()},
          {"subset", c.subset.members()},
          {"placement", c.placement.intervals()}};
}

}  // namespace

SampleConfig RunOptions::sample_config() const {
  SampleConfig c;
  c.seed = seed;
  c.samples = samples;
  return c;
}

void check_size(unsigned n, const RunOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > kHardSizeLimit)
    throw Error(ErrorCode::SizeCap, "n = " + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kHardSizeLimit));
  if (n > options.n_cap && !options.force)
    throw Error(ErrorCode::SizeCap, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(options.n_cap) +
                                        "; column counts grow multiplicatively per level, pass --force to run anyway");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(text) + "' (text|csv|json)");
}

int verdict_exit_code(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Feasible: return 0;
    case Verdict::Kind::Infeasible: return 1;
    case Verdict::Kind::Indeterminate: return 2;
  }
  return 2;
}

// ---------------------------------------------------------------------------
// check

CheckResult run_check(const NeumannCase& c, const RunOptions& options) {
  check_size(c.n(), options);
  const auto t0 = std::chrono::steady_clock::now();
  OrderedScene scene = c.scene();
  auto decision = decide(build_symbolic_system(c, scene), GapDomain{options.polya_max, kSignSampleSeed}, options.pivot);
  CheckResult out{c, scene, std::move(decision), {}, false, 0};
  const Verdict& v = out.decision.verdict;
  if (v.infeasible()) {
    const auto& last = out.decision.trace.levels.back();
    out.offending = factor_row(last.matrix, last.signs, v.row, scene);
    out.pf = std::any_of(out.offending.begin(), out.offending.end(), [](const EntryFactorization& e) { return !e.plain; });
  } else if (v.indeterminate()) {
    out.pf = true;
  }
  out.duration_ms = elapsed_ms(t0);
  return out;
}

std::string render_check(const CheckResult& r, OutputFormat format, bool trace, const RunOptions& options) {
  const Verdict& v = r.decision.verdict;
  const auto& levels = r.decision.trace.levels;

  if (format == OutputFormat::Json) {
    ordered_json j = case_json(r.c);
    j["order"] = r.scene.str();
    j["verdict"] = verdict_name(v.kind);
    j["level"] = v.level;
    j["stop"] = stop_reason_name(r.decision.trace.stop);
    j["polya_level"] = r.decision.max_polya_level;
    if (v.infeasible()) {
      j["step"] = v.level + 1;
      j["row"] = v.row + 1;
      j["row_signs"] = sign_row_json(v.row_signs);
      j["pf"] = r.pf;
      ordered_json entries = ordered_json::array();
      for (const auto& e : r.offending)
        entries.push_back({{"column", e.column + 1}, {"sign", sign_json(e.sign)}, {"factored", e.factored}, {"plain", e.plain}});
      j["offending_row"] = std::move(entries);
    }
    if (v.indeterminate()) {
      j["row"] = v.row + 1;
      j["column"] = v.column + 1;
      j["row_signs"] = sign_row_json(v.row_signs);
      j["expression"] = v.expression;
      if (v.sampling) j["sampling"] = sampling_json(*v.sampling);
    }
    if (trace) {
      ordered_json tr = ordered_json::array();
      for (std::size_t k = 0; k < levels.size(); ++k) {
        const auto& lv = levels[k];
        ordered_json l;
        l["level"] = k;
        l["rows"] = lv.matrix.rows();
        l["cols"] = lv.matrix.cols();
        if (lv.dropped_zero_rows) l["dropped_zero_rows"] = lv.dropped_zero_rows;
        ordered_json signs = ordered_json::array();
        for (std::size_t row = 0; row < lv.signs.rows(); ++row) signs.push_back(sign_row_json(lv.signs.row(row)));
        l["signs"] = std::move(signs);
        ordered_json anc = ordered_json::array();
        for (const auto& o : lv.origin) anc.push_back(origin_json(o));
        l["columns"] = std::move(anc);
        if (lv.partition) {
          const auto& p = *lv.partition;
          ordered_json I = ordered_json::array(), J = ordered_json::array(), Z = ordered_json::array();
          for (auto c : p.positive) I.push_back(c + 1);
          for (auto c : p.negative) J.push_back(c + 1);
          for (auto c : p.zero) Z.push_back(c + 1);
          l["partition"] = {{"pivot_row", p.pivot_row + 1}, {"I", I}, {"J", J}, {"zero", Z}};
        }
        if (k + 1 == levels.size() && lv.matrix.rows() > 0 && lv.matrix.rows() <= 4) {
          ordered_json entries = ordered_json::array();
          for (std::size_t row = 0; row < lv.matrix.rows(); ++row) {
            ordered_json er = ordered_json::array();
            for (const auto& e : factor_row(lv.matrix, lv.signs, row, r.scene)) er.push_back(e.factored);
            entries.push_back(std::move(er));
          }
          l["entries"] = std::move(entries);
        }
        tr.push_back(std::move(l));
      }
      j["trace"] = std::move(tr);
    }
    j["config"] = options_json(options);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "case " << r.c.name() << "  n=" << r.c.n() << "  subset {" << join_unsigned(r.c.subset.members())
     << "}  placement (" << join_unsigned(r.c.placement.intervals()) << ")\n";
  os << "order: " << r.scene.str() << "\n";
  switch (v.kind) {
    case Verdict::Kind::Feasible:
      os << "verdict: feasible (" << levels.size() << " levels, " << stop_reason_name(r.decision.trace.stop) << ")\n";
      break;
    case Verdict::Kind::Infeasible:
      os << "verdict: infeasible at level " << v.level << " (step " << v.level + 1 << (r.pf ? "pf" : "") << "), row "
         << v.row + 1 << " signs " << sign_row_text(v.row_signs) << "\n";
      for (const auto& e : r.offending)
        os << "  column " << e.column + 1 << "  " << sign_token(e.sign) << "  " << e.factored << "\n";
      break;
    case Verdict::Kind::Indeterminate:
      os << "verdict: indeterminate at level " << v.level << ", row " << v.row + 1 << " column " << v.column + 1
         << "\n  expression: " << v.expression << "\n";
      if (v.sampling) os << "  sampling: " << v.sampling->str() << "\n";
      break;
  }
  if (r.decision.max_polya_level) os << "polya level: " << r.decision.max_polya_level << "\n";
  if (trace) {
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const auto& lv = levels[k];
      os << "level " << k << ": " << lv.matrix.rows() << (lv.matrix.rows() == 1 ? " equation x " : " equations x ")
         << lv.matrix.cols() << " columns";
      if (lv.dropped_zero_rows) os << " (" << lv.dropped_zero_rows << " zero rows dropped)";
      os << "\n  columns:";
      for (const auto& o : lv.origin) os << " " << origin_text(o);
      os << "\n";
      for (std::size_t row = 0; row < lv.signs.rows(); ++row) os << "  " << sign_row_text(lv.signs.row(row)) << "\n";
      if (lv.partition) {
        const auto& p = *lv.partition;
        os << "  pivot row " << p.pivot_row + 1 << ": I={" << join_indices(p.positive) << "} J={" << join_indices(p.negative)
           << "}";
        if (!p.zero.empty()) os << " zero={" << join_indices(p.zero) << "}";
        os << "  P=" << p.p() << " Q=" << p.q() << "\n";
      }
      if (k + 1 == levels.size() && lv.matrix.rows() > 0 && lv.matrix.rows() <= 4) {
        for (std::size_t row = 0; row < lv.matrix.rows(); ++row)
          for (const auto& e : factor_row(lv.matrix, lv.signs, row, r.scene))
            os << "  b[" << row + 1 << "," << e.column + 1 << "] = " << e.factored << "\n";
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// table

VerdictTable run_table(unsigned n, const RunOptions& options) {
  check_size(n, options);
  VerdictTable t;
  t.n = n;
  for (const auto& c : enumerate_cases(n)) {
    const CheckResult r = run_check(c, options);
    TableRow row;
    row.name = c.name();
    row.verdict = r.decision.verdict.kind;
    if (!r.decision.verdict.feasible()) row.fail_level = r.decision.verdict.level;
    row.pf = r.pf;
    row.polya_level = r.decision.max_polya_level;
    row.duration_ms = r.duration_ms;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_table(const VerdictTable& t, OutputFormat format, const RunOptions& options) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "case,verdict,fail_level,pf,duration_ms\n";
    for (const auto& r : t.rows) {
      os << r.name << "," << verdict_bit(r.verdict) << "," << (r.fail_level ? std::to_string(*r.fail_level) : "") << ","
         << (r.pf ? 1 : 0) << "," << std::fixed << std::setprecision(3) << r.duration_ms << "\n";
    }
    return os.str();
  }
  if (format == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    std::size_t feasible = 0;
    for (const auto& r : t.rows) {
      feasible += r.verdict == Verdict::Kind::Feasible;
      ordered_json j;
      j["case"] = r.name;
      j["verdict"] = verdict_name(r.verdict);
      j["fail_level"] = r.fail_level ? ordered_json(*r.fail_level) : ordered_json(nullptr);
      j["pf"] = r.pf;
      j["polya_level"] = r.polya_level;
      j["duration_ms"] = r.duration_ms;
      rows.push_back(std::move(j));
    }
    ordered_json j;
    j["n"] = t.n;
    j["rows"] = std::move(rows);
    j["feasible"] = feasible;
    j["config"] = options_json(options);
    return j.dump(2) + "\n";
  }
  std::size_t width = 6;
  for (const auto& r : t.rows) width = std::max(width, r.name.size() + 2);
  os << std::left << std::setw(static_cast<int>(width)) << "case" << "Y/N  step\n";
  std::size_t feasible = 0, undecided = 0;
  for (const auto& r : t.rows) {
    feasible += r.verdict == Verdict::Kind::Feasible;
    undecided += r.verdict == Verdict::Kind::Indeterminate;
    std::string step = r.step() ? std::to_string(*r.step()) : "";
    if (r.pf && r.verdict == Verdict::Kind::Infeasible) step += "pf";
    os << std::left << std::setw(static_cast<int>(width)) << r.name << std::setw(5) << verdict_bit(r.verdict) << step << "\n";
  }
  os << t.rows.size() << " cases, " << feasible << " feasible";
  if (undecided) os << ", " << undecided << " indeterminate";
  os << "\n";
  return os.str();
}

std::vector<GoldenRow> parse_golden(std::string_view text) {
  std::vector<GoldenRow> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (header) {
      header = false;
      if (cells != std::vector<std::string>{"case", "verdict", "step", "pf"})
        throw Error(ErrorCode::Parse, "golden file: expected header 'case,verdict,step,pf'");
      continue;
    }
    if (cells.size() != 4) throw Error(ErrorCode::Parse, "golden file line " + std::to_string(lineno) + ": expected 4 columns");
    GoldenRow g;
    g.name = cells[0];
    if (cells[1] != "0" && cells[1] != "1")
      throw Error(ErrorCode::Parse, "golden file line " + std::to_string(lineno) + ": verdict must be 0 or 1");
    g.verdict = cells[1] == "1";
    if (!cells[2].empty()) {
      std::size_t step = 0;
      const auto [end, ec] = std::from_chars(cells[2].data(), cells[2].data() + cells[2].size(), step);
      if (ec != std::errc() || end != cells[2].data() + cells[2].size())
        throw Error(ErrorCode::Parse, "golden file line " + std::to_string(lineno) + ": bad step");
      g.step = step;
    }
    if (cells[3] != "0" && cells[3] != "1")
      throw Error(ErrorCode::Parse, "golden file line " + std::to_string(lineno) + ": pf must be 0 or 1");
    g.pf = cells[3] == "1";
    out.push_back(std::move(g));
  }
  if (header) throw Error(ErrorCode::Parse, "golden file: expected header 'case,verdict,step,pf'");
  return out;
}

std::vector<GoldenRow> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open golden file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_golden(ss.str());
}

GoldenComparison compare_golden(const VerdictTable& t, const std::vector<GoldenRow>& golden) {
  GoldenComparison cmp;
  std::map<std::string, const TableRow*> ours;
  for (const auto& r : t.rows) ours[r.name] = &r;
  std::map<std::string, bool> seen;
  for (const auto& g : golden) {
    seen[g.name] = true;
    const auto it = ours.find(g.name);
    if (it == ours.end()) {
      ++cmp.missing;
      cmp.lines.push_back("missing  " + g.name + ": in golden file, not in table");
      continue;
    }
    const TableRow& r = *it->second;
    ++cmp.compared;
    const std::string want = g.verdict ? "1" : "0";
    if (verdict_bit(r.verdict) != want) {
      ++cmp.verdict_mismatches;
      cmp.lines.push_back("MISMATCH " + g.name + ": verdict " + verdict_bit(r.verdict) + ", golden " + want);
      continue;
    }
    if (r.step() != g.step) {
      ++cmp.step_differences;
      cmp.lines.push_back("step     " + g.name + ": " + (r.step() ? std::to_string(*r.step()) : "-") + ", golden " +
                          (g.step ? std::to_string(*g.step) : "-"));
    }
    if (r.pf != g.pf) {
      ++cmp.pf_differences;
      cmp.lines.push_back(std::string("pf       ") + g.name + ": " + (r.pf ? "1" : "0") + ", golden " + (g.pf ? "1" : "0"));
    }
  }
  for (const auto& r : t.rows) {
    if (!seen.count(r.name)) {
      ++cmp.missing;
      cmp.lines.push_back("missing  " + r.name + ": in table, not in golden file");
    }
  }
  return cmp;
}

std::string GoldenComparison::str() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  os << "golden: " << compared << " compared, " << verdict_mismatches << " verdict mismatches, " << missing
     << " missing; informational: " << step_differences << " step differences, " << pf_differences
     << " pf differences (step = level + 1; Y/N and R/NR columns read alike)\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// witness

WitnessReport run_witness(const NeumannCase& c, const std::optional<InstanceParameters>& instance,
                          const RunOptions& options) {
  check_size(c.n(), options);
  WitnessReport rep{c, {}, !instance.has_value(), 0, Verdict::Kind::Indeterminate, Verdict::Kind::Infeasible,
                    std::nullopt, Rational(), std::nullopt, std::nullopt, {}, {}};
  const OrderedScene scene = c.scene();
  rep.symbolic = decide(build_symbolic_system(c, scene), GapDomain{options.polya_max, kSignSampleSeed}, options.pivot).verdict.kind;
  if (rep.symbolic == Verdict::Kind::Infeasible) {
    rep.refusal = "case " + c.name() + " is infeasible: no parameters in the class admit a positive solution";
    if (instance) rep.instance = *instance;
    return rep;
  }

  std::optional<InstanceSolution> sol;
  if (instance) {
    check_instance(c, *instance);
    rep.instance = *instance;
    sol = solve_instance(build_instance_system(c, rep.instance), options.pivot);
  } else {
    const SampleConfig cfg = options.sample_config();
    for (std::size_t i = 0; i < std::max<std::size_t>(options.samples, 1); ++i) {
      rep.instance = sample_instance(c, cfg, i);
      rep.sample_index = i;
      sol = solve_instance(build_instance_system(c, rep.instance), options.pivot);
      if (sol->decision.verdict.feasible()) break;
    }
  }
  rep.verdict = sol->decision.verdict.kind;
  if (!sol->witness) {
    rep.refusal = "instance is infeasible for case " + c.name();
    return rep;
  }
  const auto& w = sol->witness->values;
  rep.qsq = std::vector<Rational>(w.begin(), w.begin() + c.n() + 1);
  const auto eps = epsilon_vector(c.subset);
  for (std::size_t j = 0; j < rep.qsq->size(); ++j) rep.constraint += Rational(eps[j]) * (*rep.qsq)[j];
  rep.zero_weights = zero_weights(*rep.qsq);
  rep.u = u_polynomial(*rep.qsq, c.subset, rep.instance.a);
  rep.roots = verify_roots(*rep.u, rep.instance.a, c.placement);
  return rep;
}

namespace {

std::string interval_text(std::size_t t, std::size_t n) {
  const std::string lo = t == 0 ? "-inf" : "a" + std::to_string(t);
  const std::string hi = t == n + 1 ? "inf" : "a" + std::to_string(t + 1);
  return "(" + lo + ", " + hi + ")";
}

ordered_json rationals_json(std::span<const Rational> v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

std::string render_witness(const WitnessReport& r, OutputFormat format, const RunOptions& options) {
  const std::size_t n = r.c.n();
  if (format == OutputFormat::Json) {
    ordered_json j = case_json(r.c);
    j["symbolic"] = verdict_name(r.symbolic);
    j["a"] = rationals_json(r.instance.a);
    j["lambda"] = rationals_json(r.instance.lambda);
    if (r.sampled) j["sample_index"] = r.sample_index;
    if (!r.refusal.empty()) {
      j["refusal"] = r.refusal;
    } else {
      j["verdict"] = verdict_name(r.verdict);
      if (r.qsq) {
        j["qsq"] = rationals_json(*r.qsq);
        j["constraint"] = r.constraint.str();
        if (!r.zero_weights.empty()) j["zero_weights"] = r.zero_weights;
      }
      if (r.u) j["u"] = r.u->str("l");
      if (r.roots) {
        j["sturm_counts"] = r.roots->counts;
        j["expected_counts"] = r.roots->expected;
        j["match"] = r.roots->match;
      }
    }
    j["config"] = options_json(options);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "case " << r.c.name() << "  order " << r.c.scene().str() << "\n";
  if (!r.instance.a.empty()) {
    os << "a = (" << join_rationals(r.instance.a) << ")  lambda = (" << join_rationals(r.instance.lambda) << ")";
    if (r.sampled) os << "  [sampled, seed " << options.seed << ", index " << r.sample_index << "]";
    os << "\n";
  }
  if (!r.refusal.empty()) {
    os << "refused: " << r.refusal << "\n";
    return os.str();
  }
  os << "q^2 = (" << join_rationals(*r.qsq) << ")\n";
  os << "constraint: sum eps_j q_j^2 = " << r.constraint.str() << (r.constraint == Rational(1) ? " (ok)" : " (violated)") << "\n";
  if (!r.zero_weights.empty()) os << "warning: zero weights at j = " << join_unsigned(r.zero_weights) << "\n";
  os << "U(l) = " << r.u->str("l") << "\n";
  os << "sturm counts:\n";
  for (std::size_t t = 0; t < n + 2; ++t)
    os << "  " << interval_text(t, n) << ": " << r.roots->counts[t] << " (expected " << r.roots->expected[t] << ")\n";
  os << "roots " << (r.roots->match ? "match" : "MISMATCH") << " placement (" << join_unsigned(r.c.placement.intervals())
     << ")\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// enumerate

std::string render_enumeration(unsigned n, OutputFormat format) {
  const auto placements = enumerate_placements(n);
  std::ostringstream os;
  const auto digits = [](const RootPlacement& p) {
    const auto& v = p.intervals();
    const bool long_form = std::any_of(v.begin(), v.end(), [](unsigned x) { return x > 9; });
    std::string s = "L";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k && long_form) s += ",";
      s += std::to_string(v[k]);
    }
    return s;
  };
  if (format == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : placements)
      arr.push_back({{"name", digits(p)}, {"placement", p.intervals()}, {"order", scene_from_placement(n, p.intervals()).str()}});
    ordered_json j;
    j["n"] = n;
    j["count"] = placements.size();
    j["placements"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::Csv) os << "name,placement,order\n";
  for (const auto& p : placements) {
    const std::string order = scene_from_placement(n, p.intervals()).str();
    if (format == OutputFormat::Csv) os << digits(p) << ",\"" << join_unsigned(p.intervals()) << "\"," << order << "\n";
    else os << digits(p) << "  " << order << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// oracle

std::size_t OracleSweep::agreements() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const CrossCheckReport& r) { return r.agreement; }));
}

OracleSweep run_oracle(const std::vector<NeumannCase>& cases, const RunOptions& options) {
  OracleSweep sweep;
  const SampleConfig cfg = options.sample_config();
  for (const auto& c : cases) {
    check_size(c.n(), options);
    sweep.reports.push_back(cross_validate(c, cfg, options.pivot, options.polya_max));
  }
  return sweep;
}

std::string render_oracle(const OracleSweep& sweep, OutputFormat format, const RunOptions& options) {
  std::ostringstream os;
  std::size_t lifts = 0, singular = 0, witness = 0, roots = 0;
  for (const auto& r : sweep.reports) {
    lifts += r.nonpositive_lifts;
    singular += r.singular_retries;
    witness += r.witness_mismatches;
    roots += r.root_mismatches;
  }
  if (format == OutputFormat::Json) {
    for (const auto& r : sweep.reports) os << cross_check_json(r) << "\n";
    ordered_json s;
    s["cases"] = sweep.reports.size();
    s["agreements"] = sweep.agreements();
    s["nonpositive_lifts"] = lifts;
    s["singular_retries"] = singular;
    s["witness_mismatches"] = witness;
    s["root_mismatches"] = roots;
    s["config"] = options_json(options);
    os << ordered_json{{"summary", s}}.dump() << "\n";
    return os.str();
  }
  if (format == OutputFormat::Csv) os << "case,symbolic,agreement,disagreements,singular_retries,nonpositive_lifts\n";
  for (const auto& r : sweep.reports) {
    std::size_t feasible = 0;
    for (const auto& s : r.samples) feasible += s.verdict == Verdict::Kind::Feasible;
    if (format == OutputFormat::Csv) {
      os << r.case_name << "," << verdict_name(r.symbolic.kind) << "," << (r.agreement ? 1 : 0) << "," << r.disagreements
         << "," << r.singular_retries << "," << r.nonpositive_lifts << "\n";
    } else {
      os << r.case_name << "  symbolic " << verdict_name(r.symbolic.kind) << "  samples " << r.samples.size()
         << " (" << feasible << " feasible)  " << (r.agreement ? "agree" : "DISAGREE");
      if (r.disagreements) os << " x" << r.disagreements;
      os << "\n";
    }
  }
  if (format == OutputFormat::Text)
    os << "summary: " << sweep.agreements() << "/" << sweep.reports.size() << " agreements, " << lifts
       << " non-positive lifts, " << singular << " singular retries, " << witness << " witness mismatches, " << roots
       << " root mismatches\n";
  return os.str();
}

}  // namespace nroots
