#include "nroots/oracle.hpp"

#include <json.hpp>

#include "rng.hpp"

namespace nroots {

namespace {

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Admissible numerators for denominator d: [ceil(low*d), floor(high*d)].
std::pair<Integer, Integer> numerator_range(const SampleConfig& config, std::uint64_t d) {
  const Integer den(static_cast<unsigned long>(d));
  return {ceil_div(config.gap_low.numerator() * den, config.gap_low.denominator()),
          floor_div(config.gap_high.numerator() * den, config.gap_high.denominator())};
}

}  // namespace

void SampleConfig::validate() const {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
  if (gap_low.sign() <= 0 || !(gap_low < gap_high))
    throw Error(ErrorCode::InvalidArgument, "gap bounds must satisfy 0 < gap_low < gap_high");
  if (denominator_bound < 1) throw Error(ErrorCode::InvalidArgument, "denominator_bound must be at least 1");
  if (denominator_bound > (1ULL << 32)) throw Error(ErrorCode::InvalidArgument, "denominator_bound too large");
  for (std::uint64_t d = 1; d <= denominator_bound; ++d) {
    const auto [lo, hi] = numerator_range(*this, d);
    if (lo <= hi) return;
  }
  throw Error(ErrorCode::InvalidArgument, "no fraction with the given denominator bound lies in the gap range");
}

InstanceParameters instance_from_gaps(const OrderedScene& scene, std::span<const Rational> gaps) {
  if (gaps.size() != scene.gap_count()) throw Error(ErrorCode::InvalidArgument, "gap vector length does not match scene");
  InstanceParameters inst;
  inst.a.resize(scene.n() + 1);
  inst.lambda.resize(scene.n());
  Rational value;
  const auto& symbols = scene.symbols();
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (k > 0) {
      if (gaps[k - 1].sign() <= 0) throw Error(ErrorCode::NonPositiveGap, "gap " + std::to_string(k) + " is not positive");
      value += gaps[k - 1];
    }
    const Symbol& s = symbols[k];
    (s.kind == SymbolKind::A ? inst.a : inst.lambda)[s.index - 1] = value;
  }
  return inst;
}

std::vector<Rational> sample_gaps(const NeumannCase& c, const SampleConfig& config, std::size_t index, unsigned retry) {
  SplitMix64 rng(mix_seed(config.seed, fnv1a(c.name()), index, retry));
  std::vector<Rational> gaps;
  const std::size_t count = 2 * static_cast<std::size_t>(c.n());
  while (gaps.size() < count) {
    const std::uint64_t d = rng.uniform(1, config.denominator_bound);
    const auto [lo, hi] = numerator_range(config, d);
    if (lo > hi) continue;
    // Ranges stay small (gap_high * denominator_bound), so they fit a word.
    const std::uint64_t k = rng.uniform(lo.get_ui(), hi.get_ui());
    gaps.emplace_back(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(d)));
  }
  return gaps;
}

InstanceParameters sample_instance(const NeumannCase& c, const SampleConfig& config, std::size_t index, unsigned retry) {
  const auto gaps = sample_gaps(c, config, index, retry);
  return instance_from_gaps(c.scene(), gaps);
}

const char* oracle_kind_name(OracleResult::Kind k) {
  switch (k) {
    case OracleResult::Kind::Feasible: return "feasible";
    case OracleResult::Kind::Infeasible: return "infeasible";
    case OracleResult::Kind::Singular: return "singular";
  }
  return "?";
}

OracleResult direct_feasibility(const NeumannCase& c, const InstanceParameters& inst) {
  const RationalMatrix system = build_instance_system(c, inst);
  const std::size_t m = system.rows();
  RationalMatrix square(m, m);
  std::vector<Rational> rhs(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) square(r, s) = system(r, s);
    rhs[r] = -system(r, m);
  }
  OracleResult out;
  auto solved = gauss_solve(square, rhs);
  if (auto* rep = std::get_if<SingularReport>(&solved)) {
    out.kind = OracleResult::Kind::Singular;
    out.rank = rep->rank;
    return out;
  }
  out.solution = std::move(std::get<std::vector<Rational>>(solved));
  out.rank = m;
  const bool positive = std::all_of(out.solution.begin(), out.solution.end(), [](const Rational& v) { return v.sign() > 0; });
  out.kind = positive ? OracleResult::Kind::Feasible : OracleResult::Kind::Infeasible;
  return out;
}

namespace {

bool same_decision(Verdict::Kind v, OracleResult::Kind o) {
  return (v == Verdict::Kind::Feasible && o == OracleResult::Kind::Feasible) ||
         (v == Verdict::Kind::Infeasible && o == OracleResult::Kind::Infeasible);
}

SampleOutcome run_sample(const NeumannCase& c, const SampleConfig& config, PivotPolicy pivot, std::size_t index,
                         const Verdict& symbolic) {
  SampleOutcome out;
  out.index = index;
  OracleResult oracle;
  for (unsigned retry = 0;; ++retry) {
    out.instance = sample_instance(c, config, index, retry);
    out.retries = retry;
    oracle = direct_feasibility(c, out.instance);
    if (oracle.kind != OracleResult::Kind::Singular || retry == kMaxSingularRetries) break;
  }
  out.oracle = oracle.kind;

  const RationalMatrix system = build_instance_system(c, out.instance);
  try {
    InstanceSolution sol = solve_instance(system, pivot);
    out.verdict = sol.decision.verdict.kind;
    if (sol.witness) out.witness = std::move(sol.witness->values);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonPositiveLift) throw;
    out.verdict = Verdict::Kind::Feasible;
    out.nonpositive_lift = true;
    out.note = e.what();
  }

  if (oracle.kind == OracleResult::Kind::Singular) {
    out.agrees = true;
    out.note = "oracle singular after retries";
    return out;
  }
  out.agrees = same_decision(out.verdict, oracle.kind) && !out.nonpositive_lift;
  if (symbolic.kind != Verdict::Kind::Indeterminate && symbolic.kind != out.verdict) out.agrees = false;

  if (out.witness && oracle.kind == OracleResult::Kind::Feasible) {
    std::vector<Rational> expected = oracle.solution;
    expected.emplace_back(1);
    out.witness_matches = *out.witness == expected;
    if (!out.witness_matches) out.agrees = false;

    const std::span<const Rational> qsq(out.witness->data(), c.n() + 1);
    try {
      const auto u = u_polynomial(qsq, c.subset, out.instance.a);
      out.roots_match = verify_roots(u, out.instance.a, c.placement).match;
    } catch (const Error& e) {
      out.roots_match = false;
      out.note = e.what();
    }
    if (!*out.roots_match) out.agrees = false;
  }
  return out;
}

}  // namespace

CrossCheckReport cross_validate(const NeumannCase& c, const SampleConfig& config, PivotPolicy pivot, unsigned polya_max) {
  config.validate();
  CrossCheckReport rep;
  rep.case_name = c.name();
  rep.config = config;
  rep.pivot = pivot;
  rep.polya_max = polya_max;

  const OrderedScene scene = c.scene();
  auto decision = decide(build_symbolic_system(c, scene), GapDomain{polya_max, kSignSampleSeed}, pivot);
  rep.symbolic = std::move(decision.verdict);
  rep.symbolic_polya_level = decision.max_polya_level;

  rep.samples.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    SampleOutcome s = run_sample(c, config, pivot, i, rep.symbolic);
    rep.singular_retries += s.retries;
    if (s.oracle == OracleResult::Kind::Singular) ++rep.unresolved_singular;
    if (s.nonpositive_lift) ++rep.nonpositive_lifts;
    if (!s.witness_matches) ++rep.witness_mismatches;
    if (s.roots_match && !*s.roots_match) ++rep.root_mismatches;
    if (!s.agrees) ++rep.disagreements;
    rep.samples.push_back(std::move(s));
  }
  rep.agreement = rep.disagreements == 0;
  return rep;
}

std::string cross_check_json(const CrossCheckReport& rep) {
  using nlohmann::ordered_json;
  ordered_json samples = ordered_json::array();
  for (const auto& s : rep.samples) {
    ordered_json j;
    j["index"] = s.index;
    j["verdict"] = verdict_name(s.verdict);
    j["oracle"] = oracle_kind_name(s.oracle);
    if (s.witness) {
      ordered_json w = ordered_json::array();
      for (const auto& v : *s.witness) w.push_back(v.str());
      j["witness"] = std::move(w);
    }
    if (s.roots_match) j["roots_match"] = *s.roots_match;
    if (s.retries) j["retries"] = s.retries;
    if (!s.agrees) j["agrees"] = false;
    if (!s.note.empty()) j["note"] = s.note;
    samples.push_back(std::move(j));
  }
  ordered_json out;
  out["case"] = rep.case_name;
  ordered_json sym;
  sym["verdict"] = verdict_name(rep.symbolic.kind);
  sym["level"] = rep.symbolic.level;
  sym["polya_level"] = rep.symbolic_polya_level;
  if (rep.symbolic.indeterminate()) {
    sym["expression"] = rep.symbolic.expression;
    if (rep.symbolic.sampling) {
      const auto& s = *rep.symbolic.sampling;
      sym["sampling"] = {{"samples", s.samples}, {"positive", s.positive}, {"negative", s.negative},
                         {"zero", s.zero}, {"class_dependent", s.class_dependent()}};
    }
  }
  out["symbolic"] = std::move(sym);
  out["samples"] = std::move(samples);
  out["agreement"] = rep.agreement;
  out["singular_retries"] = rep.singular_retries;
  out["unresolved_singular"] = rep.unresolved_singular;
  out["nonpositive_lifts"] = rep.nonpositive_lifts;
  out["witness_mismatches"] = rep.witness_mismatches;
  out["root_mismatches"] = rep.root_mismatches;
  out["config"] = {{"seed", rep.config.seed},
                   {"samples", rep.config.samples},
                   {"gap_low", rep.config.gap_low.str()},
                   {"gap_high", rep.config.gap_high.str()},
                   {"denominator_bound", rep.config.denominator_bound},
                   {"pivot", pivot_policy_name(rep.pivot)},
                   {"polya_max", rep.polya_max}};
  return out.dump();
}

}  // namespace nroots
