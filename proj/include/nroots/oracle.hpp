#pragma once

// Independent ground truth for the elimination engine: seeded rational
// instances inside an ordering class, a direct square solve with the
// homogenizing coordinate pinned to 1, and per-case cross-validation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nroots/dines.hpp"
#include "nroots/neumann.hpp"

namespace nroots {

struct SampleConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  Rational gap_low{1, 8};
  Rational gap_high{8};
  std::uint64_t denominator_bound = 64;

  /// Throws InvalidArgument unless 0 < gap_low < gap_high, samples >= 1 and
  /// some fraction with denominator <= denominator_bound fits the range.
  void validate() const;
};

/// Values are prefix sums of the gaps from base 0, read off in scene order.
InstanceParameters instance_from_gaps(const OrderedScene& scene, std::span<const Rational> gaps);

/// Gaps k/d with d uniform in 1..denominator_bound and k uniform over the
/// numerators that land in [gap_low, gap_high]. Fully determined by
/// (seed, case name, index, retry).
std::vector<Rational> sample_gaps(const NeumannCase& c, const SampleConfig& config, std::size_t index, unsigned retry = 0);
InstanceParameters sample_instance(const NeumannCase& c, const SampleConfig& config, std::size_t index, unsigned retry = 0);

struct OracleResult {
  enum class Kind { Feasible, Infeasible, Singular };
  Kind kind = Kind::Singular;
  /// Unique solution (q_1^2, ..., q_{n+1}^2) when nonsingular.
  std::vector<Rational> solution;
  std::size_t rank = 0;
};

const char* oracle_kind_name(OracleResult::Kind k);

OracleResult direct_feasibility(const NeumannCase& c, const InstanceParameters& inst);

struct SampleOutcome {
  std::size_t index = 0;
  unsigned retries = 0;
  InstanceParameters instance;
  Verdict::Kind verdict = Verdict::Kind::Infeasible;  // instance-mode elimination
  OracleResult::Kind oracle = OracleResult::Kind::Singular;
  std::optional<std::vector<Rational>> witness;  // lifted, normalized, n+2 entries
  bool nonpositive_lift = false;
  bool witness_matches = true;
  std::optional<bool> roots_match;
  bool agrees = true;
  std::string note;
};

struct CrossCheckReport {
  std::string case_name;
  Verdict symbolic;
  unsigned symbolic_polya_level = 0;
  std::vector<SampleOutcome> samples;
  bool agreement = true;
  std::size_t singular_retries = 0;
  std::size_t unresolved_singular = 0;
  std::size_t nonpositive_lifts = 0;
  std::size_t witness_mismatches = 0;
  std::size_t root_mismatches = 0;
  std::size_t disagreements = 0;
  SampleConfig config;
  PivotPolicy pivot = PivotPolicy::FirstMixed;
  unsigned polya_max = kDefaultPolyaMax;
};

inline constexpr unsigned kMaxSingularRetries = 10;

/// Symbolic decide once, then instance-mode decide, witness lifting,
/// direct solve and Sturm verification per sample. Disagreements are data.
CrossCheckReport cross_validate(const NeumannCase& c, const SampleConfig& config,
                                PivotPolicy pivot = PivotPolicy::FirstMixed, unsigned polya_max = kDefaultPolyaMax);

/// One compact JSON object; deterministic for fixed inputs.
std::string cross_check_json(const CrossCheckReport& report);

}  // namespace nroots
