#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <json.hpp>

#include <set>

#include "nroots/oracle.hpp"

using namespace nroots;
using testing::R;
using testing::RL;

namespace {

// Partial fractions of prod(l - lambda_r) / prod(l - a_k), read at a_j.
std::vector<Rational> closed_form_weights(const NeumannCase& c, const InstanceParameters& inst) {
  const auto eps = epsilon_vector(c.subset);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < inst.a.size(); ++j) {
    Rational num = 1, den = 1;
    for (const auto& l : inst.lambda) num *= inst.a[j] - l;
    for (std::size_t k = 0; k < inst.a.size(); ++k)
      if (k != j) den *= inst.a[j] - inst.a[k];
    out.push_back(Rational(eps[j]) * num / den);
  }
  return out;
}

}  // namespace

TEST_CASE("instance_from_gaps is a prefix sum from base 0") {
  const auto s0 = parse_case_name("S1L00").scene();
  const auto i0 = instance_from_gaps(s0, RL("1,1,1,1"));
  CHECK(i0.a == RL("2,3,4"));
  CHECK(i0.lambda == RL("0,1"));
  const auto s1 = parse_case_name("S1L12").scene();
  const auto i1 = instance_from_gaps(s1, RL("1,1,1,1"));
  CHECK(i1.a == RL("0,2,4"));
  CHECK(i1.lambda == RL("1,3"));
  CHECK(testing::error_code_of([&] { (void)instance_from_gaps(s1, RL("1,1,1")); }) == ErrorCode::InvalidArgument);
  CHECK(testing::error_code_of([&] { (void)instance_from_gaps(s1, RL("1,0,1,1")); }) == ErrorCode::NonPositiveGap);
}

TEST_CASE("sample_gaps is deterministic and in range") {
  const auto c = parse_case_name("S13L12");
  const SampleConfig cfg;
  std::set<std::string> distinct;
  for (std::size_t k = 0; k < 200; ++k) {
    const auto g = sample_gaps(c, cfg, k);
    REQUIRE(g.size() == 4);
    CHECK(g == sample_gaps(c, cfg, k));
    for (const auto& x : g) {
      CHECK(cfg.gap_low <= x);
      CHECK(x <= cfg.gap_high);
      CHECK(x.denominator() <= 64);
    }
    distinct.insert(join_rationals(g));
    const auto inst = sample_instance(c, cfg, k);
    CHECK_NOTHROW(check_instance(c, inst));
    CHECK(inst.a.front() == R("0"));
  }
  CHECK(distinct.size() == 200);
  CHECK(sample_gaps(c, cfg, 3, 1) != sample_gaps(c, cfg, 3, 0));
  SampleConfig other = cfg;
  other.seed = 7;
  CHECK(sample_gaps(c, other, 3) != sample_gaps(c, cfg, 3));
  CHECK(sample_gaps(parse_case_name("S13L11"), cfg, 3) != sample_gaps(c, cfg, 3));
}

TEST_CASE("SampleConfig validation") {
  SampleConfig ok;
  CHECK_NOTHROW(ok.validate());
  SampleConfig a = ok;
  a.gap_low = 0;
  CHECK(testing::error_code_of([&] { a.validate(); }) == ErrorCode::InvalidArgument);
  SampleConfig b = ok;
  b.gap_high = R("1/16");
  CHECK(testing::error_code_of([&] { b.validate(); }) == ErrorCode::InvalidArgument);
  SampleConfig c = ok;
  c.samples = 0;
  CHECK(testing::error_code_of([&] { c.validate(); }) == ErrorCode::InvalidArgument);
  SampleConfig d = ok;
  d.gap_low = R("1/3");
  d.gap_high = R("2/5");
  d.denominator_bound = 2;
  CHECK(testing::error_code_of([&] { d.validate(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("direct_feasibility examples") {
  const auto c = parse_case_name("S123L12");
  const InstanceParameters inst{RL("0,1,2"), RL("1/2,3/2")};
  const auto r = direct_feasibility(c, inst);
  CHECK(r.kind == OracleResult::Kind::Feasible);
  CHECK(r.solution == RL("3/8,1/4,3/8"));
  CHECK(r.rank == 3);

  // S1L11: q2^2 and q3^2 come out negative.
  const auto d = parse_case_name("S1L11");
  const InstanceParameters inst2{RL("0,1,2"), RL("1/4,3/4")};
  const auto s = direct_feasibility(d, inst2);
  CHECK(s.kind == OracleResult::Kind::Infeasible);
  CHECK(s.solution == closed_form_weights(d, inst2));
  CHECK(std::string(oracle_kind_name(s.kind)) == "infeasible");
}

TEST_CASE("direct_feasibility matches the partial-fraction weights") {
  const SampleConfig cfg;
  for (const auto& c : enumerate_cases(2))
    for (std::size_t k = 0; k < 5; ++k) {
      const auto inst = sample_instance(c, cfg, k);
      const auto r = direct_feasibility(c, inst);
      REQUIRE(r.kind != OracleResult::Kind::Singular);
      const auto w = closed_form_weights(c, inst);
      CHECK(r.solution == w);
      const bool pos = std::all_of(w.begin(), w.end(), [](const Rational& v) { return v.sign() > 0; });
      CHECK((r.kind == OracleResult::Kind::Feasible) == pos);
    }
}

TEST_CASE("cross_validate on a feasible, an infeasible and a mixed-interval case") {
  SampleConfig cfg;
  cfg.samples = 20;
  const auto f = cross_validate(parse_case_name("S13L00"), cfg);
  CHECK(f.symbolic.feasible());
  CHECK(f.agreement);
  CHECK(f.samples.size() == 20);
  CHECK(f.nonpositive_lifts == 0);
  CHECK(f.witness_mismatches == 0);
  CHECK(f.root_mismatches == 0);
  for (const auto& s : f.samples) {
    CHECK(s.verdict == Verdict::Kind::Feasible);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->size() == 4);
    CHECK(s.witness->back() == R("1"));
    CHECK(s.roots_match == std::optional<bool>(true));
    // Independent: the first n+1 coordinates are the partial-fraction weights.
    const auto w = closed_form_weights(parse_case_name("S13L00"), s.instance);
    CHECK(std::equal(w.begin(), w.end(), s.witness->begin()));
  }

  const auto i = cross_validate(parse_case_name("S23L22"), cfg);
  CHECK(i.symbolic.infeasible());
  CHECK(i.symbolic.level == 2);
  CHECK(i.agreement);
  for (const auto& s : i.samples) {
    CHECK(s.oracle == OracleResult::Kind::Infeasible);
    CHECK(!s.witness.has_value());
  }

  const auto m = cross_validate(parse_case_name("S12L13"), cfg);
  CHECK(m.agreement);
  CHECK(m.disagreements == 0);
  CHECK(m.singular_retries == 0);
}

TEST_CASE("cross_check_json is deterministic") {
  SampleConfig cfg;
  cfg.samples = 10;
  const auto c = parse_case_name("S13L11");
  const auto a = cross_check_json(cross_validate(c, cfg));
  const auto b = cross_check_json(cross_validate(c, cfg));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["case"] == "S13L11");
  CHECK(j["symbolic"]["verdict"] == "feasible");
  CHECK(j["samples"].size() == 10);
  CHECK(j["agreement"] == true);
  CHECK(j["config"]["seed"] == 42);
  cfg.seed = 43;
  CHECK(cross_check_json(cross_validate(c, cfg)) != a);
}

TEST_CASE("singular instances do not occur in the n = 2 sampling") {
  SampleConfig cfg;
  cfg.samples = 10;
  std::size_t retries = 0, unresolved = 0;
  for (const auto& c : enumerate_cases(2)) {
    const auto r = cross_validate(c, cfg);
    retries += r.singular_retries;
    unresolved += r.unresolved_singular;
    CHECK_MESSAGE(r.agreement, c.name());
  }
  CHECK(retries == 0);
  CHECK(unresolved == 0);
}
