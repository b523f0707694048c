#pragma once

// Dines elimination for strictly positive solutions of homogeneous linear
// systems. One engine serves two entry domains: exact rationals (a concrete
// instance) and gap polynomials (a whole ordering class at once).

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nroots/exact.hpp"
#include "nroots/gappoly.hpp"

namespace nroots {

enum class RowProfile { Mixed, AllNonneg, AllNonpos, AllZero, Undecided };

const char* row_profile_name(RowProfile p);

struct RowClassification {
  RowProfile profile = RowProfile::AllZero;
  /// First undecided column, set only for Undecided.
  std::optional<std::size_t> undecided_column;
};

/// Mixed as soon as a decided positive and a decided negative entry are both
/// present; otherwise an undecided entry makes the row Undecided.
RowClassification row_sign_profile(std::span<const Sign> row);

enum class PivotPolicy { FirstMixed, MinProduct };

const char* pivot_policy_name(PivotPolicy p);
PivotPolicy parse_pivot_policy(std::string_view text);

/// Columns of the pivot row by sign; all index lists ascending.
struct SignPartition {
  std::size_t pivot_row = 0;
  std::vector<std::size_t> positive;  // I
  std::vector<std::size_t> negative;  // J
  std::vector<std::size_t> zero;      // carried unchanged to the next level

  std::size_t p() const { return positive.size(); }
  std::size_t q() const { return negative.size(); }
};

/// Partition of one fully decided Mixed row.
SignPartition partition_row(std::span<const Sign> row, std::size_t pivot_row);

/// Chooses the pivot among Mixed rows with no undecided entries. Throws
/// NoMixedRow when there is none.
SignPartition partition_pivot(const DenseMatrix<Sign>& signs, PivotPolicy policy);

/// Where a column of a level comes from in the previous level.
struct ColumnOrigin {
  enum class Kind { Input, Pair, Carry };
  Kind kind = Kind::Input;
  std::size_t first = 0;   // i (Pair), carried column (Carry), itself (Input)
  std::size_t second = 0;  // j (Pair)
};

template <class E>
struct ReductionLevel {
  DenseMatrix<E> matrix;
  DenseMatrix<Sign> signs;
  std::vector<ColumnOrigin> origin;
  /// Partition used to produce the next level.
  std::optional<SignPartition> partition;
  /// All-zero rows removed before classification.
  std::size_t dropped_zero_rows = 0;
};

enum class StopReason { SingleEquation, NoEquations, UniformRow, UndecidedEntry };

const char* stop_reason_name(StopReason r);

template <class E>
struct DinesTrace {
  std::vector<ReductionLevel<E>> levels;
  StopReason stop = StopReason::SingleEquation;
};

struct Verdict {
  enum class Kind { Feasible, Infeasible, Indeterminate };
  Kind kind = Kind::Feasible;
  std::size_t level = 0;
  std::size_t row = 0;
  std::vector<Sign> row_signs;
  /// Indeterminate only.
  std::size_t column = 0;
  std::string expression;
  std::optional<SamplingSummary> sampling;

  bool feasible() const { return kind == Kind::Feasible; }
  bool infeasible() const { return kind == Kind::Infeasible; }
  bool indeterminate() const { return kind == Kind::Indeterminate; }
};

const char* verdict_name(Verdict::Kind k);

template <class E>
struct Decision {
  Verdict verdict;
  DinesTrace<E> trace;
  /// Largest Polya multiplier exponent needed for any sign this run relied on.
  unsigned max_polya_level = 0;
};

/// Entry domain contract: a cheap sign, a sign with every available
/// certificate, and a rendering.
template <class D>
concept EntryDomain = requires(const D& d, const typename D::Entry& e) {
  { d.quick_sign(e) } -> std::same_as<Sign>;
  { d.resolve(e) } -> std::same_as<SignValue>;
  { d.render(e) } -> std::convertible_to<std::string>;
};

struct RationalDomain {
  using Entry = Rational;
  Sign quick_sign(const Rational& v) const { return sign_from_int(v.sign()); }
  SignValue resolve(const Rational& v) const { return {quick_sign(v), 0, std::nullopt, std::nullopt}; }
  std::string render(const Rational& v) const { return v.str(); }
};

struct GapDomain {
  using Entry = GapPolynomial;
  unsigned polya_max = kDefaultPolyaMax;
  std::uint64_t sample_seed = kSignSampleSeed;

  Sign quick_sign(const GapPolynomial& p) const { return coefficient_sign(p); }
  SignValue resolve(const GapPolynomial& p) const { return sign_of(p, polya_max, sample_seed); }
  std::string render(const GapPolynomial& p) const { return p.str(); }
};

/// Next level per the reduced-system construction: for each non-pivot row r and
/// each pair (i, j) in I x J taken in column-stacked order (i fastest),
/// entry = b[pivot][i] * b[r][j] - b[pivot][j] * b[r][i]; zero columns of the
/// pivot row follow unchanged.
template <class E>
ReductionLevel<E> reduce_once(const ReductionLevel<E>& level) {
  if (!level.partition) throw Error(ErrorCode::InvalidArgument, "reduce_once requires a partition");
  const SignPartition& part = *level.partition;
  const DenseMatrix<E>& b = level.matrix;
  if (b.rows() < 2) throw Error(ErrorCode::InvalidArgument, "reduce_once requires at least two equations");

  ReductionLevel<E> next;
  const std::size_t cols = part.p() * part.q() + part.zero.size();
  next.origin.reserve(cols);
  for (std::size_t j : part.negative)
    for (std::size_t i : part.positive) next.origin.push_back({ColumnOrigin::Kind::Pair, i, j});
  for (std::size_t k : part.zero) next.origin.push_back({ColumnOrigin::Kind::Carry, k, k});

  const E zero_entry = b(0, 0) - b(0, 0);
  next.matrix = DenseMatrix<E>(b.rows() - 1, cols, zero_entry);
  const auto pivot = b.row(part.pivot_row);
  std::size_t out_row = 0;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (r == part.pivot_row) continue;
    const auto row = b.row(r);
    for (std::size_t c = 0; c < cols; ++c) {
      const ColumnOrigin& o = next.origin[c];
      if (o.kind == ColumnOrigin::Kind::Pair) {
        next.matrix(out_row, c) = pivot[o.first] * row[o.second] - pivot[o.second] * row[o.first];
      } else {
        next.matrix(out_row, c) = row[o.first];
      }
    }
    ++out_row;
  }
  return next;
}

namespace detail {

template <class E>
bool row_is_zero(std::span<const E> row, const DenseMatrix<Sign>& signs, std::size_t r) {
  for (std::size_t c = 0; c < row.size(); ++c)
    if (signs(r, c) != Sign::Zero) return false;
  return true;
}

}  // namespace detail

/// Runs the elimination to a verdict. Rows are classified at every level; the
/// first row whose nonzero signs agree proves infeasibility, a single Mixed
/// equation (or no equations at all) proves feasibility.
template <EntryDomain D>
Decision<typename D::Entry> decide(DenseMatrix<typename D::Entry> system, const D& domain,
                                   PivotPolicy policy = PivotPolicy::FirstMixed) {
  using E = typename D::Entry;
  Decision<E> out;
  if (system.rows() == 0 || system.cols() == 0) throw Error(ErrorCode::InvalidArgument, "decide requires a nonempty system");

  ReductionLevel<E> current;
  current.matrix = std::move(system);
  current.origin.resize(current.matrix.cols());
  for (std::size_t c = 0; c < current.origin.size(); ++c) current.origin[c] = {ColumnOrigin::Kind::Input, c, c};

  auto& levels = out.trace.levels;
  for (std::size_t level_index = 0;; ++level_index) {
    // Signs first; all-zero rows are vacuous and dropped.
    {
      const auto& m = current.matrix;
      DenseMatrix<Sign> quick(m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) quick(r, c) = domain.quick_sign(m(r, c));
      std::vector<std::size_t> keep;
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!detail::row_is_zero(m.row(r), quick, r)) keep.push_back(r);
      if (keep.size() != m.rows()) {
        DenseMatrix<E> kept(keep.size(), m.cols(), m(0, 0));
        DenseMatrix<Sign> kept_signs(keep.size(), m.cols());
        for (std::size_t k = 0; k < keep.size(); ++k)
          for (std::size_t c = 0; c < m.cols(); ++c) {
            kept(k, c) = m(keep[k], c);
            kept_signs(k, c) = quick(keep[k], c);
          }
        current.dropped_zero_rows = m.rows() - keep.size();
        current.matrix = std::move(kept);
        current.signs = std::move(kept_signs);
      } else {
        current.signs = std::move(quick);
      }
    }

    auto& m = current.matrix;
    auto& signs = current.signs;
    if (m.rows() == 0) {
      out.verdict.kind = Verdict::Kind::Feasible;
      out.verdict.level = level_index;
      out.trace.stop = StopReason::NoEquations;
      levels.push_back(std::move(current));
      return out;
    }

    // Escalate undecided entries only where the row classification needs them.
    const auto escalate_row = [&](std::size_t r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (signs(r, c) != Sign::Indeterminate) continue;
        const SignValue v = domain.resolve(m(r, c));
        signs(r, c) = v.sign;
        if (v.decided()) out.max_polya_level = std::max(out.max_polya_level, v.polya_level);
      }
    };

    std::vector<RowClassification> classes(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      classes[r] = row_sign_profile(signs.row(r));
      if (classes[r].profile == RowProfile::Undecided) {
        escalate_row(r);
        classes[r] = row_sign_profile(signs.row(r));
      }
    }

    for (std::size_t r = 0; r < m.rows(); ++r) {
      const RowProfile p = classes[r].profile;
      if (p == RowProfile::AllNonneg || p == RowProfile::AllNonpos) {
        out.verdict.kind = Verdict::Kind::Infeasible;
        out.verdict.level = level_index;
        out.verdict.row = r;
        out.verdict.row_signs.assign(signs.row(r).begin(), signs.row(r).end());
        out.trace.stop = StopReason::UniformRow;
        levels.push_back(std::move(current));
        return out;
      }
    }

    const auto indeterminate = [&](std::size_t r, std::size_t c) {
      out.verdict.kind = Verdict::Kind::Indeterminate;
      out.verdict.level = level_index;
      out.verdict.row = r;
      out.verdict.column = c;
      out.verdict.row_signs.assign(signs.row(r).begin(), signs.row(r).end());
      const SignValue v = domain.resolve(m(r, c));
      out.verdict.expression = domain.render(m(r, c));
      out.verdict.sampling = v.sampling;
      out.trace.stop = StopReason::UndecidedEntry;
      levels.push_back(std::move(current));
      return out;
    };

    for (std::size_t r = 0; r < m.rows(); ++r)
      if (classes[r].profile == RowProfile::Undecided) return indeterminate(r, *classes[r].undecided_column);

    if (m.rows() == 1) {
      out.verdict.kind = Verdict::Kind::Feasible;
      out.verdict.level = level_index;
      out.trace.stop = StopReason::SingleEquation;
      levels.push_back(std::move(current));
      return out;
    }

    // Every row is Mixed; the pivot must have fully decided signs.
    for (std::size_t r = 0; r < m.rows(); ++r) {
      escalate_row(r);
      const bool decided =
          std::none_of(signs.row(r).begin(), signs.row(r).end(), [](Sign s) { return s == Sign::Indeterminate; });
      if (decided && policy == PivotPolicy::FirstMixed) break;
    }
    try {
      current.partition = partition_pivot(signs, policy);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoMixedRow) throw;
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (signs(0, c) == Sign::Indeterminate) return indeterminate(0, c);
      throw;
    }

    ReductionLevel<E> next = reduce_once(current);
    levels.push_back(std::move(current));
    current = std::move(next);
  }
}

/// Positive solution of a single Mixed equation: x_i = -sum_J b_j for i in I,
/// x_j = sum_I b_i for j in J, zero columns set to 1.
std::vector<Rational> terminal_witness(std::span<const Rational> equation);

struct WitnessVector {
  std::vector<Rational> values;
};

/// Lifts positive values of the last level back to level 0 through the trace,
/// then scales so the last level-0 coordinate (the homogenizing one) is 1.
/// Throws NonPositiveLift if the result is not a strictly positive exact
/// solution of the level-0 system.
WitnessVector lift_witness(const DinesTrace<Rational>& trace, std::span<const Rational> terminal);

/// Feasible instance decision plus lifted witness in one call.
struct InstanceSolution {
  Decision<Rational> decision;
  std::optional<WitnessVector> witness;
};
InstanceSolution solve_instance(const RationalMatrix& system, PivotPolicy policy = PivotPolicy::FirstMixed);

}  // namespace nroots
