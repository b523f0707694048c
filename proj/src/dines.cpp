#include "nroots/dines.hpp"

namespace nroots {

const char* row_profile_name(RowProfile p) {
  switch (p) {
    case RowProfile::Mixed: return "Mixed";
    case RowProfile::AllNonneg: return "AllNonneg";
    case RowProfile::AllNonpos: return "AllNonpos";
    case RowProfile::AllZero: return "AllZero";
    case RowProfile::Undecided: return "Undecided";
  }
  return "?";
}

const char* pivot_policy_name(PivotPolicy p) { return p == PivotPolicy::FirstMixed ? "first" : "minpq"; }

PivotPolicy parse_pivot_policy(std::string_view text) {
  if (text == "first") return PivotPolicy::FirstMixed;
  if (text == "minpq") return PivotPolicy::MinProduct;
  throw Error(ErrorCode::InvalidArgument, "unknown pivot policy '" + std::string(text) + "' (first|minpq)");
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::SingleEquation: return "single_equation";
    case StopReason::NoEquations: return "no_equations";
    case StopReason::UniformRow: return "uniform_row";
    case StopReason::UndecidedEntry: return "undecided_entry";
  }
  return "?";
}

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Feasible: return "feasible";
    case Verdict::Kind::Infeasible: return "infeasible";
    case Verdict::Kind::Indeterminate: return "indeterminate";
  }
  return "?";
}

RowClassification row_sign_profile(std::span<const Sign> row) {
  bool pos = false, neg = false;
  std::optional<std::size_t> undecided;
  for (std::size_t c = 0; c < row.size(); ++c) {
    switch (row[c]) {
      case Sign::Positive: pos = true; break;
      case Sign::Negative: neg = true; break;
      case Sign::Indeterminate:
        if (!undecided) undecided = c;
        break;
      case Sign::Zero: break;
    }
  }
  if (pos && neg) return {RowProfile::Mixed, std::nullopt};
  if (undecided) return {RowProfile::Undecided, undecided};
  if (pos) return {RowProfile::AllNonneg, std::nullopt};
  if (neg) return {RowProfile::AllNonpos, std::nullopt};
  return {RowProfile::AllZero, std::nullopt};
}

SignPartition partition_row(std::span<const Sign> row, std::size_t pivot_row) {
  SignPartition part;
  part.pivot_row = pivot_row;
  for (std::size_t c = 0; c < row.size(); ++c) {
    switch (row[c]) {
      case Sign::Positive: part.positive.push_back(c); break;
      case Sign::Negative: part.negative.push_back(c); break;
      case Sign::Zero: part.zero.push_back(c); break;
      case Sign::Indeterminate:
        throw Error(ErrorCode::InvalidArgument, "cannot partition a row with undecided signs");
    }
  }
  if (part.positive.empty() || part.negative.empty())
    throw Error(ErrorCode::NoMixedRow, "pivot row is not Mixed");
  return part;
}

SignPartition partition_pivot(const DenseMatrix<Sign>& signs, PivotPolicy policy) {
  std::optional<SignPartition> best;
  for (std::size_t r = 0; r < signs.rows(); ++r) {
    const auto row = signs.row(r);
    if (std::any_of(row.begin(), row.end(), [](Sign s) { return s == Sign::Indeterminate; })) continue;
    if (row_sign_profile(row).profile != RowProfile::Mixed) continue;
    SignPartition part = partition_row(row, r);
    if (policy == PivotPolicy::FirstMixed) return part;
    if (!best || part.p() * part.q() < best->p() * best->q()) best = std::move(part);
  }
  if (!best) throw Error(ErrorCode::NoMixedRow, "no fully decided Mixed row available as pivot");
  return *best;
}

std::vector<Rational> terminal_witness(std::span<const Rational> equation) {
  Rational pos_sum, neg_sum;
  for (const auto& b : equation) {
    if (b.sign() > 0) pos_sum += b;
    else if (b.sign() < 0) neg_sum += b;
  }
  if (pos_sum.is_zero() || neg_sum.is_zero()) throw Error(ErrorCode::NoMixedRow, "terminal equation is not Mixed");
  std::vector<Rational> x(equation.size());
  for (std::size_t c = 0; c < equation.size(); ++c) {
    const int s = equation[c].sign();
    x[c] = s > 0 ? -neg_sum : (s < 0 ? pos_sum : Rational(1));
  }
  return x;
}

namespace {

bool satisfies(const RationalMatrix& m, std::span<const Rational> x) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

WitnessVector lift_witness(const DinesTrace<Rational>& trace, std::span<const Rational> terminal) {
  const auto& levels = trace.levels;
  if (levels.empty()) throw Error(ErrorCode::InvalidArgument, "empty trace");
  if (trace.stop != StopReason::SingleEquation && trace.stop != StopReason::NoEquations)
    throw Error(ErrorCode::InvalidArgument, "trace does not end in a feasible level");
  if (terminal.size() != levels.back().matrix.cols())
    throw Error(ErrorCode::InvalidArgument, "terminal values do not match the last level");

  std::vector<Rational> y(terminal.begin(), terminal.end());
  for (std::size_t k = levels.size() - 1; k-- > 0;) {
    const auto& parent = levels[k];
    const auto& child = levels[k + 1];
    const auto pivot = parent.matrix.row(parent.partition->pivot_row);
    std::vector<Rational> x(parent.matrix.cols());
    for (std::size_t c = 0; c < child.origin.size(); ++c) {
      const ColumnOrigin& o = child.origin[c];
      if (o.kind == ColumnOrigin::Kind::Pair) {
        x[o.first] -= pivot[o.second] * y[c];
        x[o.second] += pivot[o.first] * y[c];
      } else {
        x[o.first] = y[c];
      }
    }
    y = std::move(x);
  }

  const Rational scale = y.back();
  if (scale.sign() <= 0) throw Error(ErrorCode::NonPositiveLift, "lifted homogenizing coordinate is not positive");
  for (auto& v : y) {
    v /= scale;
    if (v.sign() <= 0) throw Error(ErrorCode::NonPositiveLift, "lifted witness has a non-positive coordinate");
  }
  if (!satisfies(levels.front().matrix, y))
    throw Error(ErrorCode::NonPositiveLift, "lifted witness does not satisfy the input system");
  return {std::move(y)};
}

InstanceSolution solve_instance(const RationalMatrix& system, PivotPolicy policy) {
  InstanceSolution out{decide(system, RationalDomain{}, policy), std::nullopt};
  if (!out.decision.verdict.feasible()) return out;
  const auto& last = out.decision.trace.levels.back();
  std::vector<Rational> terminal;
  if (last.matrix.rows() == 0) terminal.assign(last.matrix.cols(), Rational(1));
  else terminal = terminal_witness(last.matrix.row(0));
  out.witness = lift_witness(out.decision.trace, terminal);
  return out;
}

}  // namespace nroots
