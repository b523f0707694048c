#include "nroots/neumann.hpp"

#include <algorithm>
#include <cctype>

namespace nroots {

SubsetS::SubsetS(unsigned n, std::vector<unsigned> members) : n_(n), members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::InvalidArgument, "subset must be nonempty");
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k] < 1 || members_[k] > n + 1)
      throw Error(ErrorCode::InvalidArgument, "subset member " + std::to_string(members_[k]) + " outside 1.." + std::to_string(n + 1));
    if (k && members_[k] <= members_[k - 1]) throw Error(ErrorCode::InvalidArgument, "subset members must be strictly ascending");
  }
}

bool SubsetS::contains(unsigned j) const { return std::binary_search(members_.begin(), members_.end(), j); }

RootPlacement::RootPlacement(unsigned n, std::vector<unsigned> intervals) : intervals_(std::move(intervals)) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "placement requires n >= 1");
  if (intervals_.size() != n) throw Error(ErrorCode::InvalidArgument, "placement must have n entries");
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    if (intervals_[k] > n + 1) throw Error(ErrorCode::InvalidArgument, "placement interval outside 0.." + std::to_string(n + 1));
    if (k && intervals_[k] < intervals_[k - 1]) throw Error(ErrorCode::InvalidArgument, "placement must be nondecreasing");
  }
}

std::vector<std::size_t> RootPlacement::multiplicities() const {
  std::vector<std::size_t> m(intervals_.size() + 2, 0);
  for (auto t : intervals_) ++m[t];
  return m;
}

// ---------------------------------------------------------------------------
// Names

std::string case_name(const NeumannCase& c) {
  const auto& s = c.subset.members();
  const auto& p = c.placement.intervals();
  const bool long_form = std::any_of(s.begin(), s.end(), [](unsigned v) { return v > 9; }) ||
                         std::any_of(p.begin(), p.end(), [](unsigned v) { return v > 9; });
  std::string out = "S";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k && long_form) out += ",";
    out += std::to_string(s[k]);
  }
  out += "L";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k && long_form) out += ",";
    out += std::to_string(p[k]);
  }
  return out;
}

std::string NeumannCase::name() const { return case_name(*this); }

namespace {

std::vector<unsigned> parse_indices(std::string_view part, bool long_form, std::string_view whole) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::MalformedName, "malformed case name '" + std::string(whole) + "': " + why + "; expected " + kCaseNameGrammar);
  };
  std::vector<unsigned> out;
  if (part.empty()) throw bad("empty index list");
  if (!long_form) {
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad("non-digit character");
      out.push_back(static_cast<unsigned>(ch - '0'));
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = part.find(',', start);
    const auto tok = part.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok.empty() || tok.size() > 4 ||
        !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw bad("bad index token");
    out.push_back(static_cast<unsigned>(std::stoul(std::string(tok))));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

NeumannCase parse_case_name(std::string_view name) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::MalformedName, "malformed case name '" + std::string(name) + "': " + why + "; expected " + kCaseNameGrammar);
  };
  if (name.size() < 4 || name.front() != 'S') throw bad("must start with S");
  const auto l = name.find('L');
  if (l == std::string_view::npos) throw bad("missing L");
  const bool long_form = name.find(',') != std::string_view::npos;
  const auto subset = parse_indices(name.substr(1, l - 1), long_form, name);
  const auto placement = parse_indices(name.substr(l + 1), long_form, name);
  const auto n = static_cast<unsigned>(placement.size());
  for (std::size_t k = 1; k < subset.size(); ++k)
    if (subset[k] <= subset[k - 1]) throw bad("subset digits must be strictly ascending");
  for (std::size_t k = 1; k < placement.size(); ++k)
    if (placement[k] < placement[k - 1]) throw bad("placement digits must be nondecreasing");
  for (auto s : subset)
    if (s < 1 || s > n + 1) throw bad("subset index outside 1..n+1");
  for (auto t : placement)
    if (t > n + 1) throw bad("placement index outside 0..n+1");
  // The long form is accepted at any size; case_name only emits it when needed.
  return NeumannCase{SubsetS(n, subset), RootPlacement(n, placement)};
}

NeumannCase make_case(unsigned n, std::vector<unsigned> subset, std::vector<unsigned> placement) {
  return NeumannCase{SubsetS(n, std::move(subset)), RootPlacement(n, std::move(placement))};
}

// ---------------------------------------------------------------------------
// Systems

std::vector<int> epsilon_vector(const SubsetS& subset) {
  std::vector<int> eps(subset.n() + 1);
  for (unsigned j = 1; j <= subset.n() + 1; ++j) eps[j - 1] = subset.contains(j) ? 1 : -1;
  return eps;
}

void check_instance(const NeumannCase& c, const InstanceParameters& inst) {
  const unsigned n = c.n();
  const auto bad = [](const std::string& why) { return Error(ErrorCode::PlacementMismatch, why); };
  if (inst.a.size() != n + 1) throw bad("expected " + std::to_string(n + 1) + " values a");
  if (inst.lambda.size() != n) throw bad("expected " + std::to_string(n) + " values lambda");
  for (std::size_t k = 1; k < inst.a.size(); ++k)
    if (!(inst.a[k - 1] < inst.a[k])) throw bad("a must be strictly ascending");
  for (std::size_t k = 1; k < inst.lambda.size(); ++k)
    if (!(inst.lambda[k - 1] < inst.lambda[k])) throw bad("lambda must be strictly ascending");
  for (std::size_t r = 0; r < n; ++r) {
    const unsigned t = c.placement.intervals()[r];
    const Rational& l = inst.lambda[r];
    const bool above = t == 0 || inst.a[t - 1] < l;
    const bool below = t == n + 1 || l < inst.a[t];
    if (!above || !below)
      throw bad("lambda_" + std::to_string(r + 1) + " = " + l.str() + " is not strictly inside interval " + std::to_string(t));
  }
}

namespace {

/// Shared construction over any entry type given the value differences.
template <class E, class Diff, class FromInt>
DenseMatrix<E> build_system(const NeumannCase& c, Diff diff, FromInt from_int) {
  const unsigned n = c.n();
  const auto eps = epsilon_vector(c.subset);
  DenseMatrix<E> m(n + 1, n + 2, from_int(0));
  for (unsigned s = 0; s <= n; ++s) m(0, s) = from_int(eps[s]);
  m(0, n + 1) = from_int(-1);
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned s = 0; s <= n; ++s) {
      E prod = from_int(eps[s]);
      for (unsigned j = 0; j <= n; ++j)
        if (j != s) prod = prod * diff(r, j + 1);
      m(r, s) = std::move(prod);
    }
  }
  return m;
}

}  // namespace

DenseMatrix<GapPolynomial> build_symbolic_system(const NeumannCase& c, const OrderedScene& scene) {
  if (scene.n() != c.n()) throw Error(ErrorCode::InvalidArgument, "scene size does not match case");
  const std::size_t g = scene.gap_count();
  return build_system<GapPolynomial>(
      c,
      [&](unsigned r, unsigned j) {
        return difference(scene, Symbol{SymbolKind::Lambda, r}, Symbol{SymbolKind::A, j});
      },
      [&](int v) { return GapPolynomial::constant(g, v); });
}

RationalMatrix build_instance_system(const NeumannCase& c, const InstanceParameters& inst) {
  check_instance(c, inst);
  return build_system<Rational>(
      c, [&](unsigned r, unsigned j) { return inst.lambda[r - 1] - inst.a[j - 1]; },
      [](int v) { return Rational(v); });
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<RootPlacement> enumerate_placements(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  std::vector<RootPlacement> out;
  std::vector<unsigned> cur(n, 0);
  while (true) {
    out.emplace_back(n, cur);
    // Next nondecreasing sequence over 0..n+1 in lexicographic order.
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == n + 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t j = k; j < n; ++j) cur[j] = cur[k - 1];
  }
  return out;
}

std::vector<SubsetS> enumerate_subsets(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const unsigned size = n + 1;
  std::vector<std::vector<unsigned>> all;
  for (unsigned mask = 1; mask < (1u << size); ++mask) {
    std::vector<unsigned> m;
    for (unsigned j = 0; j < size; ++j)
      if (mask & (1u << j)) m.push_back(j + 1);
    all.push_back(std::move(m));
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<SubsetS> out;
  out.reserve(all.size());
  for (auto& m : all) out.emplace_back(n, std::move(m));
  return out;
}

std::vector<NeumannCase> enumerate_cases(unsigned n) {
  std::vector<NeumannCase> out;
  const auto placements = enumerate_placements(n);
  for (const auto& s : enumerate_subsets(n))
    for (const auto& p : placements) out.push_back({s, p});
  return out;
}

// ---------------------------------------------------------------------------
// U(lambda)

UnivariatePolynomial u_polynomial(std::span<const Rational> qsq, const SubsetS& subset, std::span<const Rational> a) {
  const unsigned n = subset.n();
  if (qsq.size() != n + 1 || a.size() != n + 1) throw Error(ErrorCode::InvalidArgument, "u_polynomial: expected n+1 weights and values");
  const auto eps = epsilon_vector(subset);
  Rational constraint;
  for (unsigned j = 0; j <= n; ++j) {
    if (qsq[j].sign() < 0) throw Error(ErrorCode::InvalidArgument, "u_polynomial: negative weight");
    constraint += Rational(eps[j]) * qsq[j];
  }
  if (constraint != Rational(1))
    throw Error(ErrorCode::ConstraintViolated, "sum eps_j q_j^2 = " + constraint.str() + ", expected 1");
  UnivariatePolynomial u;
  for (unsigned j = 0; j <= n; ++j) {
    UnivariatePolynomial prod = UnivariatePolynomial::constant(Rational(eps[j]) * qsq[j]);
    for (unsigned k = 0; k <= n; ++k)
      if (k != j) prod = prod * UnivariatePolynomial::linear_root(a[k]);
    u = u + prod;
  }
  return u;
}

std::vector<unsigned> zero_weights(std::span<const Rational> qsq) {
  std::vector<unsigned> out;
  for (std::size_t j = 0; j < qsq.size(); ++j)
    if (qsq[j].is_zero()) out.push_back(static_cast<unsigned>(j + 1));
  return out;
}

RootCheck verify_roots(const UnivariatePolynomial& u, std::span<const Rational> a, const RootPlacement& placement) {
  const unsigned n = placement.n();
  if (a.size() != n + 1) throw Error(ErrorCode::InvalidArgument, "verify_roots: expected n+1 values a");
  RootCheck out;
  out.expected = placement.multiplicities();
  out.counts.resize(n + 2);
  for (unsigned t = 0; t <= n + 1; ++t) {
    std::optional<Rational> lo, hi;
    if (t > 0) lo = a[t - 1];
    if (t <= n) hi = a[t];
    out.counts[t] = sturm_count(u, lo, hi);
    out.real_roots += out.counts[t];
  }
  out.match = out.counts == out.expected && out.real_roots == n && u.degree() == static_cast<int>(n);
  return out;
}

}  // namespace nroots
