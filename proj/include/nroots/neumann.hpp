#pragma once

// Problem front end: sign patterns of the real forms, root placements, the
// homogeneous linear system whose positive solutions are the point weights
// (q_1^2, ..., q_{n+1}^2, 1), and reconstruction/verification of U(lambda).

#include <string>
#include <string_view>
#include <vector>

#include "nroots/dines.hpp"
#include "nroots/exact.hpp"
#include "nroots/gappoly.hpp"

namespace nroots {

/// Nonempty ascending subset of {1, ..., n+1}.
class SubsetS {
 public:
  SubsetS(unsigned n, std::vector<unsigned> members);

  unsigned n() const { return n_; }
  const std::vector<unsigned>& members() const { return members_; }
  bool contains(unsigned j) const;

  friend bool operator==(const SubsetS&, const SubsetS&) = default;

 private:
  unsigned n_;
  std::vector<unsigned> members_;
};

/// Nondecreasing interval indices in {0, ..., n+1}; 0 is (-inf, a_1), t is
/// (a_t, a_{t+1}), n+1 is (a_{n+1}, inf).
class RootPlacement {
 public:
  RootPlacement(unsigned n, std::vector<unsigned> intervals);

  unsigned n() const { return static_cast<unsigned>(intervals_.size()); }
  const std::vector<unsigned>& intervals() const { return intervals_; }
  /// Roots assigned to each of the n+2 intervals.
  std::vector<std::size_t> multiplicities() const;

  friend bool operator==(const RootPlacement&, const RootPlacement&) = default;

 private:
  std::vector<unsigned> intervals_;
};

struct NeumannCase {
  SubsetS subset;
  RootPlacement placement;

  unsigned n() const { return placement.n(); }
  std::string name() const;
  OrderedScene scene() const { return scene_from_placement(n(), placement.intervals()); }
};

/// Canonical name "S13L12"; indices above 9 switch every case to the long
/// form "S1,3L1,2".
std::string case_name(const NeumannCase& c);
/// Accepts both forms. Throws MalformedName with the grammar in the message.
NeumannCase parse_case_name(std::string_view name);
NeumannCase make_case(unsigned n, std::vector<unsigned> subset, std::vector<unsigned> placement);

inline constexpr const char* kCaseNameGrammar =
    "S<subset digits, strictly ascending>L<placement digits, nondecreasing>, e.g. S13L12; "
    "or the long form S1,3L1,2";

struct InstanceParameters {
  std::vector<Rational> a;       // n+1 values, strictly ascending
  std::vector<Rational> lambda;  // n values, strictly ascending
};

/// +1 on members, -1 elsewhere.
std::vector<int> epsilon_vector(const SubsetS& subset);

/// Throws PlacementMismatch unless the instance realizes the placement with
/// strict inequalities throughout.
void check_instance(const NeumannCase& c, const InstanceParameters& inst);

/// (n+1) x (n+2) system: row 0 = (eps_1..eps_{n+1}, -1), row r =
/// (eps_s * prod_{j != s}(l_r - a_j))_s followed by 0.
DenseMatrix<GapPolynomial> build_symbolic_system(const NeumannCase& c, const OrderedScene& scene);
RationalMatrix build_instance_system(const NeumannCase& c, const InstanceParameters& inst);

/// Every placement of n roots, lexicographic; C(2n+1, n) of them.
std::vector<RootPlacement> enumerate_placements(unsigned n);
/// Nonempty subsets of {1..n+1}, by size then lexicographic.
std::vector<SubsetS> enumerate_subsets(unsigned n);
/// Subsets x placements in table order.
std::vector<NeumannCase> enumerate_cases(unsigned n);

/// U(l) = sum_j eps_j * qsq_j * prod_{k != j}(l - a_k). Throws
/// ConstraintViolated unless sum eps_j qsq_j = 1 (so U is monic).
UnivariatePolynomial u_polynomial(std::span<const Rational> qsq, const SubsetS& subset, std::span<const Rational> a);

/// Indices j (1-based) with qsq_j = 0; such weights put a root at some a_j.
std::vector<unsigned> zero_weights(std::span<const Rational> qsq);

struct RootCheck {
  std::vector<std::size_t> counts;    // Sturm count per interval, n+2 entries
  std::vector<std::size_t> expected;  // placement multiplicities
  std::size_t real_roots = 0;
  bool match = false;
};

/// Sturm counts of u on (-inf, a_1), (a_1, a_2), ..., (a_{n+1}, inf).
/// EndpointIsRoot propagates when some a_j is a root.
RootCheck verify_roots(const UnivariatePolynomial& u, std::span<const Rational> a, const RootPlacement& placement);

}  // namespace nroots
