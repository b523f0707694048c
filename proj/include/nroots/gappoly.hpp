#pragma once

// Symbolic entries over an ordering class. Every value of the ordered scene
// (the a's and the candidate roots) is written as a prefix sum of strictly
// positive gaps g1..g_{2n} with the smallest value pinned at 0, so a
// polynomial whose gap expansion has single-signed coefficients has that sign
// on the whole class.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nroots/exact.hpp"

namespace nroots {

enum class SymbolKind : std::uint8_t { A, Lambda };

struct Symbol {
  SymbolKind kind = SymbolKind::A;
  unsigned index = 1;  // 1-based: a_1..a_{n+1} or l_1..l_n

  std::string str() const;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Total order of the 2n+1 values induced by a root placement.
class OrderedScene {
 public:
  OrderedScene(unsigned n, std::vector<Symbol> ascending);

  unsigned n() const { return n_; }
  std::size_t gap_count() const { return 2 * static_cast<std::size_t>(n_); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t position_of(const Symbol& s) const;

  /// "l1 < l2 < a1 < a2 < a3"
  std::string str() const;

  friend bool operator==(const OrderedScene&, const OrderedScene&) = default;

 private:
  unsigned n_;
  std::vector<Symbol> symbols_;
};

/// Interval t in 0..n+1 receives the roots listed at t; roots sharing an
/// interval keep index order.
OrderedScene scene_from_placement(unsigned n, std::span<const unsigned> intervals);

inline constexpr std::size_t kMaxGaps = 16;

using Monomial = std::array<std::uint8_t, kMaxGaps>;

struct Term {
  Monomial exponents{};
  Integer coefficient;
};

/// Sparse polynomial with integer coefficients in the gap variables. Terms are
/// kept in graded-lex descending order with no zero coefficients.
class GapPolynomial {
 public:
  explicit GapPolynomial(std::size_t gap_count = 0);

  static GapPolynomial constant(std::size_t gap_count, const Integer& c);
  /// g_{index+1}, index is 0-based.
  static GapPolynomial variable(std::size_t gap_count, std::size_t index);
  /// g_{first+1} + ... + g_{last}, the difference of two scene positions.
  static GapPolynomial span_sum(std::size_t gap_count, std::size_t first, std::size_t last);
  /// Builds from arbitrary (monomial, coefficient) pairs; merges duplicates.
  static GapPolynomial from_terms(std::size_t gap_count, std::vector<Term> terms);

  std::size_t gap_count() const { return gap_count_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  /// Leading term in graded-lex order; undefined for the zero polynomial.
  const Term& leading_term() const { return terms_.front(); }

  GapPolynomial& operator+=(const GapPolynomial& o);
  GapPolynomial& operator-=(const GapPolynomial& o);
  GapPolynomial& operator*=(const Integer& s);

  friend GapPolynomial operator+(GapPolynomial a, const GapPolynomial& b) { return a += b; }
  friend GapPolynomial operator-(GapPolynomial a, const GapPolynomial& b) { return a -= b; }
  friend GapPolynomial operator*(const GapPolynomial& a, const GapPolynomial& b);
  friend GapPolynomial operator*(GapPolynomial a, const Integer& s) { return a *= s; }
  friend GapPolynomial operator-(const GapPolynomial& a);
  friend bool operator==(const GapPolynomial& a, const GapPolynomial& b);

  GapPolynomial pow(unsigned e) const;

  /// Exact value at strictly positive gaps; throws NonPositiveGap.
  Rational evaluate(std::span<const Rational> gaps) const;

  /// denominator^D * p(numerators / denominator) with D the total degree; an
  /// exact integer with the sign of p at that point when denominator > 0.
  /// Accepts arbitrary integer numerators.
  Integer evaluate_scaled(std::span<const Integer> numerators, const Integer& denominator = 1) const;

  /// "3*g1^2*g2 - g3 + 5", graded-lex order.
  std::string str() const;

 private:
  void add_scaled(const GapPolynomial& o, int sign);
  std::size_t gap_count_;
  std::vector<Term> terms_;
};

/// Exact quotient num / den when den divides num, otherwise nullopt.
std::optional<GapPolynomial> divide_exact(const GapPolynomial& num, const GapPolynomial& den);

/// Value of every scene symbol as a gap polynomial, indexed by scene position:
/// position k maps to g1 + ... + g_k (position 0 is the base value 0).
std::vector<GapPolynomial> value_polynomials(const OrderedScene& scene);
GapPolynomial value_of(const OrderedScene& scene, const Symbol& s);
/// value(x) - value(y)
GapPolynomial difference(const OrderedScene& scene, const Symbol& x, const Symbol& y);

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1, Indeterminate = 2 };

const char* sign_name(Sign s);
/// "+1", "-1", "0", "?"
std::string sign_token(Sign s);
Sign sign_from_int(int s);

struct SamplingSummary {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  /// Both signs observed: the polynomial provably changes sign in the class.
  bool class_dependent() const { return positive > 0 && negative > 0; }
  std::string str() const;
};

struct SignValue {
  Sign sign = Sign::Zero;
  /// Polya multiplier exponent m at which a definite sign was certified.
  unsigned polya_level = 0;
  /// Set only for Indeterminate.
  std::optional<GapPolynomial> expression;
  std::optional<SamplingSummary> sampling;

  bool decided() const { return sign != Sign::Indeterminate; }
};

inline constexpr unsigned kDefaultPolyaMax = 4;
inline constexpr std::size_t kSignSamples = 1000;
inline constexpr std::uint64_t kSignSampleSeed = 0x5eed'9a95'0000'0001ULL;

/// Sign from coefficient signs alone (m = 0); Indeterminate when mixed.
Sign coefficient_sign(const GapPolynomial& p);

/// Tries the multipliers (g1 + ... + g_{2n})^m for m = 0..polya_max; when no
/// multiplier yields single-signed coefficients the result is Indeterminate and
/// carries a seeded sampling summary over kSignSamples positive gap vectors.
SignValue sign_of(const GapPolynomial& p, unsigned polya_max = kDefaultPolyaMax,
                  std::uint64_t sample_seed = kSignSampleSeed);

/// Seeded sampling of the sign at positive gap vectors k/64 with k in [8, 512].
SamplingSummary sample_signs(const GapPolynomial& p, std::size_t samples, std::uint64_t seed);

/// A difference factor (upper - lower) with `upper` above `lower` in the scene,
/// hence positive on the class.
struct DifferenceFactor {
  Symbol upper;
  Symbol lower;
  unsigned multiplicity = 1;
};

/// p = content * prod(factors) * cofactor, content carrying the sign.
struct PlainFactorization {
  Integer content;
  std::vector<DifferenceFactor> factors;
  GapPolynomial cofactor;

  /// True when p is a signed constant times difference factors only, i.e. its
  /// sign follows from the factor signs without any expansion.
  bool plain() const { return cofactor.is_constant(); }
  std::string str() const;
};

/// Strips every scene difference (x_j - x_i, i < j) that divides p.
PlainFactorization factor_differences(const GapPolynomial& p, const OrderedScene& scene);

}  // namespace nroots
