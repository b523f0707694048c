#pragma once

// Exact arithmetic substrate: reduced rationals, dense matrices, univariate
// polynomials over Q, Gaussian elimination and Sturm-chain root counting.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nroots/errors.hpp"

namespace nroots {

using Integer = mpz_class;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p" or "p/q" with an optional leading minus on p only.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// Canonical text "p" or "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Comma-separated list of rationals ("1/4,3/4").
std::vector<Rational> parse_rational_list(std::string_view text);
std::string join_rationals(std::span<const Rational> values, std::string_view sep = ", ");

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  const std::vector<T>& entries() const { return entries_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using RationalMatrix = DenseMatrix<Rational>;

struct SingularReport {
  std::size_t rank = 0;
};

using GaussResult = std::variant<std::vector<Rational>, SingularReport>;

/// Solves m * x = rhs exactly with full pivoting (largest magnitude pivot in
/// the remaining submatrix). Rank-deficient systems give a SingularReport.
GaussResult gauss_solve(const RationalMatrix& m, std::span<const Rational> rhs);

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> ascending);

  static UnivariatePolynomial constant(const Rational& c);
  /// (x - root)
  static UnivariatePolynomial linear_root(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;
  Rational coefficient(std::size_t k) const;

  Rational evaluate(const Rational& x) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const Rational& s, const UnivariatePolynomial& p);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& p);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(
      const UnivariatePolynomial& num, const UnivariatePolynomial& den);
  /// Monic gcd; gcd(0, 0) = 0.
  static UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

  /// p / gcd(p, p'), made monic. Every root becomes simple.
  UnivariatePolynomial squarefree_part() const;

  /// 1 + max_i |c_i| / |c_deg|; every real root lies strictly inside (-M, M).
  Rational cauchy_bound() const;

  /// Human-readable rendering in variable `var`, highest degree first.
  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Signed remainder sequence p, p', -rem(p, p'), ... of a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const UnivariatePolynomial& squarefree);

  const std::vector<UnivariatePolynomial>& polys() const { return polys_; }
  std::size_t sign_variations(const Rational& x) const;

 private:
  std::vector<UnivariatePolynomial> polys_;
};

/// Number of distinct real roots of p in (lo, hi]; std::nullopt endpoints mean
/// -inf / +inf. Throws EndpointIsRoot when a finite endpoint is a root of p.
std::size_t sturm_count(const UnivariatePolynomial& p, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi);

}  // namespace nroots
