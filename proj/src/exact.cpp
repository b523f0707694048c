#include "nroots/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nroots {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::MalformedName: return "MalformedName";
    case ErrorCode::PlacementMismatch: return "PlacementMismatch";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NonPositiveGap: return "NonPositiveGap";
    case ErrorCode::NonPositiveLift: return "NonPositiveLift";
    case ErrorCode::NoMixedRow: return "NoMixedRow";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "' (expected p or p/q)"); };
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw bad();
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num)) throw bad();
  Integer p(std::string(num), 10);
  if (negative) p = -p;
  if (den.empty()) return Rational(p);
  Integer q(std::string(den), 10);
  if (q == 0) throw bad();
  return Rational(p, q);
}

std::string Rational::str() const { return value_.get_str(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_rationals(std::span<const Rational> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

GaussResult gauss_solve(const RationalMatrix& m, std::span<const Rational> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::InvalidArgument, "gauss_solve requires a square matrix");
  if (rhs.size() != n) throw Error(ErrorCode::InvalidArgument, "gauss_solve: rhs length mismatch");

  RationalMatrix a = m;
  std::vector<Rational> b(rhs.begin(), rhs.end());
  std::vector<std::size_t> col_of(n);  // column permutation: position k holds variable col_of[k]
  for (std::size_t k = 0; k < n; ++k) col_of[k] = k;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best_r = n, best_c = n;
    Rational best;
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (a(r, c).is_zero()) continue;
        Rational mag = a(r, c).abs();
        if (best_r == n || mag > best) {
          best = std::move(mag);
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r == n) return SingularReport{k};

    if (best_r != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(best_r, c));
      std::swap(b[k], b[best_r]);
    }
    if (best_c != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, best_c));
      std::swap(col_of[k], col_of[best_c]);
    }

    const Rational pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Rational factor = a(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
      b[r] -= factor * b[k];
    }
  }

  std::vector<Rational> y(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * y[c];
    y[k] = acc / a(k, k);
  }
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[col_of[k]] = y[k];
  return x;
}

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) { return UnivariatePolynomial({c}); }

UnivariatePolynomial UnivariatePolynomial::linear_root(const Rational& root) {
  return UnivariatePolynomial({-root, Rational(1)});
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UnivariatePolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UnivariatePolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return {};
  const Rational lead = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v /= lead;
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& v : c) v = -v;
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a + (-b); }

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const Rational& s, const UnivariatePolynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& v : c) v *= s;
  return UnivariatePolynomial(std::move(c));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& num, const UnivariatePolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = num.coeffs_;
  const int dd = den.degree();
  if (num.degree() < dd) return {UnivariatePolynomial(), num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const Rational& lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Rational f = top / lead;
    quot[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * den.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial UnivariatePolynomial::gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UnivariatePolynomial UnivariatePolynomial::squarefree_part() const {
  if (degree() <= 0) return monic();
  const auto g = gcd(*this, derivative());
  return divmod(*this, g).first.monic();
}

Rational UnivariatePolynomial::cauchy_bound() const {
  const Rational lead = leading().abs();
  Rational best;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) best = std::max(best, coeffs_[k].abs() / lead);
  return Rational(1) + best;
}

std::string UnivariatePolynomial::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sturm chains

SturmChain::SturmChain(const UnivariatePolynomial& squarefree) {
  if (squarefree.is_zero()) throw Error(ErrorCode::InvalidArgument, "Sturm chain of the zero polynomial");
  polys_.push_back(squarefree);
  if (squarefree.degree() == 0) return;
  polys_.push_back(squarefree.derivative());
  while (polys_.back().degree() > 0) {
    auto r = UnivariatePolynomial::divmod(polys_[polys_.size() - 2], polys_.back()).second;
    if (r.is_zero()) break;
    polys_.push_back(-r);
  }
}

std::size_t SturmChain::sign_variations(const Rational& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : polys_) {
    const int s = p.evaluate(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t sturm_count(const UnivariatePolynomial& p, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "sturm_count of the zero polynomial");
  for (const auto* end : {&lo, &hi}) {
    if (*end && p.evaluate(**end).is_zero())
      throw Error(ErrorCode::EndpointIsRoot, "interval endpoint " + (*end)->str() + " is a root");
  }
  if (lo && hi && *lo > *hi) throw Error(ErrorCode::InvalidArgument, "sturm_count: lo > hi");
  const auto sq = p.squarefree_part();
  if (sq.degree() <= 0) return 0;
  const SturmChain chain(sq);
  const Rational bound = sq.cauchy_bound();
  const Rational left = lo ? *lo : -bound;
  const Rational right = hi ? *hi : bound;
  const std::size_t vl = chain.sign_variations(left);
  const std::size_t vr = chain.sign_variations(right);
  return vl >= vr ? vl - vr : 0;
}

}  // namespace nroots
