#include "nroots/gappoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "rng.hpp"

namespace nroots {

// ---------------------------------------------------------------------------
// Scene

std::string Symbol::str() const {
  return (kind == SymbolKind::A ? "a" : "l") + std::to_string(index);
}

OrderedScene::OrderedScene(unsigned n, std::vector<Symbol> ascending) : n_(n), symbols_(std::move(ascending)) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "scene requires n >= 1");
  if (2 * static_cast<std::size_t>(n) > kMaxGaps)
    throw Error(ErrorCode::SizeCap, "scene supports at most " + std::to_string(kMaxGaps / 2) + " roots");
  if (symbols_.size() != 2 * static_cast<std::size_t>(n) + 1)
    throw Error(ErrorCode::InvalidArgument, "scene must list 2n+1 symbols");
  unsigned next_a = 1, next_l = 1;
  for (const auto& s : symbols_) {
    unsigned& next = s.kind == SymbolKind::A ? next_a : next_l;
    if (s.index != next) throw Error(ErrorCode::InvalidArgument, "scene symbols out of index order");
    ++next;
  }
  if (next_a != n + 2 || next_l != n + 1) throw Error(ErrorCode::InvalidArgument, "scene symbol counts do not match n");
}

std::size_t OrderedScene::position_of(const Symbol& s) const {
  const auto it = std::find(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end()) throw Error(ErrorCode::InvalidArgument, "symbol " + s.str() + " not in scene");
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::string OrderedScene::str() const {
  std::string out;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (k) out += " < ";
    out += symbols_[k].str();
  }
  return out;
}

OrderedScene scene_from_placement(unsigned n, std::span<const unsigned> intervals) {
  if (intervals.size() != n) throw Error(ErrorCode::InvalidArgument, "placement length must equal n");
  for (std::size_t r = 0; r < intervals.size(); ++r) {
    if (intervals[r] > n + 1) throw Error(ErrorCode::InvalidArgument, "placement interval out of range");
    if (r && intervals[r] < intervals[r - 1]) throw Error(ErrorCode::InvalidArgument, "placement must be nondecreasing");
  }
  std::vector<Symbol> order;
  std::size_t r = 0;
  for (unsigned t = 0; t <= n + 1; ++t) {
    while (r < intervals.size() && intervals[r] == t) {
      order.push_back({SymbolKind::Lambda, static_cast<unsigned>(r + 1)});
      ++r;
    }
    if (t <= n) order.push_back({SymbolKind::A, t + 1});
  }
  return OrderedScene(n, std::move(order));
}

// ---------------------------------------------------------------------------
// GapPolynomial

namespace {

unsigned degree_of(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Strict graded-lex "x before y".
bool grlex_before(const Monomial& x, const Monomial& y) {
  const unsigned dx = degree_of(x), dy = degree_of(y);
  if (dx != dy) return dx > dy;
  return x > y;
}

Monomial multiply_monomials(const Monomial& x, const Monomial& y) {
  Monomial out{};
  for (std::size_t i = 0; i < kMaxGaps; ++i) {
    const unsigned e = static_cast<unsigned>(x[i]) + y[i];
    if (e > 255) throw Error(ErrorCode::Internal, "gap polynomial exponent overflow");
    out[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_before(a.exponents, b.exponents); });
}

}  // namespace

GapPolynomial::GapPolynomial(std::size_t gap_count) : gap_count_(gap_count) {
  if (gap_count > kMaxGaps) throw Error(ErrorCode::SizeCap, "too many gap variables");
}

GapPolynomial GapPolynomial::constant(std::size_t gap_count, const Integer& c) {
  GapPolynomial p(gap_count);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

GapPolynomial GapPolynomial::variable(std::size_t gap_count, std::size_t index) {
  if (index >= gap_count) throw Error(ErrorCode::InvalidArgument, "gap variable index out of range");
  GapPolynomial p(gap_count);
  Term t;
  t.exponents[index] = 1;
  t.coefficient = 1;
  p.terms_.push_back(std::move(t));
  return p;
}

GapPolynomial GapPolynomial::span_sum(std::size_t gap_count, std::size_t first, std::size_t last) {
  GapPolynomial p(gap_count);
  for (std::size_t i = first; i < last; ++i) p += variable(gap_count, i);
  return p;
}

GapPolynomial GapPolynomial::from_terms(std::size_t gap_count, std::vector<Term> terms) {
  GapPolynomial p(gap_count);
  for (const auto& t : terms)
    for (std::size_t i = gap_count; i < kMaxGaps; ++i)
      if (t.exponents[i] != 0) throw Error(ErrorCode::InvalidArgument, "monomial uses a variable beyond gap_count");
  sort_terms(terms);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

bool GapPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0);
}

unsigned GapPolynomial::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.front().exponents); }

void GapPolynomial::add_scaled(const GapPolynomial& o, int sign) {
  if (o.gap_count_ != gap_count_) throw Error(ErrorCode::InvalidArgument, "gap polynomial variable count mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_before(terms_[i].exponents, o.terms_[j].exponents))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_before(o.terms_[j].exponents, terms_[i].exponents)) {
      Term t = o.terms_[j++];
      if (sign < 0) t.coefficient = -t.coefficient;
      out.push_back(std::move(t));
    } else {
      Term t = std::move(terms_[i++]);
      if (sign < 0) t.coefficient -= o.terms_[j++].coefficient;
      else t.coefficient += o.terms_[j++].coefficient;
      if (t.coefficient != 0) out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

GapPolynomial& GapPolynomial::operator+=(const GapPolynomial& o) {
  add_scaled(o, +1);
  return *this;
}

GapPolynomial& GapPolynomial::operator-=(const GapPolynomial& o) {
  add_scaled(o, -1);
  return *this;
}

GapPolynomial& GapPolynomial::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= s;
  return *this;
}

GapPolynomial operator-(const GapPolynomial& a) {
  GapPolynomial out = a;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

GapPolynomial operator*(const GapPolynomial& a, const GapPolynomial& b) {
  if (a.gap_count_ != b.gap_count_) throw Error(ErrorCode::InvalidArgument, "gap polynomial variable count mismatch");
  GapPolynomial out(a.gap_count_);
  if (a.is_zero() || b.is_zero()) return out;
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 16));
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Integer& slot = acc[multiply_monomials(x.exponents, y.exponents)];
      mpz_addmul(slot.get_mpz_t(), x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  sort_terms(out.terms_);
  return out;
}

bool operator==(const GapPolynomial& a, const GapPolynomial& b) {
  if (a.gap_count_ != b.gap_count_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  return true;
}

GapPolynomial GapPolynomial::pow(unsigned e) const {
  GapPolynomial result = constant(gap_count_, 1);
  GapPolynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Rational GapPolynomial::evaluate(std::span<const Rational> gaps) const {
  if (gaps.size() != gap_count_) throw Error(ErrorCode::InvalidArgument, "gap vector length mismatch");
  for (const auto& g : gaps)
    if (g.sign() <= 0) throw Error(ErrorCode::NonPositiveGap, "gap value " + g.str() + " is not positive");
  Rational acc;
  for (const auto& t : terms_) {
    Rational v(t.coefficient);
    for (std::size_t i = 0; i < gap_count_; ++i)
      for (unsigned k = 0; k < t.exponents[i]; ++k) v *= gaps[i];
    acc += v;
  }
  return acc;
}

Integer GapPolynomial::evaluate_scaled(std::span<const Integer> numerators, const Integer& denominator) const {
  if (numerators.size() != gap_count_) throw Error(ErrorCode::InvalidArgument, "gap vector length mismatch");
  if (terms_.empty()) return 0;
  const unsigned top = total_degree();
  std::vector<std::vector<Integer>> powers(gap_count_);
  std::vector<unsigned> max_e(gap_count_, 0);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < gap_count_; ++i) max_e[i] = std::max<unsigned>(max_e[i], t.exponents[i]);
  for (std::size_t i = 0; i < gap_count_; ++i) {
    powers[i].resize(max_e[i] + 1);
    powers[i][0] = 1;
    for (unsigned k = 1; k <= max_e[i]; ++k) powers[i][k] = powers[i][k - 1] * numerators[i];
  }
  std::vector<Integer> den_pow(top + 1);
  den_pow[0] = 1;
  for (unsigned k = 1; k <= top; ++k) den_pow[k] = den_pow[k - 1] * denominator;
  Integer acc = 0, v;
  for (const auto& t : terms_) {
    v = t.coefficient * den_pow[top - degree_of(t.exponents)];
    for (std::size_t i = 0; i < gap_count_; ++i)
      if (t.exponents[i]) v *= powers[i][t.exponents[i]];
    acc += v;
  }
  return acc;
}

std::string GapPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = sgn(t.coefficient) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const Integer mag = abs(t.coefficient);
    const bool is_const = degree_of(t.exponents) == 0;
    bool wrote = false;
    if (is_const || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < gap_count_; ++i) {
      if (!t.exponents[i]) continue;
      if (wrote) os << "*";
      os << "g" << (i + 1);
      if (t.exponents[i] > 1) os << "^" << static_cast<unsigned>(t.exponents[i]);
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

std::optional<GapPolynomial> divide_exact(const GapPolynomial& num, const GapPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero gap polynomial");
  if (num.gap_count() != den.gap_count()) throw Error(ErrorCode::InvalidArgument, "gap polynomial variable count mismatch");
  const std::size_t g = num.gap_count();
  GapPolynomial quotient(g);
  GapPolynomial rest = num;
  const Term& lead = den.leading_term();
  std::vector<Term> qterms;
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term();
    Term t;
    for (std::size_t i = 0; i < kMaxGaps; ++i) {
      if (top.exponents[i] < lead.exponents[i]) return std::nullopt;
      t.exponents[i] = static_cast<std::uint8_t>(top.exponents[i] - lead.exponents[i]);
    }
    if (!mpz_divisible_p(top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) return std::nullopt;
    t.coefficient = top.coefficient / lead.coefficient;
    GapPolynomial step = GapPolynomial::from_terms(g, {t});
    rest -= step * den;
    qterms.push_back(std::move(t));
  }
  return GapPolynomial::from_terms(g, std::move(qterms));
}

std::vector<GapPolynomial> value_polynomials(const OrderedScene& scene) {
  const std::size_t g = scene.gap_count();
  std::vector<GapPolynomial> out;
  out.reserve(scene.symbols().size());
  for (std::size_t k = 0; k < scene.symbols().size(); ++k) out.push_back(GapPolynomial::span_sum(g, 0, k));
  return out;
}

GapPolynomial value_of(const OrderedScene& scene, const Symbol& s) {
  return GapPolynomial::span_sum(scene.gap_count(), 0, scene.position_of(s));
}

GapPolynomial difference(const OrderedScene& scene, const Symbol& x, const Symbol& y) {
  const std::size_t px = scene.position_of(x), py = scene.position_of(y);
  if (px >= py) return GapPolynomial::span_sum(scene.gap_count(), py, px);
  return -GapPolynomial::span_sum(scene.gap_count(), px, py);
}

// ---------------------------------------------------------------------------
// Signs

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    case Sign::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string sign_token(Sign s) {
  switch (s) {
    case Sign::Negative: return "-1";
    case Sign::Zero: return "0";
    case Sign::Positive: return "+1";
    case Sign::Indeterminate: return "?";
  }
  return "?";
}

Sign sign_from_int(int s) { return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero); }

std::string SamplingSummary::str() const {
  std::ostringstream os;
  os << samples << " samples (seed " << seed << "): " << positive << " positive, " << negative << " negative, " << zero
     << " zero; " << (class_dependent() ? "sign changes inside the class" : "uniform on the sample (conjectured only)");
  return os.str();
}

Sign coefficient_sign(const GapPolynomial& p) {
  if (p.is_zero()) return Sign::Zero;
  const int first = sgn(p.terms().front().coefficient);
  for (const auto& t : p.terms())
    if (sgn(t.coefficient) != first) return Sign::Indeterminate;
  return sign_from_int(first);
}

SamplingSummary sample_signs(const GapPolynomial& p, std::size_t samples, std::uint64_t seed) {
  SamplingSummary summary;
  summary.seed = seed;
  summary.samples = samples;
  SplitMix64 rng(seed);
  std::vector<Integer> point(p.gap_count());
  const Integer denominator = 64;
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& v : point) v = static_cast<unsigned long>(rng.uniform(8, 512));
    const int sign = sgn(p.evaluate_scaled(point, denominator));
    if (sign > 0) ++summary.positive;
    else if (sign < 0) ++summary.negative;
    else ++summary.zero;
  }
  return summary;
}

SignValue sign_of(const GapPolynomial& p, unsigned polya_max, std::uint64_t sample_seed) {
  SignValue out;
  if (p.is_zero()) return out;
  GapPolynomial multiplier = GapPolynomial::span_sum(p.gap_count(), 0, p.gap_count());
  GapPolynomial current = p;
  for (unsigned m = 0; m <= polya_max; ++m) {
    const Sign s = coefficient_sign(current);
    if (s != Sign::Indeterminate) {
      out.sign = s;
      out.polya_level = m;
      return out;
    }
    if (m < polya_max) current = current * multiplier;
  }
  out.sign = Sign::Indeterminate;
  out.polya_level = polya_max;
  out.expression = p;
  out.sampling = sample_signs(p, kSignSamples, sample_seed);
  return out;
}

// ---------------------------------------------------------------------------
// Difference factorization

namespace {

/// Cheap necessary test for (g_{first+1}+...+g_last) | p: p must vanish at
/// integer points on the hyperplane where the linear form is zero.
bool may_divide(const GapPolynomial& p, std::size_t first, std::size_t last, SplitMix64& rng) {
  std::vector<Integer> point(p.gap_count());
  for (int attempt = 0; attempt < 2; ++attempt) {
    for (auto& v : point) v = static_cast<long>(rng.uniform(0, 200)) - 100;
    Integer partial = 0;
    for (std::size_t i = first; i + 1 < last; ++i) partial += point[i];
    point[last - 1] = -partial;
    if (p.evaluate_scaled(point) != 0) return false;
  }
  return true;
}

}  // namespace

PlainFactorization factor_differences(const GapPolynomial& p, const OrderedScene& scene) {
  PlainFactorization out;
  const std::size_t g = scene.gap_count();
  if (p.is_zero()) {
    out.content = 0;
    out.cofactor = GapPolynomial::constant(g, 1);
    return out;
  }
  Integer content = 0;
  for (const auto& t : p.terms()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coefficient.get_mpz_t());
  if (p.terms().front().coefficient < 0) content = -content;
  GapPolynomial rest = p;
  if (content != 1) {
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) t.coefficient /= content;
    rest = GapPolynomial::from_terms(g, std::move(terms));
  }
  SplitMix64 rng(0x0fac'7000'0000'0001ULL);
  const auto& syms = scene.symbols();
  for (std::size_t lo = 0; lo < syms.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < syms.size(); ++hi) {
      if (rest.is_constant()) break;
      const GapPolynomial form = GapPolynomial::span_sum(g, lo, hi);
      unsigned mult = 0;
      while (!rest.is_constant() && may_divide(rest, lo, hi, rng)) {
        auto q = divide_exact(rest, form);
        if (!q) break;
        rest = std::move(*q);
        ++mult;
      }
      if (mult) out.factors.push_back({syms[hi], syms[lo], mult});
    }
  }
  if (rest.is_constant()) {
    content *= rest.terms().front().coefficient;
    rest = GapPolynomial::constant(g, 1);
  }
  out.content = content;
  out.cofactor = std::move(rest);
  return out;
}

std::string PlainFactorization::str() const {
  if (factors.empty() && plain()) return content.get_str();
  std::ostringstream os;
  if (content == -1) os << "-";
  else if (content != 1) os << content.get_str() << "*";
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "*";
    os << "(" << f.upper.str() << "-" << f.lower.str() << ")";
    if (f.multiplicity > 1) os << "^" << f.multiplicity;
    first = false;
  }
  if (!plain()) {
    if (!first) os << "*";
    os << "[" << cofactor.str() << "]";
  }
  return os.str();
}

}  // namespace nroots
