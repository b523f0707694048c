#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "nroots/errors.hpp"
#include "nroots/exact.hpp"
#include "nroots/gappoly.hpp"

namespace testing {

inline nroots::Rational R(const char* text) { return nroots::Rational::parse(text); }

inline std::vector<nroots::Rational> RL(const char* text) { return nroots::parse_rational_list(text); }

template <class F>
nroots::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const nroots::Error& e) {
    return e.code();
  }
  FAIL("expected an nroots::Error");
  return nroots::ErrorCode::Internal;
}

/// Value polynomial of "a2" / "l1" in a scene.
inline nroots::GapPolynomial V(const nroots::OrderedScene& scene, const std::string& name) {
  const auto kind = name[0] == 'a' ? nroots::SymbolKind::A : nroots::SymbolKind::Lambda;
  return nroots::value_of(scene, nroots::Symbol{kind, static_cast<unsigned>(std::stoul(name.substr(1)))});
}

/// value(x) - value(y)
inline nroots::GapPolynomial D(const nroots::OrderedScene& scene, const std::string& x, const std::string& y) {
  return V(scene, x) - V(scene, y);
}

inline nroots::GapPolynomial C(const nroots::OrderedScene& scene, long c) {
  return nroots::GapPolynomial::constant(scene.gap_count(), c);
}

/// Random rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
inline nroots::Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  const long p = static_cast<long>(rng() % (2 * num_bound + 1)) - num_bound;
  const long q = static_cast<long>(rng() % den_bound) + 1;
  return nroots::Rational(nroots::Integer(p), nroots::Integer(q));
}

}  // namespace testing
