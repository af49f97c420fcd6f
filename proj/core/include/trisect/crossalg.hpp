#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace trisect::crossalg {

/// Exact rational arithmetic; no rounding anywhere in this module.
using Rat = boost::multiprecision::cpp_rational;
using Vec7 = std::array<Rat, 7>;

Rat dot(const Vec7& x, const Vec7& y);

/// Seven-dimensional cross product: (x * y)_m is the alternating form with
/// unit coefficients on the seven line triples 124, 235, 346, 457, 156, 267,
/// 137 evaluated at (x, y, e_m).
Vec7 cross(const Vec7& x, const Vec7& y);

/// Octonion a = re + im over the rationals, with imaginary units e_1..e_7
/// multiplying through the cross product: e_i e_j = -delta_ij + e_i x e_j.
struct Octonion {
  Rat re;
  Vec7 im;
};

Octonion omul(const Octonion& a, const Octonion& b);

/// N(a) = re^2 + |im|^2; multiplicative and positive definite.
Rat norm(const Octonion& a);

struct CrossCheckReport {
  std::uint64_t samples = 0;
  bool orthogonality_ok = false;   // x*y is orthogonal to x and to y
  bool norm_identity_ok = false;   // |x*y|^2 = |x|^2 |y|^2 - (x.y)^2
  bool multiplicativity_ok = false;  // N(ab) = N(a) N(b)
  bool positivity_ok = false;      // N(a) > 0 for sampled a != 0

  bool all_ok() const {
    return orthogonality_ok && norm_identity_ok && multiplicativity_ok &&
           positivity_ok;
  }
};

/// Exact checks on pseudo-random rational samples with a fixed seed. Any
/// failure is a counterexample, not numerical noise.
CrossCheckReport verify_cross_algebra(std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace trisect::crossalg
