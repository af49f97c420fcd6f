#include "trisect/crossalg.hpp"

#include <random>

namespace trisect::crossalg {

namespace {

// The seven positively oriented triples (1-based), coefficient +1 each.
constexpr int kLines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                              {1, 5, 6}, {2, 6, 7}, {1, 3, 7}};

}  // namespace

Rat dot(const Vec7& x, const Vec7& y) {
  Rat s = 0;
  for (int i = 0; i < 7; ++i) s += x[i] * y[i];
  return s;
}

Vec7 cross(const Vec7& x, const Vec7& y) {
  Vec7 out{};
  for (const auto& t : kLines) {
    const int i = t[0] - 1, j = t[1] - 1, k = t[2] - 1;
    out[k] += x[i] * y[j] - x[j] * y[i];
    out[j] += x[k] * y[i] - x[i] * y[k];
    out[i] += x[j] * y[k] - x[k] * y[j];
  }
  return out;
}

Octonion omul(const Octonion& a, const Octonion& b) {
  Octonion out;
  out.re = a.re * b.re - dot(a.im, b.im);
  const Vec7 c = cross(a.im, b.im);
  for (int i = 0; i < 7; ++i) {
    out.im[i] = a.re * b.im[i] + b.re * a.im[i] + c[i];
  }
  return out;
}

Rat norm(const Octonion& a) { return a.re * a.re + dot(a.im, a.im); }

CrossCheckReport verify_cross_algebra(std::uint64_t samples,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  auto rat = [&] { return Rat(num(rng), den(rng)); };
  auto vec = [&] {
    Vec7 v;
    for (auto& c : v) c = rat();
    return v;
  };

  CrossCheckReport rep;
  rep.samples = samples;
  rep.orthogonality_ok = true;
  rep.norm_identity_ok = true;
  rep.multiplicativity_ok = true;
  rep.positivity_ok = true;

  for (std::uint64_t s = 0; s < samples; ++s) {
    const Vec7 x = vec();
    const Vec7 y = vec();
    const Vec7 c = cross(x, y);
    if (dot(c, x) != 0 || dot(c, y) != 0) rep.orthogonality_ok = false;
    if (dot(c, c) != dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y)) {
      rep.norm_identity_ok = false;
    }

    const Octonion a{rat(), x};
    const Octonion b{rat(), y};
    if (norm(omul(a, b)) != norm(a) * norm(b)) rep.multiplicativity_ok = false;
    const bool a_zero = norm(a) == 0;
    bool a_really_zero = a.re == 0;
    for (const auto& ci : a.im) a_really_zero = a_really_zero && ci == 0;
    if (a_zero != a_really_zero || (!a_really_zero && norm(a) <= 0)) {
      rep.positivity_ok = false;
    }
  }
  return rep;
}

}  // namespace trisect::crossalg
