#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trisect/crossalg.hpp"

using namespace trisect::crossalg;

namespace {

Vec7 unit(int i) {
  Vec7 v{};
  v[i - 1] = 1;
  return v;
}

Octonion imag(const Vec7& v) { return Octonion{0, v}; }

bool is_zero(const Octonion& a) {
  if (a.re != 0) return false;
  for (const auto& c : a.im)
    if (c != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("unit multiplication table") {
  const int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                           {1, 5, 6}, {2, 6, 7}, {1, 3, 7}};
  for (const auto& t : lines) {
    CHECK(cross(unit(t[0]), unit(t[1])) == unit(t[2]));
    CHECK(cross(unit(t[1]), unit(t[2])) == unit(t[0]));
    CHECK(cross(unit(t[2]), unit(t[0])) == unit(t[1]));
    // Reversal negates.
    Vec7 neg = unit(t[2]);
    neg[t[2] - 1] = -1;
    CHECK(cross(unit(t[1]), unit(t[0])) == neg);
  }
  // Units square to -1 in the algebra.
  for (int i = 1; i <= 7; ++i) {
    const Octonion sq = omul(imag(unit(i)), imag(unit(i)));
    CHECK(sq.re == -1);
    for (const auto& c : sq.im) CHECK(c == 0);
  }
}

TEST_CASE("cross is bilinear and anticommutative") {
  const Vec7 x{1, -2, Rat(1, 3), 0, 5, Rat(-3, 7), 2};
  const Vec7 y{0, 4, -1, Rat(2, 5), 1, 1, -6};
  const Vec7 z{2, 0, 3, -1, Rat(7, 2), 0, 1};

  Vec7 xy = cross(x, y);
  Vec7 yx = cross(y, x);
  for (int i = 0; i < 7; ++i) CHECK(xy[i] == -yx[i]);

  Vec7 x_plus_z;
  for (int i = 0; i < 7; ++i) x_plus_z[i] = x[i] + z[i];
  const Vec7 lhs = cross(x_plus_z, y);
  const Vec7 xz = cross(z, y);
  for (int i = 0; i < 7; ++i) CHECK(lhs[i] == xy[i] + xz[i]);

  CHECK(dot(xy, x) == 0);
  CHECK(dot(xy, y) == 0);
  CHECK(dot(xy, xy) == dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y));
}

TEST_CASE("octonion multiplication is non-associative but norm-multiplicative") {
  const Octonion e1 = imag(unit(1)), e2 = imag(unit(2)), e3 = imag(unit(3));
  const Octonion left = omul(omul(e1, e2), e3);
  const Octonion right = omul(e1, omul(e2, e3));
  bool equal = left.re == right.re;
  for (int i = 0; i < 7; ++i) equal = equal && left.im[i] == right.im[i];
  CHECK_FALSE(equal);

  const Octonion a{Rat(3, 2), {1, 0, -2, Rat(1, 5), 0, 4, -1}};
  const Octonion b{-2, {0, Rat(2, 3), 1, 1, -3, 0, Rat(5, 4)}};
  CHECK(norm(omul(a, b)) == norm(a) * norm(b));
  CHECK(norm(a) > 0);
  CHECK_FALSE(is_zero(omul(a, b)));
}

TEST_CASE("sampled identity verification is exact and seeded") {
  const auto rep = verify_cross_algebra(500, 99);
  CHECK(rep.samples == 500);
  CHECK(rep.all_ok());
  // Determinism of the sampling path.
  const auto again = verify_cross_algebra(500, 99);
  CHECK(again.all_ok());
}
