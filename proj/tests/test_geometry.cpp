#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"

using namespace trisect;
using forms::TriForm;
using geometry::LineSet;
using geometry::PointEnum;
using geometry::ProjLine;
using gf::Elem;
using gf::Field;
using gf::FieldPtr;
using gf::elem_t;
using linalg::Mat;
using linalg::Vector;

namespace {

TriForm random_form(std::uint32_t n, const FieldPtr& f, std::mt19937_64& rng) {
  TriForm T(n, f);
  std::uniform_int_distribution<std::uint32_t> dist(
      0, static_cast<std::uint32_t>(f->order() - 1));
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j)
      for (std::uint32_t k = j + 1; k <= n; ++k) {
        const elem_t v = dist(rng);
        if (v != 0) T.set(i, j, k, Elem{f.get(), v});
      }
  return T;
}

std::set<std::uint64_t> point_indices(const PointEnum& pe, const ProjLine& l) {
  std::set<std::uint64_t> out;
  for (const Vector& p : geometry::line_points(pe.field(), l)) {
    out.insert(pe.index_of(p));
  }
  return out;
}

bool lines_meet(const PointEnum& pe, const ProjLine& a, const ProjLine& b) {
  const auto pa = point_indices(pe, a);
  for (std::uint64_t i : point_indices(pe, b)) {
    if (pa.count(i)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("point enumeration is a deterministic bijection") {
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    const auto [p, h] = gf::factor_prime_power(q);
    const auto f = Field::prime_power(p, h);
    for (std::uint32_t n : {3u, 4u, 5u}) {
      PointEnum pe(f.get(), n);
      std::uint64_t want = 0, power = 1;
      for (std::uint32_t i = 0; i < n; ++i) {
        want += power;
        power *= q;
      }
      CHECK(pe.count() == want);
      std::set<std::vector<elem_t>> seen;
      for (std::uint64_t i = 0; i < pe.count(); ++i) {
        const Vector v = pe.point(i);
        CHECK_FALSE(v.is_zero());
        CHECK(pe.index_of(v) == i);
        CHECK(PointEnum::normalize(v) == v);
        seen.insert(v.c);
      }
      CHECK(seen.size() == pe.count());
      // index_of ignores scalar multiples.
      for (elem_t s = 1; s < q; ++s) {
        const Vector v = pe.point(pe.count() / 2);
        CHECK(pe.index_of(Elem{f.get(), s} * v) == pe.count() / 2);
      }
    }
  }
}

TEST_CASE("canonical lines do not depend on the spanning pair") {
  const auto f = Field::prime_power(3, 1);
  PointEnum pe(f.get(), 4);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> pick(0, pe.count() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector a = pe.point(pick(rng));
    const Vector b = pe.point(pick(rng));
    if (linalg::span_rref(f.get(), {a, b}, 4).rows() != 2) continue;
    const ProjLine l = geometry::line_through(f.get(), a, b);
    const auto pts = geometry::line_points(f.get(), l);
    CHECK(pts.size() == 4);  // q + 1
    // Rebuilding from any two of its points gives the same line.
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        CHECK(geometry::line_through(f.get(), pts[i], pts[j]) == l);
      }
    }
  }
}

TEST_CASE("singular line enumeration matches brute force on random forms") {
  std::mt19937_64 rng(32);
  for (std::uint64_t q : {2ull, 3ull}) {
    const auto [p, h] = gf::factor_prime_power(q);
    const auto f = Field::prime_power(p, h);
    for (int trial = 0; trial < 8; ++trial) {
      const TriForm T = random_form(5, f, rng);
      const LineSet fast = geometry::singular_lines(T);
      const LineSet slow = geometry::singular_lines_bruteforce(T);
      CHECK(fast.lines == slow.lines);
    }
  }
}

TEST_CASE("thread count does not change the line set") {
  const auto f = Field::prime_power(3, 1);
  const TriForm T = forms::make_spread_odd(f, f->from_int(2), true);
  const LineSet one = geometry::singular_lines(T, 1);
  const LineSet four = geometry::singular_lines(T, 4);
  CHECK(one.lines == four.lines);
}

TEST_CASE("spread report statistics are consistent") {
  const auto f = Field::prime_power(2, 1);
  const TriForm T = forms::catalog("ts6", f);
  const LineSet L = geometry::singular_lines(T);
  const auto rep = geometry::spread_check(L);
  CHECK(rep.line_count == L.lines.size());
  CHECK_FALSE(rep.is_partition);

  // Histogram mass equals the number of points and reproduces the extremes.
  PointEnum pe(f.get(), 6);
  std::uint64_t mass = 0;
  for (const auto& [cover, cnt] : rep.coverage_histogram) mass += cnt;
  CHECK(mass == pe.count());
  CHECK(rep.coverage_histogram.begin()->first == rep.coverage_min);
  CHECK(rep.coverage_histogram.rbegin()->first == rep.coverage_max);
  CHECK(geometry::min_coverage(T) == rep.coverage_min);

  CHECK_THROWS_AS(geometry::is_normal_spread(L), NotASpread);
}

TEST_CASE("swapping a regulus breaks normality but not the partition") {
  const auto f = Field::prime_power(2, 1);
  const TriForm T = forms::catalog("spread_even_hodd", f);
  const LineSet spread = geometry::singular_lines(T);
  REQUIRE(spread.lines.size() == 21);
  REQUIRE(geometry::spread_check(spread).is_partition);
  REQUIRE(geometry::is_normal_spread(spread));

  PointEnum pe(f.get(), 6);

  // Collect the spread lines inside the solid spanned by the first two.
  const Mat solid = linalg::span_rref(
      f.get(),
      {spread.lines[0].row(f.get(), 0), spread.lines[0].row(f.get(), 1),
       spread.lines[1].row(f.get(), 0), spread.lines[1].row(f.get(), 1)},
      6);
  REQUIRE(solid.rows() == 4);
  std::vector<std::size_t> pivots;
  Mat solid_r = solid;
  solid_r.rref(&pivots);
  auto in_solid = [&](const ProjLine& l) {
    return solid_r.row_space_contains(l.row(f.get(), 0), pivots) &&
           solid_r.row_space_contains(l.row(f.get(), 1), pivots);
  };
  std::vector<ProjLine> inside;
  for (const auto& l : spread.lines) {
    if (in_solid(l)) inside.push_back(l);
  }
  REQUIRE(inside.size() == 5);  // q^2 + 1

  // Opposite regulus of the first three: the lines of the solid meeting all
  // three. Enumerate the solid's lines through point pairs.
  std::vector<Vector> solid_points;
  for (std::uint64_t i = 0; i < pe.count(); ++i) {
    const Vector v = pe.point(i);
    if (solid_r.row_space_contains(v, pivots)) solid_points.push_back(v);
  }
  REQUIRE(solid_points.size() == 15);
  std::set<ProjLine> solid_lines;
  for (std::size_t i = 0; i < solid_points.size(); ++i)
    for (std::size_t j = i + 1; j < solid_points.size(); ++j)
      solid_lines.insert(
          geometry::line_through(f.get(), solid_points[i], solid_points[j]));
  CHECK(solid_lines.size() == 35);

  std::vector<ProjLine> opposite;
  for (const auto& l : solid_lines) {
    if (lines_meet(pe, l, inside[0]) && lines_meet(pe, l, inside[1]) &&
        lines_meet(pe, l, inside[2])) {
      opposite.push_back(l);
    }
  }
  REQUIRE(opposite.size() == 3);  // q + 1 transversals

  // The opposite regulus covers the same 9 points, so the swap keeps a
  // partition while destroying the Desarguesian structure.
  std::set<std::uint64_t> before, after;
  for (int i = 0; i < 3; ++i) {
    for (auto idx : point_indices(pe, inside[i])) before.insert(idx);
    for (auto idx : point_indices(pe, opposite[i])) after.insert(idx);
  }
  REQUIRE(before == after);

  LineSet swapped = spread;
  for (int i = 0; i < 3; ++i) {
    swapped.lines.erase(
        std::find(swapped.lines.begin(), swapped.lines.end(), inside[i]));
    swapped.lines.push_back(opposite[i]);
  }
  std::sort(swapped.lines.begin(), swapped.lines.end());
  CHECK(geometry::spread_check(swapped).is_partition);
  CHECK_FALSE(geometry::is_normal_spread(swapped));
}

TEST_CASE("totally singular search matches subspace brute force") {
  const auto f = Field::prime_power(2, 1);
  const TriForm T = forms::catalog("ts6", f);
  const auto res = geometry::totally_singular_search(T, 3);
  REQUIRE(res.complete);

  // Independent enumeration: spans of all point triples, deduplicated.
  PointEnum pe(f.get(), 6);
  std::set<std::vector<elem_t>> found;
  for (std::uint64_t a = 0; a < pe.count(); ++a)
    for (std::uint64_t b = a + 1; b < pe.count(); ++b)
      for (std::uint64_t c = b + 1; c < pe.count(); ++c) {
        const Mat s = linalg::span_rref(
            f.get(), {pe.point(a), pe.point(b), pe.point(c)}, 6);
        if (s.rows() != 3) continue;
        if (geometry::is_totally_singular(T, s)) found.insert(s.data());
      }
  std::set<std::vector<elem_t>> got;
  for (const auto& s : res.subspaces) got.insert(s.data());
  CHECK(got == found);
  CHECK(got.size() == 1);
}

TEST_CASE("search budget reports incompleteness") {
  const auto f = Field::prime_power(2, 1);
  TriForm zero(6, f);  // everything is singular, the search tree is large
  const auto res = geometry::totally_singular_search(zero, 3, 5);
  CHECK_FALSE(res.complete);
  CHECK(res.nodes >= 5);
}

TEST_CASE("line transform maps singular lines of T to those of T^A") {
  std::mt19937_64 rng(33);
  const auto f = Field::prime_power(3, 1);
  const TriForm T = random_form(4, f, rng);
  std::uniform_int_distribution<std::uint32_t> dist(0, 2);
  Mat A(f.get(), 4, 4);
  do {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) A.at(i, j) = dist(rng);
  } while (A.rank() != 4);

  // x on a singular line of T^A iff Ax on one of T.
  const LineSet LT = geometry::singular_lines(T);
  const LineSet LTA = geometry::singular_lines(T.transform(A));
  std::vector<ProjLine> mapped;
  for (const auto& l : LTA.lines) {
    mapped.push_back(geometry::line_transform(f.get(), l, A));
  }
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == LT.lines);
}
