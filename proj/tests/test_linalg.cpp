#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trisect/linalg.hpp"

using namespace trisect;
using gf::Field;
using gf::FieldPtr;
using gf::elem_t;
using linalg::Mat;
using linalg::Vector;

namespace {

Mat random_mat(const FieldPtr& f, std::size_t r, std::size_t c,
               std::mt19937_64& rng) {
  Mat m(f.get(), r, c);
  std::uniform_int_distribution<std::uint32_t> dist(
      0, static_cast<std::uint32_t>(f->order() - 1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rref is idempotent and counts pivots") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2ull, 3ull, 9ull}) {
    const auto [p, h] = gf::factor_prime_power(q);
    const auto f = Field::prime_power(p, h);
    for (int trial = 0; trial < 50; ++trial) {
      Mat m = random_mat(f, 4, 6, rng);
      Mat r = m;
      std::vector<std::size_t> pivots;
      const std::size_t rank = r.rref(&pivots);
      CHECK(rank == pivots.size());
      CHECK(rank == m.rank());
      Mat r2 = r;
      CHECK(r2.rref() == rank);
      CHECK(r2 == r);
      // Pivot columns are unit columns.
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t row = 0; row < r.rows(); ++row) {
          CHECK(r.at(row, pivots[i]) == (row == i ? 1u : 0u));
        }
      }
    }
  }
}

TEST_CASE("kernel basis annihilates and satisfies rank-nullity") {
  std::mt19937_64 rng(12);
  for (std::uint64_t q : {2ull, 5ull, 8ull}) {
    const auto [p, h] = gf::factor_prime_power(q);
    const auto f = Field::prime_power(p, h);
    for (int trial = 0; trial < 50; ++trial) {
      const Mat m = random_mat(f, 3, 7, rng);
      const Mat k = m.kernel_basis();
      CHECK(k.rows() == 7 - m.rank());
      for (std::size_t r = 0; r < k.rows(); ++r) {
        CHECK(m.apply(k.row(r)).is_zero());
      }
      CHECK(k.rank() == k.rows());
    }
  }
}

TEST_CASE("inverse multiplies back to the identity") {
  std::mt19937_64 rng(13);
  const auto f = Field::prime_power(3, 1);
  int found = 0;
  while (found < 25) {
    Mat m = random_mat(f, 5, 5, rng);
    if (m.rank() != 5) {
      CHECK_THROWS_AS(m.inverse(), SingularMatrix);
      continue;
    }
    ++found;
    CHECK(m * m.inverse() == Mat::identity(f.get(), 5));
    CHECK(m.inverse() * m == Mat::identity(f.get(), 5));
  }
}

TEST_CASE("span_rref is invariant under change of spanning set") {
  const auto f = Field::prime_power(2, 1);
  Vector a(f.get(), {1, 0, 1, 0});
  Vector b(f.get(), {0, 1, 1, 0});
  Vector sum(f.get(), {1, 1, 0, 0});
  const Mat s1 = linalg::span_rref(f.get(), {a, b}, 4);
  const Mat s2 = linalg::span_rref(f.get(), {b, sum, a}, 4);
  CHECK(s1 == s2);
  CHECK(s1.rows() == 2);

  std::vector<std::size_t> pivots;
  Mat r = s1;
  r.rref(&pivots);
  CHECK(r.row_space_contains(sum, pivots));
  CHECK_FALSE(r.row_space_contains(Vector(f.get(), {0, 0, 0, 1}), pivots));
}

TEST_CASE("matrix product against direct coordinate sums") {
  const auto f = Field::prime_power(5, 1);
  std::mt19937_64 rng(14);
  const Mat a = random_mat(f, 3, 4, rng);
  const Mat b = random_mat(f, 4, 2, rng);
  const Mat ab = a * b;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      elem_t s = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        s = f->add(s, f->mul(a.at(i, k), b.at(k, j)));
      }
      CHECK(ab.at(i, j) == s);
    }
  }
  CHECK(ab.transpose() == b.transpose() * a.transpose());
}
