#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trisect/forms.hpp"
#include "trisect/hypersurface.hpp"

using namespace trisect;
using forms::TriForm;
using geometry::PointEnum;
using gf::Elem;
using gf::Field;
using gf::elem_t;
using hypersurface::HomogPoly;
using hypersurface::UnionKind;
using linalg::Vector;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("monomial enumeration has the right size and degrees") {
  for (std::uint32_t n : {2u, 4u, 7u}) {
    for (std::uint32_t d : {1u, 2u, 3u}) {
      const auto mons = hypersurface::monomials(n, d);
      CHECK(mons.size() == binom(n + d - 1, d));
      for (const auto& m : mons) {
        std::uint32_t total = 0;
        for (auto e : m) total += e;
        CHECK(total == d);
      }
    }
  }
}

TEST_CASE("evaluation scales by lambda^d on projective representatives") {
  const auto f = Field::prime_power(5, 1);
  HomogPoly p;
  p.n = 3;
  p.degree = 2;
  p.field = f;
  p.coeffs[{2, 0, 0}] = 1;  // x^2
  p.coeffs[{0, 1, 1}] = 3;  // 3yz
  const Vector v(f.get(), {2, 1, 4});
  const Elem base = p.evaluate(v);
  for (elem_t s = 1; s < 5; ++s) {
    const Elem scaled = p.evaluate(Elem{f.get(), s} * v);
    CHECK(scaled == Elem{f.get(), f->mul(f->mul(s, s), base.v)});
  }
}

TEST_CASE("fitting recovers the span of a known vanishing polynomial") {
  const auto f = Field::prime_power(3, 1);
  PointEnum pe(f.get(), 4);
  // Zero set of the linear form x1 + 2 x4.
  std::vector<std::uint64_t> zeros;
  for (std::uint64_t i = 0; i < pe.count(); ++i) {
    const Vector v = pe.point(i);
    if (f->add(v.c[0], f->mul(2, v.c[3])) == 0) zeros.push_back(i);
  }
  const auto fitted = hypersurface::fit_vanishing(pe, zeros, 1);
  REQUIRE(fitted.size() == 1);
  for (std::uint64_t i : zeros) {
    CHECK(fitted[0].evaluate(pe.point(i)).is_zero());
  }
  // Normalized echelon coefficients: x1 + 2 x4 itself.
  CHECK(fitted[0].coeffs.size() == 2);
  CHECK(fitted[0].coeffs.at({1, 0, 0, 0}) == 1);
  CHECK(fitted[0].coeffs.at({0, 0, 0, 1}) == 2);
}

TEST_CASE("no nonzero quadratic vanishes on all of the binary projective space") {
  // Over GF(2) a homogeneous quadratic is the function sum a_ij x_i x_j +
  // sum b_i x_i, and algebraic normal forms are unique, so fitting degree 2
  // against every point must come back empty.
  const auto f = Field::prime_power(2, 1);
  PointEnum pe(f.get(), 7);
  std::vector<std::uint64_t> all(pe.count());
  for (std::uint64_t i = 0; i < pe.count(); ++i) all[i] = i;
  CHECK(hypersurface::fit_vanishing(pe, all, 2).empty());
  CHECK(hypersurface::fit_vanishing(pe, all, 1).empty());
}

TEST_CASE("union classification distinguishes the three outcomes") {
  SUBCASE("full space from a degenerate form") {
    const auto f = Field::prime_power(3, 1);
    TriForm T(5, f);
    T.set(1, 2, 3, f->one());  // radical contains e4, e5
    const auto cls = hypersurface::classify_union(T);
    CHECK(cls.kind == UnionKind::FULL_SPACE);
  }
  SUBCASE("hyperplane for the seven-term form over even q") {
    const auto f = Field::prime_power(2, 1);
    const auto cls = hypersurface::classify_union(forms::catalog("fano7", f));
    REQUIRE(cls.kind == UnionKind::HYPERPLANE);
    REQUIRE(cls.fitted.size() == 1);
    CHECK(cls.fitted[0].degree == 1);
  }
  SUBCASE("quadric for the seven-term form over odd q") {
    const auto f = Field::prime_power(3, 1);
    const auto cls = hypersurface::classify_union(forms::catalog("fano7", f));
    REQUIRE(cls.kind == UnionKind::QUADRIC);
    CHECK(cls.quadric_rank == 7);
    // The fitted quadric's zero set equals the union exactly.
    PointEnum pe(f.get(), 7);
    const auto pts = hypersurface::union_points(forms::catalog("fano7", f));
    std::size_t at = 0;
    for (std::uint64_t i = 0; i < pe.count(); ++i) {
      const bool on = at < pts.size() && pts[at] == i;
      if (on) ++at;
      CHECK(cls.fitted[0].evaluate(pe.point(i)).is_zero() == on);
    }
  }
  SUBCASE("even dimension is rejected") {
    const auto f = Field::prime_power(2, 1);
    CHECK_THROWS_AS(hypersurface::classify_union(forms::catalog("ts6", f)),
                    WrongParity);
  }
}

TEST_CASE("quadratic form rank via the symmetric matrix") {
  const auto f = Field::prime_power(3, 1);
  HomogPoly p;
  p.n = 4;
  p.degree = 2;
  p.field = f;
  p.coeffs[{2, 0, 0, 0}] = 1;  // x1^2
  p.coeffs[{0, 1, 1, 0}] = 1;  // x2 x3
  CHECK(hypersurface::quadratic_form_rank(p) == 3);

  HomogPoly squares;
  squares.n = 7;
  squares.degree = 2;
  squares.field = f;
  for (std::uint32_t i = 0; i < 7; ++i) {
    hypersurface::Monomial m(7, 0);
    m[i] = 2;
    squares.coeffs[m] = 1;
  }
  CHECK(hypersurface::quadratic_form_rank(squares) == 7);

  const auto f2 = Field::prime_power(2, 1);
  HomogPoly bad = p;
  bad.field = f2;
  CHECK_THROWS_AS(hypersurface::quadratic_form_rank(bad), WrongCharacteristic);
}
