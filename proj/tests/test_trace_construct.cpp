#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"
#include "trisect/trace_construct.hpp"

using namespace trisect;
using forms::TriForm;
using gf::Elem;
using gf::ExtPair;
using gf::Field;
using gf::FieldPtr;
using gf::elem_t;
using linalg::Vector;
using trace_construct::ExtensionSetup;

namespace {

ExtPair pair_for(std::uint64_t q) {
  const auto [p, h] = gf::factor_prime_power(q);
  return ExtPair::make(Field::prime_power(p, h));
}

Elem default_rho(const ExtPair& pair) {
  return pair.base->characteristic() == 2
             ? trace_construct::choose_rho_even(pair)
             : trace_construct::choose_rho_odd(pair);
}

Vector random_vec(const FieldPtr& f, std::mt19937_64& rng) {
  Vector v(f.get(), 6);
  std::uniform_int_distribution<std::uint32_t> dist(
      0, static_cast<std::uint32_t>(f->order() - 1));
  for (auto& c : v.c) c = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("coordinate bridge between GF(q)^6 and GF(q^2)^3 round-trips") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    const auto pair = pair_for(q);
    const auto setup = ExtensionSetup::make(pair, default_rho(pair));
    std::mt19937_64 rng(41 + q);
    for (int trial = 0; trial < 25; ++trial) {
      const Vector x = random_vec(pair.base, rng);
      CHECK(setup.to_base(setup.to_ext(x)) == x);
    }
  }
}

TEST_CASE("rho choices satisfy their trace conditions") {
  SUBCASE("odd q") {
    for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull}) {
      const auto pair = pair_for(q);
      const Elem rho = trace_construct::choose_rho_odd(pair);
      CHECK_FALSE(pair.in_base(rho));
      CHECK(pair.trace(rho).is_zero());
      // rho^2 is a non-square of the base field.
      const Elem sq = pair.project(rho * rho);
      CHECK_FALSE(pair.base->is_square(sq.v));

      // Targeting a specific non-square reproduces it.
      for (elem_t mu = 1; mu < q; ++mu) {
        if (pair.base->is_square(mu)) continue;
        const Elem r = trace_construct::choose_rho_odd(pair, pair.base->elem(mu));
        CHECK(pair.project(r * r).v == mu);
      }
      CHECK_THROWS_AS(trace_construct::choose_rho_odd(pair, pair.base->one()),
                      InvalidParameter);
    }
  }
  SUBCASE("even q") {
    for (std::uint64_t q : {2ull, 4ull, 8ull, 16ull}) {
      const auto pair = pair_for(q);
      const Elem rho = trace_construct::choose_rho_even(pair);
      CHECK(pair.trace(rho) == pair.base->one());
      CHECK(pair.trace(rho * rho) == pair.base->one());
      const Elem cube = pair.trace(rho * rho * rho);
      if (pair.base->degree() % 2 == 1) {
        CHECK(cube.is_zero());
      } else {
        CHECK(pair.base->abs_trace(cube.v) == 1);
      }
    }
    CHECK_THROWS_AS(trace_construct::choose_rho_even(pair_for(3)), WrongParity);
  }
}

TEST_CASE("lifted form evaluates as the trace of the extension determinant") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 8ull}) {
    const auto pair = pair_for(q);
    const auto setup = ExtensionSetup::make(pair, default_rho(pair));
    std::mt19937_64 rng(43 + q);
    std::uniform_int_distribution<std::uint64_t> bpick(1, q * q - 1);
    for (int bt = 0; bt < 3; ++bt) {
      const Elem beta = pair.ext->elem(static_cast<elem_t>(bpick(rng)));
      const TriForm T = trace_construct::lift(setup, beta);
      for (int trial = 0; trial < 25; ++trial) {
        const Vector x = random_vec(pair.base, rng);
        const Vector y = random_vec(pair.base, rng);
        const Vector z = random_vec(pair.base, rng);
        CHECK(T.evaluate(x, y, z) ==
              trace_construct::lifted_eval(setup, beta, x, y, z));
      }
    }
    CHECK_THROWS_AS(trace_construct::lift(setup, pair.ext->zero()),
                    InvalidParameter);
  }
}

TEST_CASE("singular lines of the lift are exactly the scalar-multiplication spread") {
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    const auto pair = pair_for(q);
    const auto setup = ExtensionSetup::make(pair, default_rho(pair));
    const TriForm T = trace_construct::lift(setup, pair.ext->one());
    const auto L = geometry::singular_lines(T);
    const auto S = trace_construct::standard_spread(setup);
    CHECK(L.lines == S.lines);
    CHECK(L.lines.size() == q * q * q * q + q * q + 1);
  }
}

TEST_CASE("lift reproduces the two closed-form spread families") {
  // Odd q: rho^2 = mu gives c0 = Tr(mu) scaling of f123 and the mu block.
  for (std::uint64_t q : {3ull, 5ull}) {
    const auto pair = pair_for(q);
    for (elem_t mu = 1; mu < q; ++mu) {
      if (pair.base->is_square(mu)) continue;
      const Elem rho = trace_construct::choose_rho_odd(pair, pair.base->elem(mu));
      const auto setup = ExtensionSetup::make(pair, rho);
      const TriForm T = trace_construct::lift(setup, pair.ext->one());
      // Tr(1) = 2, Tr(rho) = 0, Tr(rho^2) = 2 mu, Tr(rho^3) = 0.
      const Elem two = pair.base->from_int(2);
      TriForm want =
          forms::make_spread_odd(pair.base, two * pair.base->elem(mu), false);
      want.set(1, 2, 3, two);
      CHECK(T == want);
    }
  }
  // Even q, h odd: the six-term form with no f456.
  for (std::uint64_t q : {2ull, 8ull}) {
    const auto pair = pair_for(q);
    const Elem rho = trace_construct::choose_rho_even(pair);
    const TriForm T =
        trace_construct::lift(ExtensionSetup::make(pair, rho), pair.ext->one());
    CHECK(T == forms::make_spread_even(pair.base, std::nullopt, true));
  }
  // Even q, h even: the same with Tr(rho^3) f456 appended.
  {
    const auto pair = pair_for(4);
    const Elem rho = trace_construct::choose_rho_even(pair);
    const Elem mu = pair.trace(rho * rho * rho);
    const TriForm T =
        trace_construct::lift(ExtensionSetup::make(pair, rho), pair.ext->one());
    CHECK(T == forms::make_spread_even(pair.base, mu, true));
  }
}

TEST_CASE("cube-root rho yields the three six-term variants") {
  for (std::uint64_t q : {2ull, 8ull}) {
    const auto pair = pair_for(q);
    const auto var = trace_construct::rho_cube_root_variant(pair);
    CHECK(pair.ext->element_order(var.rho.v) == 3);
    CHECK(var.lift_one == forms::make_spread_even(pair.base, std::nullopt, true));
    // beta = rho and beta = rho^2 give the two five-term forms, in some order.
    const TriForm tp = forms::catalog("t_prime", pair.base);
    const TriForm tpp = forms::catalog("t_double_prime", pair.base);
    const bool match = (var.lift_rho == tp && var.lift_rho_sq == tpp) ||
                       (var.lift_rho == tpp && var.lift_rho_sq == tp);
    CHECK(match);
    // All three are spreads of the same size.
    for (const TriForm* T : {&var.lift_one, &var.lift_rho, &var.lift_rho_sq}) {
      const auto rep = geometry::spread_check(geometry::singular_lines(*T));
      CHECK(rep.is_partition);
    }
  }
}
