#include "trisect/trace_construct.hpp"

#include <algorithm>

#include "trisect/errors.hpp"

namespace trisect::trace_construct {

using geometry::PointEnum;
using gf::Field;
using gf::elem_t;
using linalg::Vector;

ExtensionSetup ExtensionSetup::make(const ExtPair& pair, const Elem& rho) {
  if (rho.field != pair.ext.get()) throw FieldMismatch("rho not in GF(q^2)");
  if (pair.in_base(rho)) {
    throw InvalidParameter("rho must lie outside GF(q)");
  }
  return ExtensionSetup{pair, rho};
}

std::array<Elem, 3> ExtensionSetup::to_ext(const Vector& x) const {
  if (x.size() != 6 || x.field != pair.base.get()) {
    throw Mismatch("expected a GF(q)^6 vector");
  }
  std::array<Elem, 3> X{pair.ext->zero(), pair.ext->zero(), pair.ext->zero()};
  for (std::size_t i = 0; i < 3; ++i) {
    X[i] = pair.embed(x.at(i)) + pair.embed(x.at(3 + i)) * rho;
  }
  return X;
}

Vector ExtensionSetup::to_base(const std::array<Elem, 3>& X) const {
  Vector x(pair.base.get(), 6);
  for (std::size_t i = 0; i < 3; ++i) {
    auto [lo, hi] = pair.decompose(X[i], rho);
    x.c[i] = lo.v;
    x.c[3 + i] = hi.v;
  }
  return x;
}

Elem choose_rho_odd(const ExtPair& pair, std::optional<Elem> target_mu) {
  const std::uint64_t q = pair.base->order();
  if (q % 2 == 0) throw WrongParity("choose_rho_odd requires odd q");
  if (target_mu) {
    if (target_mu->field != pair.base.get()) {
      throw FieldMismatch("mu not in GF(q)");
    }
    if (pair.base->is_square(target_mu->v)) {
      throw InvalidParameter("mu must be a non-square of GF(q)");
    }
    const Elem mu_ext = pair.embed(*target_mu);
    for (std::uint64_t k = 0; k < pair.ext->order(); ++k) {
      const Elem r{pair.ext.get(), pair.ext->rep_ordered(k)};
      if (r.is_zero() || pair.in_base(r)) continue;
      if (r * r == mu_ext) return r;
    }
    throw InternalInvariantViolation("non-square has no root in GF(q^2)");
  }
  const Elem zeta = pair.ext->primitive_element();
  const std::uint64_t k = (q - 1) / 2;
  const Elem rho{pair.ext.get(), pair.ext->pow(zeta.v, k + 1)};
  if (pair.in_base(rho)) {
    throw InternalInvariantViolation("zeta^{k+1} landed in GF(q)");
  }
  if (!pair.trace(rho).is_zero()) {
    throw InternalInvariantViolation("Tr(rho) != 0 for odd-q rho");
  }
  return rho;
}

Elem choose_rho_even(const ExtPair& pair, std::optional<Elem> target_mu) {
  const Field* base = pair.base.get();
  const Field* ext = pair.ext.get();
  if (base->characteristic() != 2) {
    throw WrongParity("choose_rho_even requires even q");
  }
  const bool h_even = base->degree() % 2 == 0;
  if (target_mu) {
    if (!h_even) throw InvalidParameter("target_mu only applies when h is even");
    if (target_mu->field != base) throw FieldMismatch("mu not in GF(q)");
    if (base->abs_trace(target_mu->v) != 1) {
      throw InvalidParameter("target_mu must have absolute trace 1");
    }
  } else if (h_even) {
    // Default target: least element of T1 in rep order.
    for (std::uint64_t k = 0; k < base->order(); ++k) {
      const elem_t v = base->rep_ordered(k);
      if (base->abs_trace(v) == 1) {
        target_mu = Elem{base, v};
        break;
      }
    }
  }

  const Elem zeta = ext->primitive_element();
  const Elem t = pair.trace(zeta);
  if (t.is_zero()) {
    throw InternalInvariantViolation("Tr(zeta) = 0 for zeta outside GF(q)");
  }
  const Elem rho0 = zeta * pair.embed(Elem{base, base->inv(t.v)});
  const Elem rho0_cubed = rho0 * rho0 * rho0;
  const Elem mu0 = pair.trace(rho0_cubed);

  const Elem want =
      h_even ? *target_mu : base->zero();  // desired Tr(rho^3)
  // Solve alpha + alpha^2 = mu0 + want; take the least solution in rep order.
  const elem_t rhs = base->add(mu0.v, want.v);
  std::optional<elem_t> alpha;
  for (std::uint64_t k = 0; k < base->order(); ++k) {
    const elem_t a = base->rep_ordered(k);
    if (base->add(a, base->mul(a, a)) == rhs) {
      alpha = a;
      break;
    }
  }
  if (!alpha) {
    throw InternalInvariantViolation("no alpha adjusts Tr(rho^3) to target");
  }
  const Elem rho = rho0 + pair.embed(Elem{base, *alpha});

  // Postconditions, by direct trace evaluation.
  if (!(pair.trace(rho) == base->one()) ||
      !(pair.trace(rho * rho) == base->one()) ||
      !(pair.trace(rho * rho * rho) == want)) {
    throw InternalInvariantViolation("choose_rho_even postcondition failed");
  }
  return rho;
}

TraceCoeffs trace_coeffs(const ExtensionSetup& setup, const Elem& beta) {
  const auto& pair = setup.pair;
  Elem r = pair.ext->one();
  TraceCoeffs c{pair.base->zero(), pair.base->zero(), pair.base->zero(),
                pair.base->zero()};
  Elem* out[4] = {&c.c0, &c.c1, &c.c2, &c.c3};
  for (int i = 0; i < 4; ++i) {
    *out[i] = pair.trace(beta * r);
    r = r * setup.rho;
  }
  return c;
}

TriForm lift(const ExtensionSetup& setup, const Elem& beta) {
  if (beta.field != setup.pair.ext.get()) throw FieldMismatch("beta not in GF(q^2)");
  if (beta.is_zero()) throw InvalidParameter("beta must be nonzero");
  const TraceCoeffs c = trace_coeffs(setup, beta);
  TriForm t(6, setup.pair.base);
  t.set(1, 2, 3, c.c0);
  t.set(2, 3, 4, c.c1);
  t.set(1, 3, 5, -c.c1);
  t.set(1, 2, 6, c.c1);
  t.set(1, 5, 6, c.c2);
  t.set(2, 4, 6, -c.c2);
  t.set(3, 4, 5, c.c2);
  t.set(4, 5, 6, c.c3);
  return t;
}

Elem lifted_eval(const ExtensionSetup& setup, const Elem& beta,
                 const Vector& x, const Vector& y, const Vector& z) {
  const auto X = setup.to_ext(x);
  const auto Y = setup.to_ext(y);
  const auto Z = setup.to_ext(z);
  const Elem det = X[0] * (Y[1] * Z[2] - Y[2] * Z[1]) -
                   X[1] * (Y[0] * Z[2] - Y[2] * Z[0]) +
                   X[2] * (Y[0] * Z[1] - Y[1] * Z[0]);
  return setup.pair.trace(beta * det);
}

LineSet standard_spread(const ExtensionSetup& setup) {
  const auto& pair = setup.pair;
  const Field* base = pair.base.get();
  const std::uint64_t q = base->order();
  PointEnum pg2(pair.ext.get(), 3);
  LineSet out;
  out.n = 6;
  out.field = pair.base;
  out.lines.reserve(pg2.count());
  for (std::uint64_t idx = 0; idx < pg2.count(); ++idx) {
    const Vector a = pg2.point(idx);
    std::array<Elem, 3> A{pair.ext->elem(a.c[0]), pair.ext->elem(a.c[1]),
                          pair.ext->elem(a.c[2])};
    std::array<Elem, 3> RA{A[0] * setup.rho, A[1] * setup.rho,
                           A[2] * setup.rho};
    out.lines.push_back(geometry::line_through(base, setup.to_base(A),
                                               setup.to_base(RA)));
  }
  std::sort(out.lines.begin(), out.lines.end());
  out.lines.erase(std::unique(out.lines.begin(), out.lines.end()),
                  out.lines.end());
  if (out.lines.size() != q * q * q * q + q * q + 1) {
    throw InternalInvariantViolation("standard spread has wrong line count");
  }
  return out;
}

CubeRootVariant rho_cube_root_variant(const ExtPair& pair) {
  const Field* base = pair.base.get();
  const Field* ext = pair.ext.get();
  if (base->characteristic() != 2 || base->degree() % 2 == 0) {
    throw WrongParity("cube-root variant needs q = 2^h with h odd");
  }
  const std::uint64_t q = base->order();
  if ((q + 1) % 3 != 0) {
    throw InternalInvariantViolation("3 does not divide q+1");
  }
  const Elem zeta = ext->primitive_element();
  const Elem rho{ext, ext->pow(zeta.v, (q * q - 1) / 3)};
  if (pair.in_base(rho) || ext->element_order(rho.v) != 3) {
    throw InternalInvariantViolation("cube-root rho is invalid");
  }
  if (!(pair.trace(rho * rho) == pair.trace(rho)) ||
      !pair.trace(rho * rho * rho).is_zero()) {
    throw InternalInvariantViolation("cube-root trace identities failed");
  }
  const ExtensionSetup setup = ExtensionSetup::make(pair, rho);
  CubeRootVariant out{rho, lift(setup, ext->one()), lift(setup, rho),
                      lift(setup, rho * rho)};
  return out;
}

}  // namespace trisect::trace_construct
