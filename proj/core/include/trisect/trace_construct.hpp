#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"
#include "trisect/gf.hpp"

namespace trisect::trace_construct {

using forms::TriForm;
using geometry::LineSet;
using gf::Elem;
using gf::ExtPair;
using gf::FieldPtr;

/// V(3, q^2) viewed as V(6, q): basis e_1, e_2, e_3 over GF(q^2) together
/// with e_{3+i} = rho * e_i for a fixed rho outside GF(q).
struct ExtensionSetup {
  ExtPair pair;
  Elem rho;  // in GF(q^2) \ GF(q)

  static ExtensionSetup make(const ExtPair& pair, const Elem& rho);

  /// GF(q)^6 coordinates -> the corresponding GF(q^2)^3 vector.
  std::array<Elem, 3> to_ext(const linalg::Vector& x) const;
  /// GF(q^2)^3 vector -> GF(q)^6 coordinates.
  linalg::Vector to_base(const std::array<Elem, 3>& X) const;
};

/// Relative-trace coefficients c_i = Tr(beta * rho^i) of a lift.
struct TraceCoeffs {
  Elem c0, c1, c2, c3;
};

/// Odd q: rho = zeta^{k+1} for q = 2k+1 and the deterministic primitive
/// zeta of GF(q^2); then Tr(rho) = 0, rho^2 is a non-square of GF(q) and
/// Tr(rho^3) = 0. With target_mu (a non-square), picks instead the least
/// square root of mu in GF(q^2) \ GF(q).
Elem choose_rho_odd(const ExtPair& pair,
                    std::optional<Elem> target_mu = std::nullopt);

/// Even q = 2^h: constructive choice with Tr(rho) = Tr(rho^2) = 1 and
/// Tr(rho^3) = 0 (h odd) or Tr(rho^3) = target_mu with tr(target_mu) = 1
/// (h even). Postconditions asserted by direct trace evaluation.
Elem choose_rho_even(const ExtPair& pair,
                     std::optional<Elem> target_mu = std::nullopt);

TraceCoeffs trace_coeffs(const ExtensionSetup& setup, const Elem& beta);

/// T(x,y,z) = Tr(tau(x,y,z)) with tau the GF(q^2)-determinant form fixed by
/// tau(e1,e2,e3) = beta, assembled on V(6, q) as
/// c0*f123 + c1*(f234 - f135 + f126) + c2*(f156 - f246 + f345) + c3*f456.
TriForm lift(const ExtensionSetup& setup, const Elem& beta);

/// Direct evaluation Tr(tau(x,y,z)); test oracle for lift.
Elem lifted_eval(const ExtensionSetup& setup, const Elem& beta,
                 const linalg::Vector& x, const linalg::Vector& y,
                 const linalg::Vector& z);

/// The q^4+q^2+1 lines <a, rho*a> of the standard Desarguesian spread of
/// PG(5, q) induced by the points of PG(2, q^2).
LineSet standard_spread(const ExtensionSetup& setup);

struct CubeRootVariant {
  Elem rho;  // order 3, outside GF(q)
  TriForm lift_one;       // beta = 1
  TriForm lift_rho;       // beta = rho
  TriForm lift_rho_sq;    // beta = rho^2
};

/// q = 2^h, h odd: rho of multiplicative order 3 outside GF(q) and the three
/// lifts with beta in {1, rho, rho^2}.
CubeRootVariant rho_cube_root_variant(const ExtPair& pair);

}  // namespace trisect::trace_construct
