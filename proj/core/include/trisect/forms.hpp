#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisect/gf.hpp"
#include "trisect/linalg.hpp"

namespace trisect::forms {

using gf::Elem;
using gf::FieldPtr;
using gf::elem_t;
using linalg::Mat;
using linalg::Vector;

/// Index triple 1 <= i < j < k <= n.
using Triple = std::array<std::uint16_t, 3>;

/// Contraction B_a(x, y) = T(a, x, y); skew with zero diagonal.
using SkewMatrix = Mat;

/// Alternating trilinear form as a sparse coefficient map over sorted
/// triples: T(e_i, e_j, e_k) = c_ijk for i < j < k, all other orderings
/// resolved by sign. Immutable value semantics apart from the builders.
class TriForm {
 public:
  TriForm(std::uint32_t n, FieldPtr field);

  std::uint32_t n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const std::map<Triple, elem_t>& coeffs() const { return coeffs_; }

  /// Set c_ijk; indices may come in any order, the sign is resolved.
  /// A repeated index with a nonzero value is rejected.
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Elem& c);
  /// Add c to the (sign-resolved) coefficient.
  void add_term(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Elem& c);
  /// Signed coefficient lookup for any index order; 0 on repeats.
  Elem coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;

  Elem evaluate(const Vector& x, const Vector& y, const Vector& z) const;
  SkewMatrix contract(const Vector& a) const;
  /// Basis of {a : T(a,.,.) = 0} as rows of an RREF matrix.
  Mat radical() const;
  /// T'(x,y,z) = T(Ax, Ay, Az); A must be invertible.
  TriForm transform(const Mat& A) const;

  TriForm scaled(const Elem& s) const;
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const TriForm& a, const TriForm& b) {
    return a.n_ == b.n_ && a.field_.get() == b.field_.get() &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  std::uint32_t n_;
  FieldPtr field_;
  std::map<Triple, elem_t> coeffs_;
};

/// Named form families. Recognized names: fano7, spread_odd (mu non-square),
/// spread_even_hodd, spread_even_heven (tr(mu) = 1), t_prime, t_double_prime,
/// ts6, ts10. Parameter constraints are validated.
TriForm catalog(const std::string& name, const FieldPtr& field,
                std::optional<Elem> mu = std::nullopt);

/// f123 + mu*(f156 - f246 + f345) on V(6, q). With validate, requires odd q
/// and mu a non-square.
TriForm make_spread_odd(const FieldPtr& field, const Elem& mu, bool validate);
/// f234 + f135 + f126 + f156 + f246 + f345 (+ mu*f456) on V(6, 2^h). With
/// validate, requires tr(mu) = 1 when mu is present (h even family) and
/// mu absent for odd h.
TriForm make_spread_even(const FieldPtr& field, std::optional<Elem> mu,
                         bool validate);

/// Compact text grammar: "f124+f235-f135", "f123+mu*f456", "2*f456".
/// Indices are 1-9, then x=10, y=11, z=12. When n is 0 it is inferred as
/// the largest index used (at least 3).
TriForm parse_form(const std::string& text, const FieldPtr& field,
                   std::uint32_t n = 0, std::optional<Elem> mu = std::nullopt);

}  // namespace trisect::forms
