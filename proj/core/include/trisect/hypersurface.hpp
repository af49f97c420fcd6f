#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"

namespace trisect::hypersurface {

using forms::TriForm;
using geometry::PointEnum;
using gf::Elem;
using gf::Field;
using gf::FieldPtr;
using gf::elem_t;
using linalg::Vector;

/// Exponent vector of a monomial; length n, entries sum to the degree.
using Monomial = std::vector<std::uint32_t>;

/// Homogeneous polynomial over GF(q) as a monomial-coefficient map. The zero
/// set on projective points is well-defined (evaluation scales by lambda^d).
struct HomogPoly {
  std::uint32_t n = 0;
  std::uint32_t degree = 0;
  FieldPtr field;
  std::map<Monomial, elem_t> coeffs;

  Elem evaluate(const Vector& x) const;
  bool is_zero() const { return coeffs.empty(); }
};

/// Monomials of total degree d in n variables, deterministic order.
std::vector<Monomial> monomials(std::uint32_t n, std::uint32_t d);

enum class UnionKind { FULL_SPACE, HYPERPLANE, QUADRIC, OTHER };

std::string to_string(UnionKind k);

struct UnionClassification {
  UnionKind kind = UnionKind::OTHER;
  std::vector<HomogPoly> fitted;       // basis of the fitted vanishing space
  std::optional<std::uint32_t> quadric_rank;  // odd q only
};

/// Sorted indices of points lying on at least one T-singular line.
std::vector<std::uint64_t> union_points(const TriForm& T);

/// Basis of the degree-d homogeneous polynomials vanishing on every given
/// point (deterministic echelon basis; empty when none vanish).
std::vector<HomogPoly> fit_vanishing(const PointEnum& pe,
                                     const std::vector<std::uint64_t>& points,
                                     std::uint32_t d);

/// Classify the union of singular lines for odd n = 2k+1 per the
/// full-space / hyperplane / degree-(k-1) hypersurface trichotomy.
UnionClassification classify_union(const TriForm& T);

/// Rank of the symmetric matrix of a quadratic form; odd characteristic only.
std::uint32_t quadratic_form_rank(const HomogPoly& f);

}  // namespace trisect::hypersurface
