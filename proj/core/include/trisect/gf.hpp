#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "trisect/errors.hpp"

namespace trisect::gf {

/// Packed value of a field element. For a field of order q the values 0..q-1
/// are in bijection with the elements; 0 and 1 are the additive and
/// multiplicative identities.
using elem_t = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Field element: packed value tagged with its owning field. Elements of
/// different fields never mix; every binary operation checks the owners.
struct Elem {
  const Field* field = nullptr;
  elem_t v = 0;

  bool is_zero() const { return v == 0; }
  friend bool operator==(const Elem& a, const Elem& b) {
    return a.field == b.field && a.v == b.v;
  }
};

Elem operator+(const Elem& a, const Elem& b);
Elem operator-(const Elem& a, const Elem& b);
Elem operator*(const Elem& a, const Elem& b);
Elem operator/(const Elem& a, const Elem& b);
Elem operator-(const Elem& a);

/// A finite field GF(p^h). Two construction routes:
///   - Field::prime_power(p, h): GF(p)[x]/(m) with m the default modulus
///     for (p, h) (lexicographically least monic irreducible, fixed table);
///   - Field::quadratic_extension(base): GF(q^2) as a degree-2 extension of
///     an existing base field, so that Frobenius beta -> beta^q and the
///     embedding GF(q) -> GF(q^2) are cheap.
///
/// Immutable after construction and shareable across threads.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Base, Quadratic };

  static FieldPtr prime_power(std::uint32_t p, std::uint32_t h);
  static FieldPtr prime_power(std::uint32_t p, std::uint32_t h,
                              std::vector<std::uint32_t> modulus);
  static FieldPtr quadratic_extension(const FieldPtr& base);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  /// Absolute extension degree over the prime field.
  std::uint32_t degree() const { return h_; }
  std::uint64_t order() const { return order_; }
  /// Modulus over GF(p) (Base fields only), little-endian, monic, length h+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const FieldPtr& base() const { return base_; }

  Elem zero() const { return {this, 0}; }
  Elem one() const { return {this, 1}; }
  Elem elem(elem_t v) const;
  /// Embedding of the prime field: k mod p as a field element.
  Elem from_int(std::int64_t k) const;

  elem_t add(elem_t a, elem_t b) const;
  elem_t sub(elem_t a, elem_t b) const;
  elem_t neg(elem_t a) const;
  elem_t mul(elem_t a, elem_t b) const;
  elem_t inv(elem_t a) const;
  elem_t div(elem_t a, elem_t b) const;
  elem_t pow(elem_t a, std::uint64_t e) const;

  /// Coefficients over GF(p) in the polynomial basis, little-endian,
  /// length degree(). For quadratic extensions the two base-field
  /// coordinates are concatenated.
  std::vector<std::uint32_t> rep(elem_t a) const;
  elem_t from_rep(const std::vector<std::uint32_t>& rep) const;

  /// Deterministic total order on elements: lexicographic on rep().
  bool rep_less(elem_t a, elem_t b) const;
  /// k-th element in rep order, k in [0, order).
  elem_t rep_ordered(std::uint64_t k) const;

  std::uint64_t element_order(elem_t a) const;
  /// Least element in rep order of multiplicative order q-1.
  Elem primitive_element() const;
  /// True iff a is a square. Trivially true for characteristic 2.
  bool is_square(elem_t a) const;
  /// Absolute trace to GF(2); requires characteristic 2.
  std::uint32_t abs_trace(elem_t a) const;

  ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void build_tables();
  elem_t mul_slow(elem_t a, elem_t b) const;

  Kind kind_ = Kind::Base;
  std::uint32_t p_ = 0;
  std::uint32_t h_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> modulus_;  // Base: over GF(p), length h+1
  FieldPtr base_;                       // Quadratic only
  // Quadratic modulus x^2 + qmod1_*x + qmod0_ over the base field.
  elem_t qmod0_ = 0, qmod1_ = 0;

  // Discrete-log tables for small fields; empty above the size limit.
  std::vector<elem_t> exp_;
  std::vector<std::uint32_t> log_;
  mutable std::optional<elem_t> primitive_;
};

/// The pair GF(q) inside GF(q^2), with the relative trace Tr(b) = b + b^q.
struct ExtPair {
  FieldPtr base;
  FieldPtr ext;

  static ExtPair make(const FieldPtr& base);

  Elem embed(const Elem& a) const;
  /// Inverse of embed; the argument must lie in the image.
  Elem project(const Elem& b) const;
  Elem frobenius(const Elem& b) const;  // b^q
  /// Relative trace GF(q^2) -> GF(q).
  Elem trace(const Elem& b) const;
  bool in_base(const Elem& b) const;
  /// Write b = x + y*rho with x, y in the base field; rho must be outside it.
  std::pair<Elem, Elem> decompose(const Elem& b, const Elem& rho) const;
};

/// Lexicographically least monic irreducible polynomial of degree h over
/// GF(p), little-endian coefficients, length h+1.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t h);

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);
bool is_prime(std::uint64_t n);

/// Factor q as p^h; throws InvalidParameter if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q);

}  // namespace trisect::gf
