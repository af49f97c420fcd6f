#pragma once

#include <cstdint>
#include <vector>

#include "trisect/gf.hpp"

namespace trisect::linalg {

using gf::Elem;
using gf::Field;
using gf::elem_t;

/// Coordinate vector over a field. Length is context-dependent; operations
/// check it against the objects they combine with.
struct Vector {
  const Field* field = nullptr;
  std::vector<elem_t> c;

  Vector() = default;
  Vector(const Field* f, std::size_t n) : field(f), c(n, 0) {}
  Vector(const Field* f, std::vector<elem_t> coords)
      : field(f), c(std::move(coords)) {}

  std::size_t size() const { return c.size(); }
  bool is_zero() const {
    for (auto x : c)
      if (x != 0) return false;
    return true;
  }
  Elem at(std::size_t i) const { return {field, c[i]}; }

  static Vector basis(const Field* f, std::size_t n, std::size_t i);

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.field == b.field && a.c == b.c;
  }
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator*(const Elem& s, const Vector& a);

/// Dense matrix over a finite field, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(const Field* f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const Field* field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  elem_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  elem_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem elem(std::size_t r, std::size_t c) const {
    return {field_, a_[r * cols_ + c]};
  }
  void set(std::size_t r, std::size_t c, const Elem& e);

  Vector row(std::size_t r) const;
  void set_row(std::size_t r, const Vector& v);

  static Mat identity(const Field* f, std::size_t n);
  static Mat from_rows(const Field* f, const std::vector<Vector>& rows,
                       std::size_t cols);

  Mat operator*(const Mat& o) const;
  Vector apply(const Vector& v) const;  // M * v
  Mat transpose() const;
  Mat operator-(const Mat& o) const;
  bool is_zero() const;

  /// In-place reduced row echelon form. Returns the rank; pivot columns are
  /// appended to *pivots when given. Deterministic.
  std::size_t rref(std::vector<std::size_t>* pivots = nullptr);
  std::size_t rank() const;

  /// Basis of the right kernel {v : M v = 0}, as rows, in RREF. Deterministic.
  Mat kernel_basis() const;

  Mat inverse() const;  // throws SingularMatrix

  /// True iff v lies in the row space; assumes *this is in RREF with the
  /// given pivot columns.
  bool row_space_contains(const Vector& v,
                          const std::vector<std::size_t>& pivots) const;

  const std::vector<elem_t>& data() const { return a_; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ &&
           x.a_ == y.a_;
  }

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<elem_t> a_;
};

/// Canonical RREF matrix whose row space is the span of the given vectors,
/// with zero rows dropped.
Mat span_rref(const Field* f, const std::vector<Vector>& vectors,
              std::size_t cols);

}  // namespace trisect::linalg
