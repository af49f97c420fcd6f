#include "trisect/linalg.hpp"

#include <algorithm>

#include "trisect/errors.hpp"

namespace trisect::linalg {

Vector Vector::basis(const Field* f, std::size_t n, std::size_t i) {
  Vector v(f, n);
  v.c[i] = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.field != b.field || a.size() != b.size()) {
    throw Mismatch("vector addition operands differ");
  }
  Vector r(a.field, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = a.field->add(a.c[i], b.c[i]);
  return r;
}

Vector operator*(const Elem& s, const Vector& a) {
  if (s.field != a.field) throw FieldMismatch("scalar from a different field");
  Vector r(a.field, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = a.field->mul(s.v, a.c[i]);
  return r;
}

void Mat::set(std::size_t r, std::size_t c, const Elem& e) {
  if (e.field != field_) throw FieldMismatch("entry from a different field");
  a_[r * cols_ + c] = e.v;
}

Vector Mat::row(std::size_t r) const {
  Vector v(field_, cols_);
  std::copy(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_, v.c.begin());
  return v;
}

void Mat::set_row(std::size_t r, const Vector& v) {
  if (v.field != field_ || v.size() != cols_) throw Mismatch("bad row");
  std::copy(v.c.begin(), v.c.end(), a_.begin() + r * cols_);
}

Mat Mat::identity(const Field* f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const Field* f, const std::vector<Vector>& rows,
                   std::size_t cols) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (field_ != o.field_ || cols_ != o.rows_) throw Mismatch("matrix product shapes");
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const elem_t aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = field_->add(r.at(i, j), field_->mul(aik, o.at(k, j)));
      }
    }
  }
  return r;
}

Vector Mat::apply(const Vector& v) const {
  if (v.field != field_ || v.size() != cols_) throw Mismatch("matrix-vector shapes");
  Vector r(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    elem_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      s = field_->add(s, field_->mul(at(i, j), v.c[j]));
    }
    r.c[i] = s;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) {
    throw Mismatch("matrix difference shapes");
  }
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    r.a_[i] = field_->sub(a_[i], o.a_[i]);
  }
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](elem_t x) { return x == 0; });
}

std::size_t Mat::rref(std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t i = r; i < rows_; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows_) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(r, j));
    }
    const elem_t lead_inv = field_->inv(at(r, col));
    for (std::size_t j = col; j < cols_; ++j) {
      at(r, j) = field_->mul(at(r, j), lead_inv);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const elem_t f = at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) {
        at(i, j) = field_->sub(at(i, j), field_->mul(f, at(r, j)));
      }
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return r;
}

std::size_t Mat::rank() const {
  Mat copy = *this;
  return copy.rref();
}

Mat Mat::kernel_basis() const {
  Mat red = *this;
  std::vector<std::size_t> pivots;
  const std::size_t r = red.rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat k(field_, free_cols.size(), cols_);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    k.at(b, fc) = 1;
    for (std::size_t i = 0; i < r; ++i) {
      // Pivot row i has pivot column pivots[i]; the pivot variable equals
      // minus the free-column entry.
      k.at(b, pivots[i]) = field_->neg(red.at(i, fc));
    }
  }
  k.rref();  // canonical basis
  return k;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw Mismatch("inverse of non-square matrix");
  Mat aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<std::size_t> pivots;
  aug.rref(&pivots);
  // Invertible iff every pivot lands in the left block.
  if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) {
    throw SingularMatrix("matrix is singular");
  }
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
  return r;
}

bool Mat::row_space_contains(const Vector& v,
                             const std::vector<std::size_t>& pivots) const {
  if (v.field != field_ || v.size() != cols_) throw Mismatch("bad vector");
  Vector w = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const elem_t f = w.c[pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      w.c[j] = field_->sub(w.c[j], field_->mul(f, at(i, j)));
    }
  }
  return w.is_zero();
}

Mat span_rref(const Field* f, const std::vector<Vector>& vectors,
              std::size_t cols) {
  Mat m = Mat::from_rows(f, vectors, cols);
  const std::size_t r = m.rref();
  Mat out(f, r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace trisect::linalg
