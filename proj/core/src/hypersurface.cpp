#include "trisect/hypersurface.hpp"

#include <algorithm>

#include "trisect/errors.hpp"

namespace trisect::hypersurface {

using linalg::Mat;

Elem HomogPoly::evaluate(const Vector& x) const {
  const Field* f = field.get();
  if (x.field != f || x.size() != n) throw Mismatch("bad evaluation point");
  Elem s = f->zero();
  for (const auto& [mono, c] : coeffs) {
    elem_t term = c;
    for (std::uint32_t i = 0; i < n && term != 0; ++i) {
      if (mono[i] == 0) continue;
      term = f->mul(term, f->pow(x.c[i], mono[i]));
    }
    s = s + Elem{f, term};
  }
  return s;
}

std::vector<Monomial> monomials(std::uint32_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  // Lexicographic, first variable's exponent decreasing.
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

std::string to_string(UnionKind k) {
  switch (k) {
    case UnionKind::FULL_SPACE: return "FULL_SPACE";
    case UnionKind::HYPERPLANE: return "HYPERPLANE";
    case UnionKind::QUADRIC: return "QUADRIC";
    case UnionKind::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::vector<std::uint64_t> union_points(const TriForm& T) {
  const Field* f = T.field().get();
  PointEnum pe(f, T.n());
  const geometry::LineSet L = geometry::singular_lines(T);
  std::vector<bool> on(pe.count(), false);
  for (const auto& line : L.lines) {
    for (const Vector& p : geometry::line_points(f, line)) {
      on[pe.index_of(p)] = true;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < pe.count(); ++i) {
    if (on[i]) out.push_back(i);
  }
  return out;
}

std::vector<HomogPoly> fit_vanishing(const PointEnum& pe,
                                     const std::vector<std::uint64_t>& points,
                                     std::uint32_t d) {
  const Field* f = pe.field();
  const std::uint32_t n = pe.n();
  const auto mons = monomials(n, d);
  const std::size_t m = mons.size();

  // Row space of the evaluation matrix, reduced incrementally; at most m rows
  // survive, so memory stays O(m^2) for any number of points.
  std::vector<std::vector<elem_t>> rows;      // reduced, pivot-normalized
  std::vector<std::size_t> pivot_of_row;
  for (std::uint64_t idx : points) {
    const Vector x = pe.point(idx);
    std::vector<elem_t> row(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      elem_t term = 1;
      for (std::uint32_t i = 0; i < n && term != 0; ++i) {
        if (mons[j][i] == 0) continue;
        term = f->mul(term, f->pow(x.c[i], mons[j][i]));
      }
      row[j] = term;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const elem_t c = row[pivot_of_row[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        row[j] = f->sub(row[j], f->mul(c, rows[r][j]));
      }
    }
    std::size_t piv = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j] != 0) {
        piv = j;
        break;
      }
    }
    if (piv == m) continue;
    const elem_t inv = f->inv(row[piv]);
    for (std::size_t j = 0; j < m; ++j) row[j] = f->mul(row[j], inv);
    rows.push_back(std::move(row));
    pivot_of_row.push_back(piv);
    if (rows.size() == m) break;  // full rank, kernel is trivial
  }

  Mat rs(f, rows.size(), m);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < m; ++j) rs.at(r, j) = rows[r][j];
  }
  const Mat ker = rs.kernel_basis();

  std::vector<HomogPoly> out;
  FieldPtr fp = f->shared_from_this();
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    HomogPoly p;
    p.n = n;
    p.degree = d;
    p.field = fp;
    for (std::size_t j = 0; j < m; ++j) {
      if (ker.at(r, j) != 0) p.coeffs[mons[j]] = ker.at(r, j);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::uint32_t quadratic_form_rank(const HomogPoly& f) {
  const Field* fd = f.field.get();
  if (fd->characteristic() == 2) {
    throw WrongCharacteristic("symmetric rank undefined in characteristic 2");
  }
  if (f.degree != 2) throw InvalidParameter("not a quadratic form");
  Mat M(fd, f.n, f.n);
  const elem_t half = fd->inv(fd->from_int(2).v);
  for (const auto& [mono, c] : f.coeffs) {
    std::vector<std::uint32_t> support;
    for (std::uint32_t i = 0; i < f.n; ++i) {
      if (mono[i] == 2) {
        M.at(i, i) = c;
      } else if (mono[i] == 1) {
        support.push_back(i);
      }
    }
    if (support.size() == 2) {
      const elem_t hc = fd->mul(c, half);
      M.at(support[0], support[1]) = hc;
      M.at(support[1], support[0]) = hc;
    }
  }
  return static_cast<std::uint32_t>(M.rank());
}

UnionClassification classify_union(const TriForm& T) {
  const std::uint32_t n = T.n();
  if (n % 2 == 0) throw WrongParity("classification applies to odd n");
  const Field* f = T.field().get();
  const std::uint64_t q = f->order();
  PointEnum pe(f, n);
  const auto pts = union_points(T);

  UnionClassification out;
  if (pts.size() == pe.count()) {
    out.kind = UnionKind::FULL_SPACE;
    return out;
  }

  // Hyperplane test: a single linear relation plus the exact point count.
  const auto lin = fit_vanishing(pe, pts, 1);
  std::uint64_t hyperplane_points = 1;
  for (std::uint32_t i = 0; i + 2 < n; ++i) hyperplane_points = hyperplane_points * q + 1;
  if (lin.size() == 1 && pts.size() == hyperplane_points) {
    out.kind = UnionKind::HYPERPLANE;
    out.fitted = lin;
    return out;
  }
  if (!lin.empty()) {
    out.kind = UnionKind::OTHER;
    out.fitted = lin;
    return out;
  }

  const std::uint32_t d = (n - 1) / 2 - 1;
  auto fitted = fit_vanishing(pe, pts, d);
  out.fitted = fitted;
  if (d == 2 && fitted.size() == 1 && q % 2 == 1) {
    // Exact zero set?
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < pe.count(); ++i) {
      if (fitted[0].evaluate(pe.point(i)).is_zero()) ++zeros;
    }
    if (zeros == pts.size()) {
      out.kind = UnionKind::QUADRIC;
      out.quadric_rank = quadratic_form_rank(fitted[0]);
      return out;
    }
  }
  out.kind = UnionKind::OTHER;
  return out;
}

}  // namespace trisect::hypersurface
