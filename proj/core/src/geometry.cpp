#include "trisect/geometry.hpp"

#include <algorithm>
#include <set>

#include "trisect/errors.hpp"
#include "trisect/parallel.hpp"

namespace trisect::geometry {

namespace {

constexpr std::uint64_t kMaxPoints = 100'000'000;

/// All projective points of the row space of basis (d x n), one vector per
/// point, in the coefficient-counter order. Not normalized.
std::vector<Vector> subspace_points(const Field* f, const Mat& basis) {
  const std::size_t d = basis.rows();
  const std::size_t n = basis.cols();
  const std::uint64_t q = f->order();
  std::vector<Vector> out;
  if (d == 0) return out;
  PointEnum coeffs(f, static_cast<std::uint32_t>(d));
  out.reserve(coeffs.count());
  for (std::uint64_t i = 0; i < coeffs.count(); ++i) {
    const Vector lam = coeffs.point(i);
    Vector v(f, n);
    for (std::size_t r = 0; r < d; ++r) {
      if (lam.c[r] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        v.c[c] = f->add(v.c[c], f->mul(lam.c[r], basis.at(r, c)));
      }
    }
    out.push_back(std::move(v));
  }
  (void)q;
  return out;
}

std::uint64_t lines_in_kernel_dim(std::uint64_t q, std::size_t d) {
  // Lines through <a> inside the projectivized kernel: (q^{d-1} - 1)/(q - 1).
  std::uint64_t num = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) num *= q;
  return (num - 1) / (q - 1);
}

}  // namespace

PointEnum::PointEnum(const Field* f, std::uint32_t n) : field_(f), n_(n) {
  if (n < 1) throw InvalidParameter("dimension must be positive");
  const std::uint64_t q = f->order();
  offset_.resize(n + 1);
  std::uint64_t total = 0;
  // Block of pivot k has q^{n-1-k} points.
  std::vector<std::uint64_t> block(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint64_t b = 1;
    for (std::uint32_t i = 0; i < n - 1 - k; ++i) {
      b *= q;
      if (b > kMaxPoints) throw TooLarge("projective space too large");
    }
    block[k] = b;
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    offset_[k] = total;
    total += block[k];
    if (total > kMaxPoints) throw TooLarge("projective space too large");
  }
  offset_[n] = total;
  count_ = total;
}

Vector PointEnum::point(std::uint64_t idx) const {
  if (idx >= count_) throw InvalidParameter("point index out of range");
  std::uint32_t k = 0;
  while (idx >= offset_[k + 1]) ++k;
  std::uint64_t t = idx - offset_[k];
  const std::uint64_t q = field_->order();
  Vector v(field_, n_);
  v.c[k] = 1;
  for (std::uint32_t i = k + 1; i < n_; ++i) {
    v.c[i] = static_cast<elem_t>(t % q);
    t /= q;
  }
  return v;
}

Vector PointEnum::normalize(const Vector& v) {
  const Field* f = v.field;
  std::size_t k = 0;
  while (k < v.size() && v.c[k] == 0) ++k;
  if (k == v.size()) throw ZeroVector("cannot normalize the zero vector");
  if (v.c[k] == 1) return v;
  const elem_t inv = f->inv(v.c[k]);
  Vector w(f, v.size());
  for (std::size_t i = k; i < v.size(); ++i) w.c[i] = f->mul(inv, v.c[i]);
  return w;
}

std::uint64_t PointEnum::index_of(const Vector& v) const {
  if (v.field != field_ || v.size() != n_) throw Mismatch("bad point vector");
  const Vector w = normalize(v);
  std::uint32_t k = 0;
  while (w.c[k] == 0) ++k;
  const std::uint64_t q = field_->order();
  std::uint64_t t = 0;
  for (std::uint32_t i = n_; i-- > k + 1;) t = t * q + w.c[i];
  return offset_[k] + t;
}

Vector ProjLine::row(const Field* f, std::size_t r) const {
  Vector v(f, n);
  for (std::size_t j = 0; j < n; ++j) v.c[j] = m[r * n + j];
  return v;
}

Mat ProjLine::as_mat(const Field* f) const {
  Mat out(f, 2, n);
  for (std::size_t j = 0; j < 2 * n; ++j) out.at(j / n, j % n) = m[j];
  return out;
}

ProjLine line_through(const Field* f, const Vector& a, const Vector& b) {
  Mat s = linalg::span_rref(f, {a, b}, a.size());
  if (s.rows() != 2) throw InvalidParameter("vectors do not span a line");
  ProjLine l;
  l.n = static_cast<std::uint32_t>(a.size());
  l.m = s.data();
  return l;
}

std::vector<Vector> line_points(const Field* f, const ProjLine& line) {
  const Vector r0 = line.row(f, 0);
  const Vector r1 = line.row(f, 1);
  std::vector<Vector> pts;
  pts.reserve(f->order() + 1);
  pts.push_back(PointEnum::normalize(r0));
  for (std::uint64_t lam = 0; lam < f->order(); ++lam) {
    Vector v = r1 + Elem{f, static_cast<elem_t>(lam)} * r0;
    pts.push_back(PointEnum::normalize(v));
  }
  return pts;
}

ProjLine line_transform(const Field* f, const ProjLine& line, const Mat& M) {
  return line_through(f, M.apply(line.row(f, 0)), M.apply(line.row(f, 1)));
}

bool LineSet::contains(const ProjLine& l) const {
  return std::binary_search(lines.begin(), lines.end(), l);
}

LineSet singular_lines(const TriForm& T, unsigned threads) {
  const Field* f = T.field().get();
  const std::uint32_t n = T.n();
  if (n < 3) throw InvalidParameter("n must be at least 3");
  PointEnum pe(f, n);
  if (threads == 0) threads = default_thread_count();

  std::vector<std::vector<ProjLine>> found(threads);
  parallel_chunks(pe.count(), threads,
                  [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto& local = found[chunk];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Vector a = pe.point(idx);
      const Mat ker = T.contract(a).kernel_basis();
      if (ker.rows() < 2) continue;
      const Vector an = a;  // already normalized by enumeration
      for (const Vector& b : subspace_points(f, ker)) {
        const Vector bn = PointEnum::normalize(b);
        if (bn == an) continue;
        local.push_back(line_through(f, a, bn));
      }
    }
  });

  LineSet out;
  out.n = n;
  out.field = T.field();
  for (auto& part : found) {
    out.lines.insert(out.lines.end(), part.begin(), part.end());
  }
  std::sort(out.lines.begin(), out.lines.end());
  out.lines.erase(std::unique(out.lines.begin(), out.lines.end()),
                  out.lines.end());
  return out;
}

LineSet singular_lines_bruteforce(const TriForm& T) {
  const Field* f = T.field().get();
  const std::uint32_t n = T.n();
  PointEnum pe(f, n);
  std::set<ProjLine> seen;
  std::vector<Vector> basis;
  for (std::uint32_t m = 0; m < n; ++m) basis.push_back(Vector::basis(f, n, m));
  LineSet out;
  out.n = n;
  out.field = T.field();
  for (std::uint64_t ia = 0; ia + 1 < pe.count(); ++ia) {
    const Vector a = pe.point(ia);
    for (std::uint64_t ib = ia + 1; ib < pe.count(); ++ib) {
      const Vector b = pe.point(ib);
      Mat s = linalg::span_rref(f, {a, b}, n);
      if (s.rows() != 2) continue;
      ProjLine line;
      line.n = n;
      line.m = s.data();
      if (!seen.insert(line).second) continue;
      bool singular = true;
      for (std::uint32_t m = 0; m < n && singular; ++m) {
        singular = T.evaluate(a, b, basis[m]).is_zero();
      }
      if (singular) out.lines.push_back(std::move(line));
    }
  }
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

SpreadReport spread_check(const LineSet& L) {
  const Field* f = L.field.get();
  PointEnum pe(f, L.n);
  const std::uint64_t q = f->order();
  std::vector<std::uint32_t> cover(pe.count(), 0);
  for (const ProjLine& line : L.lines) {
    for (const Vector& p : line_points(f, line)) {
      ++cover[pe.index_of(p)];
    }
  }
  SpreadReport rep;
  rep.line_count = L.lines.size();
  rep.coverage_min = pe.count() == 0 ? 0 : cover[0];
  rep.coverage_max = 0;
  for (std::uint32_t c : cover) {
    rep.coverage_min = std::min<std::uint64_t>(rep.coverage_min, c);
    rep.coverage_max = std::max<std::uint64_t>(rep.coverage_max, c);
    if (c == 0) ++rep.uncovered_points;
    ++rep.coverage_histogram[c];
  }
  rep.is_partition = rep.coverage_min == 1 && rep.coverage_max == 1;
  if (rep.is_partition &&
      rep.line_count * (q + 1) != pe.count()) {
    throw InternalInvariantViolation("partition line count inconsistent");
  }
  return rep;
}

bool is_normal_spread(const LineSet& L) {
  const SpreadReport rep = spread_check(L);
  if (!rep.is_partition) throw NotASpread("line set is not a spread");
  const Field* f = L.field.get();
  const std::uint32_t n = L.n;
  PointEnum pe(f, n);
  const std::uint64_t q = f->order();

  // Unique spread line through every point.
  std::vector<std::uint32_t> line_of(pe.count(), 0);
  for (std::size_t li = 0; li < L.lines.size(); ++li) {
    for (const Vector& p : line_points(f, L.lines[li])) {
      line_of[pe.index_of(p)] = static_cast<std::uint32_t>(li);
    }
  }

  const std::uint64_t want = q * q + 1;
  std::set<std::vector<elem_t>> solids_done;
  for (std::size_t i = 0; i < L.lines.size(); ++i) {
    const Vector a0 = L.lines[i].row(f, 0);
    const Vector a1 = L.lines[i].row(f, 1);
    for (std::size_t j = i + 1; j < L.lines.size(); ++j) {
      Mat solid = linalg::span_rref(
          f, {a0, a1, L.lines[j].row(f, 0), L.lines[j].row(f, 1)}, n);
      if (solid.rows() != 4) {
        throw InternalInvariantViolation("spread lines are not disjoint");
      }
      if (!solids_done.insert(solid.data()).second) continue;
      std::vector<std::size_t> pivots;
      {
        Mat tmp = solid;
        tmp.rref(&pivots);
      }
      std::set<std::uint32_t> inside;
      for (const Vector& p : subspace_points(f, solid)) {
        const std::uint32_t li = line_of[pe.index_of(p)];
        if (!inside.insert(li).second) continue;
        if (!solid.row_space_contains(L.lines[li].row(f, 0), pivots) ||
            !solid.row_space_contains(L.lines[li].row(f, 1), pivots)) {
          return false;
        }
      }
      if (inside.size() != want) return false;
    }
  }
  return true;
}

std::uint64_t min_coverage(const TriForm& T) {
  const Field* f = T.field().get();
  PointEnum pe(f, T.n());
  const std::uint64_t q = f->order();
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t idx = 0; idx < pe.count(); ++idx) {
    const Mat ker = T.contract(pe.point(idx)).kernel_basis();
    if (ker.rows() < 1) {
      throw InternalInvariantViolation("point missing from its own kernel");
    }
    best = std::min(best, lines_in_kernel_dim(q, ker.rows()));
    if (best == 0) break;
  }
  return best;
}

namespace {

struct TsSearch {
  const TriForm& T;
  const Field* f;
  PointEnum pe;
  std::uint32_t r;
  std::uint64_t budget;
  TsSearchResult res;

  TsSearch(const TriForm& t, std::uint32_t rr, std::uint64_t b)
      : T(t), f(t.field().get()), pe(f, t.n()), r(rr), budget(b) {}

  // Minimal point index of span(basis + v) outside span(basis); the canonical
  // generating sequence of a subspace picks exactly these.
  bool is_canonical_extension(const std::vector<Vector>& basis,
                              const Vector& v, std::uint64_t v_idx) {
    std::vector<Vector> all = basis;
    all.push_back(v);
    Mat old_span = linalg::span_rref(f, basis, T.n());
    std::vector<std::size_t> old_pivots;
    {
      Mat tmp = old_span;
      tmp.rref(&old_pivots);
    }
    Mat new_span = linalg::span_rref(f, all, T.n());
    std::uint64_t min_idx = UINT64_MAX;
    for (const Vector& p : subspace_points(f, new_span)) {
      if (!basis.empty() && old_span.row_space_contains(p, old_pivots)) continue;
      min_idx = std::min(min_idx, pe.index_of(p));
    }
    return min_idx == v_idx;
  }

  // K holds an RREF row basis of the intersection of ker contract(T, b) over
  // the current basis vectors b (the whole space at the root).
  void dfs(std::vector<Vector>& basis, std::uint64_t last_idx, const Mat& K) {
    if (res.nodes++ >= budget) {
      res.complete = false;
      return;
    }
    if (basis.size() == r) {
      res.subspaces.push_back(linalg::span_rref(f, basis, T.n()));
      return;
    }
    if (K.rows() < r) return;

    std::vector<std::pair<std::uint64_t, Vector>> cands;
    Mat span;
    std::vector<std::size_t> span_pivots;
    if (!basis.empty()) {
      span = linalg::span_rref(f, basis, T.n());
      Mat tmp = span;
      tmp.rref(&span_pivots);
    }
    for (const Vector& w : subspace_points(f, K)) {
      const Vector v = PointEnum::normalize(w);
      const std::uint64_t idx = pe.index_of(v);
      if (!basis.empty() && idx <= last_idx) continue;
      if (!basis.empty() && span.row_space_contains(v, span_pivots)) continue;
      cands.emplace_back(idx, v);
    }
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, v] : cands) {
      if (!res.complete) return;
      if (!is_canonical_extension(basis, v, idx)) continue;
      // Intersect K with ker contract(T, v).
      const Mat B = T.contract(v);
      const Mat M = B * K.transpose();             // n x d
      const Mat coeff = M.kernel_basis();          // e x d
      Mat K2(f, coeff.rows(), T.n());
      for (std::size_t a = 0; a < coeff.rows(); ++a) {
        for (std::size_t c = 0; c < T.n(); ++c) {
          elem_t s = 0;
          for (std::size_t b = 0; b < K.rows(); ++b) {
            s = f->add(s, f->mul(coeff.at(a, b), K.at(b, c)));
          }
          K2.at(a, c) = s;
        }
      }
      K2.rref();
      basis.push_back(v);
      dfs(basis, idx, K2);
      basis.pop_back();
    }
  }
};

}  // namespace

TsSearchResult totally_singular_search(const TriForm& T, std::uint32_t r,
                                       std::uint64_t budget) {
  if (r > T.n()) throw InvalidParameter("r exceeds the ambient dimension");
  TsSearch s(T, r, budget);
  if (r == 0) return std::move(s.res);
  std::vector<Vector> basis;
  s.dfs(basis, 0, Mat::identity(s.f, T.n()));
  std::sort(s.res.subspaces.begin(), s.res.subspaces.end(),
            [](const Mat& a, const Mat& b) { return a.data() < b.data(); });
  return std::move(s.res);
}

bool is_totally_singular(const TriForm& T, const Mat& basis) {
  const Field* f = T.field().get();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    const Vector a = basis.row(i);
    if (a.is_zero()) throw ZeroVector("zero basis row");
    const Mat B = T.contract(a);
    for (std::size_t j = i + 1; j < basis.rows(); ++j) {
      if (!B.apply(basis.row(j)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace trisect::geometry
