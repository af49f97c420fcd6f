#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "trisect/forms.hpp"
#include "trisect/gf.hpp"
#include "trisect/linalg.hpp"

namespace trisect::geometry {

using forms::TriForm;
using gf::Elem;
using gf::Field;
using gf::FieldPtr;
using gf::elem_t;
using linalg::Mat;
using linalg::Vector;

/// Deterministic enumeration of the points of PG(n-1, q). Point i is a
/// normalized representative (first nonzero coordinate 1); the order is
/// stable across runs: by pivot position, then by the trailing coordinates
/// read as a little-endian base-q counter.
class PointEnum {
 public:
  PointEnum(const Field* f, std::uint32_t n);

  std::uint64_t count() const { return count_; }
  std::uint32_t n() const { return n_; }
  const Field* field() const { return field_; }

  Vector point(std::uint64_t idx) const;
  std::uint64_t index_of(const Vector& v) const;
  static Vector normalize(const Vector& v);

 private:
  const Field* field_;
  std::uint32_t n_;
  std::uint64_t count_;
  std::vector<std::uint64_t> offset_;  // first index of each pivot block
};

/// Projective line as a canonical 2 x n RREF matrix, flattened row-major.
struct ProjLine {
  std::uint32_t n = 0;
  std::vector<elem_t> m;  // 2*n entries

  Vector row(const Field* f, std::size_t r) const;
  Mat as_mat(const Field* f) const;

  friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.m < b.m; }
  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.m == b.m; }
};

/// Canonical line through two independent vectors.
ProjLine line_through(const Field* f, const Vector& a, const Vector& b);
/// The q+1 projective points of a line, normalized representatives.
std::vector<Vector> line_points(const Field* f, const ProjLine& line);
/// Image of a line under the invertible matrix M (applied to points).
ProjLine line_transform(const Field* f, const ProjLine& line, const Mat& M);

/// Sorted, deduplicated set of lines of PG(n-1, q).
struct LineSet {
  std::uint32_t n = 0;
  FieldPtr field;
  std::vector<ProjLine> lines;

  bool contains(const ProjLine& l) const;
};

struct SpreadReport {
  std::uint64_t line_count = 0;
  std::uint64_t coverage_min = 0;
  std::uint64_t coverage_max = 0;
  std::uint64_t uncovered_points = 0;
  bool is_partition = false;
  std::optional<bool> is_normal;
  std::map<std::uint64_t, std::uint64_t> coverage_histogram;
};

/// The set of T-singular lines, via per-point contraction kernels.
LineSet singular_lines(const TriForm& T, unsigned threads = 0);
/// Independent oracle: filter all lines of PG(n-1, q) by direct evaluation
/// T(a, b, e_m) = 0. Slow; kept for cross-checks.
LineSet singular_lines_bruteforce(const TriForm& T);

/// Per-point incidence statistics of a line set.
SpreadReport spread_check(const LineSet& L);

/// Normality (geometric) criterion: every solid spanned by two lines of the
/// spread is partitioned by members of the spread. Requires a partition.
bool is_normal_spread(const LineSet& L);

/// Minimum over points of the number of singular lines through the point.
std::uint64_t min_coverage(const TriForm& T);

struct TsSearchResult {
  std::vector<Mat> subspaces;  // r x n RREF bases
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// All r-dimensional totally T-singular subspaces, by canonical DFS over
/// contraction-kernel intersections. Exact when complete; partial when the
/// node budget is exhausted.
TsSearchResult totally_singular_search(const TriForm& T, std::uint32_t r,
                                       std::uint64_t budget = 1'000'000);

/// True iff every line of the projective subspace spanned by the rows of
/// basis is T-singular.
bool is_totally_singular(const TriForm& T, const Mat& basis);

}  // namespace trisect::geometry
