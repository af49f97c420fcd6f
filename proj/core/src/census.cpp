#include "trisect/census.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "trisect/errors.hpp"
#include "trisect/geometry.hpp"
#include "trisect/hypersurface.hpp"

namespace trisect::census {

using gf::Elem;
using gf::Field;
using gf::elem_t;
using linalg::Vector;

namespace {

constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 24;

std::vector<std::array<std::uint32_t, 3>> sorted_triples(std::uint32_t n) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

elem_t det3(const Field* f, const Mat& A, const std::array<std::uint32_t, 3>& r,
            const std::array<std::uint32_t, 3>& c) {
  const elem_t a = A.at(r[0], c[0]), b = A.at(r[0], c[1]), cc = A.at(r[0], c[2]);
  const elem_t d = A.at(r[1], c[0]), e = A.at(r[1], c[1]), g = A.at(r[1], c[2]);
  const elem_t h = A.at(r[2], c[0]), i = A.at(r[2], c[1]), j = A.at(r[2], c[2]);
  elem_t s = f->mul(a, f->sub(f->mul(e, j), f->mul(g, i)));
  s = f->sub(s, f->mul(b, f->sub(f->mul(d, j), f->mul(g, h))));
  return f->add(s, f->mul(cc, f->sub(f->mul(d, i), f->mul(e, h))));
}

/// M[t][s] = det A[rows s, cols t]: the coefficient map of T -> T(A., A., A.).
Mat wedge3_action(const Field* f, const Mat& A,
                  const std::vector<std::array<std::uint32_t, 3>>& triples) {
  const std::size_t m = triples.size();
  Mat M(f, m, m);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t s = 0; s < m; ++s)
      M.at(t, s) = det3(f, A, triples[s], triples[t]);
  return M;
}

std::uint64_t pack_vector(const Vector& v, std::uint64_t q) {
  std::uint64_t out = 0;
  for (std::size_t i = v.size(); i-- > 0;) out = out * q + v.c[i];
  return out;
}

}  // namespace

BigInt gl_order(std::uint32_t n, std::uint64_t q) {
  if (n == 0 || q < 2) throw InvalidParameter("gl_order needs n >= 1, q >= 2");
  BigInt qi = 1;
  BigInt out = 1;
  BigInt qn = boost::multiprecision::pow(BigInt(q), n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

OrbitRatio orbit_ratio(std::uint32_t n, std::uint64_t q) {
  if (n < 3) throw InvalidParameter("orbit_ratio needs n >= 3");
  const std::uint64_t m =
      std::uint64_t(n) * (n - 1) * (n - 2) / 6;
  BigRat r(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m)),
           gl_order(n, q));
  OrbitRatio out;
  out.numerator = boost::multiprecision::numerator(r);
  out.denominator = boost::multiprecision::denominator(r);
  out.approx = static_cast<double>(r);
  return out;
}

std::vector<Mat> default_gl_generators(std::uint32_t n, const FieldPtr& field) {
  const Field* f = field.get();
  std::vector<Mat> gens;
  Mat t = Mat::identity(f, n);
  t.at(0, 1) = 1;
  gens.push_back(t);
  Mat p(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) p.at((i + 1) % n, i) = 1;
  gens.push_back(p);
  if (f->order() > 2) {
    Mat d = Mat::identity(f, n);
    d.at(0, 0) = f->primitive_element().v;
    gens.push_back(d);
  }
  return gens;
}

bool generators_span_gl(const std::vector<Mat>& gens, std::uint32_t n,
                        const FieldPtr& field) {
  const Field* f = field.get();
  const std::uint64_t q = f->order();
  const BigInt target = gl_order(n, q);
  if (target > 5'000'000) throw TooLarge("frame orbit too large to enumerate");

  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= q;
  // Frames are packed n vectors; the action on frames is free, so the orbit
  // of the standard frame has exactly the order of the generated group.
  std::uint32_t bits = 0;
  while ((std::uint64_t{1} << bits) < qn) ++bits;
  if (bits * n > 63) throw TooLarge("frame encoding exceeds 64 bits");

  auto encode = [&](const std::vector<Vector>& fr) {
    std::uint64_t key = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      key = (key << bits) | pack_vector(fr[i], q);
    }
    return key;
  };

  std::vector<Vector> start;
  for (std::uint32_t i = 0; i < n; ++i) start.push_back(Vector::basis(f, n, i));

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::vector<Vector>> frontier{start};
  seen.insert(encode(start));
  while (!frontier.empty()) {
    std::vector<std::vector<Vector>> next;
    for (const auto& fr : frontier) {
      for (const Mat& A : gens) {
        std::vector<Vector> img;
        img.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) img.push_back(A.apply(fr[i]));
        if (seen.insert(encode(img)).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return BigInt(seen.size()) == target;
}

OrbitPartition orbit_partition(std::uint32_t n, const FieldPtr& field,
                               std::optional<std::vector<Mat>> generators) {
  if (n < 3) throw InvalidParameter("orbit_partition needs n >= 3");
  const Field* f = field.get();
  const std::uint64_t q = f->order();
  const auto triples = sorted_triples(n);
  const std::size_t m = triples.size();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > kMaxStates / q) throw TooLarge("q^C(n,3) exceeds the state cap");
    total *= q;
  }

  const std::vector<Mat> gens =
      generators ? std::move(*generators) : default_gl_generators(n, field);
  for (const Mat& A : gens) {
    if (A.rows() != n || A.cols() != n || A.rank() != n) {
      throw InvalidParameter("generators must be invertible n x n matrices");
    }
  }

  std::vector<Mat> actions;
  actions.reserve(gens.size());
  for (const Mat& A : gens) actions.push_back(wedge3_action(f, A, triples));

  // q = 2: a state is a bitmask and each output bit is a masked parity.
  const bool binary = q == 2;
  std::vector<std::vector<std::uint32_t>> bitmasks;
  if (binary) {
    for (const Mat& M : actions) {
      std::vector<std::uint32_t> rows(m, 0);
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < m; ++s)
          if (M.at(t, s)) rows[t] |= std::uint32_t{1} << s;
      bitmasks.push_back(std::move(rows));
    }
  }

  auto apply_action = [&](std::size_t g, std::uint64_t idx) -> std::uint64_t {
    if (binary) {
      std::uint64_t out = 0;
      const auto& rows = bitmasks[g];
      for (std::size_t t = 0; t < m; ++t) {
        out |= std::uint64_t(__builtin_popcountll(idx & rows[t]) & 1) << t;
      }
      return out;
    }
    std::vector<elem_t> digits(m);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < m; ++i) {
      digits[i] = static_cast<elem_t>(rest % q);
      rest /= q;
    }
    const Mat& M = actions[g];
    std::uint64_t out = 0;
    for (std::size_t t = m; t-- > 0;) {
      elem_t acc = 0;
      for (std::size_t s = 0; s < m; ++s) {
        if (digits[s] != 0 && M.at(t, s) != 0)
          acc = f->add(acc, f->mul(M.at(t, s), digits[s]));
      }
      out = out * q + acc;
    }
    return out;
  };

  OrbitPartition part;
  part.n = n;
  part.field = field;
  part.num_coords = static_cast<std::uint32_t>(m);
  part.total = total;
  part.orbit_of.assign(total, UINT32_MAX);

  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (part.orbit_of[start] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(part.orbits.size());
    part.orbit_of[start] = id;
    queue.clear();
    queue.push_back(start);
    std::uint64_t size = 0;
    while (!queue.empty()) {
      const std::uint64_t cur = queue.back();
      queue.pop_back();
      ++size;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::uint64_t img = apply_action(g, cur);
        if (part.orbit_of[img] == UINT32_MAX) {
          part.orbit_of[img] = id;
          queue.push_back(img);
        }
      }
    }
    part.orbits.push_back(Orbit{start, size});
  }
  return part;
}

TriForm form_from_index(std::uint64_t idx, std::uint32_t n,
                        const FieldPtr& field) {
  const auto triples = sorted_triples(n);
  const std::uint64_t q = field->order();
  TriForm T(n, field);
  for (const auto& t : triples) {
    const auto digit = static_cast<elem_t>(idx % q);
    idx /= q;
    if (digit != 0)
      T.set(t[0] + 1, t[1] + 1, t[2] + 1, Elem{field.get(), digit});
  }
  if (idx != 0) throw InvalidParameter("index out of range for (n, q)");
  return T;
}

std::uint64_t index_of_form(const TriForm& T) {
  const auto triples = sorted_triples(T.n());
  const std::uint64_t q = T.field()->order();
  std::uint64_t out = 0;
  for (std::size_t i = triples.size(); i-- > 0;) {
    const auto& t = triples[i];
    out = out * q + T.coeff(t[0] + 1, t[1] + 1, t[2] + 1).v;
  }
  return out;
}

Fingerprint fingerprint(const TriForm& T, std::uint64_t ts_budget) {
  Fingerprint fp;
  fp.radical_dim = static_cast<std::uint32_t>(T.radical().rows());

  const geometry::LineSet L = geometry::singular_lines(T);
  fp.line_count = L.lines.size();
  const geometry::SpreadReport rep = geometry::spread_check(L);
  fp.coverage_min = rep.coverage_min;
  fp.coverage_max = rep.coverage_max;

  fp.ts_max_dim = 1;  // every point is trivially totally singular
  for (std::uint32_t r = 2; r <= T.n(); ++r) {
    const auto res = geometry::totally_singular_search(T, r, ts_budget);
    if (!res.complete) fp.ts_exact = false;
    if (res.subspaces.empty()) {
      if (res.complete) break;
      break;  // inconclusive beyond here; ts_exact already cleared
    }
    fp.ts_max_dim = r;
    if (!res.complete) break;
  }

  if (T.n() % 2 == 1) {
    fp.union_kind = hypersurface::to_string(hypersurface::classify_union(T).kind);
  }
  return fp;
}

namespace {

// Dense GF(2) rows as bitmasks.
std::uint32_t gf2_rank(std::vector<std::uint64_t> rows) {
  std::uint32_t rank = 0;
  for (std::uint32_t bit = 0; bit < 64; ++bit) {
    std::size_t piv = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r] >> bit & 1) {
        piv = r;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
    }
    ++rank;
    if (rank == rows.size()) break;
  }
  return rank;
}

std::uint32_t gf2_det3(const std::vector<std::uint64_t>& rows,
                       const std::array<std::uint32_t, 3>& r,
                       const std::array<std::uint32_t, 3>& c) {
  std::uint32_t bits[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) bits[i][j] = rows[r[i]] >> c[j] & 1;
  return (bits[0][0] & ((bits[1][1] & bits[2][2]) ^ (bits[1][2] & bits[2][1]))) ^
         (bits[0][1] & ((bits[1][0] & bits[2][2]) ^ (bits[1][2] & bits[2][0]))) ^
         (bits[0][2] & ((bits[1][0] & bits[2][1]) ^ (bits[1][1] & bits[2][0])));
}

// Dimension of the trivectors fixed by A (rows = GF(2) bitmask rows of A).
std::uint32_t gf2_fix_dim(const std::vector<std::uint64_t>& rows,
                          const std::vector<std::array<std::uint32_t, 3>>& triples) {
  const std::size_t m = triples.size();
  std::vector<std::uint64_t> dm(m, 0);
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t s = 0; s < m; ++s) {
      if (gf2_det3(rows, triples[s], triples[t])) dm[t] |= std::uint64_t{1} << s;
    }
    dm[t] ^= std::uint64_t{1} << t;  // D - I
  }
  return static_cast<std::uint32_t>(m) - gf2_rank(std::move(dm));
}

}  // namespace

std::uint64_t burnside_orbit_count_gf2(std::uint32_t n) {
  if (n < 3 || n > 4) {
    throw TooLarge("exact Burnside enumeration supports n = 3 or 4 only");
  }
  const auto triples = sorted_triples(n);
  std::uint64_t fix_sum = 0;
  std::uint64_t group = 0;
  const std::uint64_t cells = std::uint64_t(n) * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::uint64_t> rows(n);
    for (std::uint32_t r = 0; r < n; ++r) {
      rows[r] = mask >> (r * n) & ((std::uint64_t{1} << n) - 1);
    }
    if (gf2_rank(rows) != n) continue;
    ++group;
    fix_sum += std::uint64_t{1} << gf2_fix_dim(rows, triples);
  }
  if (fix_sum % group != 0) {
    throw InternalInvariantViolation("Burnside sum not divisible by |GL|");
  }
  return fix_sum / group;
}

double burnside_estimate_gf2(std::uint32_t n, std::uint64_t samples,
                             std::uint64_t seed) {
  if (n < 3 || n > 8) throw InvalidParameter("estimate supports 3 <= n <= 8");
  const auto triples = sorted_triples(n);
  std::mt19937_64 rng(seed);
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  double sum = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<std::uint64_t> rows(n);
    do {
      for (std::uint32_t r = 0; r < n; ++r) rows[r] = rng() & row_mask;
    } while (gf2_rank(rows) != n);
    sum += std::pow(2.0, gf2_fix_dim(rows, triples));
  }
  return sum / static_cast<double>(samples);
}

}  // namespace trisect::census
