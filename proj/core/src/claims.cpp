#include "trisect/claims.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "trisect/census.hpp"
#include "trisect/crossalg.hpp"
#include "trisect/errors.hpp"
#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"
#include "trisect/hypersurface.hpp"
#include "trisect/linalg.hpp"

namespace trisect::claims {

using forms::TriForm;
using gf::Elem;
using gf::Field;
using gf::FieldPtr;
using gf::elem_t;
using linalg::Mat;
using linalg::Vector;

namespace {

constexpr double kRatioTolerance = 0.02;
constexpr std::uint64_t kCoverageForms = 1000;
constexpr std::uint64_t kCrossSamples = 10'000;
constexpr std::uint64_t kSeed = 0x7215ec1fULL;

FieldPtr field_of_order(std::uint64_t q) {
  const auto [p, h] = gf::factor_prime_power(q);
  return Field::prime_power(p, h);
}

std::uint64_t spread_size(std::uint64_t q) { return q * q * q * q + q * q + 1; }

struct Check {
  bool ok = true;
  bool ran = false;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    ran = true;
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

ClaimResult finish(int id, const std::string& name, Check& c) {
  ClaimResult r;
  r.id = id;
  r.name = name;
  if (!c.ran) {
    r.skipped = true;
    r.passed = true;
    r.detail = "skipped (q bound)";
    return r;
  }
  r.passed = c.ok;
  r.detail = c.ok ? "ok" : c.detail.str();
  return r;
}

bool normal_spread_ok(const TriForm& T, std::uint64_t q, unsigned threads,
                      Check& c, const std::string& tag) {
  const auto L = geometry::singular_lines(T, threads);
  const auto rep = geometry::spread_check(L);
  c.expect(L.lines.size() == spread_size(q),
           tag + ": expected " + std::to_string(spread_size(q)) + " lines, got " +
               std::to_string(L.lines.size()));
  c.expect(rep.is_partition, tag + ": not a partition");
  if (!rep.is_partition) return false;
  const bool normal = geometry::is_normal_spread(L);
  c.expect(normal, tag + ": spread is not normal");
  return normal;
}

TriForm random_form(std::uint32_t n, const FieldPtr& f, std::mt19937_64& rng) {
  TriForm T(n, f);
  std::uniform_int_distribution<std::uint32_t> dist(
      0, static_cast<std::uint32_t>(f->order() - 1));
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j)
      for (std::uint32_t k = j + 1; k <= n; ++k) {
        const elem_t v = dist(rng);
        if (v != 0) T.set(i, j, k, Elem{f.get(), v});
      }
  return T;
}

}  // namespace

std::vector<ClaimResult> run_all(const Options& opts) {
  auto within = [&](std::uint64_t q) { return opts.q_max == 0 || q <= opts.q_max; };
  std::vector<ClaimResult> out;

  {  // 1: odd q spread family, all non-square mu.
    Check c;
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      for (elem_t mu = 1; mu < q; ++mu) {
        if (f->is_square(mu)) continue;
        const TriForm T = forms::make_spread_odd(f, Elem{f.get(), mu}, true);
        normal_spread_ok(T, q, opts.threads, c,
                         "q=" + std::to_string(q) + " mu=" + std::to_string(mu));
      }
    }
    out.push_back(finish(1, "odd-q family gives normal line-spreads", c));
  }

  {  // 2: even q spread family.
    Check c;
    for (std::uint64_t q : {2ull, 8ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      const TriForm T = forms::make_spread_even(f, std::nullopt, true);
      normal_spread_ok(T, q, opts.threads, c, "q=" + std::to_string(q));
    }
    if (within(4)) {
      const FieldPtr f = field_of_order(4);
      for (elem_t mu = 1; mu < 4; ++mu) {
        if (f->abs_trace(mu) != 1) continue;
        const TriForm T = forms::make_spread_even(f, Elem{f.get(), mu}, true);
        normal_spread_ok(T, 4, opts.threads, c, "q=4 mu=" + std::to_string(mu));
      }
    }
    out.push_back(finish(2, "even-q family gives normal line-spreads", c));
  }

  {  // 3: negative controls.
    Check c;
    if (within(3)) {
      const FieldPtr f = field_of_order(3);
      const TriForm T = forms::make_spread_odd(f, f->one(), false);  // 1 is square
      const auto rep = geometry::spread_check(geometry::singular_lines(T, opts.threads));
      c.expect(!rep.is_partition, "q=3 mu=1 unexpectedly gives a partition");
    }
    for (std::uint64_t q : {2ull, 4ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      const TriForm T = forms::make_spread_odd(f, f->one(), false);
      const auto rep = geometry::spread_check(geometry::singular_lines(T, opts.threads));
      c.expect(!rep.is_partition,
               "q=" + std::to_string(q) + " mu=1 unexpectedly gives a partition");
      Mat plane(f.get(), 3, 6);
      for (std::size_t i = 0; i < 3; ++i) {
        plane.at(i, i) = 1;
        plane.at(i, i + 3) = 1;
      }
      c.expect(geometry::is_totally_singular(T, plane),
               "q=" + std::to_string(q) +
                   " mu=1: plane <e1+e4,e2+e5,e3+e6> is not totally singular");
    }
    out.push_back(finish(3, "square / trace-zero mu fail as expected", c));
  }

  {  // 4: the two alternate even-q forms.
    Check c;
    for (std::uint64_t q : {2ull, 8ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      for (const char* name : {"t_prime", "t_double_prime"}) {
        const TriForm T = forms::catalog(name, f);
        normal_spread_ok(T, q, opts.threads, c,
                         std::string(name) + " q=" + std::to_string(q));
      }
    }
    out.push_back(finish(4, "alternate even-q forms give normal spreads", c));
  }

  {  // 5: union classification of the seven-term form.
    Check c;
    for (std::uint64_t q : {2ull, 4ull, 8ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      const auto cls = hypersurface::classify_union(forms::catalog("fano7", f));
      const std::string tag = "q=" + std::to_string(q);
      c.expect(cls.kind == hypersurface::UnionKind::HYPERPLANE,
               tag + ": expected HYPERPLANE, got " + to_string(cls.kind));
      if (cls.kind == hypersurface::UnionKind::HYPERPLANE) {
        bool all_one = cls.fitted.size() == 1 && cls.fitted[0].coeffs.size() == 7;
        if (all_one) {
          for (const auto& [mono, coef] : cls.fitted[0].coeffs) {
            all_one = all_one && coef == 1;
          }
        }
        c.expect(all_one, tag + ": hyperplane is not x1+...+x7 = 0");
      }
    }
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      const auto cls = hypersurface::classify_union(forms::catalog("fano7", f));
      const std::string tag = "q=" + std::to_string(q);
      c.expect(cls.kind == hypersurface::UnionKind::QUADRIC,
               tag + ": expected QUADRIC, got " + to_string(cls.kind));
      if (cls.kind == hypersurface::UnionKind::QUADRIC) {
        c.expect(cls.quadric_rank && *cls.quadric_rank == 7,
                 tag + ": quadric rank is not 7");
        bool sum_of_squares = cls.fitted.size() == 1 && cls.fitted[0].coeffs.size() == 7;
        if (sum_of_squares) {
          for (const auto& [mono, coef] : cls.fitted[0].coeffs) {
            const bool pure_square =
                *std::max_element(mono.begin(), mono.end()) == 2;
            sum_of_squares = sum_of_squares && pure_square && coef == 1;
          }
        }
        c.expect(sum_of_squares, tag + ": quadric is not x1^2+...+x7^2 = 0");
      }
    }
    out.push_back(finish(5, "seven-term form union is hyperplane / quadric", c));
  }

  {  // 6: every point lies on a singular line (random even-dimensional forms).
    Check c;
    for (std::uint64_t q : {2ull, 3ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      for (std::uint32_t n : {4u, 6u}) {
        std::mt19937_64 rng(kSeed ^ (q * 100 + n));
        for (std::uint64_t s = 0; s < kCoverageForms; ++s) {
          const TriForm T = random_form(n, f, rng);
          if (geometry::min_coverage(T) < 1) {
            c.expect(false, "uncovered point: n=" + std::to_string(n) +
                                " q=" + std::to_string(q) +
                                " sample=" + std::to_string(s));
            break;
          }
        }
        c.expect(true, "");
      }
    }
    out.push_back(finish(6, "random forms cover every point with a line", c));
  }

  {  // 7: the totally singular examples.
    Check c;
    for (std::uint64_t q : {2ull, 3ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      const TriForm T = forms::catalog("ts6", f);
      const auto r3 = geometry::totally_singular_search(T, 3);
      const std::string tag = "ts6 q=" + std::to_string(q);
      c.expect(r3.complete, tag + ": 3-space search hit the budget");
      Mat e123(f.get(), 3, 6);
      for (std::size_t i = 0; i < 3; ++i) e123.at(i, i) = 1;
      c.expect(r3.subspaces.size() == 1 && r3.subspaces[0] == e123,
               tag + ": 3-space is not unique <e1,e2,e3>");
      const auto r4 = geometry::totally_singular_search(T, 4);
      c.expect(r4.complete && r4.subspaces.empty(),
               tag + ": unexpected totally singular 4-space");
    }
    if (within(2)) {
      const FieldPtr f = field_of_order(2);
      const TriForm T = forms::catalog("ts10", f);
      Mat e16(f.get(), 6, 10);
      for (std::size_t i = 0; i < 6; ++i) e16.at(i, i) = 1;
      c.expect(geometry::is_totally_singular(T, e16),
               "ts10: <e1..e6> is not totally singular");
      c.expect(T.radical().rows() == 0, "ts10: radical is nonzero");
      // Local maximality: no 7-space containing <e1..e6> is totally singular.
      geometry::PointEnum pe(f.get(), 10);
      std::vector<std::size_t> pivots{0, 1, 2, 3, 4, 5};
      bool extendable = false;
      for (std::uint64_t idx = 0; idx < pe.count(); ++idx) {
        const Vector v = pe.point(idx);
        if (e16.row_space_contains(v, pivots)) continue;
        Mat ext(f.get(), 7, 10);
        for (std::size_t i = 0; i < 6; ++i) ext.at(i, i) = 1;
        ext.set_row(6, v);
        if (geometry::is_totally_singular(T, ext)) {
          extendable = true;
          break;
        }
      }
      c.expect(!extendable, "ts10: <e1..e6> extends to a totally singular 7-space");
    }
    out.push_back(finish(7, "totally singular example subspaces", c));
  }

  {  // 8: orbit-count lower-bound ratios over GF(2).
    Check c;
    const double expected[] = {0.00010, 0.000053, 0.00021, 0.0135,
                               27.6,    3.6e6,    6.1e13};
    const int sig_figs[] = {2, 2, 2, 3, 3, 2, 2};
    for (std::uint32_t n = 5; n <= 11; ++n) {
      const double want = expected[n - 5];
      const double got = census::orbit_ratio(n, 2).approx;
      const bool close = std::abs(got - want) <= kRatioTolerance * want;
      // The reference values carry 2-3 significant figures, so a value can
      // be exactly right yet sit just past the relative tolerance; accept it
      // when it reproduces the reference after rounding to that precision.
      const double mag =
          std::pow(10.0, std::floor(std::log10(got)) - (sig_figs[n - 5] - 1));
      const bool rounds_to = std::abs(std::round(got / mag) * mag - want) <
                             1e-9 * want;
      c.expect(close || rounds_to,
               "n=" + std::to_string(n) + ": ratio " + std::to_string(got) +
                   " vs " + std::to_string(want));
    }
    out.push_back(finish(8, "orbit ratio table over GF(2)", c));
  }

  {  // 9: singular-line oracle equivalence on the catalog.
    Check c;
    for (std::uint64_t q : {2ull, 3ull}) {
      if (!within(q)) continue;
      const FieldPtr f = field_of_order(q);
      std::vector<std::pair<std::string, TriForm>> cases;
      cases.emplace_back("fano7", forms::catalog("fano7", f));
      cases.emplace_back("ts6", forms::catalog("ts6", f));
      cases.emplace_back("t_prime", forms::catalog("t_prime", f));
      cases.emplace_back("t_double_prime", forms::catalog("t_double_prime", f));
      if (q == 2) {
        cases.emplace_back("spread_even_hodd", forms::catalog("spread_even_hodd", f));
      } else {
        cases.emplace_back("spread_odd",
                           forms::catalog("spread_odd", f, Elem{f.get(), 2}));
      }
      for (const auto& [name, T] : cases) {
        const auto fast = geometry::singular_lines(T, opts.threads);
        const auto slow = geometry::singular_lines_bruteforce(T);
        c.expect(fast.lines == slow.lines,
                 name + " q=" + std::to_string(q) + ": oracle mismatch");
      }
    }
    out.push_back(finish(9, "kernel-based lines equal brute-force lines", c));
  }

  {  // 10: orbit BFS consistency at (5,2) and (6,2).
    Check c;
    if (within(2)) {
      for (std::uint32_t n : {5u, 6u}) {
        const FieldPtr f = field_of_order(2);
        const auto part = census::orbit_partition(n, f);
        const std::string tag = "n=" + std::to_string(n);
        std::uint64_t sum = 0;
        bool divides = true;
        const census::BigInt gl = census::gl_order(n, 2);
        for (const auto& o : part.orbits) {
          sum += o.size;
          if (gl % o.size != 0) divides = false;
        }
        c.expect(sum == part.total, tag + ": orbit sizes do not sum to q^C(n,3)");
        c.expect(divides, tag + ": an orbit size does not divide |GL|");

        // Two members per orbit must share the invariant fingerprint.
        std::vector<std::uint64_t> first(part.orbits.size(), UINT64_MAX);
        std::vector<std::uint64_t> second(part.orbits.size(), UINT64_MAX);
        for (std::uint64_t idx = 0; idx < part.total; ++idx) {
          const std::uint32_t o = part.orbit_of[idx];
          if (first[o] == UINT64_MAX) {
            first[o] = idx;
          } else if (second[o] == UINT64_MAX) {
            second[o] = idx;
          }
        }
        for (std::size_t o = 0; o < part.orbits.size(); ++o) {
          if (second[o] == UINT64_MAX) continue;
          const auto fa = census::fingerprint(census::form_from_index(first[o], n, f));
          const auto fb = census::fingerprint(census::form_from_index(second[o], n, f));
          c.expect(fa == fb, tag + ": fingerprint differs inside orbit " +
                                 std::to_string(o));
        }
      }
    }
    out.push_back(finish(10, "orbit BFS sums, divisibility, fingerprints", c));
  }

  {  // 11: the rational cross-product algebra.
    Check c;
    constexpr int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                 {1, 5, 6}, {2, 6, 7}, {1, 3, 7}};
    auto unit = [](int i) {
      crossalg::Vec7 v{};
      v[i - 1] = 1;
      return v;
    };
    for (const auto& t : lines) {
      const auto rotations = {std::array<int, 3>{t[0], t[1], t[2]},
                              std::array<int, 3>{t[1], t[2], t[0]},
                              std::array<int, 3>{t[2], t[0], t[1]}};
      for (const auto& r : rotations) {
        c.expect(crossalg::cross(unit(r[0]), unit(r[1])) == unit(r[2]),
                 "e" + std::to_string(r[0]) + " x e" + std::to_string(r[1]) +
                     " != e" + std::to_string(r[2]));
      }
    }
    const auto rep = crossalg::verify_cross_algebra(kCrossSamples, kSeed);
    c.expect(rep.orthogonality_ok, "orthogonality failed");
    c.expect(rep.norm_identity_ok, "norm identity failed");
    c.expect(rep.multiplicativity_ok, "norm multiplicativity failed");
    c.expect(rep.positivity_ok, "positivity failed");
    out.push_back(finish(11, "cross product and octonion norm identities", c));
  }

  return out;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  for (const auto& r : results) {
    if (!r.skipped && !r.passed) return false;
  }
  return true;
}

}  // namespace trisect::claims
