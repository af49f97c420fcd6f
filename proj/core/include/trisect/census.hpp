#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trisect/forms.hpp"
#include "trisect/linalg.hpp"

namespace trisect::census {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using forms::TriForm;
using gf::FieldPtr;
using linalg::Mat;

/// |GL(n,q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - 1), exactly.
BigInt gl_order(std::uint32_t n, std::uint64_t q);

/// Exact q^{C(n,3)} / |GL(n,q)| with a double approximation.
struct OrbitRatio {
  BigInt numerator;    // reduced
  BigInt denominator;  // reduced, positive
  double approx = 0.0;
};
OrbitRatio orbit_ratio(std::uint32_t n, std::uint64_t q);

struct Orbit {
  std::uint64_t representative = 0;  // least index in the orbit
  std::uint64_t size = 0;
};

struct OrbitPartition {
  std::uint32_t n = 0;
  FieldPtr field;
  std::uint32_t num_coords = 0;  // C(n,3)
  std::uint64_t total = 0;       // q^{C(n,3)}
  std::vector<Orbit> orbits;     // ordered by representative
  std::vector<std::uint32_t> orbit_of;  // form index -> orbit position
};

/// Transvection, n-cycle, and (q > 2) a primitive diagonal; together they
/// generate GL(n, q).
std::vector<Mat> default_gl_generators(std::uint32_t n, const FieldPtr& field);

/// Frame-orbit check: the generators generate GL(n,q) iff the orbit of the
/// standard ordered basis has size |GL(n,q)| (the action on frames is free).
/// Feasible only for small (n, q).
bool generators_span_gl(const std::vector<Mat>& gens, std::uint32_t n,
                        const FieldPtr& field);

/// BFS partition of all trivector coefficient vectors under the generated
/// group. Requires q^{C(n,3)} <= 2^24.
OrbitPartition orbit_partition(std::uint32_t n, const FieldPtr& field,
                               std::optional<std::vector<Mat>> generators =
                                   std::nullopt);

/// Mixed-radix encoding of forms as indices in [0, q^{C(n,3)}), little-endian
/// over the lexicographically sorted triples.
TriForm form_from_index(std::uint64_t idx, std::uint32_t n,
                        const FieldPtr& field);
std::uint64_t index_of_form(const TriForm& T);

/// Tuple of GL-invariants used to separate orbits without classifying them.
struct Fingerprint {
  std::uint32_t radical_dim = 0;
  std::uint64_t line_count = 0;
  std::uint64_t coverage_min = 0;
  std::uint64_t coverage_max = 0;
  std::uint32_t ts_max_dim = 0;  // largest r with a totally singular r-space
  bool ts_exact = true;          // false when the search budget ran out
  std::string union_kind;        // odd n only, empty otherwise

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const TriForm& T, std::uint64_t ts_budget = 200'000);

/// Exact Burnside orbit count over GF(2) by full group enumeration;
/// independent of the BFS. Feasible for n <= 4.
std::uint64_t burnside_orbit_count_gf2(std::uint32_t n);

/// Monte-Carlo Burnside estimate over GF(2) with a fixed seed.
double burnside_estimate_gf2(std::uint32_t n, std::uint64_t samples,
                             std::uint64_t seed);

}  // namespace trisect::census
