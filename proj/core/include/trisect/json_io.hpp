#pragma once

#include <json.hpp>
#include <string>

#include "trisect/census.hpp"
#include "trisect/crossalg.hpp"
#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"
#include "trisect/hypersurface.hpp"

namespace trisect::json_io {

using nlohmann::json;

/// Version tag every top-level CLI document carries.
inline constexpr const char* kSchema = "trisect/1";

/// Base fields as {"p", "h", "modulus"} with the modulus little-endian.
json field_to_json(const gf::Field& f);
gf::FieldPtr field_from_json(const json& j);

/// Elements as little-endian coefficient arrays in the polynomial basis.
json elem_to_json(const gf::Field& f, gf::elem_t v);
gf::elem_t elem_from_json(const gf::Field& f, const json& j);

/// {"n", "q", "field", "coeffs": [[i, j, k, c], ...]} with sorted triples.
json form_to_json(const forms::TriForm& T);
forms::TriForm form_from_json(const json& j);

json line_to_json(const geometry::ProjLine& line, const gf::Field& f);
json lineset_to_json(const geometry::LineSet& L);

json spread_report_to_json(const geometry::SpreadReport& r);

json poly_to_json(const hypersurface::HomogPoly& p);
json union_to_json(const hypersurface::UnionClassification& c);

json fingerprint_to_json(const census::Fingerprint& fp);
json orbit_partition_to_json(const census::OrbitPartition& part);

json cross_report_to_json(const crossalg::CrossCheckReport& r);

/// Serialize with sorted keys and a trailing newline; deterministic bytes.
std::string dump(const json& j);

}  // namespace trisect::json_io
