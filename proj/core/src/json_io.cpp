#include "trisect/json_io.hpp"

#include "trisect/errors.hpp"

namespace trisect::json_io {

using gf::Field;
using gf::FieldPtr;
using gf::elem_t;

json field_to_json(const Field& f) {
  const Field* base = &f;
  if (f.kind() == Field::Kind::Quadratic) {
    throw InvalidParameter("only base fields serialize directly");
  }
  json j;
  j["p"] = base->characteristic();
  j["h"] = base->degree();
  j["modulus"] = base->modulus();
  return j;
}

FieldPtr field_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto h = j.at("h").get<std::uint32_t>();
  if (j.contains("modulus")) {
    return Field::prime_power(p, h, j.at("modulus").get<std::vector<std::uint32_t>>());
  }
  return Field::prime_power(p, h);
}

json elem_to_json(const Field& f, elem_t v) { return json(f.rep(v)); }

elem_t elem_from_json(const Field& f, const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    // Prime-field shorthand: a bare integer mod p.
    return f.from_int(j.get<std::int64_t>()).v;
  }
  return f.from_rep(j.get<std::vector<std::uint32_t>>());
}

json form_to_json(const forms::TriForm& T) {
  const Field& f = *T.field();
  json coeffs = json::array();
  for (const auto& [t, c] : T.coeffs()) {
    coeffs.push_back(json::array({t[0], t[1], t[2], elem_to_json(f, c)}));
  }
  json j;
  j["n"] = T.n();
  j["q"] = f.order();
  j["field"] = field_to_json(f);
  j["coeffs"] = std::move(coeffs);
  return j;
}

forms::TriForm form_from_json(const json& j) {
  FieldPtr f;
  if (j.contains("field")) {
    f = field_from_json(j.at("field"));
  } else {
    const auto [p, h] = gf::factor_prime_power(j.at("q").get<std::uint64_t>());
    f = Field::prime_power(p, h);
  }
  if (j.contains("q") && f->order() != j.at("q").get<std::uint64_t>()) {
    throw InvalidParameter("q does not match the field description");
  }
  forms::TriForm T(j.at("n").get<std::uint32_t>(), f);
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 4) {
      throw InvalidParameter("coefficient entries must be [i, j, k, c]");
    }
    T.set(entry[0].get<std::uint32_t>(), entry[1].get<std::uint32_t>(),
          entry[2].get<std::uint32_t>(),
          gf::Elem{f.get(), elem_from_json(*f, entry[3])});
  }
  return T;
}

json line_to_json(const geometry::ProjLine& line, const Field& f) {
  json rows = json::array();
  for (std::size_t r = 0; r < 2; ++r) {
    json row = json::array();
    for (std::uint32_t c = 0; c < line.n; ++c) {
      row.push_back(elem_to_json(f, line.m[r * line.n + c]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json lineset_to_json(const geometry::LineSet& L) {
  json j;
  j["n"] = L.n;
  j["q"] = L.field->order();
  j["line_count"] = L.lines.size();
  json lines = json::array();
  for (const auto& line : L.lines) lines.push_back(line_to_json(line, *L.field));
  j["lines"] = std::move(lines);
  return j;
}

json spread_report_to_json(const geometry::SpreadReport& r) {
  json j;
  j["line_count"] = r.line_count;
  j["coverage_min"] = r.coverage_min;
  j["coverage_max"] = r.coverage_max;
  j["uncovered_points"] = r.uncovered_points;
  j["is_partition"] = r.is_partition;
  if (r.is_normal) j["is_normal"] = *r.is_normal;
  json hist = json::object();
  for (const auto& [cover, cnt] : r.coverage_histogram) {
    hist[std::to_string(cover)] = cnt;
  }
  j["coverage_histogram"] = std::move(hist);
  return j;
}

json poly_to_json(const hypersurface::HomogPoly& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.coeffs) {
    terms.push_back(json::array({json(mono), elem_to_json(*p.field, c)}));
  }
  json j;
  j["n"] = p.n;
  j["degree"] = p.degree;
  j["terms"] = std::move(terms);
  return j;
}

json union_to_json(const hypersurface::UnionClassification& c) {
  json j;
  j["kind"] = hypersurface::to_string(c.kind);
  json fitted = json::array();
  for (const auto& p : c.fitted) fitted.push_back(poly_to_json(p));
  j["fitted"] = std::move(fitted);
  if (c.quadric_rank) j["quadric_rank"] = *c.quadric_rank;
  return j;
}

json fingerprint_to_json(const census::Fingerprint& fp) {
  json j;
  j["radical_dim"] = fp.radical_dim;
  j["line_count"] = fp.line_count;
  j["coverage_min"] = fp.coverage_min;
  j["coverage_max"] = fp.coverage_max;
  j["ts_max_dim"] = fp.ts_max_dim;
  j["ts_exact"] = fp.ts_exact;
  if (!fp.union_kind.empty()) j["union_kind"] = fp.union_kind;
  return j;
}

json orbit_partition_to_json(const census::OrbitPartition& part) {
  json orbits = json::array();
  for (const auto& o : part.orbits) {
    orbits.push_back(json{{"representative", o.representative}, {"size", o.size}});
  }
  const auto ratio = census::orbit_ratio(part.n, part.field->order());
  json j;
  j["n"] = part.n;
  j["q"] = part.field->order();
  j["total_forms"] = part.total;
  j["orbit_count"] = part.orbits.size();
  j["orbits"] = std::move(orbits);
  j["ratio_numerator"] = ratio.numerator.str();
  j["ratio_denominator"] = ratio.denominator.str();
  j["ratio_approx"] = ratio.approx;
  return j;
}

json cross_report_to_json(const crossalg::CrossCheckReport& r) {
  json checks = json::array();
  auto push = [&](const char* name, bool ok) {
    checks.push_back(json{{"name", name}, {"passed", ok}});
  };
  push("orthogonality", r.orthogonality_ok);
  push("norm_identity", r.norm_identity_ok);
  push("norm_multiplicativity", r.multiplicativity_ok);
  push("positivity", r.positivity_ok);
  json j;
  j["samples"] = r.samples;
  j["checks"] = std::move(checks);
  j["all_passed"] = r.all_ok();
  return j;
}

std::string dump(const json& j) {
  // nlohmann::json object keys are already sorted; fixed indent, one newline.
  return j.dump(2) + "\n";
}

}  // namespace trisect::json_io
