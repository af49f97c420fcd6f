// trisect: construct alternating trilinear forms over small finite fields,
// enumerate their singular lines, and verify the structural claims about
// them (spreads, unions of lines, orbit counts, the rational cross algebra).

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "trisect/census.hpp"
#include "trisect/claims.hpp"
#include "trisect/crossalg.hpp"
#include "trisect/errors.hpp"
#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"
#include "trisect/hypersurface.hpp"
#include "trisect/json_io.hpp"
#include "trisect/parallel.hpp"
#include "trisect/trace_construct.hpp"

namespace {

using nlohmann::json;
using trisect::InvalidParameter;
using trisect::forms::TriForm;
using trisect::gf::Elem;
using trisect::gf::Field;
using trisect::gf::FieldPtr;

constexpr int kExitOk = 0;
constexpr int kExitClaimFalse = 1;
constexpr int kExitUsage = 2;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

FieldPtr field_of_order(std::uint64_t q) {
  const auto [p, h] = trisect::gf::factor_prime_power(q);
  return Field::prime_power(p, h);
}

// Elements on the command line: either an integer (reduced mod p for prime
// fields, a packed value otherwise) or comma-separated little-endian
// coefficients like "1,0,2".
Elem parse_elem(const FieldPtr& f, const std::string& s) {
  if (s.find(',') == std::string::npos) {
    const long v = std::stol(s);
    if (f->degree() == 1) return f->from_int(v);
    if (v < 0 || static_cast<std::uint64_t>(v) >= f->order()) {
      throw InvalidParameter("element value out of range: " + s);
    }
    return f->elem(static_cast<trisect::gf::elem_t>(v));
  }
  std::vector<std::uint32_t> rep;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(',', pos);
    const std::string part =
        s.substr(pos, next == std::string::npos ? next : next - pos);
    rep.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return {f.get(), f->from_rep(rep)};
}

// A form source is a JSON file path, a catalog name, or inline text in the
// compact grammar ("f123+mu*f456").
TriForm load_form(const std::string& source, std::uint64_t q,
                  std::uint32_t n, const std::optional<std::string>& mu_text) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    json j;
    in >> j;
    return trisect::json_io::form_from_json(j);
  }
  if (q == 0) {
    throw InvalidParameter("--q is required unless --form is a file");
  }
  const FieldPtr f = field_of_order(q);
  std::optional<Elem> mu;
  if (mu_text) mu = parse_elem(f, *mu_text);
  static const char* kCatalog[] = {"fano7",
                                   "spread_odd",
                                   "spread_even_hodd",
                                   "spread_even_heven",
                                   "t_prime",
                                   "t_double_prime",
                                   "ts6",
                                   "ts10"};
  for (const char* name : kCatalog) {
    if (source == name) return trisect::forms::catalog(source, f, mu);
  }
  return trisect::forms::parse_form(source, f, n, mu);
}

void emit(const json& body, const std::string& out_path, bool text,
          const std::string& text_summary) {
  const std::string payload =
      text ? text_summary + "\n" : trisect::json_io::dump(body);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << payload;
  }
}

json top(const char* command) {
  json j;
  j["schema"] = trisect::json_io::kSchema;
  j["command"] = command;
  return j;
}

struct FormArgs {
  std::string form;
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::optional<std::string> mu;

  void attach(CLI::App* cmd) {
    cmd->add_option("--form", form,
                    "form source: JSON file, catalog name, or inline text")
        ->required();
    cmd->add_option("--q", q, "field order (prime power)");
    cmd->add_option("--n", n, "dimension override for inline text");
    cmd->add_option("--mu", mu, "field element bound to 'mu'");
  }
  TriForm load() const { return load_form(form, q, n, mu); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "trisect: alternating trilinear forms over GF(q), their singular "
      "lines, line-spreads, and related exact verifications"};
  app.require_subcommand(1);

  unsigned threads = trisect::default_thread_count();
  app.add_option("--threads", threads,
                 "worker threads (default: TRISECT_THREADS or hardware)");
  bool timing = false;
  app.add_flag("--timing", timing,
               "include elapsed_ms in JSON output (breaks byte determinism)");
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file");
  bool text = false;

  // construct
  auto* c_construct = app.add_subcommand(
      "construct",
      "build a 6-dimensional form over GF(q) as the relative trace of a "
      "determinant form on GF(q^2)^3; the singular lines of the result "
      "form a line-spread");
  std::string family;
  std::uint64_t construct_q = 0;
  std::optional<std::string> construct_mu, construct_beta;
  std::string emit_path;
  c_construct->add_option("--family", family, "odd | even | cube")->required();
  c_construct->add_option("--q", construct_q, "field order")->required();
  c_construct->add_option("--mu", construct_mu, "target parameter mu");
  c_construct->add_option("--beta", construct_beta,
                          "nonzero beta in GF(q^2), default 1 "
                          "(coefficients a,b over GF(q))");
  c_construct->add_option("--emit", emit_path, "write the form JSON here");

  // lines
  auto* c_lines = app.add_subcommand(
      "lines", "enumerate the singular lines of a form and report coverage "
               "statistics per projective point");
  FormArgs lines_args;
  lines_args.attach(c_lines);
  std::string report = "json";
  c_lines->add_option("--report", report, "json | text");
  bool emit_lines = false;
  c_lines->add_flag("--emit-lines", emit_lines, "include the full line list");

  // spread-check
  auto* c_spread = app.add_subcommand(
      "spread-check", "check that the singular lines partition the point set "
                      "and form a normal (hence Desarguesian) spread");
  FormArgs spread_args;
  spread_args.attach(c_spread);
  c_spread->add_option("--report", report, "json | text");

  // union
  auto* c_union = app.add_subcommand(
      "union", "classify the union of all singular lines (odd dimension): "
               "full space, hyperplane, or low-degree hypersurface");
  FormArgs union_args;
  union_args.attach(c_union);
  bool classify = true;
  c_union->add_flag("--classify,!--no-classify", classify,
                    "fit defining polynomials (default on)");

  // ts-search
  auto* c_ts = app.add_subcommand(
      "ts-search", "exhaustive search for totally singular r-dimensional "
                   "subspaces, with a node budget");
  FormArgs ts_args;
  ts_args.attach(c_ts);
  std::uint32_t ts_r = 3;
  std::uint64_t ts_budget = 1'000'000;
  c_ts->add_option("--r", ts_r, "subspace dimension")->required();
  c_ts->add_option("--budget", ts_budget, "search node budget");

  // census
  auto* c_census = app.add_subcommand(
      "census", "exact q^C(n,3) / |GL(n,q)| orbit-count lower bounds");
  bool census_table = false;
  c_census->add_flag("--table", census_table,
                     "the n = 5..11, q = 2 ratio table");
  std::uint32_t census_n = 0;
  std::uint64_t census_q = 2;
  c_census->add_option("--n", census_n, "single dimension");
  c_census->add_option("--q", census_q, "field order (default 2)");

  // orbits
  auto* c_orbits = app.add_subcommand(
      "orbits", "exhaustive GL(n,q)-orbit partition of all forms (tiny n, q) "
                "with invariant fingerprints");
  std::uint32_t orbits_n = 0;
  std::uint64_t orbits_q = 2;
  bool orbits_fp = false;
  c_orbits->add_option("--n", orbits_n, "dimension")->required();
  c_orbits->add_option("--q", orbits_q, "field order (default 2)");
  c_orbits->add_flag("--fingerprints", orbits_fp,
                     "fingerprint each orbit representative");

  // crossalg
  auto* c_cross = app.add_subcommand(
      "crossalg", "exact rational checks of the 7-dimensional cross product "
                  "and the octonion norm identities");
  bool cross_verify = false;
  std::uint64_t cross_samples = 10'000;
  std::uint64_t cross_seed = 0x7215ec1fULL;
  c_cross->add_flag("--verify", cross_verify, "run the identity checks");
  c_cross->add_option("--samples", cross_samples, "sample count");
  c_cross->add_option("--seed", cross_seed, "RNG seed");

  // verify-all
  auto* c_all = app.add_subcommand(
      "verify-all", "run the full claim suite and print a pass/fail line per "
                    "claim; exits 1 on any failure");
  std::uint64_t q_max = 0;
  bool all_json = false;
  c_all->add_option("--q-max", q_max, "skip work over fields larger than this");
  c_all->add_flag("--json", all_json, "machine-readable results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Timer timer;
  try {
    if (*c_construct) {
      const FieldPtr base = field_of_order(construct_q);
      const auto pair = trisect::gf::ExtPair::make(base);
      std::optional<Elem> mu;
      if (construct_mu) mu = parse_elem(base, *construct_mu);
      Elem rho = base->zero();
      TriForm T(6, base);
      json j = top("construct");
      if (family == "odd") {
        rho = trisect::trace_construct::choose_rho_odd(pair, mu);
      } else if (family == "even") {
        rho = trisect::trace_construct::choose_rho_even(pair, mu);
      } else if (family == "cube") {
        const auto var = trisect::trace_construct::rho_cube_root_variant(pair);
        rho = var.rho;
      } else {
        throw InvalidParameter("--family must be odd, even, or cube");
      }
      const auto setup = trisect::trace_construct::ExtensionSetup::make(pair, rho);
      const Elem beta = construct_beta
                            ? parse_elem(pair.ext, *construct_beta)
                            : pair.ext->one();
      T = trisect::trace_construct::lift(setup, beta);
      j["family"] = family;
      j["rho"] = trisect::json_io::elem_to_json(*pair.ext, rho.v);
      j["beta"] = trisect::json_io::elem_to_json(*pair.ext, beta.v);
      j["form"] = trisect::json_io::form_to_json(T);
      if (timing) j["elapsed_ms"] = timer.elapsed_ms();
      if (!emit_path.empty()) {
        std::ofstream out(emit_path, std::ios::binary);
        out << trisect::json_io::dump(j["form"]);
      }
      emit(j, out_path, false, "");
      return kExitOk;
    }

    if (*c_lines || *c_spread) {
      const bool full = static_cast<bool>(*c_spread);
      const TriForm T = (full ? spread_args : lines_args).load();
      const auto L = trisect::geometry::singular_lines(T, threads);
      auto rep = trisect::geometry::spread_check(L);
      if (full && rep.is_partition) {
        rep.is_normal = trisect::geometry::is_normal_spread(L);
      }
      json j = top(full ? "spread-check" : "lines");
      j["n"] = T.n();
      j["q"] = T.field()->order();
      j["report"] = trisect::json_io::spread_report_to_json(rep);
      if (emit_lines) j["lines"] = trisect::json_io::lineset_to_json(L)["lines"];
      if (timing) j["elapsed_ms"] = timer.elapsed_ms();
      std::ostringstream txt;
      txt << "lines=" << rep.line_count << " coverage=[" << rep.coverage_min
          << "," << rep.coverage_max << "]"
          << " partition=" << (rep.is_partition ? "yes" : "no");
      if (rep.is_normal) {
        txt << " normal=" << (*rep.is_normal ? "yes" : "no");
      }
      emit(j, out_path, report == "text", txt.str());
      if (full && !(rep.is_partition && rep.is_normal.value_or(false))) {
        return kExitClaimFalse;
      }
      return kExitOk;
    }

    if (*c_union) {
      const TriForm T = union_args.load();
      json j = top("union");
      j["n"] = T.n();
      j["q"] = T.field()->order();
      const auto pts = trisect::hypersurface::union_points(T);
      j["union_point_count"] = pts.size();
      if (classify) {
        const auto cls = trisect::hypersurface::classify_union(T);
        j["classification"] = trisect::json_io::union_to_json(cls);
      }
      if (timing) j["elapsed_ms"] = timer.elapsed_ms();
      emit(j, out_path, false, "");
      return kExitOk;
    }

    if (*c_ts) {
      const TriForm T = ts_args.load();
      const auto res = trisect::geometry::totally_singular_search(T, ts_r, ts_budget);
      json j = top("ts-search");
      j["n"] = T.n();
      j["q"] = T.field()->order();
      j["r"] = ts_r;
      j["budget"] = ts_budget;
      j["complete"] = res.complete;
      j["nodes"] = res.nodes;
      j["count"] = res.subspaces.size();
      json bases = json::array();
      for (const auto& b : res.subspaces) {
        json rows = json::array();
        for (std::size_t r = 0; r < b.rows(); ++r) {
          json row = json::array();
          for (std::size_t cc = 0; cc < b.cols(); ++cc) row.push_back(b.at(r, cc));
          rows.push_back(std::move(row));
        }
        bases.push_back(std::move(rows));
      }
      j["subspaces"] = std::move(bases);
      if (timing) j["elapsed_ms"] = timer.elapsed_ms();
      emit(j, out_path, false, "");
      return kExitOk;
    }

    if (*c_census) {
      json j = top("census");
      json rows = json::array();
      auto add_row = [&](std::uint32_t n, std::uint64_t q) {
        const auto r = trisect::census::orbit_ratio(n, q);
        rows.push_back(json{{"n", n},
                            {"q", q},
                            {"numerator", r.numerator.str()},
                            {"denominator", r.denominator.str()},
                            {"approx", r.approx}});
      };
      if (census_table || census_n == 0) {
        for (std::uint32_t n = 5; n <= 11; ++n) add_row(n, 2);
      } else {
        add_row(census_n, census_q);
      }
      j["ratios"] = std::move(rows);
      if (timing) j["elapsed_ms"] = timer.elapsed_ms();
      emit(j, out_path, false, "");
      return kExitOk;
    }

    if (*c_orbits) {
      const FieldPtr f = field_of_order(orbits_q);
      const auto part = trisect::census::orbit_partition(orbits_n, f);
      json j = top("orbits");
      j.update(trisect::json_io::orbit_partition_to_json(part));
      if (orbits_fp) {
        json fps = json::array();
        for (const auto& o : part.orbits) {
          const auto T =
              trisect::census::form_from_index(o.representative, orbits_n, f);
          fps.push_back(trisect::json_io::fingerprint_to_json(
              trisect::census::fingerprint(T)));
        }
        j["fingerprints"] = std::move(fps);
      }
      if (timing) j["elapsed_ms"] = timer.elapsed_ms();
      emit(j, out_path, false, "");
      return kExitOk;
    }

    if (*c_cross) {
      if (!cross_verify) {
        throw InvalidParameter("crossalg requires --verify");
      }
      const auto rep = trisect::crossalg::verify_cross_algebra(cross_samples, cross_seed);
      json j = top("crossalg");
      j.update(trisect::json_io::cross_report_to_json(rep));
      j["seed"] = cross_seed;
      if (timing) j["elapsed_ms"] = timer.elapsed_ms();
      emit(j, out_path, false, "");
      return rep.all_ok() ? kExitOk : kExitClaimFalse;
    }

    if (*c_all) {
      trisect::claims::Options copts;
      copts.q_max = q_max;
      copts.threads = threads;
      const auto results = trisect::claims::run_all(copts);
      if (all_json) {
        json j = top("verify-all");
        json arr = json::array();
        for (const auto& r : results) {
          arr.push_back(json{{"id", r.id},
                             {"name", r.name},
                             {"passed", r.passed},
                             {"skipped", r.skipped},
                             {"detail", r.detail}});
        }
        j["claims"] = std::move(arr);
        j["all_passed"] = trisect::claims::all_passed(results);
        if (timing) j["elapsed_ms"] = timer.elapsed_ms();
        emit(j, out_path, false, "");
      } else {
        for (const auto& r : results) {
          const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
          std::cout << tag << " " << r.id << ": " << r.name;
          if (!r.passed && !r.skipped) std::cout << " [" << r.detail << "]";
          std::cout << "\n";
        }
      }
      return trisect::claims::all_passed(results) ? kExitOk : kExitClaimFalse;
    }
  } catch (const trisect::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  return kExitUsage;
}
