#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trisect/json_io.hpp"

using namespace trisect;
using gf::Elem;
using gf::Field;
using gf::elem_t;
using nlohmann::json;

TEST_CASE("field descriptions round-trip") {
  for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                      {3, 2},
                      {2, 3},
                      {7, 1}}) {
    const auto f = Field::prime_power(p, h);
    const json j = json_io::field_to_json(*f);
    CHECK(j.at("p") == p);
    CHECK(j.at("h") == h);
    const auto g = json_io::field_from_json(j);
    CHECK(g->order() == f->order());
    CHECK(g->modulus() == f->modulus());
  }
}

TEST_CASE("elements serialize as little-endian coefficient arrays") {
  const auto f = Field::prime_power(3, 2);
  for (elem_t v = 0; v < 9; ++v) {
    const json j = json_io::elem_to_json(*f, v);
    CHECK(j.is_array());
    CHECK(j.size() == 2);
    CHECK(json_io::elem_from_json(*f, j) == v);
  }
  // Prime-field integer shorthand reduces mod p.
  const auto f5 = Field::prime_power(5, 1);
  CHECK(json_io::elem_from_json(*f5, json(7)) == 2);
  CHECK(json_io::elem_from_json(*f5, json(-1)) == 4);
}

TEST_CASE("forms round-trip through JSON") {
  for (std::uint64_t q : {2ull, 9ull}) {
    const auto [p, h] = gf::factor_prime_power(q);
    const auto f = Field::prime_power(p, h);
    const auto T = forms::catalog("fano7", f);
    const json j = json_io::form_to_json(T);
    CHECK(j.at("n") == 7);
    CHECK(j.at("q") == q);
    CHECK(j.at("coeffs").size() == 7);
    const auto back = json_io::form_from_json(j);
    CHECK(back.n() == T.n());
    CHECK(back.coeffs() == T.coeffs());
    CHECK(back.field()->order() == q);
  }
}

TEST_CASE("form parsing validates entries") {
  json j;
  j["n"] = 4;
  j["q"] = 2;
  j["coeffs"] = json::array({json::array({1, 2, 3, 1})});
  const auto T = json_io::form_from_json(j);
  CHECK(T.coeff(1, 2, 3).v == 1);

  j["coeffs"] = json::array({json::array({1, 2, 3})});
  CHECK_THROWS_AS(json_io::form_from_json(j), InvalidParameter);

  j["coeffs"] = json::array();
  j["q"] = 3;
  j["field"] = json{{"p", 2}, {"h", 1}};
  CHECK_THROWS_AS(json_io::form_from_json(j), InvalidParameter);
}

TEST_CASE("dump emits sorted keys and stable bytes") {
  json j;
  j["zeta"] = 1;
  j["alpha"] = json{{"b", 2}, {"a", 1}};
  const std::string s = json_io::dump(j);
  CHECK(s.find("\"alpha\"") < s.find("\"zeta\""));
  CHECK(s.back() == '\n');
  CHECK(json_io::dump(json::parse(s)) == s);
}

TEST_CASE("report serializers carry the expected keys") {
  const auto f = Field::prime_power(2, 1);
  const auto T = forms::catalog("spread_even_hodd", f);
  const auto L = geometry::singular_lines(T);
  const auto rep = geometry::spread_check(L);
  const json jr = json_io::spread_report_to_json(rep);
  CHECK(jr.at("line_count") == 21);
  CHECK(jr.at("is_partition") == true);
  CHECK(jr.at("coverage_histogram").at("1") == 63);

  const auto part = census::orbit_partition(4, f);
  const json jo = json_io::orbit_partition_to_json(part);
  CHECK(jo.at("orbit_count") == 2);
  CHECK(jo.at("ratio_numerator").is_string());

  const auto cr = crossalg::verify_cross_algebra(10, 1);
  const json jc = json_io::cross_report_to_json(cr);
  CHECK(jc.at("all_passed") == true);
  CHECK(jc.at("checks").size() == 4);
}
