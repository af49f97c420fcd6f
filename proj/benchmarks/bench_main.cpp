#include <benchmark/benchmark.h>

#include "trisect/forms.hpp"
#include "trisect/geometry.hpp"
#include "trisect/gf.hpp"

namespace {

using trisect::gf::Field;
using trisect::gf::elem_t;

void BM_field_mul(benchmark::State& state) {
  const auto f = Field::prime_power(2, static_cast<std::uint32_t>(state.range(0)));
  const std::uint64_t q = f->order();
  elem_t acc = 1;
  for (auto _ : state) {
    for (elem_t a = 1; a < q; ++a) acc = f->mul(acc, a) | 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_field_mul)->Arg(3)->Arg(8)->Arg(13);

void BM_singular_lines(benchmark::State& state) {
  const auto f = Field::prime_power(static_cast<std::uint32_t>(state.range(0)), 1);
  const auto T = trisect::forms::make_spread_odd(
      f, trisect::gf::Elem{f.get(), 2}, /*validate=*/false);
  for (auto _ : state) {
    auto L = trisect::geometry::singular_lines(T);
    benchmark::DoNotOptimize(L);
  }
}
BENCHMARK(BM_singular_lines)->Arg(3)->Arg(5)->Arg(7);

void BM_contract(benchmark::State& state) {
  const auto f = Field::prime_power(3, 1);
  const auto T = trisect::forms::catalog("fano7", f);
  trisect::linalg::Vector a(f.get(), 7);
  for (std::size_t i = 0; i < 7; ++i) a.c[i] = (i % 2) + 1;
  for (auto _ : state) {
    auto B = T.contract(a);
    benchmark::DoNotOptimize(B);
  }
}
BENCHMARK(BM_contract);

}  // namespace

BENCHMARK_MAIN();
