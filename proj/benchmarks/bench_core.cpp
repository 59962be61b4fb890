#include <benchmark/benchmark.h>

#include "dickson/charsum.hpp"
#include "dickson/field.hpp"
#include "dickson/permutation.hpp"
#include "dickson/reversed_dickson.hpp"

namespace {

using dickson::Field;

void BM_FieldMul(benchmark::State& state)
{
    const Field field = dickson::field_from_order(state.range(0));
    const auto a = field.element_at(field.order() / 2);
    const auto b = field.element_at(field.order() - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(field.mul(a, b));
    }
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(27)->Arg(3125)->Arg(65521);

void BM_EvalRecurrence(benchmark::State& state)
{
    const Field field = dickson::field_from_order(27);
    const auto x = field.element_at(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dickson::eval_recurrence(field, state.range(0), x));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalRecurrence)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_EvalFunctional(benchmark::State& state)
{
    const Field field = dickson::field_from_order(27);
    const dickson::QuadExt ext = dickson::quad_ext(field);
    const auto x = field.element_at(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dickson::eval_functional(ext, 601, x));
    }
}
BENCHMARK(BM_EvalFunctional);

void BM_CoeffPoly(benchmark::State& state)
{
    const Field field = dickson::field_from_order(27);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dickson::coeff_poly(field, state.range(0), 2));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoeffPoly)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_IsPermutation(benchmark::State& state)
{
    const Field field = dickson::field_from_order(state.range(0));
    const uint64_t n = field.order() * field.order() - 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dickson::is_permutation(field, n));
    }
}
BENCHMARK(BM_IsPermutation)->Arg(9)->Arg(27)->Arg(121);

void BM_Scan(benchmark::State& state)
{
    const Field field = dickson::field_from_order(9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dickson::scan(field, state.range(0)));
    }
}
BENCHMARK(BM_Scan)->Arg(80);

void BM_SumTableBuild(benchmark::State& state)
{
    const Field field = dickson::field_from_order(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dickson::SumTable::build(field));
    }
}
BENCHMARK(BM_SumTableBuild)->Arg(5)->Arg(9)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
