// Serial reference vs OpenMP kernels. Set VOLSET_THREADS to cap the thread count.

#include <benchmark/benchmark.h>

#include "volset/kernels.hpp"
#include "volset/parallel.hpp"
#include "volset/random.hpp"

using namespace volset;

namespace {

kernels::Packed sample(std::uint32_t q, std::size_t d, std::size_t n)
{
    Rng rng(derive_seed(q, d * 1000 + n));
    const auto e = random_subset(Field::make(q), d, n, rng);
    return kernels::pack(e.points(), d);
}

template <bool Parallel>
void BM_wedge_histogram(benchmark::State& st)
{
    const auto f = Field::make(static_cast<std::uint32_t>(st.range(0)));
    const auto e = sample(f.q(), static_cast<std::size_t>(st.range(1)), static_cast<std::size_t>(st.range(2)));
    for (auto _ : st)
        benchmark::DoNotOptimize(Parallel ? kernels::wedge_histogram(f, e) : kernels::serial::wedge_histogram(f, e));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(kernels::tuple_count(e.count, e.dim - 1)));
}

template <bool Parallel>
void BM_volume_mask(benchmark::State& st)
{
    const auto f = Field::make(static_cast<std::uint32_t>(st.range(0)));
    const auto e = kernels::pack(PointSet::coordinate_hyperplane(f, 3).points(), 3);
    for (auto _ : st)
        benchmark::DoNotOptimize(Parallel ? kernels::volume_mask_naive(f, e) : kernels::serial::volume_mask_naive(f, e));
}

template <bool Parallel>
void BM_dot_histogram(benchmark::State& st)
{
    const auto f = Field::make(static_cast<std::uint32_t>(st.range(0)));
    const auto a = sample(f.q(), 3, static_cast<std::size_t>(st.range(1)));
    const auto b = sample(f.q(), 3, static_cast<std::size_t>(st.range(1)) / 2 + 1);
    for (auto _ : st)
        benchmark::DoNotOptimize(Parallel ? kernels::dot_histogram(f, a, b) : kernels::serial::dot_histogram(f, a, b));
}

} // namespace

BENCHMARK(BM_wedge_histogram<false>)->Args({7, 4, 200})->Args({11, 3, 1000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wedge_histogram<true>)->Args({7, 4, 200})->Args({11, 3, 1000})->Unit(benchmark::kMillisecond);
// volume masks stop early once every value is seen; a hyperplane never covers
BENCHMARK(BM_volume_mask<false>)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_volume_mask<true>)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dot_histogram<false>)->Args({11, 1331})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dot_histogram<true>)->Args({11, 1331})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv)
{
    configure_threads_from_env();
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
}
