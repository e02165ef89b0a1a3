#include "weier/batch.hpp"

#include <benchmark/benchmark.h>

using namespace weier;

namespace {

void class_numbers(benchmark::State & st, bool parallel)
{
    for (auto _ : st) benchmark::DoNotOptimize(class_number_table(-st.range(0), -3, parallel));
}

std::vector<corpus_entry> const & small_corpus()
{
    static std::vector<corpus_entry> const C = [] {
        corpus_counts c;
        c.random = 4;
        c.pointed = 4;
        c.twists = 1;
        c.covers = 1;
        c.genera = {1, 2};
        return generate_corpus(0, c);
    }();
    return C;
}

void corpus_analysis(benchmark::State & st, bool parallel)
{
    auto const & C = small_corpus();
    for (auto _ : st) benchmark::DoNotOptimize(analyze_corpus(C, parallel));
    st.SetItemsProcessed(st.iterations() * static_cast<long>(C.size()));
}

void per_prime(benchmark::State & st, bool parallel)
{
    field_spec const f = field_spec::imaginary_quadratic(-23);
    weierstrass_eq const E(f, 2, poly({kelem(rat(1, 6)), kelem(3), 0, 0, 0, 0, kelem(27)}), poly({kelem(1)}));
    auto const primes = bad_primes(E);
    assemble_options opt;
    opt.parallel = parallel;
    for (auto _ : st) benchmark::DoNotOptimize(local_models(E, primes, opt));
}

} // namespace

BENCHMARK_CAPTURE(class_numbers, serial, false)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(class_numbers, parallel, true)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(corpus_analysis, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(corpus_analysis, parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(per_prime, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(per_prime, parallel, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
