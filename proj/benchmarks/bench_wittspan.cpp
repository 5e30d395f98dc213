#include <random>

#include <benchmark/benchmark.h>

#include "wittspan/arith.hpp"
#include "wittspan/hilbert.hpp"
#include "wittspan/knots.hpp"
#include "wittspan/local.hpp"
#include "wittspan/oracle.hpp"
#include "wittspan/span.hpp"

using namespace wittspan;

namespace {

std::vector<DiagonalForm> random_forms(std::size_t count, std::size_t rank, long bound)
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> pick(-bound, bound);
    std::vector<DiagonalForm> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<mpz_class> e;
        while (e.size() < rank)
            if (long v = pick(rng))
                e.push_back(v);
        out.emplace_back(e);
    }
    return out;
}

void BM_FactorSemiprime(benchmark::State & state)
{
    mpz_class const n = mpz_class("1000000007") * mpz_class("998244353");
    for (auto _ : state)
        benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_FactorSemiprime);

void BM_HilbertSymbol(benchmark::State & state)
{
    mpq_class const a(-1234567, 89);
    mpq_class const b(7654321, 1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_symbol(a, b, 2));
        benchmark::DoNotOptimize(hilbert_symbol(a, b, 1000003));
    }
}
BENCHMARK(BM_HilbertSymbol);

void BM_Invariants(benchmark::State & state)
{
    auto const forms = random_forms(64, static_cast<std::size_t>(state.range(0)), 1000);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(invariants(forms[i++ % forms.size()]));
}
BENCHMARK(BM_Invariants)->Arg(4)->Arg(16)->Arg(64);

void BM_IsotropyOverQ(benchmark::State & state)
{
    std::vector<FormInvariants> invs;
    for (auto const & f : random_forms(64, 4, 1000))
        invs.push_back(invariants(f));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_isotropic_over_Q(invs[i++ % invs.size()]));
}
BENCHMARK(BM_IsotropyOverQ);

void BM_OracleRankFour(benchmark::State & state)
{
    DiagonalForm const f{-5, 3, 21, 7};
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::mod_pk_solvable(f, 7));
}
BENCHMARK(BM_OracleRankFour);

void BM_WittSpan(benchmark::State & state)
{
    auto const forms = random_forms(64, static_cast<std::size_t>(state.range(0)), 100);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(witt_span(forms[i++ % forms.size()]));
}
BENCHMARK(BM_WittSpan)->Arg(2)->Arg(6)->Arg(12);

void BM_FourStrandPretzel(benchmark::State & state)
{
    DiagonalForm const f = pretzel_family_witt(FourStrandPretzel{state.range(0)});
    for (auto _ : state)
        benchmark::DoNotOptimize(witt_span(f));
}
BENCHMARK(BM_FourStrandPretzel)->Arg(0)->Arg(2);

void BM_Preimage(benchmark::State & state)
{
    DelImage d;
    d.set(WfpElement(3, 1, 0));
    d.set(WfpElement(7, 3, 0));
    d.set(WfpElement(13, 0, 1));
    d.set(WfpElement(1000033, 1, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(del_preimage(d));
}
BENCHMARK(BM_Preimage);

} // namespace

BENCHMARK_MAIN();
