#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "tfespec/analytic.hpp"
#include "tfespec/filterbank.hpp"
#include "tfespec/fixtures.hpp"
#include "tfespec/fmd.hpp"
#include "tfespec/fourier.hpp"
#include "tfespec/ifreq.hpp"
#include "tfespec/tfe.hpp"

namespace {

using tfespec::Signal;

void BM_Dft(benchmark::State& state) {
    const Signal x = tfespec::fixture_noise(1, static_cast<std::size_t>(state.range(0))).signal;
    for (auto _ : state) benchmark::DoNotOptimize(tfespec::dft(x.samples()));
}
// Powers of two take the radix-2 path; the others go through chirp-z.
BENCHMARK(BM_Dft)->Arg(4096)->Arg(8192)->Arg(4000)->Arg(8000)->Arg(12000);

void BM_AnalyticSignal(benchmark::State& state) {
    const Signal x = tfespec::fixture_noise(2, static_cast<std::size_t>(state.range(0)), 8000.0).signal;
    for (auto _ : state) benchmark::DoNotOptimize(tfespec::analytic_signal(x));
}
BENCHMARK(BM_AnalyticSignal)->Arg(8000)->Arg(8192)->Arg(65536);

void BM_IfTrack(benchmark::State& state) {
    const Signal x = tfespec::fixture_chirp().signal;
    for (auto _ : state) benchmark::DoNotOptimize(tfespec::if_track(x));
}
BENCHMARK(BM_IfTrack);

void BM_DftDecompose(benchmark::State& state) {
    const Signal x = tfespec::fixture_chirp_fm_mixture().signal;
    const auto bands = static_cast<std::size_t>(state.range(0));
    const auto threads = static_cast<std::size_t>(state.range(1));
    const tfespec::BandPlan plan = tfespec::uniform_band_plan(bands, x.size(), x.sample_rate());
    for (auto _ : state) benchmark::DoNotOptimize(tfespec::dft_decompose(x, plan, threads));
}
BENCHMARK(BM_DftDecompose)->Args({20, 1})->Args({100, 1})->Args({100, 4})->UseRealTime();

void BM_FmdDecompose(benchmark::State& state) {
    const Signal x = tfespec::fixture_five_chirps().signal;
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto ladder = tfespec::ladder_for_part(
        tfespec::fir_cutoff_ladder(tfespec::BandPlanSpec::uniform(8), x.sample_rate()), tfespec::FmdPart::a);
    for (auto _ : state) benchmark::DoNotOptimize(tfespec::fmd_decompose(x, ladder, order, tfespec::FmdPart::a));
}
BENCHMARK(BM_FmdDecompose)->Arg(64)->Arg(256);

void BM_BuildTfe(benchmark::State& state) {
    const Signal x = tfespec::fixture_chirp_fm_mixture().signal;
    const tfespec::Decomposition d =
        tfespec::dft_decompose(x, tfespec::uniform_band_plan(100, x.size(), x.sample_rate()));
    std::vector<tfespec::IFTrack> tracks;
    for (const auto& c : d.components) tracks.push_back(tfespec::if_track(Signal(c, x.sample_rate())));
    for (auto _ : state) benchmark::DoNotOptimize(tfespec::build_tfe(tracks));
}
BENCHMARK(BM_BuildTfe);

}  // namespace

BENCHMARK_MAIN();
