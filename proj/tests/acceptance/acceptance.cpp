// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "tfespec/analytic.hpp"
#include "tfespec/filterbank.hpp"
#include "tfespec/fir.hpp"
#include "tfespec/fixtures.hpp"
#include "tfespec/fmd.hpp"
#include "tfespec/fourier.hpp"
#include "tfespec/ifreq.hpp"
#include "tfespec/ridge.hpp"
#include "tfespec/signal.hpp"

namespace {

using namespace tfespec;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kPositivityBudgetS = 30.0;
constexpr int kPositivitySignals = 200;
constexpr std::size_t kPositivityMinLength = 64;
constexpr std::size_t kPositivityMaxLength = 16384;

constexpr double kDeltaIfHz = 250.0;
constexpr double kDeltaIfTolHz = 1.0;
constexpr double kDeltaEnvelopeTol = 1e-3;
constexpr double kDeltaBudgetS = 1.0;

constexpr double kHarmonicIfHz = 300.0;
constexpr double kHarmonicIfTolHz = 2.0;
constexpr double kHarmonicEnvelopeFloor = 0.10;

constexpr double kAverageRelTol = 0.05;
constexpr double kAverageEnvelopeFloor = 0.10;
constexpr std::size_t kRidgeBands = 100;
constexpr double kRidgeTolHz = 60.0;
constexpr double kRidgeFraction = 0.90;

constexpr double kToneIfTolHz = 1e-6;

constexpr double kDftReconTol = 1e-9;
constexpr double kDftOrthTol = 1e-10;
constexpr double kDftEnergyTol = 1e-10;

constexpr double kFmdReconTol = 1e-9;
constexpr double kFmdTailTol = 1e-8;
constexpr double kFmdEnergyTol = 1e-8;

constexpr double kChirpMedianRelTol = 0.02;

constexpr double kOracleDftRelTol = 1e-10;
constexpr double kOracleReportTol = 1e-12;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t interior_begin(std::size_t n) { return n / 20; }
std::size_t interior_end(std::size_t n) { return n - n / 20; }

Signal random_signal(std::mt19937_64& rng, int kind) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto length = static_cast<std::size_t>(std::exp(
        std::log(static_cast<double>(kPositivityMinLength)) +
        unit(rng) * (std::log(static_cast<double>(kPositivityMaxLength)) -
                     std::log(static_cast<double>(kPositivityMinLength)))));
    const double fs = 100.0 + 16000.0 * unit(rng);
    const double duration = static_cast<double>(length) / fs;
    const double nyq = fs / 2.0;
    switch (kind) {
        case 0:
            return gen_noise({rng(), 0.0, 0.1 + 10.0 * unit(rng), length}, fs);
        case 1:
            return Signal(gen_chirp(nyq * unit(rng), nyq * unit(rng), duration, fs).values(), fs);
        case 2: {
            std::vector<double> v = gen_chirp(nyq * unit(rng), nyq * unit(rng), duration, fs).values();
            const std::vector<double> noise = oracle::random_vector(rng, v.size(), unit(rng));
            const double f = nyq * unit(rng);
            for (std::size_t n = 0; n < v.size(); ++n) {
                v[n] += noise[n] + 0.7 * std::cos(2.0 * std::numbers::pi * f * static_cast<double>(n) / fs) + 3.0;
            }
            return Signal(std::move(v), fs);
        }
        default: {
            std::vector<double> v(length, 0.0);
            const int spikes = 1 + static_cast<int>(rng() % 4);
            for (int s = 0; s < spikes; ++s) v[rng() % length] += unit(rng) * 4.0 - 2.0;
            return Signal(std::move(v), fs);
        }
    }
}

Outcome positivity() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    const DiffScheme schemes[] = {DiffScheme::forward, DiffScheme::backward, DiffScheme::central};
    std::size_t violations = 0;
    std::size_t total = 0;
    for (int i = 0; i < kPositivitySignals; ++i) {
        const Signal x = random_signal(rng, i % 4);
        const IFTrack track = if_track(x, schemes[i % 3], IfMode::positive);
        const double nyq = x.sample_rate() / 2.0;
        for (double f : track.frequency_hz) {
            ++total;
            if (!(f >= 0.0 && f <= nyq)) ++violations;
        }
    }
    const double elapsed = seconds_since(start);
    return {violations == 0 && elapsed < kPositivityBudgetS,
            std::to_string(violations) + " violations in " + std::to_string(total) + " samples, " +
                fmt(elapsed) + " s"};
}

Outcome delta() {
    const auto start = Clock::now();
    const Fixture fx = fixture_delta();
    const AnalyticSignal z = analytic_signal(fx.signal);
    const IFTrack track = if_track(fx.signal);
    const std::size_t n = fx.signal.size();
    const double n0 = 1999.0;
    double if_err = 0.0;
    double env_err = 0.0;
    for (std::size_t i = interior_begin(n); i < interior_end(n); ++i) {
        if_err = std::max(if_err, std::abs(track.frequency_hz[i] - kDeltaIfHz));
        const double u = 0.5 * (static_cast<double>(i) - n0);
        const double sinc = u == 0.0 ? 1.0 : std::sin(std::numbers::pi * u) / (std::numbers::pi * u);
        env_err = std::max(env_err, std::abs(z.envelope[i] - std::abs(sinc)));
    }
    const double elapsed = seconds_since(start);
    return {if_err <= kDeltaIfTolHz && env_err <= kDeltaEnvelopeTol && elapsed < kDeltaBudgetS,
            "max |IF-250| " + fmt(if_err) + " Hz, max envelope error " + fmt(env_err) + ", " +
                fmt(elapsed) + " s"};
}

Outcome harmonics() {
    const Fixture fx = fixture_harmonics();
    const AnalyticSignal z = analytic_signal(fx.signal);
    const IFTrack track = if_track(fx.signal);
    const double peak = *std::max_element(z.envelope.begin(), z.envelope.end());
    double err = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < track.size(); ++i) {
        if (z.envelope[i] <= kHarmonicEnvelopeFloor * peak) continue;
        ++used;
        err = std::max(err, std::abs(track.frequency_hz[i] - kHarmonicIfHz));
    }
    return {used > 0 && err <= kHarmonicIfTolHz,
            "max |IF-300| " + fmt(err) + " Hz over " + std::to_string(used) + " samples"};
}

Outcome two_tone_average() {
    const Fixture fx = fixture_chirp_fm_mixture();
    const Signal& x = fx.signal;
    const AnalyticSignal z = analytic_signal(x);
    const IFTrack track = if_track(x);
    const double peak = *std::max_element(z.envelope.begin(), z.envelope.end());
    double worst = 0.0;
    std::size_t used = 0;
    for (std::size_t i = interior_begin(x.size()); i < interior_end(x.size()); ++i) {
        if (z.envelope[i] <= kAverageEnvelopeFloor * peak) continue;
        const double t = static_cast<double>(i) / x.sample_rate();
        const double avg = 0.5 * (fx.ridges[0].frequency(t) + fx.ridges[1].frequency(t));
        worst = std::max(worst, std::abs(track.frequency_hz[i] - avg) / avg);
        ++used;
    }

    const BandPlan plan = uniform_band_plan(kRidgeBands, x.size(), x.sample_rate());
    const Decomposition d = dft_decompose(x, plan);
    std::vector<IFTrack> tracks;
    for (const auto& c : d.components) tracks.push_back(if_track(Signal(c, x.sample_rate())));
    const RidgeReport report = ridge_report(tracks, fx.ridges, kRidgeTolHz);

    return {used > 0 && worst <= kAverageRelTol && report.fraction_within >= kRidgeFraction,
            "undecomposed max rel error " + fmt(worst) + " over " + std::to_string(used) +
                " samples; decomposed energy within 60 Hz " + fmt(report.fraction_within)};
}

Outcome pure_tone() {
    const double fs = 8000.0;
    const Fixture fx = fixture_tone(fs / 8.0, fs, 1.0);
    double err = 0.0;
    for (DiffScheme s : {DiffScheme::forward, DiffScheme::backward, DiffScheme::central}) {
        const IFTrack track = if_track(fx.signal, s);
        for (std::size_t i = 1; i + 1 < track.size(); ++i) {
            err = std::max(err, std::abs(track.frequency_hz[i] - fs / 8.0));
        }
    }
    return {err <= kToneIfTolHz, "max |IF-f0| " + fmt(err) + " Hz (all schemes)"};
}

Outcome dft_decomposition() {
    const Fixture fx = fixture_chirp_fm_mixture();
    bool pass = true;
    std::string detail;
    for (std::size_t m : {2u, 10u, 100u}) {
        const BandPlan plan = uniform_band_plan(m, fx.signal.size(), fx.signal.sample_rate());
        const Decomposition d = dft_decompose(fx.signal, plan);
        const double recon = reconstruction_error(d, fx.signal);
        const OrthogonalityReport r = verify_orthogonality(d);
        const double energy = std::abs(r.energy_ratio - 1.0);
        pass = pass && recon <= kDftReconTol && r.max_cross_product <= kDftOrthTol && energy <= kDftEnergyTol;
        detail += "M=" + std::to_string(m) + " recon " + fmt(recon) + " orth " + fmt(r.max_cross_product) +
                  " |E-1| " + fmt(energy) + "; ";
    }
    return {pass, detail};
}

Outcome fmd() {
    const std::vector<Fixture> fixtures{fixture_noise(), fixture_five_chirps()};
    bool pass = true;
    double worst_recon = 0.0;
    double worst_tail = 0.0;
    double worst_energy = 0.0;
    for (const Fixture& fx : fixtures) {
        for (std::size_t m : {2u, 5u, 10u}) {
            const auto ascending = fir_cutoff_ladder(BandPlanSpec::uniform(m), fx.signal.sample_rate());
            for (FmdPart part : {FmdPart::a, FmdPart::b}) {
                const auto ladder = ladder_for_part(ascending, part);
                const Decomposition d = fmd_decompose(fx.signal, ladder, kDefaultFirOrder, part);
                const double recon = reconstruction_error(d, fx.signal);
                const LinoepReport r = verify_linoep(d);
                const double energy = std::abs(r.energy_ratio - 1.0);
                worst_recon = std::max(worst_recon, recon);
                worst_tail = std::max(worst_tail, r.max_tail_orthogonality);
                worst_energy = std::max(worst_energy, energy);
                pass = pass && d.band_count() == m && recon <= kFmdReconTol &&
                       r.max_tail_orthogonality <= kFmdTailTol && energy <= kFmdEnergyTol;
            }
        }
    }
    return {pass, "worst recon " + fmt(worst_recon) + ", tail orth " + fmt(worst_tail) + ", |E-1| " +
                      fmt(worst_energy) + " (noise + five-chirps, M in {2,5,10}, parts A and B)"};
}

Outcome zero_phase_contract() {
    const double fs = 8000.0;
    const double f = 20.0;  // period 400 samples, deep in the passband
    const Signal tone = gen_tone(f, 1.0, fs);
    const FirFilter lp = design_fir(FilterKind::lowpass, 400.0, kDefaultFirOrder, fs);
    const Signal zp = zero_phase_filter(tone, lp);
    const Signal causal = causal_filter(tone, lp);
    const double omega = 2.0 * std::numbers::pi * f / fs;
    const std::size_t begin = 400;
    const std::size_t end = tone.size() - 400;
    const long zp_lag = oracle::best_tone_lag(zp.samples(), omega, 0.0, begin, end, 199);
    const long causal_lag = oracle::best_tone_lag(causal.samples(), omega, 0.0, begin, end, 199);
    const auto expected = static_cast<long>(lp.order() / 2);
    return {zp_lag == 0 && causal_lag == expected,
            "zero-phase lag " + std::to_string(zp_lag) + ", causal lag " + std::to_string(causal_lag) +
                " (expected " + std::to_string(expected) + ")"};
}

Outcome chirp_tracking() {
    const Fixture fx = fixture_chirp();
    const IFTrack track = if_track(fx.signal, DiffScheme::central);
    std::vector<double> rel;
    for (std::size_t i = interior_begin(track.size()); i < interior_end(track.size()); ++i) {
        const double truth = fx.ridges[0].frequency(static_cast<double>(i) / fx.signal.sample_rate());
        rel.push_back(std::abs(track.frequency_hz[i] - truth) / truth);
    }
    std::nth_element(rel.begin(), rel.begin() + static_cast<long>(rel.size() / 2), rel.end());
    const double median = rel[rel.size() / 2];
    return {median <= kChirpMedianRelTol, "median relative error " + fmt(median)};
}

Outcome conventional_contrast() {
    const Fixture fx = fixture_chirp_fm_mixture();
    const std::vector<IFTrack> conventional{if_track(fx.signal, DiffScheme::forward, IfMode::conventional)};
    const std::vector<IFTrack> positive{if_track(fx.signal, DiffScheme::forward, IfMode::positive)};
    const IfDiagnostics c = if_diagnostics(conventional);
    const IfDiagnostics p = if_diagnostics(positive);
    return {c.negative_samples > 0 && p.negative_samples == 0,
            "conventional " + std::to_string(c.negative_samples) + " negative, positive " +
                std::to_string(p.negative_samples)};
}

double rel_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return den > 0.0 ? num / den : num;
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(99);
    double worst_fft = 0.0;
    for (std::size_t n : {7u, 8u, 64u, 257u}) {
        std::vector<Complex> x(n);
        for (auto& v : x) v = {oracle::random_vector(rng, 1)[0], oracle::random_vector(rng, 1)[0]};
        worst_fft = std::max(worst_fft, rel_diff(dft(x), oracle::direct_dft(x)));
        worst_fft = std::max(worst_fft, rel_diff(idft(x), oracle::direct_idft(x)));
        const std::vector<double> real = oracle::random_vector(rng, n);
        worst_fft = std::max(worst_fft, rel_diff(dft(real), oracle::direct_dft(real)));
    }

    double worst_report = 0.0;
    const auto direct_normalized = [](const std::vector<double>& a, const std::vector<double>& b) {
        return static_cast<double>(std::abs(oracle::inner(a, b)) /
                                   std::sqrt(oracle::inner(a, a) * oracle::inner(b, b)));
    };
    for (std::size_t n : {16u, 37u, 64u}) {
        const Signal x(oracle::random_vector(rng, n), 1.0);
        const Decomposition d = dft_decompose(x, uniform_band_plan(4, n, 1.0));
        const OrthogonalityReport r = verify_orthogonality(d);
        double cross = 0.0;
        long double energy = 0.0L;
        std::vector<double> sum(n, d.c0);
        for (std::size_t i = 0; i < d.band_count(); ++i) {
            energy += oracle::inner(d.components[i], d.components[i]);
            for (std::size_t k = 0; k < n; ++k) sum[k] += d.components[i][k];
            for (std::size_t l = i + 1; l < d.band_count(); ++l) {
                cross = std::max(cross, direct_normalized(d.components[i], d.components[l]));
            }
        }
        energy += static_cast<long double>(n) * d.c0 * d.c0;
        const double ratio = static_cast<double>(energy / oracle::inner(sum, sum));
        worst_report = std::max({worst_report, std::abs(r.max_cross_product - cross),
                                 std::abs(r.energy_ratio - ratio)});
    }
    {
        const std::size_t n = 64;
        const Signal x(oracle::random_vector(rng, n), 1.0);
        const std::vector<double> ladder{0.3, 0.15};
        const Decomposition d = fmd_decompose(x, ladder, 16, FmdPart::a);
        const LinoepReport r = verify_linoep(d);
        const std::size_t m = d.band_count();
        long double energy = 0.0L;
        std::vector<double> centered(n, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            energy += oracle::inner(d.components[i], d.components[i]);
            for (std::size_t k = 0; k < n; ++k) centered[k] += d.components[i][k];
        }
        double pairwise = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<double> tail(n, 0.0);
            for (std::size_t l = i + 1; l < m; ++l) {
                for (std::size_t k = 0; k < n; ++k) tail[k] += d.components[l][k];
                pairwise = std::max(pairwise, direct_normalized(d.components[i], d.components[l]));
            }
            if (i + 1 < m) {
                worst_report = std::max(worst_report, std::abs(r.tail_orthogonality[i] -
                                                               direct_normalized(d.components[i], tail)));
            }
        }
        worst_report = std::max({worst_report, std::abs(r.max_pairwise - pairwise),
                                 std::abs(r.energy_ratio - static_cast<double>(energy / oracle::inner(centered, centered)))});
    }
    return {worst_fft <= kOracleDftRelTol && worst_report <= kOracleReportTol,
            "dft/idft rel " + fmt(worst_fft) + ", report deviation " + fmt(worst_report)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"01 positive IF stays in [0, fs/2]", positivity},
        {"02 unit sample IF and envelope", delta},
        {"03 harmonic sum IF", harmonics},
        {"04 two-component average and decomposed ridges", two_tone_average},
        {"05 pure tone IF", pure_tone},
        {"06 DFT filter bank identities", dft_decomposition},
        {"07 FMD identities", fmd},
        {"08 zero-phase vs causal lag", zero_phase_contract},
        {"09 chirp tracking (central)", chirp_tracking},
        {"10 conventional vs positive sign", conventional_contrast},
        {"11 direct-summation equivalence", oracle_equivalence},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
