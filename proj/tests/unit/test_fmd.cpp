#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "tfespec/filterbank.hpp"
#include "tfespec/fixtures.hpp"
#include "tfespec/fmd.hpp"

namespace tfespec {
namespace {

constexpr double kPi = std::numbers::pi;

double normalized(std::span<const double> a, std::span<const double> b) {
    return static_cast<double>(std::abs(oracle::inner(a, b)) / std::sqrt(oracle::inner(a, a) * oracle::inner(b, b)));
}

double spectral_centroid(std::span<const double> x) {
    const auto s = oracle::direct_dft(x);
    long double num = 0.0L;
    long double den = 0.0L;
    for (std::size_t k = 1; k <= x.size() / 2; ++k) {
        num += static_cast<long double>(k) * std::norm(s[k]);
        den += std::norm(s[k]);
    }
    return static_cast<double>(num / den);
}

TEST(FmdTest, TwoTonesPartA) {
    const double fs = 2000.0;
    std::vector<double> low(4000);
    std::vector<double> high(4000);
    std::vector<double> x(4000);
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double t = static_cast<double>(n) / fs;
        low[n] = std::cos(2.0 * kPi * 100.0 * t);
        high[n] = std::cos(2.0 * kPi * 400.0 * t);
        x[n] = low[n] + high[n];
    }
    const Signal s(x, fs);
    const std::vector<double> cutoffs{250.0};
    const Decomposition d = fmd_decompose(s, cutoffs, 256, FmdPart::a);
    ASSERT_EQ(d.band_count(), 2u);
    EXPECT_EQ(d.method, DecompositionMethod::fmd_a);

    // Reference: DFT split of the same signal at the same frequency.
    const std::vector<double> edges{250.0, 1000.0};
    const Decomposition ref = dft_decompose(s, custom_band_plan(edges, x.size(), fs));
    long double err_hi = 0.0L;
    long double err_lo = 0.0L;
    for (std::size_t n = 0; n < x.size(); ++n) {
        err_hi += std::pow(d.components[0][n] - ref.components[1][n], 2);
        err_lo += std::pow(d.components[1][n] - ref.components[0][n], 2);
    }
    EXPECT_LT(static_cast<double>(err_hi / oracle::inner(high, high)), 0.01);
    EXPECT_LT(static_cast<double>(err_lo / oracle::inner(low, low)), 0.01);
}

TEST(FmdTest, AlphaSmallWhenNearlyOrthogonal) {
    // Bin-aligned tones far from the cutoff: y and r are orthogonal up to filter ripple.
    const double fs = 1000.0;
    std::vector<double> x(2000);
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double t = static_cast<double>(n) / fs;
        x[n] = std::cos(2.0 * kPi * 50.0 * t) + std::cos(2.0 * kPi * 400.0 * t);
    }
    const std::vector<double> cutoffs{200.0};
    const FmdResult r = fmd_run(Signal(x, fs), cutoffs, 256, FmdPart::a);
    ASSERT_EQ(r.steps.size(), 1u);
    EXPECT_LT(std::abs(r.steps[0].alpha), 1e-3);
    for (std::size_t n = 0; n < x.size(); ++n) {
        ASSERT_NEAR(r.steps[0].c[n], r.steps[0].y[n] - r.steps[0].alpha * r.steps[0].r[n], 1e-15);
    }
}

TEST(FmdTest, StepAlgebraMatchesRecursion) {
    std::mt19937_64 rng(12);
    const Signal x(oracle::random_vector(rng, 1000), 100.0);
    const std::vector<double> cutoffs_a{30.0, 10.0};
    const FmdResult a = fmd_run(x, cutoffs_a, 64, FmdPart::a);
    for (const FmdStep& s : a.steps) {
        const double alpha = static_cast<double>(oracle::inner(s.y, s.r) / oracle::inner(s.r, s.r));
        EXPECT_NEAR(s.alpha, alpha, 1e-12);
        for (std::size_t n = 0; n < s.c.size(); ++n) ASSERT_NEAR(s.c[n], s.y[n] - alpha * s.r[n], 1e-12);
        // c_i is orthogonal to the next stage input (1 + alpha) r.
        EXPECT_LT(normalized(s.c, s.r), 1e-10);
    }
    const std::vector<double> cutoffs_b{10.0, 30.0};
    const FmdResult b = fmd_run(x, cutoffs_b, 64, FmdPart::b);
    for (const FmdStep& s : b.steps) {
        const double alpha = static_cast<double>(oracle::inner(s.r, s.y) / oracle::inner(s.y, s.y));
        EXPECT_NEAR(s.alpha, alpha, 1e-12);
        for (std::size_t n = 0; n < s.c.size(); ++n) ASSERT_NEAR(s.c[n], (1.0 + alpha) * s.y[n], 1e-12);
        std::vector<double> next(s.r.size());
        for (std::size_t n = 0; n < next.size(); ++n) next[n] = s.r[n] - alpha * s.y[n];
        EXPECT_LT(normalized(s.c, next), 1e-10);
    }
}

TEST(FmdTest, IdentitiesOnRandomInputsBothParts) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 600 + rng() % 3000;
        std::vector<double> v = oracle::random_vector(rng, n);
        for (double& s : v) s += 2.0;
        const Signal x(v, 100.0);
        const std::size_t m = 2 + rng() % 6;
        const auto ascending = fir_cutoff_ladder(BandPlanSpec::uniform(m), 100.0);
        for (FmdPart part : {FmdPart::a, FmdPart::b}) {
            const Decomposition d = fmd_decompose(x, ladder_for_part(ascending, part), 64, part);
            ASSERT_EQ(d.band_count(), m);
            EXPECT_LE(reconstruction_error(d, x), 1e-9);
            const LinoepReport r = verify_linoep(d);
            EXPECT_LE(r.max_tail_orthogonality, 1e-8);
            EXPECT_NEAR(r.energy_ratio, 1.0, 1e-8);
            long double mean = 0.0L;
            for (double s : v) mean += s;
            EXPECT_NEAR(d.c0, static_cast<double>(mean / n), 1e-12);
        }
    }
}

TEST(FmdTest, TwoComponentsArePairwiseOrthogonal) {
    std::mt19937_64 rng(14);
    const Signal x(oracle::random_vector(rng, 2000), 100.0);
    const std::vector<double> cutoffs{20.0};
    for (FmdPart part : {FmdPart::a, FmdPart::b}) {
        const Decomposition d = fmd_decompose(x, cutoffs, 64, part);
        EXPECT_LT(normalized(d.components[0], d.components[1]), 1e-8);
        EXPECT_LT(verify_linoep(d).max_pairwise, 1e-8);
    }
}

TEST(FmdTest, ComponentOrderFollowsPart) {
    const Fixture noise = fixture_noise(5, 2048, 100.0);
    const auto ascending = fir_cutoff_ladder(BandPlanSpec::uniform(4), 100.0);
    const Decomposition a = fmd_decompose(noise.signal, ladder_for_part(ascending, FmdPart::a), 64, FmdPart::a);
    const Decomposition b = fmd_decompose(noise.signal, ladder_for_part(ascending, FmdPart::b), 64, FmdPart::b);
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_GT(spectral_centroid(a.components[i - 1]), spectral_centroid(a.components[i]));
        EXPECT_LT(spectral_centroid(b.components[i - 1]), spectral_centroid(b.components[i]));
    }
}

TEST(FmdTest, DegenerateStagesGiveZeroComponents) {
    // A tone far below every highpass cutoff: the highpass output is ~0 and
    // later stages see nothing but the tone; reconstruction still holds.
    const Signal x = gen_tone(5.0, 4.0, 1000.0);
    const std::vector<double> cutoffs{400.0, 300.0};
    const Decomposition d = fmd_decompose(x, cutoffs, 128, FmdPart::a);
    EXPECT_LE(reconstruction_error(d, x), 1e-9);

    // Zero-mean-removed input (constant): every alpha is zero and all components vanish.
    const Signal c(std::vector<double>(1000, 4.0), 1000.0);
    const FmdResult r = fmd_run(c, cutoffs, 128, FmdPart::a);
    EXPECT_DOUBLE_EQ(r.decomposition.c0, 4.0);
    for (const FmdStep& s : r.steps) EXPECT_EQ(s.alpha, 0.0);
    for (const auto& comp : r.decomposition.components) {
        for (double v : comp) EXPECT_EQ(v, 0.0);
    }
}

TEST(FmdTest, LadderValidation) {
    const Signal x = gen_tone(5.0, 1.0, 1000.0);
    const std::vector<double> increasing{100.0, 200.0};
    const std::vector<double> decreasing{200.0, 100.0};
    EXPECT_THROW((void)fmd_decompose(x, increasing, 64, FmdPart::a), std::invalid_argument);
    EXPECT_THROW((void)fmd_decompose(x, decreasing, 64, FmdPart::b), std::invalid_argument);
    const std::vector<double> above{600.0};
    EXPECT_THROW((void)fmd_decompose(x, above, 64, FmdPart::a), std::invalid_argument);
    const std::vector<double> none;
    const Decomposition single = fmd_decompose(x, none, 64, FmdPart::a);
    EXPECT_EQ(single.band_count(), 1u);
    EXPECT_EQ(ladder_for_part(increasing, FmdPart::a), decreasing);
    EXPECT_EQ(ladder_for_part(increasing, FmdPart::b), increasing);
}

TEST(CausalFirDecomposeTest, StillReconstructsButDisplacesFeatures) {
    const Fixture five = fixture_five_chirps();
    const auto ascending = fir_cutoff_ladder(BandPlanSpec::uniform(5), 8000.0);
    const Decomposition causal =
        causal_fir_decompose(five.signal, ladder_for_part(ascending, FmdPart::a), 256);
    EXPECT_EQ(causal.method, DecompositionMethod::causal_fir);
    EXPECT_LE(reconstruction_error(causal, five.signal), 1e-9);
    const LinoepReport r = verify_linoep(causal);
    EXPECT_LE(r.max_tail_orthogonality, 1e-8);
}

TEST(VerifyLinoepTest, AgreesWithDirectComputation) {
    std::mt19937_64 rng(15);
    const Signal x(oracle::random_vector(rng, 64), 1.0);
    const std::vector<double> cutoffs{0.1, 0.2, 0.35};
    const Decomposition d = fmd_decompose(x, cutoffs, 16, FmdPart::b);
    const LinoepReport r = verify_linoep(d);
    ASSERT_EQ(r.tail_orthogonality.size(), 3u);
    std::vector<double> centered(64, 0.0);
    long double energy = 0.0L;
    for (const auto& c : d.components) {
        energy += oracle::inner(c, c);
        for (std::size_t n = 0; n < 64; ++n) centered[n] += c[n];
    }
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<double> tail(64, 0.0);
        for (std::size_t l = i + 1; l < 4; ++l) {
            for (std::size_t n = 0; n < 64; ++n) tail[n] += d.components[l][n];
        }
        EXPECT_NEAR(r.tail_orthogonality[i], normalized(d.components[i], tail), 1e-12);
    }
    EXPECT_NEAR(r.energy_ratio, static_cast<double>(energy / oracle::inner(centered, centered)), 1e-12);

    Decomposition dft = d;
    dft.method = DecompositionMethod::dft;
    EXPECT_THROW((void)verify_linoep(dft), std::invalid_argument);
}

}  // namespace
}  // namespace tfespec
