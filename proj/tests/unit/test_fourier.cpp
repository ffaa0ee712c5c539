#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "tfespec/fourier.hpp"

namespace tfespec {
namespace {

double max_rel_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return den > 0.0 ? num / den : num;
}

TEST(DftTest, UnitSampleHasFlatSpectrum) {
    const std::vector<double> x{1.0, 0.0, 0.0, 0.0};
    for (const Complex& v : dft(x)) {
        EXPECT_NEAR(v.real(), 0.25, 1e-15);
        EXPECT_NEAR(v.imag(), 0.0, 1e-15);
    }
}

TEST(DftTest, CosineLandsInBinsOneAndSeven) {
    std::vector<double> x(8);
    for (std::size_t n = 0; n < 8; ++n) x[n] = std::cos(2.0 * std::numbers::pi * static_cast<double>(n) / 8.0);
    const auto spectrum = dft(x);
    const auto expected = oracle::direct_dft(x);
    for (std::size_t k = 0; k < 8; ++k) {
        const double want = (k == 1 || k == 7) ? 0.5 : 0.0;
        EXPECT_NEAR(spectrum[k].real(), want, 1e-15) << "bin " << k;
        EXPECT_NEAR(spectrum[k].imag(), 0.0, 1e-15) << "bin " << k;
        EXPECT_NEAR(std::abs(spectrum[k] - expected[k]), 0.0, 1e-15);
    }
}

TEST(DftTest, RoundTripLength257) {
    std::mt19937_64 rng(257);
    const std::vector<double> x = oracle::random_vector(rng, 257);
    const auto back = idft(dft(x));
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
        err = std::max(err, std::abs(back[n] - Complex(x[n], 0.0)));
        scale = std::max(scale, std::abs(x[n]));
    }
    EXPECT_LT(err / scale, 1e-10);
}

TEST(DftTest, RejectsEmpty) {
    EXPECT_THROW((void)dft(std::span<const double>{}), std::invalid_argument);
    EXPECT_THROW((void)dft(std::span<const Complex>{}), std::invalid_argument);
    EXPECT_THROW((void)idft(std::span<const Complex>{}), std::invalid_argument);
}

TEST(DftTest, SingleSampleIsIdentity) {
    const std::vector<double> x{3.5};
    const auto s = dft(x);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], Complex(3.5, 0.0));
}

class DftOracleTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DftOracleTest, MatchesDirectSummation) {
    const std::size_t n = GetParam();
    std::mt19937_64 rng(n);
    std::vector<Complex> x(n);
    const auto re = oracle::random_vector(rng, n);
    const auto im = oracle::random_vector(rng, n);
    for (std::size_t i = 0; i < n; ++i) x[i] = {re[i], im[i]};
    EXPECT_LT(max_rel_diff(dft(x), oracle::direct_dft(x)), 1e-10);
    EXPECT_LT(max_rel_diff(idft(x), oracle::direct_idft(x)), 1e-10);
    EXPECT_LT(max_rel_diff(dft(re), oracle::direct_dft(re)), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Lengths, DftOracleTest,
                         ::testing::Values(1, 2, 3, 5, 7, 8, 12, 63, 64, 97, 100, 257, 1000, 1024));

TEST(DftTest, LargeNonPowerOfTwoRoundTrip) {
    std::mt19937_64 rng(5);
    const std::size_t n = 3 * 5 * 7 * 11 * 13;  // 15015
    const std::vector<double> x = oracle::random_vector(rng, n);
    const auto back = idft(dft(x));
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(back[i] - Complex(x[i], 0.0)));
    EXPECT_LT(err, 1e-10);
}

TEST(DftTest, RealInputSpectrumIsHermitian) {
    std::mt19937_64 rng(17);
    for (std::size_t n : {9u, 16u, 33u}) {
        const auto x = oracle::random_vector(rng, n);
        const auto s = dft(x);
        for (std::size_t k = 1; k < n; ++k) EXPECT_NEAR(std::abs(s[k] - std::conj(s[n - k])), 0.0, 1e-14);
    }
}

TEST(FftTest, PowerOfTwoHelpers) {
    EXPECT_TRUE(fft::is_power_of_two(1));
    EXPECT_TRUE(fft::is_power_of_two(1024));
    EXPECT_FALSE(fft::is_power_of_two(0));
    EXPECT_FALSE(fft::is_power_of_two(12));
    EXPECT_EQ(fft::next_power_of_two(1), 1u);
    EXPECT_EQ(fft::next_power_of_two(5), 8u);
    EXPECT_EQ(fft::next_power_of_two(1024), 1024u);
}

TEST(FftTest, UnnormalizedTransformPair) {
    std::mt19937_64 rng(3);
    const auto re = oracle::random_vector(rng, 100);
    std::vector<Complex> x(re.begin(), re.end());
    std::vector<Complex> y = x;
    fft::transform(y, -1);
    fft::transform(y, +1);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(std::abs(y[i] / 100.0 - x[i]), 0.0, 1e-12);
}

}  // namespace
}  // namespace tfespec
