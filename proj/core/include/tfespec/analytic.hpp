#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfespec/signal.hpp"

namespace tfespec {

/// Discrete analytic signal z[n] = x[n] + j*xh[n] = a[n] * exp(j*phi[n]).
struct AnalyticSignal {
    std::vector<double> in_phase;         ///< x[n], copied from the source signal
    std::vector<double> quadrature;       ///< Hilbert transform xh[n]
    std::vector<double> envelope;         ///< a[n] >= 0
    std::vector<double> phase_unwrapped;  ///< phi[n], radians
    double sample_rate = 1.0;

    /// Samples whose envelope sits at the numerical zero floor. Their phase is
    /// not observable, so it is continued linearly from the preceding samples.
    std::size_t degenerate_samples = 0;

    [[nodiscard]] std::size_t size() const noexcept { return in_phase.size(); }
    /// True when every sample is degenerate (e.g. an all-zero input): phase is all zero.
    [[nodiscard]] bool degenerate() const noexcept {
        return degenerate_samples == in_phase.size();
    }
};

/// Envelope values at or below this fraction of the peak envelope are treated as zero.
inline constexpr double kEnvelopeZeroFloor = 1e-12;

/// Spectral construction: negative-frequency bins zeroed, positive bins doubled,
/// DC and (even N) Nyquist bins kept as they are. The in-phase part is the input
/// itself; the phase is atan2 in (-pi, pi] followed by unwrap_phase.
/// Requires at least 4 samples.
[[nodiscard]] AnalyticSignal analytic_signal(const Signal& x);

/// Quadrature by direct truncated convolution with (1 - cos(pi n)) / (pi n),
/// n in [-half_length, half_length]; samples outside the signal count as zero.
/// Independent cross-check of analytic_signal(). half_length >= 8.
[[nodiscard]] std::vector<double> hilbert_kernel_fir(const Signal& x, std::size_t half_length);

/// Kernel tap (1 - cos(pi n)) / (pi n), zero at n = 0.
[[nodiscard]] double hilbert_kernel_tap(long n) noexcept;

/// Wraps an angle into (-pi, pi].
[[nodiscard]] double wrap_phase(double angle) noexcept;

/// Adds multiples of 2*pi so that every consecutive difference lies in (-pi, pi].
/// output[0] == input[0], and output[n] - input[n] is an exact multiple of 2*pi.
[[nodiscard]] std::vector<double> unwrap_phase(std::span<const double> wrapped);

}  // namespace tfespec
