#include "tfespec/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "numeric.hpp"
#include "tfespec/fourier.hpp"

namespace tfespec {

using detail::kPi;
using detail::kTwoPi;

double wrap_phase(double angle) noexcept {
    return angle - kTwoPi * std::ceil((angle - kPi) / kTwoPi);
}

std::vector<double> unwrap_phase(std::span<const double> wrapped) {
    std::vector<double> out(wrapped.size());
    if (wrapped.empty()) return out;
    out[0] = wrapped[0];
    double turns = 0.0;
    for (std::size_t n = 1; n < wrapped.size(); ++n) {
        const double jump = wrapped[n] - wrapped[n - 1];
        turns -= std::ceil((jump - kPi) / kTwoPi);
        out[n] = wrapped[n] + kTwoPi * turns;
    }
    return out;
}

AnalyticSignal analytic_signal(const Signal& x) {
    const std::size_t n_samples = x.size();
    if (n_samples < 4) {
        throw std::invalid_argument("analytic_signal: at least 4 samples required");
    }

    std::vector<Complex> spectrum = dft(x.samples());
    const std::size_t half = n_samples / 2;
    const bool even = n_samples % 2 == 0;
    // Bins 1..ceil(N/2)-1 doubled; Nyquist (even N) and DC untouched; the rest zeroed.
    const std::size_t last_doubled = even ? half - 1 : half;
    for (std::size_t k = 1; k <= last_doubled; ++k) spectrum[k] *= 2.0;
    for (std::size_t k = last_doubled + 1 + (even ? 1 : 0); k < n_samples; ++k) spectrum[k] = 0.0;
    const std::vector<Complex> z = idft(spectrum);

    AnalyticSignal out;
    out.sample_rate = x.sample_rate();
    out.in_phase.assign(x.samples().begin(), x.samples().end());
    out.quadrature.resize(n_samples);
    out.envelope.resize(n_samples);
    for (std::size_t n = 0; n < n_samples; ++n) {
        out.quadrature[n] = z[n].imag();
        out.envelope[n] = std::hypot(out.in_phase[n], out.quadrature[n]);
    }

    const double peak = *std::max_element(out.envelope.begin(), out.envelope.end());
    const double floor = kEnvelopeZeroFloor * peak;

    std::vector<double> wrapped(n_samples);
    std::vector<bool> degenerate(n_samples, false);
    for (std::size_t n = 0; n < n_samples; ++n) {
        if (out.envelope[n] > floor) {
            wrapped[n] = std::atan2(out.quadrature[n], out.in_phase[n]);
            continue;
        }
        ++out.degenerate_samples;
        degenerate[n] = true;
        // Continue the phase through the zero at the slope of the preceding
        // step when both preceding samples are observable; otherwise use the
        // atan2(0, 0) = 0 convention.
        if (n >= 2 && !degenerate[n - 1] && !degenerate[n - 2]) {
            const double step = wrap_phase(wrapped[n - 1] - wrapped[n - 2]);
            wrapped[n] = wrap_phase(wrapped[n - 1] + step);
        } else {
            wrapped[n] = 0.0;
        }
    }
    out.phase_unwrapped = unwrap_phase(wrapped);
    return out;
}

double hilbert_kernel_tap(long n) noexcept {
    if (n % 2 == 0) return 0.0;
    return 2.0 / (kPi * static_cast<double>(n));
}

std::vector<double> hilbert_kernel_fir(const Signal& x, std::size_t half_length) {
    if (half_length < 8) {
        throw std::invalid_argument("hilbert_kernel_fir: half_length must be >= 8");
    }
    const auto n_samples = static_cast<long>(x.size());
    const auto h = static_cast<long>(half_length);
    std::vector<double> out(x.size(), 0.0);
    for (long n = 0; n < n_samples; ++n) {
        detail::CompensatedSum acc;
        const long k_lo = std::max(-h, n - (n_samples - 1));
        const long k_hi = std::min(h, n);
        for (long k = k_lo; k <= k_hi; ++k) {
            acc.add(hilbert_kernel_tap(k) * x[static_cast<std::size_t>(n - k)]);
        }
        out[static_cast<std::size_t>(n)] = acc.value();
    }
    return out;
}

}  // namespace tfespec
