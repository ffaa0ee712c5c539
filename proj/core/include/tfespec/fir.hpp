#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "tfespec/signal.hpp"

namespace tfespec {

enum class FilterKind { lowpass, highpass };

/// Symmetric (linear-phase) FIR filter with an odd number of taps.
struct FirFilter {
    std::vector<double> taps;
    double nominal_cutoff_hz = 0.0;
    FilterKind kind = FilterKind::lowpass;
    double sample_rate = 1.0;

    [[nodiscard]] std::size_t order() const noexcept { return taps.size() - 1; }
    [[nodiscard]] std::size_t group_delay() const noexcept { return order() / 2; }
};

inline constexpr std::size_t kDefaultFirOrder = 256;

/// Hamming-windowed sinc lowpass normalized to unit DC gain; the highpass is
/// its spectral inversion (centered unit impulse minus the lowpass).
/// Requires 0 < cutoff < fs/2 and an even order >= 16.
[[nodiscard]] FirFilter design_fir(FilterKind kind, double cutoff_hz, std::size_t order,
                                   double sample_rate);

/// Forward pass, time reversal, second pass, reversal. Both ends are padded
/// with an even reflection (edge sample not repeated) of taps-1 samples that
/// is trimmed afterwards. Magnitude response |H|^2, zero phase.
/// Requires x.size() > 3 * taps.
[[nodiscard]] Signal zero_phase_filter(const Signal& x, const FirFilter& h);

/// Single causal pass from zero initial state; output delayed by order/2.
[[nodiscard]] Signal causal_filter(const Signal& x, const FirFilter& h);

}  // namespace tfespec
