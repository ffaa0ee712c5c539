#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tfespec/signal.hpp"

namespace tfespec {

enum class DiffScheme { forward, backward, central };

/// conventional: raw phase derivative, may be negative.
/// positive: negative derivatives shifted by a multiple of pi into [0, pi].
enum class IfMode { conventional, positive };

/// Per-sample instantaneous frequency and energy of one signal or component.
struct IFTrack {
    std::vector<double> frequency_hz;
    std::vector<double> energy;  ///< a^2[n]
    double sample_rate = 1.0;

    [[nodiscard]] std::size_t size() const noexcept { return frequency_hz.size(); }
};

/// Finite-difference phase derivative in rad/sample, same length as the input.
/// Boundary samples duplicate the nearest computed difference.
[[nodiscard]] std::vector<double> phase_diff(std::span<const double> phase_unwrapped, DiffScheme scheme);

/// f[n] = diffs[n] * fs / (2 pi). Negative values are kept.
[[nodiscard]] std::vector<double> conventional_if(std::span<const double> diffs, double sample_rate);

/// Maps one phase increment (rad/sample) to the non-negative frequency in [0, pi]:
/// d if d >= 0, d + pi if that lands in [0, pi], otherwise d + k*pi for the
/// integer k that does.
[[nodiscard]] double positive_increment(double diff);

/// Positive instantaneous frequency in Hz, every value in [0, fs/2].
/// Throws std::invalid_argument on non-finite input.
[[nodiscard]] std::vector<double> positive_if(std::span<const double> diffs, double sample_rate);

/// analytic_signal -> unwrap -> phase_diff -> IF, energy = envelope^2.
[[nodiscard]] IFTrack if_track(const Signal& x, DiffScheme scheme = DiffScheme::forward,
                               IfMode mode = IfMode::positive);

struct IfDiagnostics {
    std::size_t samples = 0;
    std::size_t negative_samples = 0;
    double negative_fraction = 0.0;
};

[[nodiscard]] IfDiagnostics if_diagnostics(std::span<const IFTrack> tracks);

[[nodiscard]] std::string_view to_string(DiffScheme scheme) noexcept;
[[nodiscard]] std::string_view to_string(IfMode mode) noexcept;
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] DiffScheme parse_diff_scheme(std::string_view name);
[[nodiscard]] IfMode parse_if_mode(std::string_view name);

}  // namespace tfespec
