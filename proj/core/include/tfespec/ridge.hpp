#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tfespec/ifreq.hpp"

namespace tfespec {

/// Known instantaneous-frequency curve of one fixture component, active on [t_begin, t_end).
struct Ridge {
    double t_begin = 0.0;
    double t_end = 0.0;
    std::function<double(double)> frequency;

    [[nodiscard]] bool active(double t) const noexcept { return t >= t_begin && t < t_end; }
};

struct RidgeReport {
    std::size_t samples = 0;         ///< track samples with at least one active ridge
    double energy = 0.0;             ///< energy carried by those samples
    double fraction_within = 0.0;    ///< energy share within tolerance of the nearest ridge
    double mean_abs_error_hz = 0.0;  ///< energy-weighted mean distance to the nearest ridge
    double median_abs_error_hz = 0.0;///< energy-weighted median of the same distance
};

/// Scores track samples against the nearest active ridge at each sample time.
/// Samples with no active ridge are left out.
[[nodiscard]] RidgeReport ridge_report(std::span<const IFTrack> tracks, std::span<const Ridge> ridges,
                                       double tolerance_hz);

}  // namespace tfespec
