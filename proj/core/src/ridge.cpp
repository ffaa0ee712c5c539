#include "tfespec/ridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numeric.hpp"

namespace tfespec {

RidgeReport ridge_report(std::span<const IFTrack> tracks, std::span<const Ridge> ridges,
                         double tolerance_hz) {
    struct Sample {
        double error;
        double energy;
    };
    std::vector<Sample> scored;
    for (const IFTrack& track : tracks) {
        for (std::size_t n = 0; n < track.size(); ++n) {
            const double t = static_cast<double>(n) / track.sample_rate;
            double best = std::numeric_limits<double>::infinity();
            for (const Ridge& r : ridges) {
                if (r.active(t)) best = std::min(best, std::abs(track.frequency_hz[n] - r.frequency(t)));
            }
            if (std::isfinite(best)) scored.push_back({best, track.energy[n]});
        }
    }

    RidgeReport report;
    report.samples = scored.size();
    detail::CompensatedSum total;
    detail::CompensatedSum within;
    detail::CompensatedSum weighted;
    for (const Sample& s : scored) {
        total.add(s.energy);
        weighted.add(s.energy * s.error);
        if (s.error <= tolerance_hz) within.add(s.energy);
    }
    report.energy = total.value();
    if (report.energy <= 0.0) return report;
    report.fraction_within = within.value() / report.energy;
    report.mean_abs_error_hz = weighted.value() / report.energy;

    std::sort(scored.begin(), scored.end(), [](const Sample& a, const Sample& b) { return a.error < b.error; });
    double running = 0.0;
    for (const Sample& s : scored) {
        running += s.energy;
        if (running >= 0.5 * report.energy) {
            report.median_abs_error_hz = s.error;
            break;
        }
    }
    return report;
}

}  // namespace tfespec
