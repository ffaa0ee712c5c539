#include "tfespec/ifreq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "numeric.hpp"
#include "tfespec/analytic.hpp"

namespace tfespec {

using detail::kPi;
using detail::kTwoPi;

std::vector<double> phase_diff(std::span<const double> phase, DiffScheme scheme) {
    const std::size_t n = phase.size();
    const std::size_t min_len = scheme == DiffScheme::central ? 3 : 2;
    if (n < min_len) {
        throw std::invalid_argument("phase_diff: need at least " + std::to_string(min_len) +
                                    " samples for scheme " + std::string(to_string(scheme)));
    }
    std::vector<double> d(n);
    switch (scheme) {
        case DiffScheme::forward:
            for (std::size_t i = 0; i + 1 < n; ++i) d[i] = phase[i + 1] - phase[i];
            d[n - 1] = d[n - 2];
            break;
        case DiffScheme::backward:
            for (std::size_t i = 1; i < n; ++i) d[i] = phase[i] - phase[i - 1];
            d[0] = d[1];
            break;
        case DiffScheme::central:
            for (std::size_t i = 1; i + 1 < n; ++i) d[i] = 0.5 * (phase[i + 1] - phase[i - 1]);
            d[0] = d[1];
            d[n - 1] = d[n - 2];
            break;
    }
    return d;
}

std::vector<double> conventional_if(std::span<const double> diffs, double sample_rate) {
    std::vector<double> f(diffs.size());
    const double scale = sample_rate / kTwoPi;
    for (std::size_t i = 0; i < diffs.size(); ++i) f[i] = diffs[i] * scale;
    return f;
}

double positive_increment(double diff) {
    if (!std::isfinite(diff)) {
        throw std::invalid_argument("positive_if: non-finite phase increment");
    }
    if (diff >= 0.0 && diff <= kPi) return diff;
    const double shifted = diff + kPi;
    if (shifted >= 0.0 && shifted <= kPi) return shifted;
    // Far outside (-pi, pi]: pick k with diff + k*pi in [0, pi).
    const double reduced = diff - kPi * std::floor(diff / kPi);
    return std::min(std::max(reduced, 0.0), kPi);
}

std::vector<double> positive_if(std::span<const double> diffs, double sample_rate) {
    std::vector<double> f(diffs.size());
    const double scale = sample_rate / kTwoPi;
    // pi * fs / (2 pi) can round one ulp past fs/2.
    const double nyquist = sample_rate / 2.0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        f[i] = std::min(positive_increment(diffs[i]) * scale, nyquist);
    }
    return f;
}

IFTrack if_track(const Signal& x, DiffScheme scheme, IfMode mode) {
    const AnalyticSignal z = analytic_signal(x);
    const std::vector<double> diffs = phase_diff(z.phase_unwrapped, scheme);

    IFTrack track;
    track.sample_rate = x.sample_rate();
    track.frequency_hz = mode == IfMode::positive ? positive_if(diffs, x.sample_rate())
                                                  : conventional_if(diffs, x.sample_rate());
    track.energy.resize(z.size());
    for (std::size_t n = 0; n < z.size(); ++n) track.energy[n] = z.envelope[n] * z.envelope[n];
    return track;
}

IfDiagnostics if_diagnostics(std::span<const IFTrack> tracks) {
    IfDiagnostics diag;
    for (const IFTrack& t : tracks) {
        diag.samples += t.size();
        for (double f : t.frequency_hz) {
            if (f < 0.0) ++diag.negative_samples;
        }
    }
    if (diag.samples > 0) {
        diag.negative_fraction =
            static_cast<double>(diag.negative_samples) / static_cast<double>(diag.samples);
    }
    return diag;
}

std::string_view to_string(DiffScheme scheme) noexcept {
    switch (scheme) {
        case DiffScheme::forward: return "forward";
        case DiffScheme::backward: return "backward";
        case DiffScheme::central: return "central";
    }
    return "?";
}

std::string_view to_string(IfMode mode) noexcept {
    return mode == IfMode::positive ? "positive" : "conventional";
}

DiffScheme parse_diff_scheme(std::string_view name) {
    if (name == "forward") return DiffScheme::forward;
    if (name == "backward") return DiffScheme::backward;
    if (name == "central") return DiffScheme::central;
    throw std::invalid_argument("unknown difference scheme '" + std::string(name) +
                                "' (expected forward, backward or central)");
}

IfMode parse_if_mode(std::string_view name) {
    if (name == "positive") return IfMode::positive;
    if (name == "conventional") return IfMode::conventional;
    throw std::invalid_argument("unknown IF mode '" + std::string(name) +
                                "' (expected positive or conventional)");
}

}  // namespace tfespec
