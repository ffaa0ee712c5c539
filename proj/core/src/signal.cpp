#include "tfespec/signal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace tfespec {

using detail::kTwoPi;

Signal::Signal(std::vector<double> samples, double sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
    if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_)) {
        throw std::invalid_argument("signal: sample_rate must be positive and finite");
    }
    if (samples_.size() < 2) {
        throw std::invalid_argument("signal: at least 2 samples required, got " +
                                    std::to_string(samples_.size()));
    }
    for (std::size_t n = 0; n < samples_.size(); ++n) {
        if (!std::isfinite(samples_[n])) {
            throw std::invalid_argument("signal: non-finite sample at index " + std::to_string(n));
        }
    }
}

double ChirpParams::phase(double t) const noexcept {
    return kTwoPi * (f0 * t + (f1 - f0) / (2.0 * duration) * t * t);
}

double ChirpParams::frequency(double t) const noexcept {
    return f0 + (f1 - f0) * t / duration;
}

double FmParams::phase(double t) const noexcept {
    return kTwoPi * carrier * t + (deviation / modulation_rate) * std::sin(kTwoPi * modulation_rate * t);
}

double FmParams::frequency(double t) const noexcept {
    return carrier + deviation * std::cos(kTwoPi * modulation_rate * t);
}

std::size_t sample_count(double duration, double sample_rate) {
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw std::invalid_argument("duration must be positive");
    }
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
        throw std::invalid_argument("sample_rate must be positive");
    }
    return static_cast<std::size_t>(std::llround(duration * sample_rate));
}

namespace {

void check_below_nyquist(double f, double sample_rate, const char* what) {
    if (!(f >= 0.0) || f > sample_rate / 2.0) {
        throw std::invalid_argument(std::string("aliasing: ") + what + " = " + std::to_string(f) +
                                    " Hz outside [0, " + std::to_string(sample_rate / 2.0) + "] Hz");
    }
}

}  // namespace

Signal gen_chirp(double f0, double f1, double duration, double sample_rate, double amplitude) {
    check_below_nyquist(f0, sample_rate, "f0");
    check_below_nyquist(f1, sample_rate, "f1");
    const std::size_t n_samples = sample_count(duration, sample_rate);
    const ChirpParams chirp{f0, f1, duration, amplitude};
    std::vector<double> out(n_samples);
    for (std::size_t n = 0; n < n_samples; ++n) {
        out[n] = amplitude * std::cos(chirp.phase(static_cast<double>(n) / sample_rate));
    }
    return Signal(std::move(out), sample_rate);
}

Signal gen_fm(double carrier, double deviation, double modulation_rate, double duration,
              double sample_rate) {
    if (!(modulation_rate > 0.0)) {
        throw std::invalid_argument("fm: modulation rate must be positive");
    }
    if (!(deviation >= 0.0)) {
        throw std::invalid_argument("fm: deviation must be non-negative");
    }
    check_below_nyquist(carrier, sample_rate, "carrier");
    check_below_nyquist(carrier + deviation, sample_rate, "carrier + deviation");
    const std::size_t n_samples = sample_count(duration, sample_rate);
    const FmParams fm{carrier, deviation, modulation_rate, duration};
    std::vector<double> out(n_samples);
    for (std::size_t n = 0; n < n_samples; ++n) {
        out[n] = std::cos(fm.phase(static_cast<double>(n) / sample_rate));
    }
    return Signal(std::move(out), sample_rate);
}

Signal gen_tone(double frequency, double duration, double sample_rate, double amplitude,
                double phase) {
    check_below_nyquist(frequency, sample_rate, "frequency");
    const std::size_t n_samples = sample_count(duration, sample_rate);
    std::vector<double> out(n_samples);
    for (std::size_t n = 0; n < n_samples; ++n) {
        out[n] = amplitude * std::cos(kTwoPi * frequency * static_cast<double>(n) / sample_rate + phase);
    }
    return Signal(std::move(out), sample_rate);
}

Signal gen_delta(std::size_t n0, std::size_t length, double sample_rate) {
    if (n0 >= length) {
        throw std::out_of_range("delta: n0 = " + std::to_string(n0) + " outside [0, " +
                                std::to_string(length) + ")");
    }
    std::vector<double> out(length, 0.0);
    out[n0] = 1.0;
    return Signal(std::move(out), sample_rate);
}

Signal gen_noise(const NoiseSpec& spec, double sample_rate) {
    if (!(spec.variance > 0.0) || !std::isfinite(spec.variance)) {
        throw std::invalid_argument("noise: variance must be positive");
    }
    if (!std::isfinite(spec.mean)) {
        throw std::invalid_argument("noise: mean must be finite");
    }
    std::mt19937_64 engine(spec.seed);
    std::normal_distribution<double> dist(spec.mean, std::sqrt(spec.variance));
    std::vector<double> out(spec.length);
    for (double& v : out) v = dist(engine);
    return Signal(std::move(out), sample_rate);
}

Signal mix(std::span<const Signal> signals) {
    if (signals.empty()) {
        throw std::invalid_argument("mix: no signals given");
    }
    const Signal& first = signals.front();
    std::vector<double> out(first.size(), 0.0);
    for (const Signal& s : signals) {
        if (s.size() != first.size() || s.sample_rate() != first.sample_rate()) {
            throw std::invalid_argument("mix: signals must share sample_rate and length");
        }
        for (std::size_t n = 0; n < out.size(); ++n) out[n] += s[n];
    }
    return Signal(std::move(out), first.sample_rate());
}

Signal delay_pad(const Signal& x, double delay, double total_duration) {
    if (!(delay >= 0.0)) {
        throw std::invalid_argument("delay_pad: negative delay");
    }
    const double fs = x.sample_rate();
    const auto lead = static_cast<std::size_t>(std::llround(delay * fs));
    const std::size_t total = sample_count(total_duration, fs);
    if (total < lead + x.size()) {
        throw std::invalid_argument("delay_pad: total_duration shorter than delay + duration(x)");
    }
    std::vector<double> out(total, 0.0);
    std::copy(x.samples().begin(), x.samples().end(), out.begin() + static_cast<std::ptrdiff_t>(lead));
    return Signal(std::move(out), fs);
}

MeanRemoved remove_mean(const Signal& x) {
    const double c0 = detail::sum(x.samples()) / static_cast<double>(x.size());
    std::vector<double> out(x.samples().begin(), x.samples().end());
    for (double& v : out) v -= c0;
    return {c0, Signal(std::move(out), x.sample_rate())};
}

double energy(std::span<const double> x) noexcept { return detail::dot(x, x); }

}  // namespace tfespec
