#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tfespec {

/// Uniformly sampled, finite, real-valued sequence.
///
/// Holds at least two samples and a positive sample rate. The constructor
/// rejects NaN/Inf samples, so every Signal in the library is finite.
class Signal {
public:
    Signal(std::vector<double> samples, double sample_rate);

    [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return samples_; }
    [[nodiscard]] double sample_rate() const noexcept { return sample_rate_; }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] double duration() const noexcept {
        return static_cast<double>(samples_.size()) / sample_rate_;
    }
    [[nodiscard]] double operator[](std::size_t n) const noexcept { return samples_[n]; }

    /// Releases the sample buffer (the Signal is left empty and must not be used).
    [[nodiscard]] std::vector<double> take() && noexcept { return std::move(samples_); }

private:
    std::vector<double> samples_;
    double sample_rate_;
};

struct NoiseSpec {
    std::uint64_t seed = 0;
    double mean = 0.0;
    double variance = 1.0;
    std::size_t length = 0;
};

/// Linear chirp parameters with the closed-form phase and instantaneous frequency.
struct ChirpParams {
    double f0 = 0.0;
    double f1 = 0.0;
    double duration = 1.0;
    double amplitude = 1.0;

    [[nodiscard]] double phase(double t) const noexcept;
    [[nodiscard]] double frequency(double t) const noexcept;
};

/// Sinusoidal FM: cos(2*pi*fc*t + (deviation/fm) * sin(2*pi*fm*t)).
struct FmParams {
    double carrier = 0.0;
    double deviation = 0.0;
    double modulation_rate = 2.0;
    double duration = 1.0;

    [[nodiscard]] double phase(double t) const noexcept;
    [[nodiscard]] double frequency(double t) const noexcept;
};

/// Number of samples a frame of `duration` seconds occupies at `sample_rate`.
[[nodiscard]] std::size_t sample_count(double duration, double sample_rate);

[[nodiscard]] Signal gen_chirp(double f0, double f1, double duration, double sample_rate,
                               double amplitude = 1.0);
[[nodiscard]] Signal gen_fm(double carrier, double deviation, double modulation_rate,
                            double duration, double sample_rate);
[[nodiscard]] Signal gen_tone(double frequency, double duration, double sample_rate,
                              double amplitude = 1.0, double phase = 0.0);
[[nodiscard]] Signal gen_delta(std::size_t n0, std::size_t length, double sample_rate);
[[nodiscard]] Signal gen_noise(const NoiseSpec& spec, double sample_rate);

/// Pointwise sum. All inputs must share sample rate and length.
[[nodiscard]] Signal mix(std::span<const Signal> signals);

/// Places `x` at `delay` seconds inside a zero frame of `total_duration` seconds.
[[nodiscard]] Signal delay_pad(const Signal& x, double delay, double total_duration);

struct MeanRemoved {
    double c0;
    Signal signal;
};

[[nodiscard]] MeanRemoved remove_mean(const Signal& x);

[[nodiscard]] double energy(std::span<const double> x) noexcept;

}  // namespace tfespec
