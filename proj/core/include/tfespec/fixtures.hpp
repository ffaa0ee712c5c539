#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfespec/ridge.hpp"
#include "tfespec/signal.hpp"

namespace tfespec {

/// A synthetic test signal together with its known IF ridges (empty when unknown).
struct Fixture {
    std::string name;
    Signal signal;
    std::vector<Ridge> ridges;
};

// Defaults reproduce the worked examples: 8 kHz chirp/FM material, the
// n0 = 1999 unit sample at 1 kHz, and 10240 samples of unit white noise at 100 Hz.

[[nodiscard]] Fixture fixture_chirp(double sample_rate = 8000.0, double duration = 1.0,
                                    double f0 = 1000.0, double f1 = 2000.0);
[[nodiscard]] Fixture fixture_fm(double sample_rate = 8000.0, double duration = 1.0,
                                 double modulation_rate = 2.0);
/// Chirp 1000-2000 Hz plus FM 780 +/- 200 Hz.
[[nodiscard]] Fixture fixture_chirp_fm_mixture(double sample_rate = 8000.0, double duration = 1.0,
                                               double modulation_rate = 2.0);
/// Chirps [500-1500], [1000-2000], ..., [2500-3500] Hz.
[[nodiscard]] Fixture fixture_five_chirps(double sample_rate = 8000.0, double duration = 1.0);
/// 500-1500 Hz chirp over [0, 1) s plus the same chirp delayed by 0.5 s, 1.5 s frame.
[[nodiscard]] Fixture fixture_delayed_chirp(double sample_rate = 8000.0);
[[nodiscard]] Fixture fixture_delta(std::size_t n0 = 1999, std::size_t length = 4000,
                                    double sample_rate = 1000.0);
[[nodiscard]] Fixture fixture_noise(std::uint64_t seed = 1, std::size_t length = 10240,
                                    double sample_rate = 100.0);
/// sum_{k=1..count} cos(2 pi k f0 t).
[[nodiscard]] Fixture fixture_harmonics(double f0 = 100.0, std::size_t count = 5,
                                        double sample_rate = 4000.0, double duration = 1.0);
[[nodiscard]] Fixture fixture_tone(double frequency, double sample_rate, double duration);

struct FixtureOptions {
    std::optional<double> sample_rate;
    std::optional<double> duration;
    std::optional<std::size_t> length;
    std::uint64_t seed = 1;
    double modulation_rate = 2.0;
};

/// Named fixture lookup used by the CLI. Throws std::invalid_argument for unknown names.
[[nodiscard]] Fixture make_fixture(std::string_view name, const FixtureOptions& options = {});
[[nodiscard]] std::vector<std::string_view> fixture_names();

}  // namespace tfespec
