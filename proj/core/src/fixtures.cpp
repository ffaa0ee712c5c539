#include "tfespec/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace tfespec {

namespace {

Ridge chirp_ridge(const ChirpParams& c, double delay = 0.0) {
    return {delay, delay + c.duration, [c, delay](double t) { return c.frequency(t - delay); }};
}

}  // namespace

Fixture fixture_chirp(double sample_rate, double duration, double f0, double f1) {
    return {"chirp", gen_chirp(f0, f1, duration, sample_rate), {chirp_ridge({f0, f1, duration, 1.0})}};
}

Fixture fixture_fm(double sample_rate, double duration, double modulation_rate) {
    const FmParams fm{780.0, 200.0, modulation_rate, duration};
    return {"fm",
            gen_fm(fm.carrier, fm.deviation, fm.modulation_rate, duration, sample_rate),
            {Ridge{0.0, duration, [fm](double t) { return fm.frequency(t); }}}};
}

Fixture fixture_chirp_fm_mixture(double sample_rate, double duration, double modulation_rate) {
    Fixture chirp = fixture_chirp(sample_rate, duration);
    Fixture fm = fixture_fm(sample_rate, duration, modulation_rate);
    const std::array parts{chirp.signal, fm.signal};
    std::vector<Ridge> ridges = chirp.ridges;
    ridges.insert(ridges.end(), fm.ridges.begin(), fm.ridges.end());
    return {"mixture", mix(parts), std::move(ridges)};
}

Fixture fixture_five_chirps(double sample_rate, double duration) {
    std::vector<Signal> parts;
    std::vector<Ridge> ridges;
    for (int i = 0; i < 5; ++i) {
        const double f0 = 500.0 + 500.0 * i;
        parts.push_back(gen_chirp(f0, f0 + 1000.0, duration, sample_rate));
        ridges.push_back(chirp_ridge({f0, f0 + 1000.0, duration, 1.0}));
    }
    return {"five-chirps", mix(parts), std::move(ridges)};
}

Fixture fixture_delayed_chirp(double sample_rate) {
    const ChirpParams c{500.0, 1500.0, 1.0, 1.0};
    const Signal chirp = gen_chirp(c.f0, c.f1, c.duration, sample_rate);
    const std::array parts{delay_pad(chirp, 0.0, 1.5), delay_pad(chirp, 0.5, 1.5)};
    return {"delayed-chirp", mix(parts), {chirp_ridge(c, 0.0), chirp_ridge(c, 0.5)}};
}

Fixture fixture_delta(std::size_t n0, std::size_t length, double sample_rate) {
    return {"delta", gen_delta(n0, length, sample_rate), {}};
}

Fixture fixture_noise(std::uint64_t seed, std::size_t length, double sample_rate) {
    return {"noise", gen_noise({seed, 0.0, 1.0, length}, sample_rate), {}};
}

Fixture fixture_harmonics(double f0, std::size_t count, double sample_rate, double duration) {
    std::vector<Signal> parts;
    std::vector<Ridge> ridges;
    for (std::size_t k = 1; k <= count; ++k) {
        const double f = f0 * static_cast<double>(k);
        parts.push_back(gen_tone(f, duration, sample_rate));
        ridges.push_back({0.0, duration, [f](double) { return f; }});
    }
    return {"harmonics", mix(parts), std::move(ridges)};
}

Fixture fixture_tone(double frequency, double sample_rate, double duration) {
    return {"tone",
            gen_tone(frequency, duration, sample_rate),
            {Ridge{0.0, duration, [frequency](double) { return frequency; }}}};
}

std::vector<std::string_view> fixture_names() {
    return {"chirp", "fm", "mixture", "five-chirps", "delayed-chirp", "delta", "noise", "harmonics", "tone"};
}

Fixture make_fixture(std::string_view name, const FixtureOptions& o) {
    const auto rate = [&](double fallback) { return o.sample_rate.value_or(fallback); };
    const auto dur = [&](double fallback) {
        if (o.duration) return *o.duration;
        if (o.length && o.sample_rate) return static_cast<double>(*o.length) / *o.sample_rate;
        return fallback;
    };
    if (name == "chirp") return fixture_chirp(rate(8000.0), dur(1.0));
    if (name == "fm") return fixture_fm(rate(8000.0), dur(1.0), o.modulation_rate);
    if (name == "mixture") return fixture_chirp_fm_mixture(rate(8000.0), dur(1.0), o.modulation_rate);
    if (name == "five-chirps") return fixture_five_chirps(rate(8000.0), dur(1.0));
    if (name == "delayed-chirp") return fixture_delayed_chirp(rate(8000.0));
    if (name == "delta") {
        const std::size_t length = o.length.value_or(4000);
        return fixture_delta(length / 2 - 1, length, rate(1000.0));
    }
    if (name == "noise") return fixture_noise(o.seed, o.length.value_or(10240), rate(100.0));
    if (name == "harmonics") return fixture_harmonics(100.0, 5, rate(4000.0), dur(1.0));
    if (name == "tone") {
        const double fs = rate(8000.0);
        return fixture_tone(fs / 8.0, fs, dur(1.0));
    }
    std::string known;
    for (auto n : fixture_names()) known += (known.empty() ? "" : ", ") + std::string(n);
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace tfespec
