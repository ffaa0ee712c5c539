#include "tfespec/signal_io.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace tfespec {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return value;
}

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), ptr);
}

Signal load_csv(const std::filesystem::path& path, std::optional<double> sample_rate_override) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open for reading");

    std::optional<double> header_rate;
    std::vector<double> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const std::string_view body = trim(text.substr(1));
            constexpr std::string_view key = "sample_rate=";
            if (body.starts_with(key)) {
                header_rate = parse_double(body.substr(key.size()));
                if (!header_rate || !(*header_rate > 0.0)) {
                    fail(path, "line " + std::to_string(line_no) + ": invalid sample_rate header");
                }
            }
            continue;
        }
        const auto value = parse_double(text);
        if (!value) {
            fail(path, "line " + std::to_string(line_no) + ": malformed sample '" + std::string(text) + "'");
        }
        samples.push_back(*value);
    }
    if (in.bad()) fail(path, "read error");

    const std::optional<double> rate = sample_rate_override ? sample_rate_override : header_rate;
    if (!rate) {
        fail(path, "no '# sample_rate=<Hz>' header and no sample rate override given");
    }
    try {
        return Signal(std::move(samples), *rate);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

void save_csv(const Signal& x, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open for writing");
    out << "# sample_rate=" << format_double(x.sample_rate()) << '\n';
    for (double v : x.samples()) out << format_double(v) << '\n';
    out.flush();
    if (!out) fail(path, "write error");
}

Signal load_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open for reading");
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::size_t size = bytes.size();

    if (size < 12 || bytes.compare(0, 4, "RIFF") != 0 || bytes.compare(8, 4, "WAVE") != 0) {
        fail(path, "not a RIFF/WAVE file");
    }

    bool have_fmt = false;
    std::uint16_t channels = 0;
    std::uint16_t bits = 0;
    std::uint32_t rate = 0;
    std::size_t pos = 12;
    while (pos + 8 <= size) {
        const std::string_view id(bytes.data() + pos, 4);
        const std::uint32_t chunk_size = read_u32(data + pos + 4);
        const std::size_t body = pos + 8;
        if (body + chunk_size > size) fail(path, "truncated chunk '" + std::string(id) + "'");

        if (id == "fmt ") {
            if (chunk_size < 16) fail(path, "fmt chunk too small");
            const std::uint16_t format = read_u16(data + body);
            channels = read_u16(data + body + 2);
            rate = read_u32(data + body + 4);
            bits = read_u16(data + body + 14);
            if (format != 1) {
                fail(path, "unsupported encoding (format tag " + std::to_string(format) + "), need PCM");
            }
            if (channels != 1) {
                fail(path, "expected mono audio, got " + std::to_string(channels) + " channels");
            }
            if (bits != 16) {
                fail(path, "unsupported bit depth " + std::to_string(bits) + ", need 16-bit PCM");
            }
            have_fmt = true;
        } else if (id == "data") {
            if (!have_fmt) fail(path, "data chunk precedes fmt chunk");
            std::vector<double> samples(chunk_size / 2);
            for (std::size_t n = 0; n < samples.size(); ++n) {
                const auto raw = static_cast<std::int16_t>(read_u16(data + body + 2 * n));
                samples[n] = static_cast<double>(raw) / 32768.0;
            }
            try {
                return Signal(std::move(samples), static_cast<double>(rate));
            } catch (const std::invalid_argument& e) {
                fail(path, e.what());
            }
        }
        pos = body + chunk_size + (chunk_size & 1U);
    }
    fail(path, have_fmt ? "missing data chunk" : "missing fmt chunk");
}

Signal load_signal(const std::filesystem::path& path, std::optional<double> sample_rate_override) {
    if (path.extension() == ".wav" || path.extension() == ".WAV") {
        Signal s = load_wav(path);
        if (!sample_rate_override) return s;
        return Signal(std::move(s).take(), *sample_rate_override);
    }
    return load_csv(path, sample_rate_override);
}

}  // namespace tfespec
