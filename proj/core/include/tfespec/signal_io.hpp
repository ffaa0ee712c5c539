#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "tfespec/signal.hpp"

namespace tfespec {

/// Reads a signal CSV: an optional `# sample_rate=<Hz>` line followed by one
/// sample per line. `sample_rate_override`, when given, wins over the header.
/// Throws std::runtime_error on I/O or parse failures (message carries path and line).
[[nodiscard]] Signal load_csv(const std::filesystem::path& path,
                              std::optional<double> sample_rate_override = std::nullopt);

/// Writes the sample-rate header and 17 significant digits per sample.
void save_csv(const Signal& x, const std::filesystem::path& path);

/// Reads a mono 16-bit PCM RIFF/WAVE file; samples are scaled by 1/32768.
[[nodiscard]] Signal load_wav(const std::filesystem::path& path);

/// Dispatches on extension: `.wav` goes to load_wav, everything else to load_csv.
[[nodiscard]] Signal load_signal(const std::filesystem::path& path,
                                 std::optional<double> sample_rate_override = std::nullopt);

/// 17 significant digits, enough to round-trip any double.
[[nodiscard]] std::string format_double(double v);

}  // namespace tfespec
