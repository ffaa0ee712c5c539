#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfespec/decomposition.hpp"
#include "tfespec/filterbank.hpp"
#include "tfespec/fixtures.hpp"
#include "tfespec/ifreq.hpp"
#include "tfespec/ridge.hpp"
#include "tfespec/signal.hpp"

namespace tfespec::cli {

inline constexpr std::string_view kDiagnosticsSchema = "tfespec.diagnostics/1";

/// One source of settings (a JSON file or the command line). Unset fields
/// defer to lower layers.
struct ConfigLayer {
    std::optional<std::string> fixture;
    std::optional<std::filesystem::path> input;
    std::optional<double> fs;
    std::optional<double> duration;
    std::optional<std::size_t> length;
    std::optional<std::uint64_t> seed;
    std::optional<double> modulation_rate;
    std::optional<std::string> method;
    std::optional<BandPlanSpec> band_plan;
    std::optional<std::size_t> order;
    std::optional<std::string> scheme;
    std::optional<std::string> if_mode;
    std::optional<std::string> out_prefix;
    std::optional<std::size_t> time_bins;
    std::optional<std::size_t> freq_bins;
    std::optional<double> ridge_tolerance_hz;
};

/// Keys: fixture, input, fs, duration, length, seed, modulation_rate, method,
/// bands | cutoffs_hz | band_plan (object or path), order, scheme, if,
/// out_prefix, time_bins, freq_bins, ridge_tolerance_hz. Unknown keys are errors.
/// Relative paths resolve against `base_dir`.
[[nodiscard]] ConfigLayer parse_config_json(std::string_view text, const std::filesystem::path& base_dir = {});
[[nodiscard]] ConfigLayer load_config_file(const std::filesystem::path& path);

/// Fields set in `overlay` replace those in `base`.
[[nodiscard]] ConfigLayer merge(ConfigLayer base, const ConfigLayer& overlay);

struct RunConfig {
    std::optional<std::string> fixture;
    std::optional<std::filesystem::path> input;
    FixtureOptions fixture_options;
    std::optional<double> fs_override;
    std::optional<DecompositionMethod> method;  ///< nullopt = no decomposition
    std::optional<BandPlanSpec> band_plan;
    std::size_t order = 256;
    DiffScheme scheme = DiffScheme::forward;
    IfMode if_mode = IfMode::positive;
    std::string out_prefix = "tfespec";
    std::size_t time_bins = 400;
    std::size_t freq_bins = 250;
    double ridge_tolerance_hz = 60.0;
};

/// Applies defaults and checks cross-field rules. Throws std::invalid_argument.
[[nodiscard]] RunConfig resolve(const ConfigLayer& layer);

[[nodiscard]] std::string method_name(const std::optional<DecompositionMethod>& method);

/// Worker cap from TFESPEC_THREADS; hardware concurrency when unset.
[[nodiscard]] std::size_t thread_cap();
[[nodiscard]] std::size_t parse_thread_cap(const char* value);

struct LoadedInput {
    Signal signal;
    std::string source;
    std::vector<Ridge> ridges;
};

[[nodiscard]] LoadedInput load_input(const RunConfig& cfg);

}  // namespace tfespec::cli
