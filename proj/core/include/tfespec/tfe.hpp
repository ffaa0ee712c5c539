#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "tfespec/ifreq.hpp"

namespace tfespec {

/// Time x frequency energy matrix, row-major by time bin.
struct TFEGrid {
    std::vector<double> time_edges;  ///< seconds, time_bins() + 1 ascending values
    std::vector<double> freq_edges;  ///< Hz, freq_bins() + 1 ascending values
    std::vector<double> energy;      ///< time_bins() * freq_bins() cells

    [[nodiscard]] std::size_t time_bins() const noexcept { return time_edges.empty() ? 0 : time_edges.size() - 1; }
    [[nodiscard]] std::size_t freq_bins() const noexcept { return freq_edges.empty() ? 0 : freq_edges.size() - 1; }
    [[nodiscard]] double at(std::size_t t, std::size_t f) const { return energy.at(t * freq_bins() + f); }
    [[nodiscard]] double total() const noexcept;
    /// Energy summed over time, per frequency bin.
    [[nodiscard]] std::vector<double> frequency_marginal() const;
};

/// one_sided: [0, fs/2] (positive IF). two_sided: [-fs/2, fs/2] (conventional IF).
enum class FrequencySpan { one_sided, two_sided };

inline constexpr std::size_t kDefaultTimeBins = 400;
inline constexpr std::size_t kDefaultFreqBins = 250;

/// Deposits energy[n] of every track sample into the cell containing
/// (n / fs, frequency_hz[n]). Time edges span [0, N / fs]; a frequency equal
/// to the upper edge lands in the top bin. Tracks must share sample rate and
/// length; a frequency outside the span is an error.
[[nodiscard]] TFEGrid build_tfe(std::span<const IFTrack> tracks,
                                std::size_t time_bins = kDefaultTimeBins,
                                std::size_t freq_bins = kDefaultFreqBins,
                                FrequencySpan span = FrequencySpan::one_sided);

/// First row: corner label then the frequency edges. Each following row: a
/// time edge, then that time bin's cells; the last row carries only the final
/// time edge. Rows are padded with empty fields to a rectangular shape.
void export_grid_csv(const TFEGrid& grid, const std::filesystem::path& path);
[[nodiscard]] TFEGrid load_grid_csv(const std::filesystem::path& path);

struct TfePoint {
    double time_s;
    double frequency_hz;
    double energy;
};

/// Header `time_s,frequency_hz,energy`, then one row per sample per track.
void export_track_csv(std::span<const IFTrack> tracks, const std::filesystem::path& path);
[[nodiscard]] std::vector<TfePoint> load_track_csv(const std::filesystem::path& path);

}  // namespace tfespec
