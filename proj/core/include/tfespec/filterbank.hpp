#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfespec/decomposition.hpp"
#include "tfespec/signal.hpp"

namespace tfespec {

/// Partition of the one-sided DFT bins 1..K_M into M contiguous bands.
///
/// Boundaries are K_0 = 0 < K_1 < ... < K_M, with K_M = N/2 (even N) or
/// (N-1)/2 (odd N). Band i holds bins K_{i-1}+1 .. K_i and their mirrors
/// N-K_i .. N-K_{i-1}-1; the even-N Nyquist bin belongs to band M once.
/// The DC bin is in no band, it becomes the mean term c0.
class BandPlan {
public:
    BandPlan(std::vector<std::size_t> boundaries, std::size_t signal_length, double sample_rate);

    [[nodiscard]] const std::vector<std::size_t>& boundaries() const noexcept { return boundaries_; }
    [[nodiscard]] std::size_t signal_length() const noexcept { return signal_length_; }
    [[nodiscard]] double sample_rate() const noexcept { return sample_rate_; }
    [[nodiscard]] std::size_t band_count() const noexcept { return boundaries_.size() - 1; }

    /// Zero-based band index of DFT bin k; band_count() for the DC bin.
    [[nodiscard]] std::size_t band_of_bin(std::size_t k) const;

    /// Upper edge of band i (zero-based) in Hz, K_{i+1} * fs / N.
    [[nodiscard]] double upper_edge_hz(std::size_t band) const;

    /// Highest one-sided bin index for a length-N transform.
    [[nodiscard]] static std::size_t top_bin(std::size_t n) noexcept { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

private:
    std::vector<std::size_t> boundaries_;
    std::size_t signal_length_;
    double sample_rate_;
};

/// M bands whose bin counts differ by at most one. Requires 1 <= M <= floor(N/2).
[[nodiscard]] BandPlan uniform_band_plan(std::size_t bands, std::size_t n, double sample_rate);

/// Upper band edges in Hz, strictly increasing, ending at fs/2. Each edge maps
/// to bin round(f * N / fs) (halves round up); a band left without bins is an error.
[[nodiscard]] BandPlan custom_band_plan(std::span<const double> cutoffs_hz, std::size_t n,
                                        double sample_rate);

/// Zero-phase DFT filter bank: component i = IDFT(H_i[k] * X[k]) with 0/1 masks.
/// c0 is the DC bin X[0]. Bands are synthesized on up to `threads` workers.
[[nodiscard]] Decomposition dft_decompose(const Signal& x, const BandPlan& plan,
                                          std::size_t threads = 1);

struct OrthogonalityReport {
    double max_cross_product = 0.0;  ///< max_{i != l} |<y_i, y_l>| / (|y_i| |y_l|)
    double energy_ratio = 1.0;       ///< (sum_i |y_i|^2 + N c0^2) / |x|^2
};

/// Requires d.method == dft.
[[nodiscard]] OrthogonalityReport verify_orthogonality(const Decomposition& d);

/// Serializable band-plan description: {"type":"uniform","bands":M} or
/// {"type":"custom","cutoffs_hz":[...]}.
struct BandPlanSpec {
    enum class Kind { uniform, custom };
    Kind kind = Kind::uniform;
    std::size_t bands = 1;
    std::vector<double> cutoffs_hz;

    [[nodiscard]] static BandPlanSpec uniform(std::size_t m) { return {Kind::uniform, m, {}}; }
    [[nodiscard]] static BandPlanSpec custom(std::vector<double> cutoffs) {
        return {Kind::custom, cutoffs.size(), std::move(cutoffs)};
    }
};

/// Throws std::invalid_argument on malformed documents.
[[nodiscard]] BandPlanSpec parse_band_plan_json(std::string_view text);
[[nodiscard]] BandPlanSpec load_band_plan(const std::filesystem::path& path);
[[nodiscard]] std::string to_json(const BandPlanSpec& spec);

[[nodiscard]] BandPlan resolve_band_plan(const BandPlanSpec& spec, std::size_t n, double sample_rate);

/// Interior band edges in Hz, ascending, without fs/2: the FIR cutoff ladder
/// that lines FMD bands up with the DFT bands of the same spec.
[[nodiscard]] std::vector<double> fir_cutoff_ladder(const BandPlanSpec& spec, double sample_rate);

}  // namespace tfespec
