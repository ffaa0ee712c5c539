#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfespec/decomposition.hpp"
#include "tfespec/fir.hpp"
#include "tfespec/signal.hpp"

namespace tfespec {

/// PART A peels highpass stages (components ordered high to low frequency);
/// PART B peels lowpass stages (low to high).
enum class FmdPart { a, b };

enum class FilterPhase { zero_phase, causal };

/// One iteration of the filter mode decomposition.
struct FmdStep {
    std::vector<double> y;  ///< filtered stage input
    std::vector<double> r;  ///< x_i - y
    std::vector<double> c;  ///< emitted component, orthogonal to the next stage input
    double alpha = 0.0;
    double cutoff_hz = 0.0;
};

struct FmdResult {
    Decomposition decomposition;
    std::vector<FmdStep> steps;
};

/// Denominators below this fraction of |x - mean|^2 make alpha zero.
inline constexpr double kFmdDegenerateRatio = 1e-14;

/// Filter mode decomposition into LINOEP components. The mean is removed
/// first and becomes c0. `cutoffs_hz` holds the M-1 stage cutoffs: strictly
/// decreasing for PART A, strictly increasing for PART B. Each stage i:
///   A: y = ZPHPF(x_i), r = x_i - y, alpha = <y,r>/<r,r>, c_i = y - alpha r, x_{i+1} = (1+alpha) r
///   B: y = ZPLPF(x_i), r = x_i - y, alpha = <r,y>/<y,y>, c_i = (1+alpha) y, x_{i+1} = r - alpha y
/// and c_M = x_M. With FilterPhase::causal the stage filter is causal_filter
/// (the conventional, non zero-phase contrast decomposition).
[[nodiscard]] FmdResult fmd_run(const Signal& x, std::span<const double> cutoffs_hz,
                                std::size_t order, FmdPart part,
                                FilterPhase phase = FilterPhase::zero_phase);

[[nodiscard]] Decomposition fmd_decompose(const Signal& x, std::span<const double> cutoffs_hz,
                                          std::size_t order, FmdPart part);

/// Same recursion with causal stage filters; tagged causal-fir.
[[nodiscard]] Decomposition causal_fir_decompose(const Signal& x, std::span<const double> cutoffs_hz,
                                                 std::size_t order, FmdPart part = FmdPart::a);

/// Orders an ascending cutoff ladder the way `part` consumes it.
[[nodiscard]] std::vector<double> ladder_for_part(std::span<const double> ascending, FmdPart part);

struct LinoepReport {
    /// |<c_i, sum_{l>i} c_l>| / (|c_i| |sum_{l>i} c_l|) for i = 1..M-1.
    std::vector<double> tail_orthogonality;
    double max_tail_orthogonality = 0.0;
    /// sum_i |c_i|^2 / |x - c0|^2
    double energy_ratio = 1.0;
    /// Largest normalized pairwise |<c_i, c_l>|; not required to vanish.
    double max_pairwise = 0.0;
};

/// Requires an fmd-A, fmd-B or causal-fir decomposition.
[[nodiscard]] LinoepReport verify_linoep(const Decomposition& d);

}  // namespace tfespec
