#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "tfespec/signal.hpp"

namespace tfespec {

enum class DecompositionMethod { dft, fmd_a, fmd_b, causal_fir };

/// x[n] = c0 + sum_i components[i][n].
struct Decomposition {
    double c0 = 0.0;
    std::vector<std::vector<double>> components;
    DecompositionMethod method = DecompositionMethod::dft;
    double sample_rate = 1.0;

    [[nodiscard]] std::size_t band_count() const noexcept { return components.size(); }
    [[nodiscard]] std::size_t length() const noexcept {
        return components.empty() ? 0 : components.front().size();
    }
};

[[nodiscard]] std::vector<double> reconstruct(const Decomposition& d);

/// max_n |c0 + sum_i c_i[n] - x[n]| / max_n |x[n]| (absolute when x is all zero).
[[nodiscard]] double reconstruction_error(const Decomposition& d, const Signal& x);

[[nodiscard]] std::string_view to_string(DecompositionMethod method) noexcept;
/// Accepts "dft", "fmd-A", "fmd-B", "causal-fir".
[[nodiscard]] DecompositionMethod parse_decomposition_method(std::string_view name);

}  // namespace tfespec
