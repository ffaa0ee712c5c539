#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "json.hpp"
#include "tfespec/decomposition.hpp"
#include "tfespec/ifreq.hpp"
#include "tfespec/tfe.hpp"

namespace tfespec::cli {

// Invariant thresholds a run must meet for a zero exit status.
inline constexpr double kReconstructionTol = 1e-9;
inline constexpr double kDftOrthogonalityTol = 1e-10;
inline constexpr double kDftEnergyTol = 1e-10;
inline constexpr double kLinoepTol = 1e-8;

struct Analysis {
    std::optional<Decomposition> decomposition;
    std::vector<IFTrack> tracks;
    TFEGrid grid;
    nlohmann::json diagnostics;
    bool invariants_ok = true;
};

[[nodiscard]] Decomposition decompose(const RunConfig& cfg, const Signal& x, std::size_t threads);

/// Decomposition section of the diagnostics; clears `ok` when an invariant fails.
[[nodiscard]] nlohmann::json decomposition_report(const Decomposition& d, const Signal& x, bool& ok);

[[nodiscard]] nlohmann::json config_report(const RunConfig& cfg, std::size_t threads);

/// Optional decomposition, per-component IF, TFE grid and diagnostics.
[[nodiscard]] Analysis analyze(const RunConfig& cfg, const LoadedInput& input, std::size_t threads);

}  // namespace tfespec::cli
