#include "pipeline.hpp"

#include <cmath>

#include "tfespec/filterbank.hpp"
#include "tfespec/fmd.hpp"
#include "tfespec/parallel.hpp"
#include "tfespec/ridge.hpp"

namespace tfespec::cli {

using nlohmann::json;

Decomposition decompose(const RunConfig& cfg, const Signal& x, std::size_t threads) {
    const DecompositionMethod method = *cfg.method;
    if (method == DecompositionMethod::dft) {
        return dft_decompose(x, resolve_band_plan(*cfg.band_plan, x.size(), x.sample_rate()), threads);
    }
    const std::vector<double> ascending = fir_cutoff_ladder(*cfg.band_plan, x.sample_rate());
    const FmdPart part = method == DecompositionMethod::fmd_b ? FmdPart::b : FmdPart::a;
    const std::vector<double> ladder = ladder_for_part(ascending, part);
    if (method == DecompositionMethod::causal_fir) return causal_fir_decompose(x, ladder, cfg.order, part);
    return fmd_decompose(x, ladder, cfg.order, part);
}

json decomposition_report(const Decomposition& d, const Signal& x, bool& ok) {
    json report;
    report["method"] = std::string(to_string(d.method));
    report["bands"] = d.band_count();
    report["c0"] = d.c0;
    const double recon = reconstruction_error(d, x);
    report["reconstruction_error"] = recon;
    const bool recon_ok = recon <= kReconstructionTol;
    report["reconstruction_ok"] = recon_ok;
    ok = ok && recon_ok;
    if (d.method == DecompositionMethod::dft) {
        const OrthogonalityReport o = verify_orthogonality(d);
        const bool orth_ok = o.max_cross_product <= kDftOrthogonalityTol &&
                             std::abs(o.energy_ratio - 1.0) <= kDftEnergyTol;
        report["orthogonality"] = {{"max_cross_product", o.max_cross_product},
                                   {"energy_ratio", o.energy_ratio},
                                   {"ok", orth_ok}};
        ok = ok && orth_ok;
    } else {
        const LinoepReport l = verify_linoep(d);
        const bool linoep_ok = l.max_tail_orthogonality <= kLinoepTol && std::abs(l.energy_ratio - 1.0) <= kLinoepTol;
        report["linoep"] = {{"tail_orthogonality", l.tail_orthogonality},
                            {"max_tail_orthogonality", l.max_tail_orthogonality},
                            {"energy_ratio", l.energy_ratio},
                            {"max_pairwise", l.max_pairwise},
                            {"ok", linoep_ok}};
        ok = ok && linoep_ok;
    }
    return report;
}

json config_report(const RunConfig& cfg, std::size_t threads) {
    json c;
    c["method"] = method_name(cfg.method);
    c["band_plan"] = cfg.band_plan ? json::parse(to_json(*cfg.band_plan)) : json(nullptr);
    c["order"] = cfg.order;
    c["scheme"] = std::string(to_string(cfg.scheme));
    c["if"] = std::string(to_string(cfg.if_mode));
    c["time_bins"] = cfg.time_bins;
    c["freq_bins"] = cfg.freq_bins;
    c["threads"] = threads;
    return c;
}

Analysis analyze(const RunConfig& cfg, const LoadedInput& input, std::size_t threads) {
    const Signal& x = input.signal;
    const double fs = x.sample_rate();
    Analysis a;
    a.diagnostics["schema"] = std::string(kDiagnosticsSchema);
    a.diagnostics["input"] = {{"source", input.source}, {"samples", x.size()}, {"sample_rate", fs}};
    a.diagnostics["config"] = config_report(cfg, threads);

    if (cfg.method) {
        a.decomposition = decompose(cfg, x, threads);
        a.diagnostics["decomposition"] = decomposition_report(*a.decomposition, x, a.invariants_ok);
        a.tracks.resize(a.decomposition->band_count());
        parallel_for(a.tracks.size(), threads, [&](std::size_t i) {
            a.tracks[i] = if_track(Signal(a.decomposition->components[i], fs), cfg.scheme, cfg.if_mode);
        });
    } else {
        a.diagnostics["decomposition"] = nullptr;
        a.tracks.push_back(if_track(x, cfg.scheme, cfg.if_mode));
    }

    const IfDiagnostics ifd = if_diagnostics(a.tracks);
    std::size_t out_of_range = 0;
    if (cfg.if_mode == IfMode::positive) {
        for (const IFTrack& t : a.tracks) {
            for (double f : t.frequency_hz) {
                if (!(f >= 0.0 && f <= fs / 2.0)) ++out_of_range;
            }
        }
    }
    a.invariants_ok = a.invariants_ok && out_of_range == 0;
    a.diagnostics["if"] = {{"mode", std::string(to_string(cfg.if_mode))},
                           {"tracks", a.tracks.size()},
                           {"samples", ifd.samples},
                           {"negative_samples", ifd.negative_samples},
                           {"negative_fraction", ifd.negative_fraction},
                           {"out_of_range_samples", out_of_range}};

    const FrequencySpan span = cfg.if_mode == IfMode::conventional ? FrequencySpan::two_sided : FrequencySpan::one_sided;
    a.grid = build_tfe(a.tracks, cfg.time_bins, cfg.freq_bins, span);
    long double track_energy = 0.0L;
    for (const IFTrack& t : a.tracks) {
        for (double e : t.energy) track_energy += e;
    }
    a.diagnostics["tfe"] = {{"time_bins", a.grid.time_bins()},
                            {"freq_bins", a.grid.freq_bins()},
                            {"span", span == FrequencySpan::one_sided ? "one-sided" : "two-sided"},
                            {"total_energy", a.grid.total()},
                            {"track_energy", static_cast<double>(track_energy)}};

    if (!input.ridges.empty()) {
        const RidgeReport r = ridge_report(a.tracks, input.ridges, cfg.ridge_tolerance_hz);
        a.diagnostics["ridges"] = {{"tolerance_hz", cfg.ridge_tolerance_hz},
                                   {"samples", r.samples},
                                   {"energy", r.energy},
                                   {"fraction_within", r.fraction_within},
                                   {"mean_abs_error_hz", r.mean_abs_error_hz},
                                   {"median_abs_error_hz", r.median_abs_error_hz}};
    } else {
        a.diagnostics["ridges"] = nullptr;
    }
    a.diagnostics["invariants_ok"] = a.invariants_ok;
    return a;
}

}  // namespace tfespec::cli
