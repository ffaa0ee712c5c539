#include "tfespec/fmd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace tfespec {

namespace {

void check_ladder(std::span<const double> cutoffs, FmdPart part) {
    for (std::size_t i = 1; i < cutoffs.size(); ++i) {
        const bool ok = part == FmdPart::a ? cutoffs[i] < cutoffs[i - 1] : cutoffs[i] > cutoffs[i - 1];
        if (!ok) {
            throw std::invalid_argument(part == FmdPart::a
                                            ? "fmd: PART A cutoffs must be strictly decreasing"
                                            : "fmd: PART B cutoffs must be strictly increasing");
        }
    }
}

std::vector<double> apply(const Signal& x, const FirFilter& h, FilterPhase phase) {
    return (phase == FilterPhase::zero_phase ? zero_phase_filter(x, h) : causal_filter(x, h)).values();
}

double safe_ratio(double num, double den, double floor) { return den > floor ? num / den : 0.0; }

}  // namespace

FmdResult fmd_run(const Signal& x, std::span<const double> cutoffs_hz, std::size_t order,
                  FmdPart part, FilterPhase phase) {
    check_ladder(cutoffs_hz, part);
    auto [c0, centered] = remove_mean(x);
    const double floor = kFmdDegenerateRatio * energy(centered.samples());

    FmdResult result;
    Decomposition& d = result.decomposition;
    d.c0 = c0;
    d.sample_rate = x.sample_rate();
    if (phase == FilterPhase::causal) {
        d.method = DecompositionMethod::causal_fir;
    } else {
        d.method = part == FmdPart::a ? DecompositionMethod::fmd_a : DecompositionMethod::fmd_b;
    }

    const FilterKind kind = part == FmdPart::a ? FilterKind::highpass : FilterKind::lowpass;
    std::vector<double> stage = std::move(centered).take();
    for (double cutoff : cutoffs_hz) {
        const FirFilter h = design_fir(kind, cutoff, order, x.sample_rate());
        FmdStep step;
        step.cutoff_hz = cutoff;
        step.y = apply(Signal(stage, x.sample_rate()), h, phase);
        step.r.resize(stage.size());
        for (std::size_t n = 0; n < stage.size(); ++n) step.r[n] = stage[n] - step.y[n];

        step.c.resize(stage.size());
        if (part == FmdPart::a) {
            step.alpha = safe_ratio(detail::dot(step.y, step.r), detail::dot(step.r, step.r), floor);
            for (std::size_t n = 0; n < stage.size(); ++n) {
                step.c[n] = step.y[n] - step.alpha * step.r[n];
                stage[n] = (1.0 + step.alpha) * step.r[n];
            }
        } else {
            step.alpha = safe_ratio(detail::dot(step.r, step.y), detail::dot(step.y, step.y), floor);
            for (std::size_t n = 0; n < stage.size(); ++n) {
                step.c[n] = (1.0 + step.alpha) * step.y[n];
                stage[n] = step.r[n] - step.alpha * step.y[n];
            }
        }
        d.components.push_back(step.c);
        result.steps.push_back(std::move(step));
    }
    d.components.push_back(std::move(stage));
    return result;
}

Decomposition fmd_decompose(const Signal& x, std::span<const double> cutoffs_hz, std::size_t order,
                            FmdPart part) {
    return fmd_run(x, cutoffs_hz, order, part, FilterPhase::zero_phase).decomposition;
}

Decomposition causal_fir_decompose(const Signal& x, std::span<const double> cutoffs_hz,
                                   std::size_t order, FmdPart part) {
    return fmd_run(x, cutoffs_hz, order, part, FilterPhase::causal).decomposition;
}

std::vector<double> ladder_for_part(std::span<const double> ascending, FmdPart part) {
    std::vector<double> out(ascending.begin(), ascending.end());
    if (part == FmdPart::a) std::reverse(out.begin(), out.end());
    return out;
}

LinoepReport verify_linoep(const Decomposition& d) {
    if (d.method == DecompositionMethod::dft) {
        throw std::invalid_argument("verify_linoep: requires an FMD decomposition, got dft");
    }
    LinoepReport report;
    const std::size_t m = d.band_count();
    const std::size_t n = d.length();
    if (m == 0) return report;

    std::vector<double> norms(m);
    detail::CompensatedSum component_energy;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = detail::dot(d.components[i], d.components[i]);
        norms[i] = std::sqrt(e);
        component_energy.add(e);
    }

    // Suffix sums: tail = sum_{l > i} c_l, built from the back.
    std::vector<double> tail(d.components.back());
    report.tail_orthogonality.assign(m - 1, 0.0);
    for (std::size_t i = m - 1; i-- > 0;) {
        const double tail_norm = std::sqrt(detail::dot(tail, tail));
        if (norms[i] > 0.0 && tail_norm > 0.0) {
            report.tail_orthogonality[i] =
                std::abs(detail::dot(d.components[i], tail)) / (norms[i] * tail_norm);
        }
        for (std::size_t k = 0; k < n; ++k) tail[k] += d.components[i][k];
    }
    for (double v : report.tail_orthogonality) {
        report.max_tail_orthogonality = std::max(report.max_tail_orthogonality, v);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = i + 1; l < m; ++l) {
            if (norms[i] == 0.0 || norms[l] == 0.0) continue;
            report.max_pairwise = std::max(
                report.max_pairwise,
                std::abs(detail::dot(d.components[i], d.components[l])) / (norms[i] * norms[l]));
        }
    }
    // After the loop `tail` holds sum_i c_i = x - c0.
    const double total = detail::dot(tail, tail);
    report.energy_ratio = total > 0.0 ? component_energy.value() / total : 1.0;
    return report;
}

}  // namespace tfespec
