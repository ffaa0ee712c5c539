#include "tfespec/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "numeric.hpp"
#include "tfespec/signal_io.hpp"
#include "tfespec/fourier.hpp"
#include "tfespec/parallel.hpp"

namespace tfespec {

BandPlan::BandPlan(std::vector<std::size_t> boundaries, std::size_t signal_length, double sample_rate)
    : boundaries_(std::move(boundaries)), signal_length_(signal_length), sample_rate_(sample_rate) {
    if (signal_length_ < 2) throw std::invalid_argument("band plan: signal length must be >= 2");
    if (!(sample_rate_ > 0.0)) throw std::invalid_argument("band plan: sample_rate must be positive");
    if (boundaries_.size() < 2) throw std::invalid_argument("band plan: need at least one band");
    if (boundaries_.front() != 0) throw std::invalid_argument("band plan: K_0 must be 0");
    if (boundaries_.back() != top_bin(signal_length_)) {
        throw std::invalid_argument("band plan: K_M must be " + std::to_string(top_bin(signal_length_)));
    }
    for (std::size_t i = 1; i < boundaries_.size(); ++i) {
        if (boundaries_[i] <= boundaries_[i - 1]) {
            throw std::invalid_argument("band plan: band " + std::to_string(i) + " is empty");
        }
    }
}

std::size_t BandPlan::band_of_bin(std::size_t k) const {
    if (k >= signal_length_) throw std::out_of_range("band plan: bin index out of range");
    const std::size_t folded = std::min(k, signal_length_ - k);
    if (folded == 0) return band_count();
    // First boundary >= folded closes the band that owns it.
    const auto it = std::lower_bound(boundaries_.begin() + 1, boundaries_.end(), folded);
    return static_cast<std::size_t>(it - boundaries_.begin()) - 1;
}

double BandPlan::upper_edge_hz(std::size_t band) const {
    return static_cast<double>(boundaries_.at(band + 1)) * sample_rate_ /
           static_cast<double>(signal_length_);
}

BandPlan uniform_band_plan(std::size_t bands, std::size_t n, double sample_rate) {
    const std::size_t top = BandPlan::top_bin(n);
    if (bands < 1 || bands > n / 2 || bands > top) {
        throw std::invalid_argument("uniform_band_plan: need 1 <= M <= " + std::to_string(top) +
                                    ", got " + std::to_string(bands));
    }
    std::vector<std::size_t> k(bands + 1);
    for (std::size_t i = 0; i <= bands; ++i) k[i] = i * top / bands;
    return BandPlan(std::move(k), n, sample_rate);
}

BandPlan custom_band_plan(std::span<const double> cutoffs_hz, std::size_t n, double sample_rate) {
    if (cutoffs_hz.empty()) throw std::invalid_argument("custom_band_plan: no cutoffs");
    const double nyquist = sample_rate / 2.0;
    for (std::size_t i = 0; i < cutoffs_hz.size(); ++i) {
        const double f = cutoffs_hz[i];
        if (!(f > 0.0)) throw std::invalid_argument("custom_band_plan: cutoffs must be positive");
        if (f > nyquist * (1.0 + 1e-12)) {
            throw std::invalid_argument("custom_band_plan: cutoff " + std::to_string(f) +
                                        " Hz above Nyquist " + std::to_string(nyquist) + " Hz");
        }
        if (i > 0 && !(f > cutoffs_hz[i - 1])) {
            throw std::invalid_argument("custom_band_plan: cutoffs must be strictly increasing");
        }
    }
    if (std::abs(cutoffs_hz.back() - nyquist) > 1e-9 * nyquist) {
        throw std::invalid_argument("custom_band_plan: last cutoff must equal fs/2");
    }
    const std::size_t top = BandPlan::top_bin(n);
    std::vector<std::size_t> k{0};
    for (std::size_t i = 0; i + 1 < cutoffs_hz.size(); ++i) {
        const double exact = cutoffs_hz[i] * static_cast<double>(n) / sample_rate;
        const auto bin = static_cast<std::size_t>(std::floor(exact + 0.5));
        if (bin <= k.back() || bin >= top) {
            throw std::invalid_argument("custom_band_plan: band ending at " +
                                        std::to_string(cutoffs_hz[i]) + " Hz has no bins at N = " +
                                        std::to_string(n));
        }
        k.push_back(bin);
    }
    k.push_back(top);
    return BandPlan(std::move(k), n, sample_rate);
}

Decomposition dft_decompose(const Signal& x, const BandPlan& plan, std::size_t threads) {
    const std::size_t n = x.size();
    if (plan.signal_length() != n) {
        throw std::invalid_argument("dft_decompose: plan built for N = " +
                                    std::to_string(plan.signal_length()) + ", signal has N = " +
                                    std::to_string(n));
    }
    if (plan.sample_rate() != x.sample_rate()) {
        throw std::invalid_argument("dft_decompose: plan built for fs = " + format_double(plan.sample_rate()) +
                                    " Hz, signal has fs = " + format_double(x.sample_rate()) + " Hz");
    }
    const std::vector<Complex> spectrum = dft(x.samples());

    Decomposition d;
    d.method = DecompositionMethod::dft;
    d.sample_rate = x.sample_rate();
    d.c0 = spectrum[0].real();
    d.components.assign(plan.band_count(), std::vector<double>(n, 0.0));

    const double tolerance = 1e-10 * std::max(1.0, detail::max_abs(x.samples()));
    const auto& bounds = plan.boundaries();
    parallel_for(plan.band_count(), threads, [&](std::size_t band) {
        std::vector<Complex> masked(n, Complex{});
        for (std::size_t k = bounds[band] + 1; k <= bounds[band + 1]; ++k) {
            masked[k] = spectrum[k];
            masked[n - k] = spectrum[n - k];  // k == n - k only for the Nyquist bin
        }
        const std::vector<Complex> y = idft(masked);
        auto& out = d.components[band];
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(y[i].imag()) > tolerance) {
                throw std::logic_error("dft_decompose: band " + std::to_string(band + 1) +
                                       " lost Hermitian symmetry (imaginary residue " +
                                       std::to_string(y[i].imag()) + ")");
            }
            out[i] = y[i].real();
        }
    });
    return d;
}

OrthogonalityReport verify_orthogonality(const Decomposition& d) {
    if (d.method != DecompositionMethod::dft) {
        throw std::invalid_argument("verify_orthogonality: requires a dft decomposition, got " +
                                    std::string(to_string(d.method)));
    }
    OrthogonalityReport report;
    const std::size_t m = d.band_count();
    std::vector<double> norms(m);
    detail::CompensatedSum component_energy;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = detail::dot(d.components[i], d.components[i]);
        norms[i] = std::sqrt(e);
        component_energy.add(e);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = i + 1; l < m; ++l) {
            if (norms[i] == 0.0 || norms[l] == 0.0) continue;
            const double c = std::abs(detail::dot(d.components[i], d.components[l])) / (norms[i] * norms[l]);
            report.max_cross_product = std::max(report.max_cross_product, c);
        }
    }
    const std::vector<double> x = reconstruct(d);
    const double total = detail::dot(x, x);
    component_energy.add(static_cast<double>(d.length()) * d.c0 * d.c0);
    report.energy_ratio = total > 0.0 ? component_energy.value() / total : 1.0;
    return report;
}

std::vector<double> fir_cutoff_ladder(const BandPlanSpec& spec, double sample_rate) {
    std::vector<double> ladder;
    if (spec.kind == BandPlanSpec::Kind::uniform) {
        if (spec.bands < 1) throw std::invalid_argument("band plan: bands must be >= 1");
        for (std::size_t i = 1; i < spec.bands; ++i) {
            ladder.push_back(sample_rate / 2.0 * static_cast<double>(i) / static_cast<double>(spec.bands));
        }
        return ladder;
    }
    if (spec.cutoffs_hz.empty()) throw std::invalid_argument("band plan: no cutoffs");
    const double nyquist = sample_rate / 2.0;
    if (std::abs(spec.cutoffs_hz.back() - nyquist) > 1e-9 * nyquist) {
        throw std::invalid_argument("band plan: last cutoff must equal fs/2");
    }
    ladder.assign(spec.cutoffs_hz.begin(), spec.cutoffs_hz.end() - 1);
    return ladder;
}

BandPlan resolve_band_plan(const BandPlanSpec& spec, std::size_t n, double sample_rate) {
    if (spec.kind == BandPlanSpec::Kind::uniform) return uniform_band_plan(spec.bands, n, sample_rate);
    return custom_band_plan(spec.cutoffs_hz, n, sample_rate);
}

}  // namespace tfespec
