#include "tfespec/fir.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "numeric.hpp"
#include "tfespec/signal_io.hpp"

namespace tfespec {

using detail::kPi;
using detail::kTwoPi;

FirFilter design_fir(FilterKind kind, double cutoff_hz, std::size_t order, double sample_rate) {
    if (!(sample_rate > 0.0)) throw std::invalid_argument("design_fir: sample_rate must be positive");
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < sample_rate / 2.0)) {
        throw std::invalid_argument("design_fir: cutoff " + std::to_string(cutoff_hz) +
                                    " Hz must lie strictly inside (0, " +
                                    std::to_string(sample_rate / 2.0) + ") Hz");
    }
    if (order % 2 != 0) throw std::invalid_argument("design_fir: order must be even");
    if (order < 16) throw std::invalid_argument("design_fir: order must be >= 16");

    const std::size_t length = order + 1;
    const auto center = static_cast<double>(order / 2);
    const double fc = cutoff_hz / sample_rate;  // cycles/sample

    std::vector<double> lp(length);
    for (std::size_t i = 0; i < length; ++i) {
        const double m = static_cast<double>(i) - center;
        const double sinc = m == 0.0 ? 2.0 * fc : std::sin(kTwoPi * fc * m) / (kPi * m);
        const double window = 0.54 - 0.46 * std::cos(kTwoPi * static_cast<double>(i) / static_cast<double>(order));
        lp[i] = sinc * window;
    }
    const double gain = detail::sum(lp);
    for (double& v : lp) v /= gain;
    // Force exact symmetry after rounding.
    for (std::size_t i = 0; i < length / 2; ++i) {
        const double avg = 0.5 * (lp[i] + lp[length - 1 - i]);
        lp[i] = avg;
        lp[length - 1 - i] = avg;
    }

    FirFilter f;
    f.nominal_cutoff_hz = cutoff_hz;
    f.kind = kind;
    f.sample_rate = sample_rate;
    if (kind == FilterKind::lowpass) {
        f.taps = std::move(lp);
    } else {
        f.taps.resize(length);
        for (std::size_t i = 0; i < length; ++i) f.taps[i] = -lp[i];
        f.taps[order / 2] += 1.0;
    }
    return f;
}

namespace {

void check_lengths(const Signal& x, const FirFilter& h, const char* who) {
    if (h.taps.empty() || h.taps.size() % 2 == 0) {
        throw std::invalid_argument(std::string(who) + ": filter must have an odd number of taps");
    }
    if (x.size() <= 3 * h.taps.size()) {
        throw std::invalid_argument(std::string(who) + ": signal of " + std::to_string(x.size()) +
                                    " samples too short for " + std::to_string(h.taps.size()) +
                                    " taps (need more than " + std::to_string(3 * h.taps.size()) + ")");
    }
    if (x.sample_rate() != h.sample_rate) {
        throw std::invalid_argument(std::string(who) + ": filter designed for fs = " + format_double(h.sample_rate) +
                                    " Hz, signal has fs = " + format_double(x.sample_rate()) + " Hz");
    }
}

// y[n] = sum_k h[k] x[n-k], zero initial state, same length as x.
std::vector<double> convolve_causal(std::span<const double> x, std::span<const double> h) {
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t n = 0; n < x.size(); ++n) {
        const std::size_t k_max = std::min(n, h.size() - 1);
        double acc = 0.0;
        for (std::size_t k = 0; k <= k_max; ++k) acc += h[k] * x[n - k];
        y[n] = acc;
    }
    return y;
}

}  // namespace

Signal zero_phase_filter(const Signal& x, const FirFilter& h) {
    check_lengths(x, h, "zero_phase_filter");
    const std::size_t n = x.size();
    const std::size_t pad = h.taps.size() - 1;
    const auto s = x.samples();

    std::vector<double> buf;
    buf.reserve(n + 2 * pad);
    for (std::size_t i = pad; i >= 1; --i) buf.push_back(s[i]);
    buf.insert(buf.end(), s.begin(), s.end());
    for (std::size_t i = 1; i <= pad; ++i) buf.push_back(s[n - 1 - i]);

    buf = convolve_causal(buf, h.taps);
    std::reverse(buf.begin(), buf.end());
    buf = convolve_causal(buf, h.taps);
    std::reverse(buf.begin(), buf.end());

    return Signal(std::vector<double>(buf.begin() + static_cast<std::ptrdiff_t>(pad),
                                      buf.begin() + static_cast<std::ptrdiff_t>(pad + n)),
                  x.sample_rate());
}

Signal causal_filter(const Signal& x, const FirFilter& h) {
    check_lengths(x, h, "causal_filter");
    return Signal(convolve_causal(x.samples(), h.taps), x.sample_rate());
}

}  // namespace tfespec
