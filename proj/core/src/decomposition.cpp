#include "tfespec/decomposition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace tfespec {

std::vector<double> reconstruct(const Decomposition& d) {
    std::vector<double> out(d.length(), d.c0);
    for (std::size_t n = 0; n < out.size(); ++n) {
        detail::CompensatedSum acc;
        acc.add(d.c0);
        for (const auto& c : d.components) acc.add(c[n]);
        out[n] = acc.value();
    }
    return out;
}

double reconstruction_error(const Decomposition& d, const Signal& x) {
    if (d.length() != x.size()) {
        throw std::invalid_argument("reconstruction_error: length mismatch");
    }
    const std::vector<double> y = reconstruct(d);
    double worst = 0.0;
    for (std::size_t n = 0; n < y.size(); ++n) worst = std::max(worst, std::abs(y[n] - x[n]));
    const double scale = detail::max_abs(x.samples());
    return scale > 0.0 ? worst / scale : worst;
}

std::string_view to_string(DecompositionMethod method) noexcept {
    switch (method) {
        case DecompositionMethod::dft: return "dft";
        case DecompositionMethod::fmd_a: return "fmd-A";
        case DecompositionMethod::fmd_b: return "fmd-B";
        case DecompositionMethod::causal_fir: return "causal-fir";
    }
    return "?";
}

DecompositionMethod parse_decomposition_method(std::string_view name) {
    if (name == "dft") return DecompositionMethod::dft;
    if (name == "fmd-A" || name == "fmd-a") return DecompositionMethod::fmd_a;
    if (name == "fmd-B" || name == "fmd-b") return DecompositionMethod::fmd_b;
    if (name == "causal-fir") return DecompositionMethod::causal_fir;
    throw std::invalid_argument("unknown decomposition method '" + std::string(name) +
                                "' (expected dft, fmd-A, fmd-B or causal-fir)");
}

}  // namespace tfespec
