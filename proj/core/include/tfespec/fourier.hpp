#pragma once

#include <complex>
#include <span>
#include <vector>

namespace tfespec {

using Complex = std::complex<double>;

/// Forward DFT with the 1/N factor on the forward side:
///   X[k] = (1/N) * sum_n x[n] exp(-j 2 pi k n / N).
/// Runs in O(N log N) for any N (radix-2, Bluestein otherwise).
[[nodiscard]] std::vector<Complex> dft(std::span<const double> x);
[[nodiscard]] std::vector<Complex> dft(std::span<const Complex> x);

/// Inverse of dft(): x[n] = sum_k X[k] exp(+j 2 pi k n / N), no scaling.
[[nodiscard]] std::vector<Complex> idft(std::span<const Complex> spectrum);

namespace fft {

/// Unnormalized in-place transform, sign -1 (forward) or +1 (inverse).
void transform(std::vector<Complex>& data, int sign);

[[nodiscard]] bool is_power_of_two(std::size_t n) noexcept;
[[nodiscard]] std::size_t next_power_of_two(std::size_t n) noexcept;

}  // namespace fft

}  // namespace tfespec
