#include "tfespec/fourier.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "numeric.hpp"

namespace tfespec {

namespace fft {

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

std::size_t next_power_of_two(std::size_t n) noexcept { return std::bit_ceil(n); }

namespace {

void radix2(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        // Twiddles evaluated directly per index; recurrences lose accuracy at large N.
        std::vector<Complex> tw(half);
        for (std::size_t k = 0; k < half; ++k) {
            const double angle = sign * detail::kTwoPi * static_cast<double>(k) / static_cast<double>(len);
            tw[k] = {std::cos(angle), std::sin(angle)};
        }
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + half] * tw[k];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

// Chirp-z (Bluestein) for lengths that are not powers of two.
void bluestein(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    const std::size_t m = next_power_of_two(2 * n - 1);

    // w[k] = exp(sign * j * pi * k^2 / n); k^2 reduced mod 2n to keep the angle small.
    std::vector<Complex> w(n);
    const std::size_t two_n = 2 * n;
    std::size_t k2 = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = sign * detail::kPi * static_cast<double>(k2) / static_cast<double>(n);
        w[k] = {std::cos(angle), std::sin(angle)};
        k2 = (k2 + 2 * k + 1) % two_n;
    }

    std::vector<Complex> u(m, Complex{});
    std::vector<Complex> v(m, Complex{});
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * w[k];
    v[0] = std::conj(w[0]);
    for (std::size_t k = 1; k < n; ++k) {
        v[k] = std::conj(w[k]);
        v[m - k] = std::conj(w[k]);
    }
    radix2(u, -1);
    radix2(v, -1);
    for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
    radix2(u, +1);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * scale * w[k];
}

}  // namespace

void transform(std::vector<Complex>& data, int sign) {
    if (data.size() <= 1) return;
    if (is_power_of_two(data.size())) {
        radix2(data, sign);
    } else {
        bluestein(data, sign);
    }
}

}  // namespace fft

std::vector<Complex> dft(std::span<const Complex> x) {
    if (x.empty()) throw std::invalid_argument("dft: empty input");
    std::vector<Complex> out(x.begin(), x.end());
    fft::transform(out, -1);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (Complex& v : out) v *= scale;
    return out;
}

std::vector<Complex> dft(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("dft: empty input");
    std::vector<Complex> tmp(x.begin(), x.end());
    return dft(std::span<const Complex>(tmp));
}

std::vector<Complex> idft(std::span<const Complex> spectrum) {
    if (spectrum.empty()) throw std::invalid_argument("idft: empty input");
    std::vector<Complex> out(spectrum.begin(), spectrum.end());
    fft::transform(out, +1);
    return out;
}

}  // namespace tfespec
