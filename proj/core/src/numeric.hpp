#pragma once

// Internal accumulation helpers shared by the core translation units.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

namespace tfespec::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
    CompensatedSum s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i]);
    return s.value();
}

inline double sum(std::span<const double> a) noexcept {
    CompensatedSum s;
    for (double v : a) s.add(v);
    return s.value();
}

inline double max_abs(std::span<const double> a) noexcept {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace tfespec::detail
