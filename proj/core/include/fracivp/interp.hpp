#pragma once

#include <span>
#include <vector>

namespace fracivp::interp {

/// Monotone (Fritsch-Carlson) cubic Hermite interpolant on sorted knots.
/// Shape-preserving: no overshoot between knots, reproduces the data exactly
/// at the knots, and is exact for constant and linear data.
class Pchip {
  public:
    Pchip() = default;
    Pchip(std::span<const double> x, std::span<const double> y);

    double operator()(double t) const;
    std::size_t size() const { return x_.size(); }

  private:
    std::vector<double> x_, y_, d_;  // knots, values, knot derivatives
};

}  // namespace fracivp::interp
