#include "fracivp/interp.hpp"

#include <algorithm>
#include <cmath>

#include "fracivp/errors.hpp"

namespace fracivp::interp {

namespace {

// shape-preserving three-point estimate for an endpoint derivative
double edge_derivative(double h0, double h1, double m0, double m1) {
    double d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (d * m0 <= 0.0)
        d = 0.0;
    else if (m0 * m1 <= 0.0 && std::abs(d) > 3.0 * std::abs(m0))
        d = 3.0 * m0;
    return d;
}

}  // namespace

Pchip::Pchip(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw DomainError("Pchip: need >= 2 matching knots");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw DomainError("Pchip: knots must be strictly increasing");

    d_.assign(n, 0.0);
    if (n == 2) {
        const double m = (y_[1] - y_[0]) / (x_[1] - x_[0]);
        d_[0] = d_[1] = m;
        return;
    }

    std::vector<double> h(n - 1), m(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        m[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (m[i - 1] * m[i] <= 0.0) {
            d_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d_[i] = (w1 + w2) / (w1 / m[i - 1] + w2 / m[i]);
        }
    }
    d_[0] = edge_derivative(h[0], h[1], m[0], m[1]);
    d_[n - 1] = edge_derivative(h[n - 2], h[n - 3], m[n - 2], m[n - 3]);
}

double Pchip::operator()(double t) const {
    const std::size_t n = x_.size();
    if (t <= x_.front()) t = x_.front();
    if (t >= x_.back()) t = x_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), t);
    const std::size_t i = std::min<std::size_t>(
        n - 2, static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - x_.begin() - 1)));
    const double h = x_[i + 1] - x_[i];
    const double s = (t - x_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

}  // namespace fracivp::interp
