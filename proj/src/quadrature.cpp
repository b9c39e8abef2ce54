#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringdecay/quadrature.hpp"

namespace ringdecay {

GaussLegendreRule gauss_legendre(int n)
{
    if (n < 1)
        throw std::domain_error("gauss_legendre: need at least one node");

    GaussLegendreRule rule;
    rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
    rule.weights.assign(static_cast<std::size_t>(n), 0.0);

    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // P_n(x) and P_n'(x) by the three-term recurrence.
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = n == 1 ? x : p1;
            const double pn_1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pn_1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1)
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

const GaussLegendreRule& gauss_legendre_16()
{
    static const GaussLegendreRule rule = gauss_legendre(16);
    return rule;
}

int oscillation_panel_count(double a)
{
    const int half_waves = static_cast<int>(std::ceil(2.0 * a / std::numbers::pi));
    return std::max(8, 2 * half_waves);
}

} // namespace ringdecay
