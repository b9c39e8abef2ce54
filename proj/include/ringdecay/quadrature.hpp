#pragma once

#include <vector>

namespace ringdecay {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes by Newton iteration on P_n, ascending. Throws std::domain_error for n < 1.
GaussLegendreRule gauss_legendre(int n);

/// The 16-point rule used by the coefficient integrals (computed once).
const GaussLegendreRule& gauss_legendre_16();

/// Panel count for integrating J_{2n}(2 a t) over [0, 1]: max(8, 2 ceil(2a/pi)),
/// so every panel spans at most half an oscillation.
int oscillation_panel_count(double a);

/// Composite rule on [lo, hi] with equal panels, calling f(t, weight) for every node.
template <class Visitor>
void for_each_composite_node(const GaussLegendreRule& rule, double lo, double hi, int panels,
                             Visitor&& visit)
{
    const double width = (hi - lo) / panels;
    const double half = 0.5 * width;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            visit(mid + half * rule.nodes[i], half * rule.weights[i]);
    }
}

} // namespace ringdecay
