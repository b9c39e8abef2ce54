#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "detail/compensated_sum.hpp"
#include "ringdecay/spectrum.hpp"

namespace ringdecay {

DecaySpectrum::DecaySpectrum(int n_atoms, double size_parameter, ModelKind model,
                             std::vector<double> rates)
    : a_(size_parameter), model_(model), rates_(std::move(rates))
{
    if (n_atoms < 2 || rates_.size() != static_cast<std::size_t>(n_atoms))
        throw std::invalid_argument("DecaySpectrum: need one rate per atom, N >= 2");
}

int DecaySpectrum::canonical_index(int k) const
{
    const int n = n_atoms();
    const int r = k % n;
    return r < 0 ? r + n : r;
}

double DecaySpectrum::trace() const
{
    detail::CompensatedSum sum;
    for (double r : rates_)
        sum.add(r);
    return sum.value();
}

int alias_cutoff(double a)
{
    return static_cast<int>(std::ceil(a)) + 40;
}

namespace {

// (1 + cos^2 d) and (1 - 3 cos^2 d) weights of c_n and d_n.
struct VectorWeights {
    double c;
    double d;
};

VectorWeights vector_weights(double delta)
{
    const double c2 = std::cos(delta) * std::cos(delta);
    return {1.0 + c2, 1.0 - 3.0 * c2};
}

} // namespace

DecaySpectrum analytic_spectrum(const RingConfig& config, const ModelKind& model, Method method)
{
    const int n = config.n_atoms();
    const double a = config.size_parameter();
    const int n_cut = alias_cutoff(a);
    const bool vectorial = model.is_vectorial();
    const CoefficientTable table = coeff_table(a, n_cut, vectorial, method);

    std::vector<double> folded(static_cast<std::size_t>(n_cut) + 1);
    if (vectorial) {
        const VectorWeights w = vector_weights(model.delta());
        for (int r = 0; r <= n_cut; ++r)
            folded[static_cast<std::size_t>(r)] = 0.75 * (w.c * table.c_at(r) + w.d * table.d_at(r));
    } else {
        for (int r = 0; r <= n_cut; ++r)
            folded[static_cast<std::size_t>(r)] = table.c_at(r);
    }

    // Visit |n| in ascending order, adding n = +r and n = -r when they alias onto k.
    // Modes k and N - k then see the same additions in the same order.
    std::vector<double> rates(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        detail::CompensatedSum sum;
        for (int r = 0; r <= n_cut; ++r) {
            const int residue = r % n;
            int hits = residue == k ? 1 : 0;
            if (r > 0 && (n - residue) % n == k)
                ++hits;
            if (hits > 0)
                sum.add(hits * folded[static_cast<std::size_t>(r)]);
        }
        rates[static_cast<std::size_t>(k)] = n * sum.value();
    }
    return {n, a, model, std::move(rates)};
}

double dft_imaginary_residue(const CouplingMatrix& matrix)
{
    const int n = matrix.n_atoms();
    const auto row = matrix.first_row();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double imag = 0.0;
        for (int s = 0; s < n; ++s)
            imag += row[static_cast<std::size_t>(s)] * std::sin(2.0 * std::numbers::pi * k * s / n);
        worst = std::max(worst, std::abs(imag));
    }
    return worst;
}

namespace {

// cos(2 pi r / N) with r reduced to min(r, N - r).
double root_of_unity_real(int r, int n)
{
    const int reduced = std::min(r, n - r);
    if (reduced == 0)
        return 1.0;
    if (2 * reduced == n)
        return -1.0;
    return std::cos(2.0 * std::numbers::pi * reduced / n);
}

} // namespace

DecaySpectrum oracle_spectrum(const RingConfig& config, const ModelKind& model)
{
    const CouplingMatrix matrix = coupling_matrix(config, model);
    if (dft_imaginary_residue(matrix) > 1e-10)
        throw std::runtime_error("oracle_spectrum: coupling row transform is not real");

    const int n = config.n_atoms();
    const auto row = matrix.first_row();
    std::vector<double> rates(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        detail::CompensatedSum sum;
        for (int s = 0; s < n; ++s) {
            const int r = static_cast<int>((static_cast<long long>(k) * s) % n);
            sum.add(row[static_cast<std::size_t>(s)] * root_of_unity_real(r, n));
        }
        rates[static_cast<std::size_t>(k)] = sum.value();
    }
    return {n, config.size_parameter(), model, std::move(rates)};
}

namespace {

void check_mode(int n_atoms, int k)
{
    if (n_atoms < 2)
        throw std::domain_error("need at least two atoms");
    if (2 * std::abs(k) > n_atoms)
        throw std::domain_error("mode index must satisfy |k| <= N/2");
}

} // namespace

double continuous_limit_rate(int n_atoms, double a, int k)
{
    check_mode(n_atoms, k);
    return n_atoms * coeff_c(k, a);
}

double continuous_limit_rate(int n_atoms, double a, int k, const ModelKind& model)
{
    if (!model.is_vectorial())
        return continuous_limit_rate(n_atoms, a, k);
    check_mode(n_atoms, k);
    const VectorWeights w = vector_weights(model.delta());
    return 0.75 * n_atoms * (w.c * coeff_c(k, a) + w.d * coeff_d(k, a));
}

SubradiantEdge subradiant_edge(int n_atoms, double d_over_lambda)
{
    if (n_atoms < 2 || n_atoms % 2 != 0)
        throw std::domain_error("edge mode k = N/2 is defined for even N only");
    if (!std::isfinite(d_over_lambda) || d_over_lambda < 0.0)
        throw std::domain_error("spacing must be finite and non-negative");

    const int edge = n_atoms / 2;
    SubradiantEdge result{};
    result.exact = n_atoms * coeff_c(edge, n_atoms * d_over_lambda);
    result.asymptotic = std::pow(std::numbers::e * d_over_lambda, n_atoms) /
                        std::sqrt(2.0 * std::numbers::pi * n_atoms);
    const double a_exact = std::numbers::pi * d_over_lambda / std::sin(std::numbers::pi / n_atoms);
    result.exact_lattice = analytic_spectrum(RingConfig(n_atoms, a_exact), ModelKind::scalar()).at(edge);
    return result;
}

double large_a_vector_estimate(int n_atoms, double a, int k, double delta)
{
    if (!(a >= 1.0))
        throw std::domain_error("large-a estimate needs a >= 1");
    if (!(std::abs(k) < a))
        throw std::domain_error("large-a estimate needs |k| < a");
    const VectorWeights w = vector_weights(delta);
    return 3.0 * n_atoms / (8.0 * a) * (w.c + w.d * (k * k - 0.25) / (a * a));
}

} // namespace ringdecay
