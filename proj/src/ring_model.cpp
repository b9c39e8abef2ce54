#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringdecay/ring_model.hpp"

namespace ringdecay {

RingConfig::RingConfig(int n_atoms, double size_parameter)
    : n_atoms_(n_atoms), a_(size_parameter)
{
    if (n_atoms < 2)
        throw std::domain_error("RingConfig: need at least two atoms");
    if (!std::isfinite(size_parameter) || size_parameter < 0.0)
        throw std::domain_error("RingConfig: size parameter must be finite and non-negative");
}

RingConfig RingConfig::from_spacing(int n_atoms, double d_over_lambda)
{
    return RingConfig(n_atoms, lattice_conversion(n_atoms, d_over_lambda));
}

double RingConfig::angle(int j) const
{
    if (j < 1 || j > n_atoms_)
        throw std::out_of_range("RingConfig::angle: atom index " + std::to_string(j));
    return 2.0 * std::numbers::pi * (j - 1) / n_atoms_;
}

double RingConfig::spacing_over_wavelength() const
{
    return a_ / std::numbers::pi * std::sin(std::numbers::pi / n_atoms_);
}

ModelKind ModelKind::vectorial(double delta)
{
    if (!(delta >= 0.0 && delta <= 0.5 * std::numbers::pi))
        throw std::domain_error("ModelKind: dipole tilt must lie in [0, pi/2]");
    ModelKind model;
    model.tilt_ = delta;
    return model;
}

double ModelKind::delta() const
{
    if (!tilt_)
        throw std::logic_error("ModelKind: the scalar model has no dipole tilt");
    return *tilt_;
}

namespace {

// Chord for an index separation s, reduced to min(s, N - s) so that the
// pair (s, N - s) gives bit-identical results.
double chord_for_separation(int n_atoms, double a, int separation)
{
    separation %= n_atoms;
    if (separation < 0)
        separation += n_atoms;
    const int reduced = std::min(separation, n_atoms - separation);
    if (reduced == 0)
        return 0.0;
    if (2 * reduced == n_atoms)
        return 2.0 * a;
    return 2.0 * a * std::sin(std::numbers::pi * reduced / n_atoms);
}

// j1(x)/x: Taylor series sum_k (-1)^k (2k+2) x^{2k} / (2k+3)! below 1.
double j1_over_x(double x)
{
    if (x < 1.0) {
        const double x2 = x * x;
        double term = 1.0 / 3.0;
        double sum = term;
        for (int k = 1; k < 12; ++k) {
            term *= -x2 / ((2.0 * k) * (2.0 * k + 3.0));
            sum += term;
            if (std::abs(term) < 1e-18)
                break;
        }
        return sum;
    }
    return (std::sin(x) / x - std::cos(x)) / (x * x);
}

} // namespace

double chord(const RingConfig& config, int j, int m)
{
    const int n = config.n_atoms();
    if (j < 1 || j > n || m < 1 || m > n)
        throw std::out_of_range("chord: atom indices must lie in 1..N");
    return chord_for_separation(n, config.size_parameter(), j - m);
}

double scalar_gamma_kernel(double x)
{
    if (x == 0.0)
        return 1.0;
    return std::sin(x) / x;
}

double scalar_omega_kernel(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("shift kernel undefined at zero separation");
    return std::cos(x) / x;
}

double vector_gamma_kernel(double x, double delta)
{
    if (x == 0.0)
        return 1.0;
    const double s = std::sin(delta);
    const double c = std::cos(delta);
    return 1.5 * (s * s * scalar_gamma_kernel(x) + (3.0 * c * c - 1.0) * j1_over_x(x));
}

double decay_kernel(const ModelKind& model, double x)
{
    return model.is_vectorial() ? vector_gamma_kernel(x, model.delta()) : scalar_gamma_kernel(x);
}

double lattice_conversion(int n_atoms, double d_over_lambda)
{
    if (n_atoms < 2)
        throw std::domain_error("lattice_conversion: need at least two atoms");
    if (!std::isfinite(d_over_lambda) || !(d_over_lambda > 0.0))
        throw std::domain_error("lattice_conversion: spacing must be positive");
    return std::numbers::pi * d_over_lambda / std::sin(std::numbers::pi / n_atoms);
}

CouplingMatrix::CouplingMatrix(std::vector<double> first_row) : row_(std::move(first_row))
{
    const std::size_t n = row_.size();
    entries_.resize(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m)
            entries_[j * n + m] = row_[(m + n - j) % n];
}

CouplingMatrix coupling_matrix(const RingConfig& config, const ModelKind& model)
{
    const int n = config.n_atoms();
    std::vector<double> row(static_cast<std::size_t>(n));
    row[0] = 1.0;
    for (int s = 1; s < n; ++s)
        row[static_cast<std::size_t>(s)] =
            decay_kernel(model, chord_for_separation(n, config.size_parameter(), s));
    return CouplingMatrix(std::move(row));
}

} // namespace ringdecay
