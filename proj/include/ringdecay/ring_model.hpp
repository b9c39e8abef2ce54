#pragma once

// Ring geometry, pair decay kernels and the circulant coupling matrix.
// Lengths are in units of 1/k0 and rates in units of the single-atom linewidth.

#include <optional>
#include <span>
#include <vector>

namespace ringdecay {

/// N atoms at angles 2 pi (j - 1) / N on a ring with size parameter a = k0 rho.
class RingConfig {
public:
    /// Throws std::domain_error for N < 2 or a negative / non-finite a.
    RingConfig(int n_atoms, double size_parameter);

    /// Ring whose nearest-neighbour spacing is d / lambda0.
    static RingConfig from_spacing(int n_atoms, double d_over_lambda);

    int n_atoms() const { return n_atoms_; }
    double size_parameter() const { return a_; }

    /// phi_j for 1-based j.
    double angle(int j) const;
    /// d / lambda0 = (a / pi) sin(pi / N).
    double spacing_over_wavelength() const;

private:
    int n_atoms_;
    double a_;
};

/// Scalar light, or vectorial light with all dipoles tilted by delta from the ring plane.
class ModelKind {
public:
    enum class Variant { scalar, vectorial };

    static ModelKind scalar() { return ModelKind{}; }
    /// Throws std::domain_error unless 0 <= delta <= pi/2.
    static ModelKind vectorial(double delta);

    Variant variant() const { return tilt_ ? Variant::vectorial : Variant::scalar; }
    bool is_vectorial() const { return tilt_.has_value(); }
    /// Throws std::logic_error for the scalar model.
    double delta() const;

    friend bool operator==(const ModelKind&, const ModelKind&) = default;

private:
    ModelKind() = default;
    std::optional<double> tilt_;
};

/// Dimensionless chord k0 r_jm = 2 a sin(|phi_j - phi_m| / 2), 1-based indices.
/// Throws std::out_of_range for indices outside 1..N.
double chord(const RingConfig& config, int j, int m);

/// sin(x)/x, equal to 1 at x = 0.
double scalar_gamma_kernel(double x);
/// cos(x)/x. Throws std::domain_error at x <= 0.
double scalar_omega_kernel(double x);
/// (3/2) [sin^2(delta) j0(x) + (3 cos^2(delta) - 1) j1(x)/x], equal to 1 at x = 0.
double vector_gamma_kernel(double x, double delta);

/// Decay kernel of the given model at dimensionless separation x.
double decay_kernel(const ModelKind& model, double x);

/// a = pi (d / lambda0) / sin(pi / N). Throws std::domain_error for N < 2 or d <= 0.
double lattice_conversion(int n_atoms, double d_over_lambda);

/// Real symmetric circulant decay matrix. The generating first row is
/// authoritative; the full array is replicated from it.
class CouplingMatrix {
public:
    explicit CouplingMatrix(std::vector<double> first_row);

    int n_atoms() const { return static_cast<int>(row_.size()); }
    std::span<const double> first_row() const { return row_; }
    std::span<const double> entries() const { return entries_; }

    /// 0-based access.
    double operator()(int j, int m) const
    {
        return entries_[static_cast<std::size_t>(j) * row_.size() + static_cast<std::size_t>(m)];
    }

private:
    std::vector<double> row_;
    std::vector<double> entries_;
};

CouplingMatrix coupling_matrix(const RingConfig& config, const ModelKind& model);

} // namespace ringdecay
