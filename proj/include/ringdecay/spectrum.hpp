#pragma once

// Decay spectrum of the ring: the aliased-coefficient closed form, the
// direct DFT of the coupling row, and the asymptotic estimators.

#include <span>
#include <vector>

#include "ringdecay/ring_model.hpp"
#include "ringdecay/specfun.hpp"

namespace ringdecay {

/// Gamma_k / Gamma for canonical k = 0..N-1, with a signed view
/// k in {-floor(N/2), ..., ceil(N/2) - 1}.
class DecaySpectrum {
public:
    DecaySpectrum(int n_atoms, double size_parameter, ModelKind model, std::vector<double> rates);

    int n_atoms() const { return static_cast<int>(rates_.size()); }
    double size_parameter() const { return a_; }
    const ModelKind& model() const { return model_; }
    std::span<const double> rates() const { return rates_; }

    int min_signed_k() const { return -(n_atoms() / 2); }
    int max_signed_k() const { return (n_atoms() + 1) / 2 - 1; }

    /// k mod N in 0..N-1, for any integer k.
    int canonical_index(int k) const;
    /// Rate of mode k; any integer is accepted and reduced mod N.
    double at(int k) const { return rates_[static_cast<std::size_t>(canonical_index(k))]; }

    double trace() const;

private:
    double a_;
    ModelKind model_;
    std::vector<double> rates_;
};

/// Index cutoff for the alias sum: ceil(a) + 40.
int alias_cutoff(double a);

/// Closed form: Gamma_k = N sum_m c_{k - mN}(a) (scalar) or
/// (3N/4) sum_m [(1 + cos^2 d) c_{k-mN} + (1 - 3 cos^2 d) d_{k-mN}] (vectorial).
DecaySpectrum analytic_spectrum(const RingConfig& config, const ModelKind& model,
                                Method method = Method::quadrature);

/// Direct transform of the coupling row: Gamma_k = sum_s row[s] cos(2 pi k s / N).
/// Throws std::runtime_error if the imaginary residue exceeds 1e-10.
DecaySpectrum oracle_spectrum(const RingConfig& config, const ModelKind& model);

/// max_k |sum_s row[s] sin(2 pi k s / N)|, computed without any symmetry reduction.
double dft_imaginary_residue(const CouplingMatrix& matrix);

/// Single-alias (m = 0) rate N c_k(a). Throws std::domain_error for |k| > N/2.
double continuous_limit_rate(int n_atoms, double a, int k);
/// Same, for either model: the vectorial form is (3N/4)[(1+cos^2 d) c_k + (1-3cos^2 d) d_k].
double continuous_limit_rate(int n_atoms, double a, int k, const ModelKind& model);

struct SubradiantEdge {
    double exact;         ///< N c_{N/2}(N d / lambda0)
    double asymptotic;    ///< (2 pi N)^{-1/2} (e d / lambda0)^N
    double exact_lattice; ///< Gamma_{N/2} of the ring with the exact spacing conversion
};

/// Edge mode k = N/2 at fixed spacing. Throws std::domain_error for odd N or d < 0.
SubradiantEdge subradiant_edge(int n_atoms, double d_over_lambda);

/// (3N / 8a) [1 + cos^2 d + (1 - 3 cos^2 d)(k^2 - 1/4) / a^2].
/// Throws std::domain_error unless a >= 1 and |k| < a.
double large_a_vector_estimate(int n_atoms, double a, int k, double delta);

} // namespace ringdecay
