#pragma once

// Data-producing commands behind the `ringdecay` CLI. Each writes a header row
// followed by data rows to the given stream.

#include <optional>
#include <ostream>
#include <vector>

#include "ringdecay/ring_model.hpp"
#include "ringdecay/specfun.hpp"

namespace ringdecay::cli {

struct CoeffsOptions {
    double a = 0.0;
    int n_max = 0;
    bool with_d = false;
    Method method = Method::quadrature;
};

/// Rows `n,c_n[,d_n]` for n = -n_max..n_max. Returns false when n_max is below
/// the recommended ceil(a) + 20.
bool write_coeffs(const CoeffsOptions& options, std::ostream& out);

enum class SpectrumPath { analytic, oracle, both };

struct SpectrumOptions {
    int n_atoms = 2;
    double a = 0.0;
    ModelKind model = ModelKind::scalar();
    SpectrumPath path = SpectrumPath::analytic;
    Method method = Method::quadrature;
};

/// Rows for signed k ascending. Returns max |analytic - oracle| for the `both` path.
std::optional<double> write_spectrum(const SpectrumOptions& options, std::ostream& out);

enum class SweepQuantity {
    rate,       ///< exact aliased spectrum
    continuous, ///< single-alias term N c_k(a) (and its vectorial analogue)
};

struct SweepSpec {
    int n_atoms = 10;
    ModelKind model = ModelKind::scalar();
    std::vector<int> k_list{0, 1, 2, 4};
    std::vector<double> grid; ///< lambda0 / d values, strictly increasing
    SweepQuantity quantity = SweepQuantity::rate;
    Method method = Method::quadrature;
};

/// count log-spaced points from lo to hi inclusive. Throws std::invalid_argument
/// unless 0 < lo < hi and count >= 2.
std::vector<double> log_grid(double lo, double hi, int count);

/// N = 10, k in {0, 1, 2, 4}, 200 points lambda0/d in [0.05, 100], scalar rate.
SweepSpec default_sweep_spec();

/// Throws std::invalid_argument on an empty or non-increasing grid, or |k| > N/2.
void check_sweep_spec(const SweepSpec& spec);

/// Rows `lambda_over_d,k,rate`: outer loop over the grid, inner over k ascending.
/// Grid points are evaluated on worker threads; output order does not depend on them.
void write_sweep(const SweepSpec& spec, std::ostream& out);

} // namespace ringdecay::cli
