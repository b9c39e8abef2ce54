#pragma once

// Integer-order Bessel functions and the ring coefficient integrals
//
//   c_n(a) = int_0^1 J_{2n}(2 a t) dt,      d_n(a) = int_0^1 t^2 J_{2n}(2 a t) dt,
//
// each available through composite Gauss-Legendre quadrature and through a
// direct power series. All functions are pure.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringdecay {

/// Partial-sum tolerance for c_0 + 2 sum c_n = 1 and d_0 + 2 sum d_n = 1/3.
inline constexpr double kSumRuleTolerance = 1e-9;
/// Absolute accuracy target of bessel_j for x <= 1e4.
inline constexpr double kBesselAbsTolerance = 1e-12;

inline constexpr int kMaxBesselOrder = 1'000'000;
inline constexpr int kMaxCoefficientIndex = 100'000;
inline constexpr double kMaxSizeParameter = 1e4;

enum class Method { quadrature, series };

std::string to_string(Method method);

/// Raised when the power series is asked for a point where the alternating
/// terms would swamp the result.
class SeriesUnstableError : public std::domain_error {
public:
    SeriesUnstableError() : std::domain_error("series unstable, use quadrature") {}
};

/// J_order(x). Negative x is folded through J_n(-x) = (-1)^n J_n(x).
/// Throws std::domain_error for negative order, order > kMaxBesselOrder, or non-finite x.
double bessel_j(int order, double x);

/// J_0(x) .. J_max_order(x) from a single downward recurrence.
std::vector<double> bessel_j_sequence(int max_order, double x);

/// True when the power series for c_n(a) / d_n(a) is admitted: a^2 < |n| + 40.
bool series_admitted(int n, double a);

double coeff_c(int n, double a, Method method = Method::quadrature);
double coeff_d(int n, double a, Method method = Method::quadrature);

/// c_n(a) and optionally d_n(a) for 0 <= n <= n_max. Negative indices are
/// answered by reflection; only n >= 0 is stored.
class CoefficientTable {
public:
    CoefficientTable(double a, int n_max, std::vector<double> c, std::vector<double> d,
                     Method method);

    double size_parameter() const { return a_; }
    int n_max() const { return n_max_; }
    Method method() const { return method_; }
    bool has_d() const { return !d_.empty(); }

    std::span<const double> c() const { return c_; }
    std::span<const double> d() const { return d_; }

    /// Throws std::out_of_range for |n| > n_max (or when d was not computed).
    double c_at(int n) const;
    double d_at(int n) const;

    /// c_0 + 2 sum_{n>=1} c_n, and the same for d.
    double c_sum() const;
    double d_sum() const;

    /// n_max >= ceil(a) + 20, below which the sum rules are not guaranteed.
    bool meets_recommended_cutoff() const;

private:
    double a_;
    int n_max_;
    std::vector<double> c_;
    std::vector<double> d_;
    Method method_;
};

/// Throws std::domain_error for n_max < 0 or an invalid a; SeriesUnstableError
/// if method == series and any index is outside the admitted range.
CoefficientTable coeff_table(double a, int n_max, bool with_d,
                             Method method = Method::quadrature);

} // namespace ringdecay
