#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detail/compensated_sum.hpp"
#include "ringdecay/quadrature.hpp"
#include "ringdecay/specfun.hpp"

namespace ringdecay {

std::string to_string(Method method)
{
    return method == Method::quadrature ? "quadrature" : "series";
}

namespace {

void check_size_parameter(double a)
{
    if (!std::isfinite(a) || a < 0.0 || a > kMaxSizeParameter)
        throw std::domain_error("size parameter must lie in [0, 1e4]");
}

int checked_index(int n)
{
    const int m = std::abs(n);
    if (m > kMaxCoefficientIndex)
        throw std::domain_error("coefficient index |n| exceeds 1e5");
    return m;
}

// t-weight exponent: 0 for c_n, 2 for d_n.
double quadrature_coefficient(int n, double a, int power)
{
    detail::CompensatedSum sum;
    for_each_composite_node(gauss_legendre_16(), 0.0, 1.0, oscillation_panel_count(a),
                            [&](double t, double w) {
                                const double weight = power == 0 ? w : w * t * t;
                                sum.add(weight * bessel_j(2 * n, 2.0 * a * t));
                            });
    return sum.value();
}

// sum_m (-1)^m a^{2m+2n} / (m! (m+2n)! (2m+2n+1+power)), every term formed in log space.
double series_coefficient(int n, double a, int power)
{
    if (!series_admitted(n, a))
        throw SeriesUnstableError();
    const double log_a = std::log(a);
    detail::CompensatedSum sum;
    double largest = 0.0;
    for (int m = 0; m < 10'000; ++m) {
        const double exponent = 2.0 * (m + n);
        const double log_term = exponent * log_a - std::lgamma(m + 1.0) -
                                std::lgamma(m + 2.0 * n + 1.0) - std::log(exponent + 1.0 + power);
        if (log_term < -745.0) {
            // Past the peak the terms only shrink; before it they can still be growing.
            if (m > a * a)
                break;
            continue;
        }
        const double magnitude = std::exp(log_term);
        largest = std::max(largest, magnitude);
        sum.add(m % 2 == 0 ? magnitude : -magnitude);
        if (m > a * a && magnitude <= 1e-18 * std::max(largest, std::abs(sum.value())))
            break;
    }
    return sum.value();
}

double coefficient(int n, double a, Method method, int power)
{
    check_size_parameter(a);
    n = checked_index(n);
    if (a == 0.0)
        return n == 0 ? 1.0 / (1.0 + power) : 0.0;
    return method == Method::quadrature ? quadrature_coefficient(n, a, power)
                                        : series_coefficient(n, a, power);
}

} // namespace

bool series_admitted(int n, double a)
{
    return a * a < 0.5 * (2.0 * std::abs(n) + 20.0) + 30.0;
}

double coeff_c(int n, double a, Method method)
{
    return coefficient(n, a, method, 0);
}

double coeff_d(int n, double a, Method method)
{
    return coefficient(n, a, method, 2);
}

CoefficientTable::CoefficientTable(double a, int n_max, std::vector<double> c,
                                   std::vector<double> d, Method method)
    : a_(a), n_max_(n_max), c_(std::move(c)), d_(std::move(d)), method_(method)
{
    const auto expected = static_cast<std::size_t>(n_max) + 1;
    if (n_max < 0 || c_.size() != expected || (!d_.empty() && d_.size() != expected))
        throw std::invalid_argument("CoefficientTable: entry count does not match n_max");
}

double CoefficientTable::c_at(int n) const
{
    const int m = std::abs(n);
    if (m > n_max_)
        throw std::out_of_range("CoefficientTable: index beyond n_max");
    return c_[static_cast<std::size_t>(m)];
}

double CoefficientTable::d_at(int n) const
{
    const int m = std::abs(n);
    if (d_.empty() || m > n_max_)
        throw std::out_of_range("CoefficientTable: d not available at this index");
    return d_[static_cast<std::size_t>(m)];
}

namespace {

double symmetric_sum(const std::vector<double>& values)
{
    if (values.empty())
        return 0.0;
    detail::CompensatedSum sum;
    // Smallest first.
    for (std::size_t n = values.size() - 1; n >= 1; --n)
        sum.add(2.0 * values[n]);
    sum.add(values[0]);
    return sum.value();
}

} // namespace

double CoefficientTable::c_sum() const
{
    return symmetric_sum(c_);
}

double CoefficientTable::d_sum() const
{
    if (d_.empty())
        throw std::out_of_range("CoefficientTable: d was not computed");
    return symmetric_sum(d_);
}

bool CoefficientTable::meets_recommended_cutoff() const
{
    return n_max_ >= static_cast<int>(std::ceil(a_)) + 20;
}

CoefficientTable coeff_table(double a, int n_max, bool with_d, Method method)
{
    check_size_parameter(a);
    if (n_max < 0)
        throw std::domain_error("coeff_table: n_max must be non-negative");
    checked_index(n_max);

    const auto size = static_cast<std::size_t>(n_max) + 1;
    std::vector<double> c(size, 0.0);
    std::vector<double> d(with_d ? size : 0, 0.0);

    if (a == 0.0) {
        c[0] = 1.0;
        if (with_d)
            d[0] = 1.0 / 3.0;
        return {a, n_max, std::move(c), std::move(d), method};
    }

    if (method == Method::series) {
        for (int n = 0; n <= n_max; ++n) {
            c[static_cast<std::size_t>(n)] = series_coefficient(n, a, 0);
            if (with_d)
                d[static_cast<std::size_t>(n)] = series_coefficient(n, a, 2);
        }
        return {a, n_max, std::move(c), std::move(d), method};
    }

    // One downward Bessel recurrence per node serves every order.
    std::vector<detail::CompensatedSum> c_acc(size);
    std::vector<detail::CompensatedSum> d_acc(with_d ? size : 0);
    for_each_composite_node(gauss_legendre_16(), 0.0, 1.0, oscillation_panel_count(a),
                            [&](double t, double w) {
                                const std::vector<double> j = bessel_j_sequence(2 * n_max, 2.0 * a * t);
                                const double wt2 = w * t * t;
                                for (std::size_t n = 0; n < size; ++n) {
                                    c_acc[n].add(w * j[2 * n]);
                                    if (with_d)
                                        d_acc[n].add(wt2 * j[2 * n]);
                                }
                            });
    for (std::size_t n = 0; n < size; ++n) {
        c[n] = c_acc[n].value();
        if (with_d)
            d[n] = d_acc[n].value();
    }
    return {a, n_max, std::move(c), std::move(d), method};
}

} // namespace ringdecay
