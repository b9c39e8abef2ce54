#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "detail/compensated_sum.hpp"
#include "ringdecay/specfun.hpp"

namespace ringdecay {

namespace {

constexpr double kRescaleThreshold = 1e250;
constexpr double kRescaleFactor = 1e-250;
// Largest 2k/x ratio the recurrence may meet without f * (2k/x) overflowing.
constexpr double kMaxRecurrenceRatio = 1e50;

void check_order(int order)
{
    if (order < 0 || order > kMaxBesselOrder)
        throw std::domain_error("bessel_j: order " + std::to_string(order) +
                                " outside [0, " + std::to_string(kMaxBesselOrder) + "]");
}

void check_argument(double x)
{
    if (!std::isfinite(x))
        throw std::domain_error("bessel_j: argument must be finite");
}

bool use_power_series(int order, double x)
{
    return x * x < 4.0 * (order + 1.0);
}

// sum_m (-1)^m (x/2)^{2m+n} / (m! (m+n)!). Only called where the terms decrease
// from the first one, so the cancellation factor stays below e^2.
double power_series(int order, double x)
{
    const double half = 0.5 * x;
    const double log_first = order * std::log(half) - std::lgamma(order + 1.0);
    if (log_first < -745.0)
        return 0.0;
    double term = std::exp(log_first);
    const double q = half * half;
    detail::CompensatedSum sum;
    sum.add(term);
    for (int m = 0; m < 1000; ++m) {
        term *= -q / ((m + 1.0) * (m + 1.0 + order));
        sum.add(term);
        if (std::abs(term) <= 1e-17 * std::abs(sum.value()))
            break;
    }
    return sum.value();
}

int miller_start(int max_order, double x)
{
    const double top = std::max(static_cast<double>(max_order), std::ceil(x));
    int start = static_cast<int>(top + 20.0 + std::sqrt(40.0 * top));
    return start + (start & 1);
}

struct MillerResult {
    double norm;
    int rescales;
};

// Downward recurrence f_{k-1} = (2k/x) f_k - f_{k+1} from an even start order,
// accumulating J_0 + 2 sum J_{2k} = 1 for the normalization. sink(k, f_k, r_k)
// receives every order <= max_order together with the rescale count at the
// time it was produced; the true value is f_k * 1e-250^(rescales - r_k) / norm.
template <class Sink>
MillerResult miller_downward(int max_order, double x, Sink&& sink)
{
    const int start = miller_start(max_order, x);
    double f_above = 0.0;
    double f = 1.0;
    detail::CompensatedSum norm;
    norm.add(2.0 * f);
    int rescales = 0;
    for (int k = start; k > 0; --k) {
        const double f_below = (2.0 * k / x) * f - f_above;
        f_above = f;
        f = f_below;
        const int order = k - 1;
        if (order == 0)
            norm.add(f);
        else if (order % 2 == 0)
            norm.add(2.0 * f);
        if (order <= max_order)
            sink(order, f, rescales);
        if (std::abs(f) > kRescaleThreshold) {
            f *= kRescaleFactor;
            f_above *= kRescaleFactor;
            norm.scale(kRescaleFactor);
            ++rescales;
        }
    }
    return {norm.value(), rescales};
}

double unscale(double f, int recorded_at, const MillerResult& result)
{
    const int pending = result.rescales - recorded_at;
    if (pending >= 2)
        return 0.0;
    if (pending == 1)
        f *= kRescaleFactor;
    return f / result.norm;
}

bool recurrence_safe(int max_order, double x)
{
    return 2.0 * miller_start(max_order, x) / x < kMaxRecurrenceRatio;
}

double parity_sign(int order, double x)
{
    return (x < 0.0 && (order & 1)) ? -1.0 : 1.0;
}

} // namespace

double bessel_j(int order, double x)
{
    check_order(order);
    check_argument(x);
    if (x == 0.0)
        return order == 0 ? 1.0 : 0.0;
    const double sign = parity_sign(order, x);
    x = std::abs(x);
    if (use_power_series(order, x) || !recurrence_safe(order, x))
        return sign * power_series(order, x);

    double value = 0.0;
    int recorded_at = 0;
    const MillerResult result = miller_downward(order, x, [&](int k, double f, int r) {
        if (k == order) {
            value = f;
            recorded_at = r;
        }
    });
    return sign * unscale(value, recorded_at, result);
}

std::vector<double> bessel_j_sequence(int max_order, double x)
{
    check_order(max_order);
    check_argument(x);
    const auto size = static_cast<std::size_t>(max_order) + 1;
    std::vector<double> values(size, 0.0);
    if (x == 0.0) {
        values[0] = 1.0;
        return values;
    }
    const bool negative = x < 0.0;
    x = std::abs(x);

    if (!recurrence_safe(max_order, x)) {
        // x this small: every order is a one- or two-term series.
        for (int k = 0; k <= max_order; ++k)
            values[static_cast<std::size_t>(k)] = power_series(k, x);
    } else {
        std::vector<int> recorded(size, 0);
        const MillerResult result = miller_downward(max_order, x, [&](int k, double f, int r) {
            values[static_cast<std::size_t>(k)] = f;
            recorded[static_cast<std::size_t>(k)] = r;
        });
        for (std::size_t k = 0; k < size; ++k)
            values[k] = unscale(values[k], recorded[k], result);
    }

    if (negative)
        for (std::size_t k = 1; k < size; k += 2)
            values[k] = -values[k];
    return values;
}

} // namespace ringdecay
