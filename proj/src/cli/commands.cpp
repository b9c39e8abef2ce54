#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include "commands.hpp"
#include "csv.hpp"
#include "ringdecay/spectrum.hpp"

namespace ringdecay::cli {

bool write_coeffs(const CoeffsOptions& options, std::ostream& out)
{
    const CoefficientTable table = coeff_table(options.a, options.n_max, options.with_d, options.method);
    CsvWriter csv(out);
    if (options.with_d)
        csv.header({"n", "c_n", "d_n"});
    else
        csv.header({"n", "c_n"});
    for (int n = -options.n_max; n <= options.n_max; ++n) {
        csv.field(n).field(table.c_at(n));
        if (options.with_d)
            csv.field(table.d_at(n));
        csv.end_row();
    }
    return table.meets_recommended_cutoff();
}

std::optional<double> write_spectrum(const SpectrumOptions& options, std::ostream& out)
{
    const RingConfig config(options.n_atoms, options.a);
    CsvWriter csv(out);

    if (options.path == SpectrumPath::oracle) {
        const DecaySpectrum oracle = oracle_spectrum(config, options.model);
        csv.header({"k", "rate_oracle"});
        for (int k = oracle.min_signed_k(); k <= oracle.max_signed_k(); ++k) {
            csv.field(k).field(oracle.at(k));
            csv.end_row();
        }
        return std::nullopt;
    }

    const DecaySpectrum analytic = analytic_spectrum(config, options.model, options.method);
    if (options.path == SpectrumPath::analytic) {
        csv.header({"k", "rate"});
        for (int k = analytic.min_signed_k(); k <= analytic.max_signed_k(); ++k) {
            csv.field(k).field(analytic.at(k));
            csv.end_row();
        }
        return std::nullopt;
    }

    const DecaySpectrum oracle = oracle_spectrum(config, options.model);
    csv.header({"k", "rate", "rate_oracle", "abs_diff"});
    double worst = 0.0;
    for (int k = analytic.min_signed_k(); k <= analytic.max_signed_k(); ++k) {
        const double diff = std::abs(analytic.at(k) - oracle.at(k));
        worst = std::max(worst, diff);
        csv.field(k).field(analytic.at(k)).field(oracle.at(k)).field(diff);
        csv.end_row();
    }
    return worst;
}

std::vector<double> log_grid(double lo, double hi, int count)
{
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
        throw std::invalid_argument("grid needs 0 < grid-min < grid-max");
    if (count < 2)
        throw std::invalid_argument("grid needs at least two points");
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / (count - 1);
    for (int i = 0; i < count; ++i)
        grid[static_cast<std::size_t>(i)] = std::exp(log_lo + step * i);
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

SweepSpec default_sweep_spec()
{
    SweepSpec spec;
    spec.grid = log_grid(0.05, 100.0, 200);
    return spec;
}

void check_sweep_spec(const SweepSpec& spec)
{
    if (spec.n_atoms < 2)
        throw std::invalid_argument("sweep needs at least two atoms");
    if (spec.grid.empty())
        throw std::invalid_argument("sweep grid is empty");
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        if (!(spec.grid[i] > 0.0))
            throw std::invalid_argument("sweep grid values must be positive");
        if (i > 0 && !(spec.grid[i] > spec.grid[i - 1]))
            throw std::invalid_argument("sweep grid must be strictly increasing");
    }
    if (spec.k_list.empty())
        throw std::invalid_argument("sweep needs at least one mode index");
    for (int k : spec.k_list)
        if (2 * std::abs(k) > spec.n_atoms)
            throw std::invalid_argument("mode index " + std::to_string(k) + " outside |k| <= N/2");
}

namespace {

std::vector<double> sweep_point(const SweepSpec& spec, const std::vector<int>& ks, double lambda_over_d)
{
    const RingConfig config = RingConfig::from_spacing(spec.n_atoms, 1.0 / lambda_over_d);
    std::vector<double> rates;
    rates.reserve(ks.size());
    if (spec.quantity == SweepQuantity::rate) {
        const DecaySpectrum spectrum = analytic_spectrum(config, spec.model, spec.method);
        for (int k : ks)
            rates.push_back(spectrum.at(k));
    } else {
        for (int k : ks)
            rates.push_back(continuous_limit_rate(spec.n_atoms, config.size_parameter(), k, spec.model));
    }
    return rates;
}

} // namespace

void write_sweep(const SweepSpec& spec, std::ostream& out)
{
    check_sweep_spec(spec);
    std::vector<int> ks = spec.k_list;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    const std::size_t points = spec.grid.size();
    std::vector<std::vector<double>> results(points);
    std::vector<std::exception_ptr> errors(points);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < points; i = next++) {
            try {
                results[i] = sweep_point(spec, ks, spec.grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < std::min<std::size_t>(threads, points); ++t)
            pool.emplace_back(worker);
        worker();
    }
    for (const auto& error : errors)
        if (error)
            std::rethrow_exception(error);

    CsvWriter csv(out);
    csv.header({"lambda_over_d", "k", "rate"});
    for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t j = 0; j < ks.size(); ++j) {
            csv.field(spec.grid[i]).field(ks[j]).field(results[i][j]);
            csv.end_row();
        }
    }
}

} // namespace ringdecay::cli
