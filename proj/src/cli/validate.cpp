#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "ringdecay/spectrum.hpp"
#include "validate.hpp"

namespace ringdecay::cli {

namespace {

const std::vector<int> kGridAtoms{2, 3, 4, 6, 10, 16, 25, 40};
const std::vector<double> kGridSizes{0.0, 0.3, 1.0, 3.7, 10.0, 50.0};

std::vector<ModelKind> grid_models()
{
    return {ModelKind::scalar(), ModelKind::vectorial(0.0),
            ModelKind::vectorial(0.25 * std::numbers::pi), ModelKind::vectorial(0.5 * std::numbers::pi)};
}

std::string model_label(const ModelKind& model)
{
    if (!model.is_vectorial())
        return "scalar";
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "vector delta=%.6g", model.delta());
    return buffer;
}

std::string point_label(int n, double a, const ModelKind& model)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "N=%d a=%.6g ", n, a);
    return buffer + model_label(model);
}

std::string short_number(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", value);
    return buffer;
}

// Tracks the largest measurement and where it happened.
struct Worst {
    double value = 0.0;
    std::string where;

    void offer(double candidate, const std::string& label)
    {
        if (where.empty() || candidate > value) {
            value = candidate;
            where = label;
        }
    }
};

CheckResult upper_bound_check(std::string name, std::string criterion, const Worst& worst, double limit)
{
    return {std::move(name), std::move(criterion), worst.value, worst.value < limit, worst.where};
}

} // namespace

std::vector<CheckResult> run_validation()
{
    std::vector<CheckResult> checks;
    const auto models = grid_models();

    Worst equivalence, trace, negativity, reflection;
    for (int n : kGridAtoms) {
        for (double a : kGridSizes) {
            const RingConfig config(n, a);
            for (const ModelKind& model : models) {
                const std::string label = point_label(n, a, model);
                const DecaySpectrum analytic = analytic_spectrum(config, model);
                const DecaySpectrum oracle = oracle_spectrum(config, model);
                for (int k = 0; k < n; ++k) {
                    equivalence.offer(std::abs(analytic.at(k) - oracle.at(k)), label);
                    negativity.offer(-std::min(analytic.at(k), oracle.at(k)), label);
                    reflection.offer(std::max(std::abs(analytic.at(k) - analytic.at(n - k)),
                                              std::abs(oracle.at(k) - oracle.at(n - k))),
                                     label);
                }
                trace.offer(std::max(std::abs(analytic.trace() - n), std::abs(oracle.trace() - n)), label);
            }
        }
    }
    checks.push_back(upper_bound_check("oracle-equivalence", "max |Δ| < 1e-8", equivalence, 1e-8));
    checks.push_back(upper_bound_check("trace-sum", "max |Σ rate - N| < 1e-9", trace, 1e-9));
    checks.push_back(upper_bound_check("non-negativity", "max(-rate) < 1e-10", negativity, 1e-10));
    checks.push_back(upper_bound_check("reflection-symmetry", "max |rate_k - rate_-k| < 1e-12", reflection, 1e-12));

    Worst c_rule, d_rule;
    for (double a : {0.0, 1.0, 5.0, 20.0, 50.0}) {
        const CoefficientTable table = coeff_table(a, static_cast<int>(std::ceil(a)) + 40, true);
        const std::string label = "a=" + short_number(a);
        c_rule.offer(std::abs(table.c_sum() - 1.0), label);
        d_rule.offer(std::abs(table.d_sum() - 1.0 / 3.0), label);
    }
    checks.push_back(upper_bound_check("c-sum-rule", "|c_0 + 2Σc_n - 1| < 1e-9", c_rule, 1e-9));
    checks.push_back(upper_bound_check("d-sum-rule", "|d_0 + 2Σd_n - 1/3| < 1e-9", d_rule, 1e-9));

    Worst dicke_bright, dicke_dark;
    for (const ModelKind& model : {ModelKind::scalar(), ModelKind::vectorial(0.0)}) {
        const DecaySpectrum s = analytic_spectrum(RingConfig(10, 1e-8), model);
        const std::string label = point_label(10, 1e-8, model);
        dicke_bright.offer(std::abs(s.at(0) - 10.0), label);
        for (int k = 1; k < 10; ++k)
            dicke_dark.offer(std::abs(s.at(k)), label);
    }
    checks.push_back(upper_bound_check("dicke-bright", "|rate_0 - N| < 1e-4", dicke_bright, 1e-4));
    checks.push_back(upper_bound_check("dicke-dark", "max |rate_k≠0| < 1e-6", dicke_dark, 1e-6));

    const RingConfig plateau_ring = RingConfig::from_spacing(10, 20.0);
    const auto plateau = [&](const ModelKind& model, double target) {
        const DecaySpectrum s = analytic_spectrum(plateau_ring, model);
        Worst deviation;
        for (int k : {0, 1, 2, 4})
            deviation.offer(std::abs(s.at(k) / target - 1.0),
                            point_label(10, plateau_ring.size_parameter(), model) + " k=" + std::to_string(k));
        return deviation;
    };
    checks.push_back(upper_bound_check("scalar-plateau", "max |rate/0.025 - 1| < 0.15",
                                       plateau(ModelKind::scalar(), 0.025), 0.15));
    checks.push_back(upper_bound_check("vector-plateau", "max |rate/0.0375 - 1| < 0.15",
                                       plateau(ModelKind::vectorial(0.0), 0.0375), 0.15));

    {
        const double lo = std::log(subradiant_edge(16, 0.3).exact);
        const double hi = std::log(subradiant_edge(24, 0.3).exact);
        const double slope = (hi - lo) / 8.0;
        const double target = std::log(std::numbers::e * 0.3);
        const double relative = std::abs(slope / target - 1.0);
        checks.push_back({"subradiant-slope", "slope -0.204 ± 5% at d/λ0 = 0.3", slope, relative < 0.05,
                          "N=16..24, relative error " + short_number(relative)});
    }

    Worst dark;
    {
        const DecaySpectrum s = analytic_spectrum(RingConfig(40, 5.0), ModelKind::scalar());
        for (int k = 16; k <= 20; ++k)
            dark.offer(std::max(s.at(k), s.at(-k)), "N=40 a=5 k=" + std::to_string(k));
    }
    checks.push_back(upper_bound_check("dark-modes", "max rate_|k|>=16 < 1e-6", dark, 1e-6));

    Worst magic;
    const ModelKind magic_model = ModelKind::vectorial(std::acos(1.0 / std::sqrt(3.0)));
    for (int n : kGridAtoms) {
        for (double a : kGridSizes) {
            const RingConfig config(n, a);
            const DecaySpectrum vec = analytic_spectrum(config, magic_model);
            const DecaySpectrum sca = analytic_spectrum(config, ModelKind::scalar());
            for (int k = 0; k < n; ++k)
                magic.offer(std::abs(vec.at(k) - sca.at(k)), point_label(n, a, magic_model));
        }
    }
    checks.push_back(upper_bound_check("magic-angle", "max |vector - scalar| < 1e-12", magic, 1e-12));

    Worst methods;
    for (double a : {0.0, 0.1, 1.0, 5.0, 20.0, 50.0}) {
        for (int n = 0; n <= 64; ++n) {
            if (!series_admitted(n, a))
                continue;
            const std::string label = "n=" + std::to_string(n) + " a=" + short_number(a);
            methods.offer(std::abs(coeff_c(n, a, Method::quadrature) - coeff_c(n, a, Method::series)), label);
            methods.offer(std::abs(coeff_d(n, a, Method::quadrature) - coeff_d(n, a, Method::series)), label);
        }
    }
    checks.push_back(upper_bound_check("method-cross-check", "max |quadrature - series| < 1e-9", methods, 1e-9));
    return checks;
}

bool write_validation_report(const std::vector<CheckResult>& checks, std::ostream& out)
{
    bool all_passed = true;
    for (const CheckResult& check : checks) {
        all_passed = all_passed && check.passed;
        out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.criterion
            << " (measured " << short_number(check.measured);
        if (!check.worst_case.empty())
            out << "; " << (check.passed ? "worst " : "failing ") << check.worst_case;
        out << ")\n";
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
    out << (checks.size() - static_cast<std::size_t>(failed)) << "/" << checks.size() << " checks passed\n";
    return all_passed;
}

} // namespace ringdecay::cli
