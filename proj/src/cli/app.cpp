#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "app.hpp"
#include "commands.hpp"
#include "csv.hpp"
#include "ringdecay/ring_model.hpp"
#include "validate.hpp"

namespace ringdecay::cli {

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Method> kMethods{{"quadrature", Method::quadrature}, {"series", Method::series}};
const std::map<std::string, SpectrumPath> kPaths{
    {"analytic", SpectrumPath::analytic}, {"oracle", SpectrumPath::oracle}, {"both", SpectrumPath::both}};
const std::map<std::string, SweepQuantity> kQuantities{
    {"rate", SweepQuantity::rate}, {"continuous", SweepQuantity::continuous}};

struct ModelFlags {
    std::string model = "scalar";
    std::optional<double> delta;

    // ModelKind validates the tilt range.
    ModelKind resolve() const
    {
        if (model == "scalar") {
            if (delta)
                throw UsageError("--delta only applies to --model vector");
            return ModelKind::scalar();
        }
        return ModelKind::vectorial(delta.value_or(0.0));
    }
};

struct SizeFlags {
    std::optional<double> a;
    std::optional<double> d_over_lambda;
    std::optional<double> lambda_over_d;

    double resolve(int n_atoms) const
    {
        const int given = (a ? 1 : 0) + (d_over_lambda ? 1 : 0) + (lambda_over_d ? 1 : 0);
        if (given != 1)
            throw UsageError("give exactly one of --a, --d-over-lambda, --lambda-over-d");
        if (a)
            return *a;
        const double spacing = d_over_lambda ? *d_over_lambda : 1.0 / *lambda_over_d;
        return lattice_conversion(n_atoms, spacing);
    }
};

void add_model_flags(CLI::App& cmd, ModelFlags& flags)
{
    cmd.add_option("--model", flags.model, "Light model")
        ->check(CLI::IsMember({"scalar", "vector"}))
        ->capture_default_str();
    cmd.add_option("--delta", flags.delta, "Dipole tilt from the ring plane, radians (vector model)");
}

void add_size_flags(CLI::App& cmd, SizeFlags& flags)
{
    auto* a = cmd.add_option("--a", flags.a, "Size parameter a = k0 rho");
    auto* d = cmd.add_option("--d-over-lambda", flags.d_over_lambda, "Nearest-neighbour spacing d/lambda0");
    auto* l = cmd.add_option("--lambda-over-d", flags.lambda_over_d, "Inverse spacing lambda0/d");
    a->excludes(d)->excludes(l);
    d->excludes(l);
}

void add_method_flag(CLI::App& cmd, Method& method)
{
    cmd.add_option("--method", method, "Coefficient evaluation method")
        ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
}

// Data sink: the named file, or `out` for "-"/"stdout"/unset.
class Output {
public:
    Output(const std::string& target, std::ostream& fallback) : stream_(&fallback)
    {
        if (!target.empty() && target != "-" && target != "stdout") {
            file_.open(target, std::ios::binary);
            if (!file_)
                throw UsageError("cannot open output file " + target);
            stream_ = &file_;
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cooperative decay spectrum of N two-level atoms on a ring", "ringdecay"};
    app.require_subcommand(1);

    std::string output;

    CoeffsOptions coeffs;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficient table c_n(a), optionally d_n(a)");
    coeffs_cmd->add_option("--a", coeffs.a, "Size parameter a = k0 rho")->required();
    coeffs_cmd->add_option("--n-max", coeffs.n_max, "Largest |n|")->required();
    coeffs_cmd->add_flag("--with-d", coeffs.with_d, "Add the d_n column");
    add_method_flag(*coeffs_cmd, coeffs.method);
    coeffs_cmd->add_option("--output", output, "Output path, or stdout");

    SpectrumOptions spectrum;
    ModelFlags spectrum_model;
    SizeFlags spectrum_size;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Decay spectrum rate_k for every mode");
    spectrum_cmd->add_option("--n-atoms", spectrum.n_atoms, "Number of atoms")->required();
    add_size_flags(*spectrum_cmd, spectrum_size);
    add_model_flags(*spectrum_cmd, spectrum_model);
    spectrum_cmd->add_option("--path", spectrum.path, "Closed form, direct transform, or both")
        ->transform(CLI::CheckedTransformer(kPaths, CLI::ignore_case));
    add_method_flag(*spectrum_cmd, spectrum.method);
    spectrum_cmd->add_option("--output", output, "Output path, or stdout");

    SweepSpec sweep = default_sweep_spec();
    ModelFlags sweep_model;
    double grid_min = 0.05;
    double grid_max = 100.0;
    int grid_points = 200;
    auto* sweep_cmd = app.add_subcommand("sweep", "Rates of selected modes across a lambda0/d grid");
    sweep_cmd->add_option("--n-atoms", sweep.n_atoms, "Number of atoms")->capture_default_str();
    add_model_flags(*sweep_cmd, sweep_model);
    sweep_cmd->add_option("--k", sweep.k_list, "Comma-separated signed mode indices")->delimiter(',');
    sweep_cmd->add_option("--grid-min", grid_min, "Smallest lambda0/d")->capture_default_str();
    sweep_cmd->add_option("--grid-max", grid_max, "Largest lambda0/d")->capture_default_str();
    sweep_cmd->add_option("--grid-points", grid_points, "Number of log-spaced points")->capture_default_str();
    sweep_cmd->add_option("--quantity", sweep.quantity, "rate (exact spectrum) or continuous (single alias)")
        ->transform(CLI::CheckedTransformer(kQuantities, CLI::ignore_case));
    add_method_flag(*sweep_cmd, sweep.method);
    sweep_cmd->add_option("--output", output, "Output path, or stdout");

    auto* validate_cmd = app.add_subcommand("validate", "Run the built-in consistency checks");
    validate_cmd->add_option("--output", output, "Report path, or stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg_out, msg_err;
        const int code = app.exit(e, msg_out, msg_err);
        out << msg_out.str();
        err << msg_err.str();
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (coeffs_cmd->parsed()) {
            if (coeffs.n_max < 0)
                throw UsageError("--n-max must be non-negative");
            Output sink(output, out);
            if (!write_coeffs(coeffs, sink.stream()))
                err << "warning: n-max below ceil(a) + 20; sum rules not guaranteed\n";
            return kExitSuccess;
        }
        if (spectrum_cmd->parsed()) {
            spectrum.model = spectrum_model.resolve();
            spectrum.a = spectrum_size.resolve(spectrum.n_atoms);
            Output sink(output, out);
            if (const auto worst = write_spectrum(spectrum, sink.stream()))
                err << "max_abs_diff," << format_number(*worst) << '\n';
            return kExitSuccess;
        }
        if (sweep_cmd->parsed()) {
            sweep.model = sweep_model.resolve();
            sweep.grid = log_grid(grid_min, grid_max, grid_points);
            check_sweep_spec(sweep);
            Output sink(output, out);
            write_sweep(sweep, sink.stream());
            return kExitSuccess;
        }
        Output sink(output, out);
        const bool ok = write_validation_report(run_validation(), sink.stream());
        return ok ? kExitSuccess : kExitValidationFailure;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace ringdecay::cli
