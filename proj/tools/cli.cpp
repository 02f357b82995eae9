#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "specladder/config.hpp"
#include "specladder/errors.hpp"
#include "specladder/ladder.hpp"
#include "specladder/models.hpp"
#include "specladder/oracle.hpp"
#include "specladder/render.hpp"

namespace specladder::cli {
namespace {

constexpr int kOk = 0;
constexpr int kToleranceFail = 1;
constexpr int kBadParams = 2;
constexpr int kOracleFail = 3;

int classify(const std::exception& e) {
    if (dynamic_cast<const ConsistencyViolation*>(&e)) return kToleranceFail;
    if (dynamic_cast<const ConvergenceFailure*>(&e) ||
        dynamic_cast<const RootBracketFailure*>(&e) ||
        dynamic_cast<const InsufficientBoundStates*>(&e) ||
        dynamic_cast<const TruncationWarning*>(&e))
        return kOracleFail;
    return kBadParams;
}

// Everything a subcommand can set. Option pointers let the dispatcher tell
// an explicit flag from a default, both for the per-model flag schema and
// for config overrides.
struct Options {
    std::string model;
    std::string format = "table";
    std::string config_path;
    bool all = false;

    std::size_t levels = 5;
    int N = 3;
    int l = 0;
    int two_j = 0;
    int Z = 1;
    double epsilon = 1e-4;
    double alpha = 1.0 / 137.035999;
    double hbar = 1.0;
    double mass = 1.0;
    double omega = 1.0;
    double length_L = 1.0;
    bool allow_z = false;

    double q_max = 0.0;
    double r_max = 0.0;
    std::size_t points = 0;
    double tol_abs = 0.0;
    double tol_rel = 0.0;
    std::size_t basis_dim = 0;

    std::string input_path;

    std::vector<std::pair<CLI::Option*, std::string>> model_flags;
    CLI::Option* levels_opt = nullptr;
    CLI::Option* epsilon_opt = nullptr;
    CLI::Option* two_j_opt = nullptr;
    CLI::Option* q_max_opt = nullptr;
    CLI::Option* r_max_opt = nullptr;
    CLI::Option* points_opt = nullptr;
    CLI::Option* tol_abs_opt = nullptr;
    CLI::Option* tol_rel_opt = nullptr;
    CLI::Option* basis_dim_opt = nullptr;

    PhysicalUnits units() const {
        PhysicalUnits u;
        u.hbar = hbar;
        u.mass = mass;
        u.omega = omega;
        u.length_L = length_L;
        u.Z = Z;
        u.alpha_fs = alpha;
        return u;
    }
};

void add_common_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format: table, json or csv")
        ->default_str("table");
    cmd->add_option("--config", o.config_path, "configuration file path");
}

// Model-parameter flags shared by spectrum and verify. Each registered flag
// is recorded with its display name so the per-model schema check can name
// the offending field.
void add_model_flags(CLI::App* cmd, Options& o) {
    auto track = [&o](CLI::Option* opt, const char* name) {
        o.model_flags.emplace_back(opt, name);
        return opt;
    };
    o.levels_opt = track(cmd->add_option("--levels", o.levels, "number of levels"), "--levels");
    track(cmd->add_option("--N", o.N, "spatial dimension"), "--N");
    track(cmd->add_option("--l", o.l, "angular momentum quantum number"), "--l");
    o.two_j_opt =
        track(cmd->add_option("--two-j", o.two_j, "twice the total angular momentum"), "--two-j");
    track(cmd->add_option("--Z", o.Z, "nuclear charge"), "--Z");
    o.epsilon_opt =
        track(cmd->add_option("--epsilon", o.epsilon, "x^4 perturbation strength"), "--epsilon");
    track(cmd->add_option("--alpha", o.alpha, "fine-structure constant"), "--alpha");
    track(cmd->add_option("--hbar", o.hbar, "hbar"), "--hbar");
    track(cmd->add_option("--mass", o.mass, "particle mass"), "--mass");
    track(cmd->add_option("--omega", o.omega, "oscillator frequency"), "--omega");
    track(cmd->add_option("--L", o.length_L, "well width"), "--L");
    track(cmd->add_flag("--allow-z-extension", o.allow_z,
                        "permit Z > 1 in the relativistic model"),
          "--allow-z-extension");
}

void add_verify_flags(CLI::App* cmd, Options& o) {
    auto track = [&o](CLI::Option* opt, const char* name) {
        o.model_flags.emplace_back(opt, name);
        return opt;
    };
    o.q_max_opt = track(
        cmd->add_option("--q-max", o.q_max, "half-width/extent of the oscillator grid"),
        "--q-max");
    o.r_max_opt =
        track(cmd->add_option("--r-max", o.r_max, "radial box size"), "--r-max");
    o.points_opt =
        track(cmd->add_option("--points", o.points, "grid points/cells"), "--points");
    o.tol_abs_opt =
        track(cmd->add_option("--tol-abs", o.tol_abs, "absolute tolerance"), "--tol-abs");
    o.tol_rel_opt =
        track(cmd->add_option("--tol-rel", o.tol_rel, "relative tolerance"), "--tol-rel");
    o.basis_dim_opt = track(
        cmd->add_option("--basis-dim", o.basis_dim, "oscillator basis size"), "--basis-dim");
}

const std::set<std::string> kModels = {"ho1d",  "angular",     "iso-ho",      "hydrogen",
                                       "dirac", "square-well", "perturbed-ho"};

const std::map<std::string, std::set<std::string>> kSpectrumAllowed = {
    {"ho1d", {"--levels", "--hbar", "--omega"}},
    {"angular", {"--two-j"}},
    {"iso-ho", {"--levels", "--N", "--l", "--hbar", "--omega"}},
    {"hydrogen", {"--levels", "--N", "--l", "--Z"}},
    {"dirac", {"--levels", "--l", "--alpha", "--Z", "--allow-z-extension"}},
    {"square-well", {"--levels", "--hbar", "--mass", "--L"}},
    {"perturbed-ho", {"--levels", "--epsilon", "--hbar", "--mass", "--omega"}},
};

const std::map<std::string, std::set<std::string>> kVerifyAllowed = {
    {"ho1d", {"--levels", "--hbar", "--omega", "--q-max", "--points", "--tol-abs", "--tol-rel"}},
    {"angular", {}},
    {"iso-ho",
     {"--levels", "--N", "--l", "--hbar", "--omega", "--q-max", "--points", "--tol-abs",
      "--tol-rel"}},
    {"hydrogen",
     {"--levels", "--N", "--l", "--Z", "--r-max", "--points", "--tol-abs", "--tol-rel"}},
    {"dirac",
     {"--levels", "--l", "--alpha", "--Z", "--allow-z-extension", "--points", "--tol-abs",
      "--tol-rel"}},
    {"square-well",
     {"--levels", "--hbar", "--mass", "--L", "--points", "--tol-abs", "--tol-rel"}},
    {"perturbed-ho",
     {"--levels", "--epsilon", "--basis-dim", "--tol-abs", "--tol-rel"}},
};

// Rejects flags the selected model does not accept; returns the diagnostic
// for the first offender or nullopt when the set is clean.
std::optional<std::string> schema_violation(
    const Options& o, const std::map<std::string, std::set<std::string>>& allowed_by_model) {
    auto it = allowed_by_model.find(o.model);
    if (it == allowed_by_model.end()) return "unknown model '" + o.model + "'";
    const auto& allowed = it->second;
    for (const auto& [opt, name] : o.model_flags)
        if (opt->count() > 0 && allowed.count(name) == 0)
            return "flag " + name + " does not apply to model '" + o.model + "'";
    return std::nullopt;
}

ModelSpectrum make_spectrum(const Options& o, const Config& cfg) {
    const PhysicalUnits units = o.units();
    if (o.model == "ho1d") return ho_1d(units, o.levels);
    if (o.model == "angular") {
        if (o.two_j_opt->count() == 0)
            throw InvalidParameter("model 'angular' requires --two-j");
        return angular_momentum(o.two_j);
    }
    if (o.model == "iso-ho") return iso_ho_nd(units, o.N, o.l, o.levels);
    if (o.model == "hydrogen") return hydrogen_nd(units, o.N, o.l, o.levels);
    if (o.model == "dirac") {
        DiracParams params;
        params.l = o.l;
        params.alpha_fs = o.alpha;
        params.Z = o.Z;
        params.allow_z_extension = o.allow_z;
        return dirac_hydrogen(params, o.levels);
    }
    if (o.model == "square-well") return square_well(units, o.levels);
    if (o.model == "perturbed-ho") {
        const double eps =
            o.epsilon_opt->count() > 0 ? o.epsilon : cfg.get_double("perturbed-ho.epsilon");
        return perturbed_ho(units, eps, o.levels);
    }
    throw InvalidParameter("unknown model '" + o.model + "'");
}

std::string grid_desc(const Grid& grid) {
    std::ostringstream s;
    s << "q_min=" << grid.q_min << " q_max=" << grid.q_max << " points=" << grid.points;
    return s.str();
}

// Per-model verification: runs the numerical oracle, converts its output into
// the model's declared unit, and builds the comparison report. Grid sizes and
// tolerances come from the named config section unless overridden.
OracleReport verify_model(const Options& o, const Config& cfg) {
    const PhysicalUnits units = o.units();

    auto levels_from = [&](const std::string& key) {
        return o.levels_opt->count() > 0 ? o.levels : cfg.get_count(key);
    };
    auto tol_abs_from = [&](const std::string& key) {
        return o.tol_abs_opt->count() > 0 ? o.tol_abs : cfg.get_double(key);
    };
    auto tol_rel_from = [&](const std::string& key) {
        return o.tol_rel_opt->count() > 0 ? o.tol_rel : cfg.get_double(key);
    };
    auto points_from = [&](const std::string& key) {
        return o.points_opt->count() > 0 ? o.points : cfg.get_count(key);
    };

    if (o.model == "ho1d") {
        Grid grid;
        grid.q_min = cfg.get_double("ho1d.q_min");
        grid.q_max = cfg.get_double("ho1d.q_max");
        if (o.q_max_opt->count() > 0) {
            grid.q_max = o.q_max;
            grid.q_min = -o.q_max;
        }
        grid.points = points_from("ho1d.points");
        const std::size_t levels = levels_from("ho1d.levels");
        ModelSpectrum model = ho_1d(units, levels);
        // Dimensionless full-line problem -u'' + q^2 u = 2E/(hbar omega) u.
        TridiagonalOperator op = discretize_potential(grid, [](double q) { return q * q; });
        std::vector<double> numeric = eig_tridiagonal(op, levels);
        for (double& e : numeric) e *= 0.5 * units.hbar * units.omega;
        return compare(model, numeric, model.unit, tol_abs_from("ho1d.tol_abs"),
                       tol_rel_from("ho1d.tol_rel"), grid_desc(grid));
    }

    if (o.model == "iso-ho") {
        Grid grid;
        grid.q_max = o.q_max_opt->count() > 0 ? o.q_max : cfg.get_double("iso-ho.q_max");
        grid.points = points_from("iso-ho.points");
        const std::size_t levels = levels_from("iso-ho.levels");
        ModelSpectrum model = iso_ho_nd(units, o.N, o.l, levels);
        // Radial eigenvalues are the gap-4 ladder b_k = 2E/(hbar omega).
        std::vector<double> numeric = solve_oscillator_radial(o.N, o.l, grid, levels);
        for (double& e : numeric) e *= 0.5 * units.hbar * units.omega;
        return compare(model, numeric, model.unit, tol_abs_from("iso-ho.tol_abs"),
                       tol_rel_from("iso-ho.tol_rel"), grid_desc(grid));
    }

    if (o.model == "hydrogen") {
        if (o.N < 1 || o.N > 3)
            throw InvalidParameter("hydrogen oracle supports N in {1, 2, 3}");
        const std::string section =
            o.N == 3 ? "hydrogen3d" : (o.N == 2 ? "hydrogen2d" : "hydrogen1d");
        Grid grid;
        // Bound orbits shrink as 1/Z, so the default box does too.
        grid.q_max = o.r_max_opt->count() > 0 ? o.r_max
                                              : cfg.get_double(section + ".r_max") / o.Z;
        grid.points = points_from(section + ".points");
        const std::size_t levels = levels_from(section + ".levels");
        ModelSpectrum model = hydrogen_nd(units, o.N, o.l, levels);
        std::vector<double> numeric = solve_hydrogen_radial(o.N, o.l, o.Z, grid, levels);
        // The oracle works at charge Z; the model states energies per
        // Z^2 e^4 m/hbar^2.
        for (double& e : numeric) e /= static_cast<double>(o.Z) * o.Z;
        return compare(model, numeric, model.unit, tol_abs_from(section + ".tol_abs"),
                       tol_rel_from(section + ".tol_rel"), grid_desc(grid));
    }

    if (o.model == "dirac") {
        DiracParams params;
        params.l = o.l;
        params.alpha_fs = o.alpha;
        params.Z = o.Z;
        params.allow_z_extension = o.allow_z;
        params.validate();
        const std::size_t levels = levels_from("dirac.levels");
        ModelSpectrum model = dirac_hydrogen(params, levels);
        DiracOracleOptions opts;
        opts.points = points_from("dirac.points");
        opts.box_factor = cfg.get_double("dirac.box_factor");
        opts.bisect_tol = cfg.get_double("dirac.bisect_tol");
        // Energies depend on Z and alpha only through their product.
        std::vector<double> numeric = solve_dirac_radial(o.l, params.za(), levels, opts);
        std::ostringstream info;
        info << "cells=" << opts.points << " box_factor=" << opts.box_factor
             << " bisect_tol=" << opts.bisect_tol;
        return compare(model, numeric, model.unit, tol_abs_from("dirac.tol_abs"),
                       tol_rel_from("dirac.tol_rel"), info.str());
    }

    if (o.model == "square-well") {
        Grid grid;
        grid.q_min = 0.0;
        grid.q_max = std::acos(-1.0);
        grid.points = points_from("square-well.points");
        const std::size_t levels = levels_from("square-well.levels");
        ModelSpectrum model = square_well(units, levels);
        // -w'' on (0, pi) has eigenvalues k^2, exactly the model's E1 units.
        TridiagonalOperator op = discretize_potential(grid, [](double) { return 0.0; });
        std::vector<double> numeric = eig_tridiagonal(op, levels);
        return compare(model, numeric, model.unit, tol_abs_from("square-well.tol_abs"),
                       tol_rel_from("square-well.tol_rel"), grid_desc(grid));
    }

    if (o.model == "perturbed-ho") {
        const double eps =
            o.epsilon_opt->count() > 0 ? o.epsilon : cfg.get_double("perturbed-ho.epsilon");
        const std::size_t basis = o.basis_dim_opt->count() > 0
                                      ? o.basis_dim
                                      : cfg.get_count("perturbed-ho.basis_dim");
        const std::size_t levels = levels_from("perturbed-ho.levels");
        const double sensitivity = cfg.get_double("perturbed-ho.sensitivity");
        // The matrix oracle works at hbar = m = omega = 1; the model is built
        // with the same defaults so the corrections are directly comparable.
        ModelSpectrum model = perturbed_ho(PhysicalUnits{}, eps, levels);
        std::vector<double> full = solve_perturbed_ho(eps, basis, levels, sensitivity);
        std::vector<double> numeric(full.size());
        for (std::size_t k = 0; k < full.size(); ++k)
            numeric[k] = full[k] - (static_cast<double>(k) + 0.5);
        std::ostringstream info;
        info << "basis_dim=" << basis << " epsilon=" << eps;
        return compare(model, numeric, model.unit, tol_abs_from("perturbed-ho.tol_abs"),
                       tol_rel_from("perturbed-ho.tol_rel"), info.str());
    }

    if (o.model == "angular")
        throw InvalidParameter(
            "model 'angular' has no numerical oracle; its ladder is exact by construction");
    throw InvalidParameter("unknown model '" + o.model + "'");
}

int run_verify_one(const Options& o, const Config& cfg, OutputFormat format, std::ostream& out,
                   std::ostream& err) {
    try {
        OracleReport report = verify_model(o, cfg);
        out << render_report(report, format);
        for (const auto& warning : report.warnings) err << "warning: " << warning << "\n";
        return report.pass ? kOk : kToleranceFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return classify(e);
    }
}

int run_verify_all(const Options& base, const Config& cfg, OutputFormat format, std::ostream& out,
                   std::ostream& err) {
    static const std::vector<std::string> kOrder = {"ho1d",  "iso-ho",      "hydrogen",
                                                    "dirac", "square-well", "perturbed-ho"};
    struct Outcome {
        int code;
        std::string out_text;
        std::string err_text;
    };
    // Each verification runs isolated on config defaults; output is buffered
    // and emitted in declaration order regardless of completion order.
    std::vector<std::future<Outcome>> futures;
    futures.reserve(kOrder.size());
    for (const auto& name : kOrder) {
        futures.push_back(std::async(std::launch::async, [&base, &cfg, format, name]() {
            Options o = base;
            o.model = name;
            std::ostringstream o_buf;
            std::ostringstream e_buf;
            Outcome outcome;
            outcome.code = run_verify_one(o, cfg, format, o_buf, e_buf);
            outcome.out_text = o_buf.str();
            outcome.err_text = e_buf.str();
            return outcome;
        }));
    }
    int worst = kOk;
    for (auto& future : futures) {
        Outcome outcome = future.get();
        out << outcome.out_text;
        err << outcome.err_text;
        worst = std::max(worst, outcome.code);
    }
    return worst;
}

int run_consistency(const Options& o, const Config& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream file(o.input_path);
    if (!file) {
        err << "error: cannot read input file '" << o.input_path << "'\n";
        return kBadParams;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();

    Tolerance tol;
    tol.abs = cfg.get_double("consistency.tol_abs");
    tol.rel = cfg.get_double("consistency.tol_rel");

    ConsistencyInput input = parse_consistency_input(buffer.str());
    SpectrumPair pair = input.has_pair ? input.pair : spectrum_from_coeffs(input.spec);
    ConsistencyReport report = check_pair(pair, tol);
    if (!report.consistent) {
        out << "violation at k=" << report.first_violation << ": " << report.detail << "\n";
        return kToleranceFail;
    }
    out << "consistent";
    if (pair.finite) out << " (top closure s_top = -a_top satisfied)";
    out << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ladder-operator spectra for exactly solvable quantum models"};
    app.name("specladder");
    app.require_subcommand(0, 1);

    Options spectrum_opts;
    Options verify_opts;
    Options perturb_opts;
    Options consistency_opts;

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "print a model's energy levels");
    spectrum_cmd->add_option("model", spectrum_opts.model, "model name")->required();
    add_common_flags(spectrum_cmd, spectrum_opts);
    add_model_flags(spectrum_cmd, spectrum_opts);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check a model against its numerical oracle");
    verify_cmd->add_option("model", verify_opts.model, "model name");
    verify_cmd->add_flag("--all", verify_opts.all, "verify every model with an oracle");
    add_common_flags(verify_cmd, verify_opts);
    add_model_flags(verify_cmd, verify_opts);
    add_verify_flags(verify_cmd, verify_opts);

    CLI::App* perturb_cmd = app.add_subcommand(
        "perturb", "print first-order x^4 energy corrections (spectrum perturbed-ho)");
    add_common_flags(perturb_cmd, perturb_opts);
    add_model_flags(perturb_cmd, perturb_opts);

    CLI::App* consistency_cmd =
        app.add_subcommand("consistency", "check spectrum identities on a JSON input");
    consistency_cmd->add_option("--input", consistency_opts.input_path, "JSON input file")
        ->required();
    add_common_flags(consistency_cmd, consistency_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadParams;
    }

    try {
        if (spectrum_cmd->parsed()) {
            auto violation = schema_violation(spectrum_opts, kSpectrumAllowed);
            if (violation) {
                err << "error: " << *violation << "\n";
                return kBadParams;
            }
            Config cfg = Config::resolve(spectrum_opts.config_path);
            OutputFormat format = parse_format(spectrum_opts.format);
            out << render_spectrum(make_spectrum(spectrum_opts, cfg), format);
            return kOk;
        }

        if (perturb_cmd->parsed()) {
            perturb_opts.model = "perturbed-ho";
            auto violation = schema_violation(perturb_opts, kSpectrumAllowed);
            if (violation) {
                err << "error: " << *violation << "\n";
                return kBadParams;
            }
            Config cfg = Config::resolve(perturb_opts.config_path);
            OutputFormat format = parse_format(perturb_opts.format);
            out << render_spectrum(make_spectrum(perturb_opts, cfg), format);
            return kOk;
        }

        if (verify_cmd->parsed()) {
            if (verify_opts.all != verify_opts.model.empty()) {
                err << "error: verify needs a model name or --all, not both\n";
                return kBadParams;
            }
            Config cfg = Config::resolve(verify_opts.config_path);
            OutputFormat format = parse_format(verify_opts.format);
            if (verify_opts.all) {
                for (const auto& [opt, name] : verify_opts.model_flags)
                    if (opt->count() > 0) {
                        err << "error: flag " << name << " does not apply to --all\n";
                        return kBadParams;
                    }
                return run_verify_all(verify_opts, cfg, format, out, err);
            }
            auto violation = schema_violation(verify_opts, kVerifyAllowed);
            if (violation) {
                err << "error: " << *violation << "\n";
                return kBadParams;
            }
            return run_verify_one(verify_opts, cfg, format, out, err);
        }

        if (consistency_cmd->parsed()) {
            Config cfg = Config::resolve(consistency_opts.config_path);
            return run_consistency(consistency_opts, cfg, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return classify(e);
    }

    out << app.help();
    return kOk;
}

}  // namespace specladder::cli
