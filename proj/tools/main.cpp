#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "voidcrack/kernels.hpp"
#include "voidcrack/material.hpp"
#include "voidcrack/penny.hpp"
#include "voidcrack/plane.hpp"
#include "voidcrack/sweep.hpp"

namespace {

using voidcrack::CrackConfig;
using voidcrack::KernelContext;
using voidcrack::OutputFormat;
using voidcrack::PorousParams;
using voidcrack::Problem;
using voidcrack::SweepConfig;
using voidcrack::SweepRow;

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

void print_error_json(const std::string& type, const std::string& message, int code) {
    nlohmann::ordered_json j;
    j["error"] = {{"type", type}, {"message", message}, {"exit_code", code}};
    std::cerr << j.dump() << "\n";
}

int classify(const std::exception& e) {
    if (dynamic_cast<const voidcrack::IoError*>(&e)) return kExitIo;
    if (dynamic_cast<const voidcrack::ConvergenceError*>(&e) ||
        dynamic_cast<const voidcrack::SingularMatrixError*>(&e)) {
        return kExitNumerical;
    }
    return kExitValidation;
}

const char* type_name(const std::exception& e) {
    if (dynamic_cast<const voidcrack::ParameterError*>(&e)) return "parameter";
    if (dynamic_cast<const voidcrack::CouplingError*>(&e)) return "coupling";
    if (dynamic_cast<const voidcrack::DomainError*>(&e)) return "domain";
    if (dynamic_cast<const voidcrack::UsageError*>(&e)) return "usage";
    if (dynamic_cast<const voidcrack::IoError*>(&e)) return "io";
    if (dynamic_cast<const voidcrack::ConvergenceError*>(&e)) return "convergence";
    if (dynamic_cast<const voidcrack::SingularMatrixError*>(&e)) return "singular_matrix";
    return "error";
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::kCsv;
    if (s == "json") return OutputFormat::kJson;
    throw voidcrack::UsageError("format must be csv or json, got " + s);
}

void emit_rows(const std::vector<SweepRow>& rows, OutputFormat format,
               const std::string& path) {
    if (path.empty()) {
        voidcrack::emit(rows, format, std::cout);
    } else {
        voidcrack::emit_to_path(rows, format, path);
    }
}

void dump_profile(const std::vector<std::pair<double, double>>& profile,
                  const std::string& path, const char* xname, const char* yname) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw voidcrack::IoError("cannot open dump path: " + path);
    out << xname << ',' << yname << '\n';
    for (const auto& [x, y] : profile) {
        out << voidcrack::format_number(x) << ',' << voidcrack::format_number(y) << '\n';
    }
}

int run_single_cmd(Problem problem, double c2, double N, double b, double sigma0, double mu,
                   int n_or_m, const std::string& format, const std::string& output,
                   const std::string& dump) {
    const PorousParams params = PorousParams::from_c2_N(c2, N);
    const CrackConfig cfg{b, sigma0, mu};
    voidcrack::validate(cfg);
    std::vector<std::pair<double, double>> profile;
    const SweepRow row = voidcrack::run_single_with_profile(
        problem, cfg, params, n_or_m, dump.empty() ? nullptr : &profile);
    if (row.status == voidcrack::RowStatus::kError) {
        print_error_json("solver", row.error_message, kExitNumerical);
        return kExitNumerical;
    }
    if (!dump.empty()) {
        dump_profile(profile, dump, problem == Problem::kPlane ? "x" : "xi",
                     problem == Problem::kPlane ? "g" : "gamma");
    }
    emit_rows({row}, parse_format(format), output);
    return 0;
}

// The four reference parameter grids.  The c2 = 0.2 grids span N in
// [0, 0.775] (step 0.025); the c2 = 0.4 ones stop at N = 0.58 (step 0.02).
SweepConfig preset_config(const std::string& name) {
    SweepConfig cfg;
    cfg.n_start = 0.0;
    cfg.n_stop = 0.775;
    cfg.n_step = 0.025;
    if (name == "fig1") {
        cfg.problem = Problem::kPenny;
        cfg.c2_list = {0.2};
        cfg.b_list = {1.0, 5.0, 10.0};
        cfg.n_or_m = voidcrack::kFigurePennyM;
    } else if (name == "fig2") {
        cfg.problem = Problem::kPenny;
        cfg.c2_list = {0.4};
        cfg.b_list = {1.0, 5.0, 10.0};
        cfg.n_stop = 0.58;
        cfg.n_step = 0.02;
        cfg.n_or_m = voidcrack::kFigurePennyM;
    } else if (name == "fig3") {
        cfg.problem = Problem::kPlane;
        cfg.c2_list = {0.2};
        cfg.b_list = {1.0, 3.0, 10.0};
        cfg.n_or_m = voidcrack::kFigurePlaneN;
    } else if (name == "fig4") {
        cfg.problem = Problem::kPlane;
        cfg.c2_list = {0.4};
        cfg.b_list = {1.0, 3.0, 6.0};
        cfg.n_stop = 0.58;
        cfg.n_step = 0.02;
        cfg.n_or_m = voidcrack::kFigurePlaneN;
    } else {
        throw voidcrack::UsageError("unknown preset: " + name +
                                    " (expected fig1, fig2, fig3 or fig4)");
    }
    return cfg;
}

SweepConfig config_from_json(const nlohmann::json& j) {
    SweepConfig cfg;
    if (j.contains("preset")) cfg = preset_config(j.at("preset").get<std::string>());
    if (j.contains("problem")) {
        const auto p = j.at("problem").get<std::string>();
        if (p == "plane") {
            cfg.problem = Problem::kPlane;
        } else if (p == "penny") {
            cfg.problem = Problem::kPenny;
        } else {
            throw voidcrack::UsageError("problem must be plane or penny, got " + p);
        }
    }
    if (j.contains("c2")) cfg.c2_list = j.at("c2").get<std::vector<double>>();
    if (j.contains("b")) cfg.b_list = j.at("b").get<std::vector<double>>();
    if (j.contains("N")) {
        const auto& g = j.at("N");
        cfg.n_start = g.at("start").get<double>();
        cfg.n_stop = g.at("stop").get<double>();
        cfg.n_step = g.at("step").get<double>();
    }
    if (j.contains("n")) cfg.n_or_m = j.at("n").get<int>();
    if (j.contains("m")) cfg.n_or_m = j.at("m").get<int>();
    if (j.contains("sigma0")) cfg.sigma0 = j.at("sigma0").get<double>();
    if (j.contains("mu")) cfg.mu = j.at("mu").get<double>();
    if (j.contains("output")) cfg.output_path = j.at("output").get<std::string>();
    if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
    return cfg;
}

int run_kernel_cmd(const std::string& mode, double c2, double N, double xmin, double xmax,
                   int points, const std::string& output) {
    if (points < 2) throw voidcrack::UsageError("kernel: --points must be at least 2");
    const KernelContext ctx(PorousParams::from_c2_N(c2, N));
    std::ostringstream body;
    if (mode == "plane") {
        body << "x,K,K_hat\n";
        for (int i = 0; i < points; ++i) {
            const double x = xmin + (xmax - xmin) * i / (points - 1);
            if (x == 0.0) {
                body << "0,,\n";  // hypersingular point
                continue;
            }
            body << voidcrack::format_number(x) << ','
                 << voidcrack::format_number(voidcrack::plane_kernel(x, ctx)) << ','
                 << voidcrack::format_number(voidcrack::plane_kernel_regular(x, ctx)) << '\n';
        }
    } else if (mode == "penny") {
        body << "x,K_star\n";
        for (int i = 0; i < points; ++i) {
            const double x = xmin + (xmax - xmin) * i / (points - 1);
            body << voidcrack::format_number(x) << ','
                 << voidcrack::format_number(voidcrack::penny_kernel_regular(x, ctx)) << '\n';
        }
    } else {
        throw voidcrack::UsageError("kernel: --mode must be plane or penny, got " + mode);
    }
    if (output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw voidcrack::IoError("cannot open output path: " + output);
        out << body.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"voidcrack: crack problems in an elastic medium with voids"};
    app.require_subcommand(1);

    // shared single-solve options
    struct SingleOpts {
        double c2 = 0.2, N = 0.0, b = 1.0, sigma0 = 1.0, mu = 1.0;
        int n = 0;
        std::string format = "csv", output, dump;
    };

    SingleOpts plane_o, penny_o;
    auto add_single = [](CLI::App* cmd, SingleOpts& o, const char* mesh_flag, int mesh_default) {
        o.n = mesh_default;
        cmd->add_option("--c2", o.c2, "stiffness ratio mu/(lambda+2mu), in (0,1)");
        cmd->add_option("--N", o.N, "coupling number, in [0,1)");
        cmd->add_option("--b", o.b, "normalized crack half-length a/l2");
        cmd->add_option("--sigma0", o.sigma0, "applied normal load");
        cmd->add_option("--mu", o.mu, "shear modulus");
        cmd->add_option(mesh_flag, o.n, "mesh size");
        cmd->add_option("--format", o.format, "csv or json");
        cmd->add_option("--output", o.output, "output path (default stdout)");
        cmd->add_option("--dump", o.dump, "write the node-wise solution profile here");
    };

    CLI::App* plane_cmd = app.add_subcommand("plane", "solve the plane-strain line crack");
    add_single(plane_cmd, plane_o, "--n", voidcrack::kDefaultPlaneN);
    CLI::App* penny_cmd = app.add_subcommand("penny", "solve the penny-shaped crack");
    add_single(penny_cmd, penny_o, "--m", voidcrack::kDefaultPennyM);

    // sweep
    std::string sweep_preset, sweep_config_path, sweep_problem, sweep_format, sweep_output;
    std::vector<double> sweep_c2, sweep_b;
    std::vector<double> sweep_ngrid;
    int sweep_mesh = 0;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "parameter sweep over (c2, b, N)");
    sweep_cmd->add_option("--preset", sweep_preset, "fig1|fig2|fig3|fig4");
    sweep_cmd->add_option("--config", sweep_config_path, "JSON config file");
    sweep_cmd->add_option("--problem", sweep_problem, "plane or penny");
    sweep_cmd->add_option("--c2", sweep_c2, "c2 values");
    sweep_cmd->add_option("--b", sweep_b, "b values");
    sweep_cmd->add_option("--N-grid", sweep_ngrid, "start stop step")->expected(3);
    sweep_cmd->add_option("--n,--m", sweep_mesh, "mesh size");
    sweep_cmd->add_option("--format", sweep_format, "csv or json");
    sweep_cmd->add_option("--output", sweep_output, "output path (default stdout)");

    // kernel tabulation
    std::string kern_mode = "plane", kern_output;
    double kern_c2 = 0.2, kern_N = 0.5, kern_xmin = 0.1, kern_xmax = 5.0;
    int kern_points = 50;
    CLI::App* kernel_cmd = app.add_subcommand("kernel", "tabulate K, K_hat, K_star on a grid");
    kernel_cmd->add_option("--mode", kern_mode, "plane or penny");
    kernel_cmd->add_option("--c2", kern_c2, "stiffness ratio");
    kernel_cmd->add_option("--N", kern_N, "coupling number");
    kernel_cmd->add_option("--xmin", kern_xmin, "grid start");
    kernel_cmd->add_option("--xmax", kern_xmax, "grid end");
    kernel_cmd->add_option("--points", kern_points, "grid size");
    kernel_cmd->add_option("--output", kern_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        print_error_json("cli", e.what(), kExitValidation);
        return kExitValidation;
    }

    try {
        if (plane_cmd->parsed()) {
            return run_single_cmd(Problem::kPlane, plane_o.c2, plane_o.N, plane_o.b,
                                  plane_o.sigma0, plane_o.mu, plane_o.n, plane_o.format,
                                  plane_o.output, plane_o.dump);
        }
        if (penny_cmd->parsed()) {
            return run_single_cmd(Problem::kPenny, penny_o.c2, penny_o.N, penny_o.b,
                                  penny_o.sigma0, penny_o.mu, penny_o.n, penny_o.format,
                                  penny_o.output, penny_o.dump);
        }
        if (sweep_cmd->parsed()) {
            SweepConfig cfg;
            if (!sweep_config_path.empty()) {
                std::ifstream in(sweep_config_path);
                if (!in) throw voidcrack::IoError("cannot read config: " + sweep_config_path);
                nlohmann::json j;
                in >> j;
                cfg = config_from_json(j);
            } else if (!sweep_preset.empty()) {
                cfg = preset_config(sweep_preset);
            }
            if (!sweep_preset.empty() && !sweep_config_path.empty()) {
                throw voidcrack::UsageError("pass either --preset or --config, not both");
            }
            // flags override file/preset values
            if (!sweep_problem.empty()) {
                if (sweep_problem == "plane") {
                    cfg.problem = Problem::kPlane;
                } else if (sweep_problem == "penny") {
                    cfg.problem = Problem::kPenny;
                } else {
                    throw voidcrack::UsageError("problem must be plane or penny");
                }
            }
            if (!sweep_c2.empty()) cfg.c2_list = sweep_c2;
            if (!sweep_b.empty()) cfg.b_list = sweep_b;
            if (!sweep_ngrid.empty()) {
                cfg.n_start = sweep_ngrid[0];
                cfg.n_stop = sweep_ngrid[1];
                cfg.n_step = sweep_ngrid[2];
            }
            if (sweep_mesh > 0) cfg.n_or_m = sweep_mesh;
            if (!sweep_format.empty()) cfg.format = parse_format(sweep_format);
            if (!sweep_output.empty()) cfg.output_path = sweep_output;
            if (cfg.c2_list.empty() || cfg.b_list.empty()) {
                throw voidcrack::UsageError("sweep needs at least one c2 and one b value");
            }
            const std::vector<SweepRow> rows = voidcrack::run_sweep(cfg);
            emit_rows(rows, cfg.format, cfg.output_path);
            return 0;
        }
        if (kernel_cmd->parsed()) {
            return run_kernel_cmd(kern_mode, kern_c2, kern_N, kern_xmin, kern_xmax,
                                  kern_points, kern_output);
        }
    } catch (const voidcrack::Error& e) {
        const int code = classify(e);
        print_error_json(type_name(e), e.what(), code);
        return code;
    } catch (const nlohmann::json::exception& e) {
        print_error_json("config", e.what(), kExitValidation);
        return kExitValidation;
    } catch (const std::exception& e) {
        print_error_json("internal", e.what(), kExitNumerical);
        return kExitNumerical;
    }
    return 0;
}
