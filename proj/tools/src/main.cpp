#include <CLI11.hpp>

#include "besselkit_cli/engine.hpp"

namespace {

void add_common(CLI::App* cmd, besselkit_cli::RunConfig& cfg) {
    cmd->set_help_flag("--help", "print help and exit");
    cmd->add_option("--nu", cfg.nu, "order parameter in [0,1)");
    cmd->add_option("--b", cfg.b, "interval length (finite interval)");
    cmd->add_flag("--halfline", cfg.halfline, "use the half-line instead of (0,b)");
    cmd->add_option("--format", cfg.format, "output format: csv or json");
    cmd->add_option("--output", cfg.output, "output path (default stdout)");
    cmd->add_option("--tol", cfg.tol, "tolerance override");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for the singular expression -d^2/dx^2 + (nu^2-1/4)/x^2"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    besselkit_cli::RunConfig cfg;

    auto* weyl = app.add_subcommand("weyl", "tabulate the Weyl function M(z) on a grid");
    add_common(weyl, cfg);
    weyl->add_option("--z-grid", cfg.z_grid, "grid spec: axis:start..stop:count or axis:value");

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the extension A_h on (0,b)");
    add_common(spectrum, cfg);
    spectrum->add_option("--h", cfg.h, "boundary parameter: number, inf, or krein");
    spectrum->add_option("--k", cfg.k, "number of eigenvalues");

    auto* classify = app.add_subcommand("classify", "Friedrichs/Krein/nonnegativity report");
    add_common(classify, cfg);
    classify->add_option("--h", cfg.h, "boundary parameter: number, inf, or krein");

    auto* density = app.add_subcommand("density", "Fatou spectral density on the half-line");
    add_common(density, cfg);
    density->add_option("--t-grid", cfg.t_grid, "grid spec: start..stop:count or value");

    auto* converge = app.add_subcommand("converge", "gap |M_b(z) - M_inf(z)| over a list of b");
    add_common(converge, cfg);
    converge->add_option("--z", cfg.z_point, "complex point, e.g. i or 1+2i");
    converge->add_option("--b-list", cfg.b_list, "comma-separated interval lengths");

    auto* forms = app.add_subcommand("forms", "quadratic-form and kernel-norm quantities");
    add_common(forms, cfg);
    forms->add_option("--n", cfg.n, "discretization size");
    forms->add_option("--grading", cfg.grading, "mesh grading exponent");

    auto* verify = app.add_subcommand("verify",
                                      "run the consistency suite and the findings report");
    add_common(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    for (auto* sub : {weyl, spectrum, classify, density, converge, forms, verify}) {
        if (sub->parsed()) cfg.command = sub->get_name();
    }
    return besselkit_cli::run_cli(cfg);
}
