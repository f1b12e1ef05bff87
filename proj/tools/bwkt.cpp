#include "bwkt/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Spectra from interferograms and interferograms from spectra"};
    app.require_subcommand(1);

    bwkt::CommandOptions opts;
    std::string config;
    std::string kind;
    std::string model;
    double tolerance = 0.0;

    auto add_config = [&](CLI::App* cmd) { cmd->add_option("--config", config, "key = value configuration file"); };
    auto add_kind = [&](CLI::App* cmd) { cmd->add_option("--kind", kind, "mzi, homi or nooni"); };

    auto* simulate = app.add_subcommand("simulate", "Write a simulated interferogram");
    add_config(simulate);
    add_kind(simulate);
    simulate->add_option("--out", opts.out, "interferogram CSV")->required();

    auto* extract = app.add_subcommand("extract", "Recover the spectrum behind an interferogram");
    extract->add_option("input", opts.input, "interferogram CSV")->required();
    add_config(extract);
    add_kind(extract);
    extract->add_option("--out", opts.out, "spectrum CSV")->required();

    auto* project = app.add_subcommand("project", "Project a two-photon spectral intensity onto three axes");
    project->add_option("input", opts.input, "TSI CSV")->required();
    add_config(project);
    project->add_option("--out", opts.out, "output prefix")->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "Simulate, extract and compare against the source spectra");
    add_config(roundtrip);
    auto* tol = roundtrip->add_option("--tolerance", tolerance, "relative FWHM tolerance");

    auto* fit = app.add_subcommand("fit", "Fit visibility and envelope width");
    fit->add_option("input", opts.input, "interferogram CSV")->required();
    add_kind(fit);
    auto* model_opt = fit->add_option("--model", model, "gaussian or triangle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bwkt::kExitInput;
    }

    if (!config.empty())
        opts.config_path = config;
    if (!kind.empty())
        opts.kind = kind;
    if (tol->count() > 0)
        opts.tolerance = tolerance;
    if (model_opt->count() > 0)
        opts.model = model;

    if (simulate->parsed())
        return bwkt::cmd_simulate(opts, std::cout, std::cerr);
    if (extract->parsed())
        return bwkt::cmd_extract(opts, std::cout, std::cerr);
    if (project->parsed())
        return bwkt::cmd_project(opts, std::cout, std::cerr);
    if (roundtrip->parsed())
        return bwkt::cmd_roundtrip(opts, std::cout, std::cerr);
    return bwkt::cmd_fit(opts, std::cout, std::cerr);
}
