#include "spcol/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Stabilized spline collocation solver for transport and incompressible flow"};
    app.require_subcommand(1);

    std::string config_path;
    std::string axis;
    std::vector<double> values;

    CLI::App* solve = app.add_subcommand("solve", "run one configuration");
    solve->add_option("--config", config_path, "config file (JSON)")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "run a configuration across an axis");
    sweep->add_option("--config", config_path, "config file (JSON)")->required();
    sweep->add_option("--axis", axis, "axis: n_elem, k, C, Pe, Re")->required();
    sweep->add_option("--values", values, "axis values")->required()->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        const spcol::run_config cfg = spcol::load_config(config_path);
        if (solve->parsed()) {
            const std::string manifest = spcol::run(cfg);
            std::printf("wrote %s\n", manifest.c_str());
        } else {
            const std::string table = spcol::sweep(cfg, axis, values);
            std::printf("wrote %s\n", table.c_str());
        }
    } catch (const spcol::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const spcol::solve_failure& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
