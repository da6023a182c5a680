#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spcol {

// Rejected configuration; the CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solver did not converge; the CLI maps this to exit code 3.
struct solve_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct stabilization_config {
    bool supg = true;
    bool pspg = true;
    bool graddiv = true;
};

struct solver_config {
    int max_iterations = 50;
    double tolerance = 1e-10;
    std::vector<double> continuation;  // Reynolds sequence, last entry is the target
    std::string initial = "zero";      // zero | stokes
};

struct run_config {
    std::string problem;          // bl1d sine1d sine2d skew stokes_vortex stokes_cavity
                                  // ns_vortex kovasznay ns_cavity
    std::string form = "vp";      // vp | rotational
    int degree = 4;
    int elements = 16;
    std::string knots = "uniform";  // uniform | stretched
    double peclet = 1.0;
    double reynolds = 100.0;
    double viscosity = 1.0;
    stabilization_config stabilization;
    double C = 1.0;
    double C1 = 4.0;
    double C2 = 4.0;
    double C3 = 4.0;
    double s_rot = 0.1;
    solver_config solver;
    std::string output_dir = "out";
    int samples_per_span = 4;
    bool write_vtk = false;
    bool dump_system = false;
    std::string reference_u;      // centerline reference tables (optional)
    std::string reference_v;
    double skew_angle_deg = 45.0;
};

// Reads a config file (JSON). A manifest written by `run` is also accepted;
// its embedded config is used, which reruns the original configuration.
run_config load_config(const std::string& path);

void validate_config(const run_config& cfg);

// Executes one configuration and writes its artifacts (manifest plus CSV and
// optional VTK files) under the output directory, honoring the
// SPCOL_OUTPUT_ROOT environment variable as a prefix. Returns the manifest
// path. Throws config_error / solve_failure.
std::string run(const run_config& cfg);

// Runs the configuration once per axis value (axis: n_elem, k, C, Pe, Re)
// into per-value subdirectories and writes an aggregated table; for n_elem
// sweeps fitted convergence rates are appended.
std::string sweep(const run_config& cfg, const std::string& axis,
                  const std::vector<double>& values);

}  // namespace spcol
