#include "spcol/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace spcol;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    EXPECT_TRUE(in) << path;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::path(::testing::TempDir()) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST(Config, LoadAndValidate) {
    const fs::path dir = temp_dir("spcol_cfg");
    write_file(dir / "ok.json", R"({
        "problem": "bl1d", "degree": 4, "elements": 16, "peclet": 500.0,
        "stabilization": {"supg": true}, "output_dir": ")" + (dir / "out").string() + R"("
    })");
    const run_config cfg = load_config((dir / "ok.json").string());
    EXPECT_EQ(cfg.problem, "bl1d");
    EXPECT_EQ(cfg.degree, 4);
    EXPECT_EQ(cfg.elements, 16);
    EXPECT_DOUBLE_EQ(cfg.peclet, 500.0);
    EXPECT_NO_THROW(validate_config(cfg));

    EXPECT_THROW(load_config((dir / "missing.json").string()), config_error);
    write_file(dir / "bad.json", "{ not json");
    EXPECT_THROW(load_config((dir / "bad.json").string()), config_error);
}

TEST(Config, ValidationRules) {
    run_config cfg;
    cfg.problem = "unknown_problem";
    EXPECT_THROW(validate_config(cfg), config_error);

    cfg.problem = "bl1d";
    cfg.form = "rotational";
    EXPECT_THROW(validate_config(cfg), config_error);

    cfg.form = "vp";
    cfg.degree = 1;
    EXPECT_THROW(validate_config(cfg), config_error);

    cfg.degree = 4;
    cfg.knots = "weird";
    EXPECT_THROW(validate_config(cfg), config_error);

    cfg.knots = "uniform";
    EXPECT_NO_THROW(validate_config(cfg));
}

TEST(Run, BoundaryLayerArtifacts) {
    const fs::path dir = temp_dir("spcol_bl1d");
    run_config cfg;
    cfg.problem = "bl1d";
    cfg.degree = 4;
    cfg.elements = 16;
    cfg.peclet = 500.0;
    cfg.output_dir = (dir / "run").string();
    const std::string manifest_path = run(cfg);

    EXPECT_TRUE(fs::exists(manifest_path));
    EXPECT_TRUE(fs::exists(dir / "run" / "errors.csv"));
    EXPECT_TRUE(fs::exists(dir / "run" / "field.csv"));

    const std::string manifest = slurp(manifest_path);
    EXPECT_NE(manifest.find("\"version\""), std::string::npos);
    EXPECT_NE(manifest.find("\"overshoot\""), std::string::npos);
    const std::string errors = slurp(dir / "run" / "errors.csv");
    EXPECT_NE(errors.find("k,n_elem,h,field,norm,error"), std::string::npos);
    EXPECT_NE(errors.find("phi,L2,"), std::string::npos);
    EXPECT_NE(errors.find("phi,H1,"), std::string::npos);
}

TEST(Run, DeterministicOutputs) {
    const fs::path dir = temp_dir("spcol_det");
    run_config cfg;
    cfg.problem = "sine2d";
    cfg.degree = 3;
    cfg.elements = 8;
    cfg.output_dir = (dir / "a").string();
    run(cfg);
    cfg.output_dir = (dir / "b").string();
    run(cfg);
    EXPECT_EQ(slurp(dir / "a" / "errors.csv"), slurp(dir / "b" / "errors.csv"));
    EXPECT_EQ(slurp(dir / "a" / "field.csv"), slurp(dir / "b" / "field.csv"));
}

TEST(Run, ManifestRerunsIdentically) {
    const fs::path dir = temp_dir("spcol_rerun");
    run_config cfg;
    cfg.problem = "sine1d";
    cfg.degree = 2;
    cfg.elements = 16;
    cfg.output_dir = (dir / "a").string();
    const std::string manifest = run(cfg);

    run_config reloaded = load_config(manifest);
    EXPECT_EQ(reloaded.problem, "sine1d");
    EXPECT_EQ(reloaded.degree, 2);
    reloaded.output_dir = (dir / "b").string();
    run(reloaded);
    EXPECT_EQ(slurp(dir / "a" / "errors.csv"), slurp(dir / "b" / "errors.csv"));
    EXPECT_EQ(slurp(dir / "a" / "field.csv"), slurp(dir / "b" / "field.csv"));
}

TEST(Run, StokesVortexWithVtkAndDump) {
    const fs::path dir = temp_dir("spcol_stokes");
    run_config cfg;
    cfg.problem = "stokes_vortex";
    cfg.degree = 3;
    cfg.elements = 6;
    cfg.write_vtk = true;
    cfg.dump_system = true;
    cfg.output_dir = (dir / "run").string();
    run(cfg);

    const std::string field = slurp(dir / "run" / "field.csv");
    EXPECT_NE(field.find("x,y,u_x,u_y,p"), std::string::npos);
    const std::string vtk = slurp(dir / "run" / "field.vtk");
    EXPECT_NE(vtk.find("DATASET STRUCTURED_POINTS"), std::string::npos);
    EXPECT_NE(vtk.find("VECTORS velocity double"), std::string::npos);
    const std::string mtx = slurp(dir / "run" / "system.mtx");
    EXPECT_NE(mtx.find("%%MatrixMarket"), std::string::npos);
}

TEST(Run, RotationalNsVortexHasOmegaColumn) {
    const fs::path dir = temp_dir("spcol_rot");
    run_config cfg;
    cfg.problem = "ns_vortex";
    cfg.form = "rotational";
    cfg.degree = 3;
    cfg.elements = 6;
    cfg.viscosity = 1.0;
    cfg.output_dir = (dir / "run").string();
    run(cfg);
    const std::string field = slurp(dir / "run" / "field.csv");
    EXPECT_NE(field.find("x,y,u_x,u_y,p,omega"), std::string::npos);
}

TEST(Run, OutputRootOverride) {
    const fs::path root = temp_dir("spcol_root");
    ::setenv("SPCOL_OUTPUT_ROOT", root.c_str(), 1);
    run_config cfg;
    cfg.problem = "sine1d";
    cfg.degree = 2;
    cfg.elements = 8;
    cfg.output_dir = "nested/run";
    run(cfg);
    ::unsetenv("SPCOL_OUTPUT_ROOT");
    EXPECT_TRUE(fs::exists(root / "nested" / "run" / "manifest.json"));
}

TEST(Sweep, MeshSweepAppendsRates) {
    const fs::path dir = temp_dir("spcol_sweep");
    run_config cfg;
    cfg.problem = "sine1d";
    cfg.degree = 2;
    cfg.elements = 8;
    cfg.output_dir = dir.string();
    const std::string table_path = sweep(cfg, "n_elem", {8, 16, 32});
    const std::string table = slurp(table_path);
    EXPECT_NE(table.find("n_elem,k,n_elem,h,field,norm,error"), std::string::npos);
    EXPECT_NE(table.find("rate,,,,phi,L2,"), std::string::npos);

    // fitted L2 rate for k=2 should be close to 2
    std::istringstream ss(table);
    std::string line;
    double rate = 0.0;
    while (std::getline(ss, line)) {
        if (line.rfind("rate,,,,phi,L2,", 0) == 0) {
            rate = std::stod(line.substr(line.rfind(',') + 1));
        }
    }
    EXPECT_NEAR(rate, 2.0, 0.5);
    EXPECT_THROW(sweep(cfg, "n_elem", {}), config_error);
    EXPECT_THROW(sweep(cfg, "bogus", {1.0}), config_error);
}

TEST(Cli, ExitCodes) {
    const fs::path dir = temp_dir("spcol_cli");
    const std::string cli = SPCOL_CLI_PATH;

    write_file(dir / "good.json", R"({"problem": "sine1d", "degree": 2, "elements": 8,
                                      "output_dir": ")" + (dir / "out").string() + R"("})");
    write_file(dir / "bad.json", R"({"problem": "sine1d", "degree": 1, "elements": 8})");

    auto exit_code = [](const std::string& cmd) {
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    EXPECT_EQ(exit_code(cli + " solve --config " + (dir / "good.json").string()
                        + " > /dev/null 2>&1"), 0);
    EXPECT_EQ(exit_code(cli + " solve --config " + (dir / "bad.json").string()
                        + " > /dev/null 2>&1"), 2);
    EXPECT_EQ(exit_code(cli + " solve --config " + (dir / "none.json").string()
                        + " > /dev/null 2>&1"), 2);
}
