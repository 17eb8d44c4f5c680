// coxarr: analyze central hyperplane arrangements from the command line.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxarr/cli/commands.h"
#include "coxarr/cli/hunt.h"

namespace {

std::optional<coxarr::LinearMap2> parse_map(const std::string& s) {
    std::vector<double> v;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (used != tok.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (v.size() != 4) return std::nullopt;
    return coxarr::LinearMap2{v[0], v[1], v[2], v[3]};
}

}  // namespace

int main(int argc, char** argv) {
    using namespace coxarr::cli;

    CLI::App app{"Isometric regions and Coxeter tests for central hyperplane arrangements"};
    app.require_subcommand(1);

    std::string path;
    CommonFlags flags;

    auto* check = app.add_subcommand("check", "Run the full analysis pipeline on an arrangement file");
    check->add_option("file", path, "Arrangement file")->required();
    check->add_option("--eps", flags.eps, "Absolute tolerance override");
    check->add_option("--angle-eps", flags.angle_eps, "Angle tolerance override (radians)");
    check->add_flag("--json", flags.json, "Emit JSON");

    auto* sphere = app.add_subcommand("sphere", "Statistics of the great-circle complex (dim 3)");
    sphere->add_option("file", path, "Arrangement file")->required();
    sphere->add_option("--eps", flags.eps, "Absolute tolerance override");
    sphere->add_option("--angle-eps", flags.angle_eps, "Angle tolerance override (radians)");
    sphere->add_flag("--json", flags.json, "Emit JSON");

    std::string name;
    std::optional<std::string> output;
    auto* catalog = app.add_subcommand("catalog", "Write a catalog arrangement as a file");
    catalog->add_option("name", name, "Catalog name, e.g. B3 or I2(5)xA1")->required();
    catalog->add_option("-o,--output", output, "Output path (default: stdout)");

    HuntOptions hunt_opts;
    auto* hunt = app.add_subcommand("hunt", "Seeded search for isometric non-Coxeter arrangements");
    hunt->add_option("--dim", hunt_opts.dim, "Ambient dimension (>= 3)")->required();
    hunt->add_option("--n", hunt_opts.n, "Hyperplanes per trial (>= dim)")->required();
    hunt->add_option("--trials", hunt_opts.trials, "Number of trials")->required();
    hunt->add_option("--seed", hunt_opts.seed, "Generator seed")->required();
    hunt->add_option("--top", hunt_opts.top, "Candidates to report")->capture_default_str();
    hunt->add_option("--threads", hunt_opts.threads, "Worker threads (0 = all cores)");

    AffineOptions affine_opts;
    std::string map_text = "1,0,0,1";
    auto* affine = app.add_subcommand("affine", "Windowed sheared affine family");
    affine->add_option("family", affine_opts.family, "shearedA2t, shearedB2t or shearedGrid")->required();
    affine->add_option("--map", map_text, "Linear map a,b,c,d for [[a, b], [c, d]]")->capture_default_str();
    affine->add_option("--half-width", affine_opts.half_width, "Half-width of the square window")
        ->capture_default_str();
    affine->add_flag("--json", affine_opts.json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    if (check->parsed()) return cmd_check(path, flags, std::cout, std::cerr);
    if (sphere->parsed()) return cmd_sphere(path, flags, std::cout, std::cerr);
    if (catalog->parsed()) return cmd_catalog(name, output, std::cout, std::cerr);
    if (hunt->parsed()) return cmd_hunt(hunt_opts, std::cout, std::cerr);
    if (affine->parsed()) {
        const auto m = parse_map(map_text);
        if (!m) {
            std::cerr << "error: --map expects four comma-separated numbers\n";
            return kExitInputError;
        }
        affine_opts.map = *m;
        return cmd_affine(affine_opts, std::cout, std::cerr);
    }
    return kExitInputError;
}
