#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "nodalis/cli.hpp"

namespace {

// '-' means: read the polynomial from stdin
std::string resolve_poly(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

int emit(const nodalis::cli::RunResult& r, bool json) {
    if (json)
        std::cout << r.json.dump(2) << "\n";
    else
        std::cout << r.text;
    return r.exit_code;
}

void add_common(CLI::App* cmd, nodalis::cli::Options& opt) {
    cmd->add_option("--field", opt.field, "coefficient field: q, fp:<p> or q-adjoin:<d>")
        ->capture_default_str();
    cmd->add_option("--precision", opt.precision,
                    "series precision (number of known coefficients); 0 picks a degree-based "
                    "default")
        ->capture_default_str();
    cmd->add_option("--point", opt.point, "base point x,y (exact rationals)")
        ->capture_default_str();
    cmd->add_flag("--json", opt.json, "emit the report as JSON");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nodalis -- exact analysis of ordinary double points of plane curves"};
    app.require_subcommand(1);

    nodalis::cli::Options opt;
    std::string poly, poly2;

    auto* analyze = app.add_subcommand("analyze", "classify a marked point of a curve");
    add_common(analyze, opt);
    analyze->add_option("poly", poly, "curve F(X,Y); '-' reads stdin")->required();

    auto* branches =
        app.add_subcommand("branches", "power-series branch parametrizations at a node");
    add_common(branches, opt);
    branches->add_option("poly", poly, "curve F(X,Y); '-' reads stdin")->required();

    auto* intersect =
        app.add_subcommand("intersect", "branched intersection multiplicities at a node");
    add_common(intersect, opt);
    intersect->add_option("poly", poly, "curve F(X,Y); '-' reads stdin")->required();
    intersect->add_option("poly2", poly2, "second curve H(X,Y)")->required();

    auto* translate =
        app.add_subcommand("translate", "two-point translation analysis along a direction");
    add_common(translate, opt);
    translate->add_option("--direction", opt.direction, "translation direction u,v")
        ->capture_default_str();
    translate->add_option("poly", poly, "curve F(X,Y); '-' reads stdin")->required();

    auto* selftest = app.add_subcommand("selftest", "run the full verification corpus");
    selftest->add_flag("--json", opt.json, "emit the results as JSON");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return emit(nodalis::cli::run_analyze(opt, resolve_poly(poly)), opt.json);
    if (branches->parsed())
        return emit(nodalis::cli::run_branches(opt, resolve_poly(poly)), opt.json);
    if (intersect->parsed())
        return emit(nodalis::cli::run_intersect(opt, resolve_poly(poly), resolve_poly(poly2)),
                    opt.json);
    if (translate->parsed())
        return emit(nodalis::cli::run_translate(opt, resolve_poly(poly)), opt.json);
    if (selftest->parsed()) return emit(nodalis::cli::run_selftest(), opt.json);
    return 1;
}
