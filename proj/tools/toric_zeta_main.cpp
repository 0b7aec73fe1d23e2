#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "toric_zeta/problem.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "monodromy zeta functions of Milnor fibers on affine toric "
        "varieties, from Newton polygon data"};
    std::string path;
    std::string mode;
    toric_zeta::RunOptions opt;
    app.add_option("file", path, "problem file (JSON)")->required();
    app.add_option("--mode", mode, "override the file's pipeline mode")
        ->check(CLI::IsMember({"single", "ci", "sheaf"}));
    app.add_flag("--faces", opt.faces, "include per-face reports");
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--check", opt.check,
                 "cross-check every volume against the brute-force oracles");
    app.add_flag("--parallel", opt.parallel, "enable parallel kernels");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        toric_zeta::ProblemFile pf = toric_zeta::load_problem(path, mode);
        std::cout << toric_zeta::run_problem(pf, opt).text;
        return 0;
    } catch (const toric_zeta::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const toric_zeta::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
