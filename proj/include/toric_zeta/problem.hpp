#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toric_zeta/engine.hpp"
#include "toric_zeta/oracles.hpp"

namespace toric_zeta {

struct NamedPolynomial {
    std::string name;
    ToricPolynomial poly;
};

// Parsed problem document. `mode` is always the effective mode (a CLI
// override replaces the file's value before the echo is built).
struct ProblemFile {
    std::size_t ambient_dim = 0;
    std::vector<Vec> generators;
    std::string mode;  // "single" | "ci" | "sheaf"
    std::vector<NamedPolynomial> polynomials;
    LocalSystemData local_system;  // sheaf mode only
};

ProblemFile parse_problem(const std::string& text,
                          const std::string& mode_override = "");
ProblemFile load_problem(const std::string& path,
                         const std::string& mode_override = "");

// Canonical input document: parsing its dump yields the same echo again.
nlohmann::ordered_json echo_input(const ProblemFile& pf);

struct RunOptions {
    bool faces = false;
    bool json = false;
    bool check = false;
    bool parallel = false;
};

struct RunOutput {
    std::string text;  // full rendered document, newline terminated
    Int chi;
};

RunOutput run_problem(const ProblemFile& pf, const RunOptions& opt);

}  // namespace toric_zeta
