// End-to-end checks of the superosc binary: exit codes, JSON summaries,
// artifact files, pipeline closure and byte-level determinism.
#include <cstdio>
#include <cstdlib>

#include <json.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

#define CLI_CHECK(cond)                                                       \
    do {                                                                      \
        if (!(cond)) {                                                        \
            ++failures;                                                       \
            std::cerr << "FAILED at line " << __LINE__ << ": " #cond "\n";    \
        }                                                                     \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string cmd =
        std::string(SUPEROSC_CLI_PATH) + " " + args + " > cli_out.txt 2> cli_err.txt";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = slurp("cli_out.txt");
    r.err = slurp("cli_err.txt");
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
    // synth round trip
    auto r = run("synth --family sine-translate --omega pi --n 3 --eps 0,0.1,0.2 --out spec.json");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"status\":\"ok\""));
    CLI_CHECK(contains(slurp("spec.json"), "\"omega_total\""));
    CLI_CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);  // single-line summary

    // determinism: identical bytes on a second run
    const std::string first = slurp("spec.json");
    r = run("synth --family sine-translate --omega pi --n 3 --eps 0,0.1,0.2 --out spec.json");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(slurp("spec.json") == first);

    // pipeline closure: every analysis subcommand accepts the synth output
    r = run("spectrum --spec spec.json --tol 1e-10 --out spec_spectrum.csv");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"status\":\"pass\""));
    CLI_CHECK(slurp("spec_spectrum.csv").rfind("omega,magnitude\n", 0) == 0);

    r = run("zeros --spec spec.json --range -0.05:0.25 --tol 1e-12 --out spec_zeros.json");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"count\":3"));

    r = run("dynrange --spec spec.json --region auto");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"sigma\""));
    const std::string dyn_once = r.out;
    r = run("dynrange --spec spec.json --region auto");
    CLI_CHECK(r.out == dyn_once);  // deterministic stdout

    r = run("compare --spec spec.json --region auto --precision-bits 128");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"sigma_multiplicative\""));
    CLI_CHECK(contains(r.out, "\"sigma_additive\""));
    {
        const auto doc = nlohmann::json::parse(r.out);
        const double ratio = doc.at("ratio").get<double>();
        CLI_CHECK(ratio >= 0.1 && ratio <= 10.0);
        CLI_CHECK(doc.at("precision_bits").get<int>() == 128);
    }

    // one-period spectrum route (omega0 = pi/3, so the period is 6)
    r = run("spectrum --spec spec.json --period 6 --tol 1e-10");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"status\":\"pass\""));

    r = run("bounds --family sine-translate --n 5 --eps 0.1");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"lower\""));
    CLI_CHECK(contains(r.out, "\"upper\""));

    // potential: designed failure below the critical lift names the crossings
    r = run("potential --spec spec.json --lift 0.5 --grid 1024 --out bad_potential.json");
    CLI_CHECK(r.exit_code == 2);
    CLI_CHECK(contains(r.err, "crossing"));
    CLI_CHECK(contains(r.out, "crossing_unphysical"));

    // potential at auto-critical lift, then the eigen pipeline on it
    r = run("potential --spec spec.json --lift auto-critical --grid 512 --out potential.json");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"status\":\"ok\""));

    r = run("eigen --potential potential.json --out eigen.csv");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"E0\""));
    CLI_CHECK(contains(r.out, "\"node_count\":0"));
    CLI_CHECK(slurp("eigen.csv").rfind("x,psi_lifted,ground_vec\n", 0) == 0);

    // CSV artifact variant of the potential
    r = run("potential --spec spec.json --lift auto-critical --grid 256 --out potential.csv");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(slurp("potential.csv").rfind("x,V\n", 0) == 0);

    // sinc family synth via the local-frequency parametrization
    r = run("synth --family sinc-translate --omega pi --n 3 --local-omega 10pi --out sinc.json");
    CLI_CHECK(r.exit_code == 0);
    r = run("zeros --spec sinc.json --range 2.95:3.35 --scan-dt 0.01 --tol 1e-12");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"count\":3"));

    // the full-pipeline comparison on the translated-sinc configuration
    r = run("compare --spec sinc.json --region auto --precision-bits 128");
    CLI_CHECK(r.exit_code == 0);
    {
        const auto doc = nlohmann::json::parse(r.out);
        const double ratio = doc.at("ratio").get<double>();
        CLI_CHECK(ratio >= 0.1 && ratio <= 10.0);
        CLI_CHECK(doc.at("kernel").get<std::string>() == "sinc");
    }

    // varied-bandwidth synth takes a bandlimit list
    r = run("synth --family sinc-varied --omega 0.3,0.5,0.7 --out varied.json");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(slurp("varied.json"), "\"sinc\""));

    // windowed spectrum on the sinc build
    r = run("spectrum --spec sinc.json --tol 1e-6 --out sinc_spectrum.csv");
    CLI_CHECK(r.exit_code == 0);
    CLI_CHECK(contains(r.out, "\"status\":\"pass\""));
    CLI_CHECK(contains(r.out, "\"leakage_energy\""));

    // validation failures exit 1 with usage on stderr
    r = run("frobnicate");
    CLI_CHECK(r.exit_code == 1);
    CLI_CHECK(contains(r.err, "Usage") || contains(r.err, "Subcommand"));
    r = run("synth --family sine-translate --omega pi --n 3 --no-such-flag 1");
    CLI_CHECK(r.exit_code == 1);
    CLI_CHECK(contains(r.err, "Usage") || contains(r.err, "--no-such-flag"));
    r = run("synth --family sine-translate --omega pi --n 3");
    CLI_CHECK(r.exit_code == 1);  // neither --eps nor --local-omega
    r = run("zeros --spec missing_file.json --range 0:1");
    CLI_CHECK(r.exit_code == 1);
    r = run("synth --family sine-translate --omega -3 --n 3 --eps 0,0.1,0.2");
    CLI_CHECK(r.exit_code == 1);

    // numerical failure path: bounds outside the valid regime
    r = run("bounds --family sine-translate --n 3 --eps 1.2");
    CLI_CHECK(r.exit_code == 2);

    if (failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << failures << " checks failed\n";
    return 1;
}
