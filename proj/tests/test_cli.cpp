// Drives the installed CLI end to end: every subcommand, exit codes,
// and byte-for-byte determinism. argv[1] is the path to the binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

int failures = 0;

#define REQUIRE(cond, msg)                                                        \
    do {                                                                          \
        if (!(cond)) {                                                            \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg   \
                      << "\n";                                                    \
            ++failures;                                                           \
        }                                                                         \
    } while (0)

std::string cli_path;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/signpoly_cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 1;
    }
    cli_path = argv[1];

    // enumeration, and determinism across runs
    RunResult e1 = run("enumerate --shape 2,2 --n 3");
    REQUIRE(e1.exit_code == 0, "enumerate exits 0");
    RunResult e2 = run("enumerate --shape 2,2 --n 3");
    REQUIRE(e1.output == e2.output, "enumerate output is byte stable");
    json doc = json::parse(e1.output);
    REQUIRE(doc.at("count") == 6, "six matrices in the worked shape family");
    REQUIRE(doc.at("matrices").size() == 6, "matrix list length");

    RunResult mn = run("enumerate --mn 2,2");
    REQUIRE(json::parse(mn.output).at("count") == 10, "ten 2x2 sign matrices");

    // bijection mapping in both directions
    std::string worked36 = write_temp(
        "worked36.json",
        R"({"entries": [[0,0,1,0,0,1],[0,1,0,0,0,-1],[1,0,-1,1,1,1]]})");
    RunResult map1 = run("map --input " + worked36 + " --to tableau");
    REQUIRE(map1.exit_code == 0, "map to tableau exits 0");
    json tab = json::parse(map1.output).at("tableau");
    REQUIRE(tab.at("shape") == json::parse("[3,3,1,1,1]"), "mapped shape");
    std::string tabfile = write_temp("tab.json", tab.dump());
    RunResult map2 = run("map --input " + tabfile + " --to matrix");
    REQUIRE(json::parse(map2.output).at("matrix").at("entries") ==
                json::parse(R"([[0,0,1,0,0,1],[0,1,0,0,0,-1],[1,0,-1,1,1,1]])"),
            "map back to the matrix");

    RunResult dot = run("map --input " + worked36 + " --format dot");
    REQUIRE(dot.exit_code == 0 && dot.output.find("graph") != std::string::npos,
            "dot output for the labeled grid");

    // membership and decomposition of the worked example
    std::string point34 = write_temp("point34.json",
                                  R"({"entries": [["9/10","0","3/10","4/5"],
                                                  ["0","1/10","3/5","-7/10"],
                                                  ["0","9/10","-1/10","1/5"]]})");
    RunResult check = run("check --shape 3,3,1 --n 4 --input " + point34);
    REQUIRE(check.exit_code == 0, "member check exits 0");
    REQUIRE(json::parse(check.output).at("member") == true, "membership verdict");

    std::string nonmember = write_temp("bad.json", R"({"entries": [["2"]]})");
    RunResult bad = run("check --mn 1,1 --input " + nonmember);
    REQUIRE(bad.exit_code == 1, "non-member exits 1");
    REQUIRE(json::parse(bad.output).at("member") == false, "non-member verdict");

    RunResult dec = run("decompose --shape 3,3,1 --n 4 --input " + point34);
    REQUIRE(dec.exit_code == 0, "decompose exits 0");
    json decdoc = json::parse(dec.output);
    REQUIRE(decdoc.at("reconstruction_exact") == true, "reconstruction is exact");
    REQUIRE(decdoc.at("terms").size() >= 2, "a fractional point needs several terms");

    // certificates
    std::string me = write_temp("me.json", R"({"entries": [[1,0,1],[0,1,-1]]})");
    RunResult cert = run("vertex-cert --shape 2,2 --n 3 --input " + me);
    REQUIRE(cert.exit_code == 0, "vertex-cert exits 0");
    json certdoc = json::parse(cert.output);
    REQUIRE(certdoc.at("separates") == true, "certificate separates");
    REQUIRE(certdoc.at("hyperplane").at("threshold") == "7/2", "threshold 7/2");

    // facet lists
    RunResult facets = run("facets --mn 2,3");
    json fdoc = json::parse(facets.output);
    REQUIRE(fdoc.at("count") == 13, "13 facets for the 2x3 family");
    REQUIRE(fdoc.at("equalities").size() == 13, "equality list length");

    // face lattice
    RunResult lat = run("face-lattice --mn 1,1");
    REQUIRE(json::parse(lat.output).at("components").size() == 4,
            "segment lattice has four components");
    RunResult latdot = run("face-lattice --mn 1,1 --format dot");
    REQUIRE(latdot.output.find("digraph") != std::string::npos, "hasse dot output");

    // verification suites through the CLI
    RunResult counts = run("verify counts");
    REQUIRE(counts.exit_code == 0, "verify counts passes");
    REQUIRE(json::parse(counts.output).at("pass") == true, "counts report");
    RunResult verts = run("verify vertices --mn 2,2 --threads 2");
    REQUIRE(verts.exit_code == 0, "verify vertices on one family");
    json vdoc = json::parse(verts.output);
    REQUIRE(vdoc.at("checks")[0].at("detail") == "10/10 separated", "10/10 separated");
    RunResult vfac = run("verify facets --shape 2,2 --n 3");
    REQUIRE(vfac.exit_code == 0, "verify facets on one family");

    // error surfaces
    RunResult usage = run("enumerate --bogus 2>&1");
    REQUIRE(usage.exit_code == 2, "usage errors exit 2");
    RunResult badfam = run("enumerate --shape 2,2");
    REQUIRE(badfam.exit_code == 1, "missing --n is a domain error");
    RunResult badsuite = run("verify nonsense");
    REQUIRE(badsuite.exit_code == 1, "unknown suite is a domain error");

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failures\n";
    return 1;
}
