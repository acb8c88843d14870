#include "helpers.hpp"

#include "polytran/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(POLYTRAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe)) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path path;

    TempDir() {
        path = fs::temp_directory_path() / ("polytran_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }

    std::string write(const std::string& name, const std::string& content) const {
        const fs::path file = path / name;
        std::ofstream out(file);
        out << content;
        return file.string();
    }
};

const char* kDoublyStochastic2 = R"({"n":2,"m":2,"r":[1,1],"R":[1,1],"c":[1,1],"C":[1,1],"k":2})";
const char* kSubstochastic2 = R"({"n":2,"m":2,"r":[0,0],"R":[1,1],"c":[0,0],"C":[1,1],"k":null})";

}  // namespace

TEST_CASE("decompose then verify round-trips through files") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kDoublyStochastic2);
    const auto matrix = dir.write("uniform.json", R"([["1/2","1/2"],["1/2","1/2"]])");
    const auto cert = (dir.path / "cert.json").string();

    const auto decomposed = run_cli("decompose --spec " + spec + " --matrix " + matrix + " --out " + cert);
    CHECK(decomposed.exit_code == 0);
    const json envelope = json::parse(decomposed.out);
    CHECK(envelope.at("status") == "ok");
    CHECK(envelope.at("payload").at("terms").size() == 2);
    CHECK(envelope.at("payload").at("terms")[0].at("weight") == "1/2");

    const auto verified = run_cli("verify --spec " + spec + " --matrix " + matrix + " --cert " + cert);
    CHECK(verified.exit_code == 0);
    CHECK(json::parse(verified.out).at("payload").at("valid") == true);
}

TEST_CASE("check reports a row violation with exit code 1") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kSubstochastic2);
    const auto matrix = dir.write("bad.json", R"([["1","1"],["0","0"]])");

    const auto result = run_cli("check --spec " + spec + " --matrix " + matrix);
    CHECK(result.exit_code == 1);
    const json envelope = json::parse(result.out);
    CHECK(envelope.at("status") == "violation");
    CHECK(envelope.at("payload").at("is_member") == false);
    REQUIRE(envelope.at("payload").at("row_violations").size() == 1);
    CHECK(envelope.at("payload").at("row_violations")[0].at("index") == 0);
    CHECK(envelope.at("payload").at("row_violations")[0].at("side") == "upper");
}

TEST_CASE("verify rejects a tampered certificate and names the weight sum") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kDoublyStochastic2);
    const auto matrix = dir.write("uniform.json", R"([["1/2","1/2"],["1/2","1/2"]])");
    const auto cert = dir.write("tampered.json",
                                R"({"terms":[{"weight":"1/3","vertex":[["1","0"],["0","1"]]},)"
                                R"({"weight":"1/2","vertex":[["0","1"],["1","0"]]}]})");

    const auto result = run_cli("verify --spec " + spec + " --matrix " + matrix + " --cert " + cert);
    CHECK(result.exit_code == 1);
    const json envelope = json::parse(result.out);
    CHECK(envelope.at("status") == "violation");
    bool found = false;
    for (const auto& diagnostic : envelope.at("diagnostics")) {
        if (diagnostic == "weights sum to 5/6") found = true;
    }
    CHECK(found);
}

TEST_CASE("feasible distinguishes instances by exit code") {
    TempDir dir;
    const auto good = dir.write("good.json", kDoublyStochastic2);
    CHECK(run_cli("feasible --spec " + good).exit_code == 0);

    const auto bad = dir.write("bad.json", R"({"n":2,"m":2,"r":[3,1],"R":[3,1],"c":[2,2],"C":[2,2],"k":null})");
    const auto result = run_cli("feasible --spec " + bad);
    CHECK(result.exit_code == 1);
    CHECK(json::parse(result.out).at("status") == "infeasible");
}

TEST_CASE("vertices prints one JSON matrix per line") {
    TempDir dir;
    const auto spec = dir.write("spec.json", R"({"n":3,"m":3,"r":[1,1,1],"R":[1,1,1],"c":[1,1,1],"C":[1,1,1],"k":3})");
    const auto result = run_cli("vertices --spec " + spec);
    CHECK(result.exit_code == 0);
    int lines = 0;
    std::istringstream stream(result.out);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        const json vertex = json::parse(line);
        CHECK(vertex.is_array());
        CHECK(vertex.size() == 3);
        ++lines;
    }
    CHECK(lines == 6);
}

TEST_CASE("solve emits the optimal assignment") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kDoublyStochastic2);
    const auto cost = dir.write("cost.csv", "1,2\n2,1\n");
    const auto result = run_cli("solve --spec " + spec + " --cost " + cost);
    CHECK(result.exit_code == 0);
    const json envelope = json::parse(result.out);
    CHECK(envelope.at("payload").at("objective") == "2");
    CHECK(envelope.at("payload").at("matrix") == json::parse(R"([["1","0"],["0","1"]])"));
}

TEST_CASE("explain prints the structure and plan") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kDoublyStochastic2);
    const auto matrix = dir.write("uniform.json", R"([["1/2","1/2"],["1/2","1/2"]])");
    const auto result = run_cli("explain --spec " + spec + " --matrix " + matrix);
    CHECK(result.exit_code == 0);
    const json envelope = json::parse(result.out);
    CHECK(envelope.at("payload").at("structure").at("kind") == "even_cycle");
    CHECK(envelope.at("payload").at("structure").at("cells").size() == 4);
    CHECK(envelope.at("payload").at("plan").at("eps_plus") == "1/2");
    CHECK(envelope.at("payload").at("plan").at("sigma_delta_per_eps") == 0);

    const auto integral = dir.write("identity.json", R"([["1","0"],["0","1"]])");
    CHECK(run_cli("explain --spec " + spec + " --matrix " + integral).exit_code == 1);
}

TEST_CASE("matrices arrive via stdin and CSV") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kSubstochastic2);
    const auto csv = dir.write("matrix.csv", "1/2,0\n0,0\n");
    CHECK(run_cli("check --spec " + spec + " --matrix " + csv).exit_code == 0);

    const auto piped = run_cli("check --spec " + spec + " --matrix - < " + csv);
    CHECK(piped.exit_code == 0);
    CHECK(json::parse(piped.out).at("payload").at("is_member") == true);
}

TEST_CASE("parse and usage errors exit with code 2") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kSubstochastic2);
    const auto broken = dir.write("broken.json", R"([["1","x"]])");
    CHECK(run_cli("check --spec " + spec + " --matrix " + broken).exit_code == 2);

    const auto wrong_shape = dir.write("wide.json", R"([["0","0","0"]])");
    CHECK(run_cli("check --spec " + spec + " --matrix " + wrong_shape).exit_code == 2);

    CHECK(run_cli("check --spec " + spec).exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);

    const auto bad_spec = dir.write("bad_spec.json", R"({"n":2,"m":2,"r":[2,0],"R":[1,1],"c":[0,0],"C":[1,1]})");
    CHECK(run_cli("feasible --spec " + bad_spec).exit_code == 2);
}

TEST_CASE("decimal rendering marks the output inexact") {
    TempDir dir;
    const auto spec = dir.write("spec.json", kDoublyStochastic2);
    const auto matrix = dir.write("uniform.json", R"([["1/2","1/2"],["1/2","1/2"]])");
    const auto result = run_cli("--decimal 3 decompose --spec " + spec + " --matrix " + matrix);
    CHECK(result.exit_code == 0);
    const json envelope = json::parse(result.out);
    CHECK(envelope.at("inexact") == true);
    CHECK(envelope.at("payload").at("terms")[0].at("weight") == "0.500");
}
