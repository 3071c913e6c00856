#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

const char* cli_path() {
    const char* path = std::getenv("SCHUBERT_CLI");
    REQUIRE_MESSAGE(path != nullptr, "SCHUBERT_CLI must point at the CLI binary");
    return path;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command =
        env_prefix + "\"" + cli_path() + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string golden(const std::string& name) {
    const char* dir = std::getenv("SCHUBERT_GOLDEN_DIR");
    REQUIRE_MESSAGE(dir != nullptr, "SCHUBERT_GOLDEN_DIR must point at tests/golden");
    std::ifstream in(std::string(dir) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), ("missing golden file " + name));
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("groth prints the polynomial in canonical text order") {
    const CliResult r = run_cli("groth 132");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x1 + x2 - x1*x2\n");
}

TEST_CASE("both engines answer identically through the CLI") {
    const CliResult transition = run_cli("groth 25314");
    const CliResult pipedream = run_cli("groth 25314 --engine pipedream");
    CHECK(transition.exit_code == 0);
    CHECK(pipedream.exit_code == 0);
    CHECK(transition.output == pipedream.output);
    CHECK(contains(transition.output, "x1^3*x2*x3"));
}

TEST_CASE("the pipedream engine accepts an explicit grid size") {
    const CliResult r = run_cli("groth 21 --engine pipedream --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x1\n");
}

TEST_CASE("groth --json carries degree metadata") {
    const CliResult r = run_cli("groth 132 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"schema_version\": 1"));
    CHECK(contains(r.output, "\"length\": 1"));
    CHECK(contains(r.output, "\"degree\": 2"));
    CHECK(contains(r.output, "\"min_degree\": 1"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("groth 1,2,2").exit_code == 2);
    CHECK(contains(run_cli("groth 1,2,2").output, "duplicate value 2"));
    CHECK(run_cli("groth 132 --engine bogus").exit_code == 2);
    CHECK(run_cli("groth 132 --engine transition --n 3").exit_code == 2);
    CHECK(run_cli("ideal 25314 --effective --all-boxes").exit_code == 2);
    CHECK(run_cli("hilbert 21 --effective --n 2").exit_code == 2);
    CHECK(run_cli("verify --n 0").exit_code == 2);
    CHECK(run_cli("verify --n 3 --checks bogus").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("help requests exit cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("groth --help").exit_code == 0);
}

TEST_CASE("diagram prints the annotated grid") {
    const CliResult r = run_cli("diagram 25314");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "permutation: 2,5,3,1,4"));
    CHECK(contains(r.output, "length: 5"));
    CHECK(contains(r.output, "dominant: no"));
    CHECK(contains(r.output, "# o . . .\n# . # 1 o\n0 . o . .\no . . . .\n. . . o .\n"));
    CHECK(contains(r.output, "essential boxes: (2,4) rank 1 (3,1) rank 0"));
    CHECK(contains(r.output, "effective region (9 boxes)"));
}

TEST_CASE("ideal lists the nine generators of the worked example") {
    const CliResult r = run_cli("ideal 25314");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "generators: 9 minors"));
    CHECK(contains(r.output, "size 2, rows {1,2}, cols {3,4}, from box (2,4) rank 1"));
    CHECK(contains(r.output, "size 1, rows {3}, cols {1}, from box (3,1) rank 0"));
}

TEST_CASE("ideal --json matches the golden file byte for byte") {
    const CliResult r = run_cli("ideal 25314 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden("ideal_25314.json"));
}

TEST_CASE("hilbert --effective --json matches the golden file byte for byte") {
    const CliResult r = run_cli("hilbert 25314 --effective --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden("hilbert_25314_effective.json"));
}

TEST_CASE("hilbert text report carries the headline invariants") {
    const CliResult r = run_cli("hilbert 25314 --effective");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "K-polynomial: 1 - 3*t + 10*t^3 - 15*t^4 + 9*t^5 - 2*t^6"));
    CHECK(contains(r.output, "regularity: 1"));
    CHECK(contains(r.output, "postulation: -3"));
    CHECK(contains(r.output, "hilbertian: yes"));
    CHECK(contains(r.output, "HF(0..5): 1 6 18 40 75 126"));
    CHECK(contains(r.output, "HP(k) = 1 + 5/2*k + 2*k^2 + 1/2*k^3"));
}

TEST_CASE("a dominant permutation is not hilbertian in its effective ambient") {
    const CliResult r = run_cli("hilbert 21 --effective");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "postulation: 0"));
    CHECK(contains(r.output, "hilbertian: no"));
}

TEST_CASE("verify reports per-check tallies and an overall verdict") {
    const CliResult r = run_cli("verify --n 4 --checks degree-bound");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "degree-bound: 24/24 permutations pass"));
    CHECK(contains(r.output, "all checks pass"));

    const CliResult full = run_cli("verify --n 3");
    CHECK(full.exit_code == 0);
    CHECK(contains(full.output, "engine-agreement: 6/6 permutations pass"));
    CHECK(contains(full.output, "all checks pass"));
}

TEST_CASE("verify --json is byte-stable across worker counts") {
    const CliResult one = run_cli("verify --n 3 --json --workers 1");
    const CliResult four = run_cli("verify --n 3 --json --workers 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    // The workers field records the setting; mask it before comparing.
    std::string a = one.output;
    std::string b = four.output;
    const auto strip = [](std::string& s) {
        const auto pos = s.find("\"workers\"");
        REQUIRE(pos != std::string::npos);
        const auto end = s.find('\n', pos);
        s.erase(pos, end - pos);
    };
    strip(a);
    strip(b);
    CHECK(a == b);
}

TEST_CASE("oracle passes on tractable inputs and refuses oversized ones") {
    const CliResult small = run_cli("oracle 132");
    CHECK(small.exit_code == 0);
    CHECK(contains(small.output, "pass"));

    const CliResult effective = run_cli("oracle 25314 --effective --k-max 3");
    CHECK(effective.exit_code == 0);

    const CliResult huge = run_cli("oracle 25314");
    CHECK(huge.exit_code == 2);
    CHECK(contains(huge.output, "too large"));

    const CliResult lifted = run_cli("oracle 25314 --k-max 3", "SCHUBERT_MAX_MONOMIALS=30000 ");
    CHECK(lifted.exit_code == 0);
}
