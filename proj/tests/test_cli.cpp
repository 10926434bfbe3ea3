#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fueterlab/fueter_maps.hpp"
#include "fueterlab/json_io.hpp"

using namespace fueterlab;
namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* b = std::getenv("FUETERLAB_BIN");
    REQUIRE_MESSAGE(b != nullptr, "FUETERLAB_BIN must point at the CLI binary");
    return b;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    RunResult r;
    r.out = std::move(out);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path tmp_file(const char* name) {
    return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("verify runs a suite and reports pass") {
    RunResult r = run("verify --suite appell --deg-max 4");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() > 0);
    for (const auto& rep : j) CHECK(rep.at("status") != "fail");
}

TEST_CASE("verify rejects unknown suites and bad bounds") {
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("verify --suite appell --deg-max 40").code == 2);
}

TEST_CASE("eval returns known values") {
    RunResult q1 = run("eval Q --k 1 --at 0,1,0,0");
    REQUIRE(q1.code == 0);
    Json j = Json::parse(q1.out);
    CHECK(j.at("x").get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(j.at("w").get<double>() == doctest::Approx(0.0));

    RunResult h = run("eval Hq --m 0 --p 2 --at 1,0,0,0");
    REQUIRE(h.code == 0);
    double two_pi_sq = 4 * M_PI * M_PI;
    CHECK(Json::parse(h.out).at("w").get<double>() ==
          doctest::Approx(two_pi_sq).epsilon(1e-12));

    CHECK(run("eval Q --k 1 --at 0,1,0").code == 2);
    CHECK(run("eval Zeta").code == 2);
}

TEST_CASE("transform applies the maps to serialized coefficient matrices") {
    fs::path in = tmp_file("fueterlab_cli_in.json");
    fs::path out = tmp_file("fueterlab_cli_out.json");
    SliceCoeffMatrix f = SliceCoeffMatrix::basis(2, 1, 2, QuatE::real(ExactScalar(1)));
    std::ofstream(in) << to_json(f).dump(2) << "\n";

    REQUIRE(run("transform --map C " + in.string() + " " + out.string()).code == 0);
    NCPoly c_img = ncpoly_from_json(Json::parse(slurp(out)));
    CHECK(c_img == NCPoly::variable(0).scalar_mul(ExactScalar(-4)));

    REQUIRE(run("transform --map tau " + in.string() + " " + out.string()).code == 0);
    NCPoly t_img = ncpoly_from_json(Json::parse(slurp(out)));
    CHECK(t_img == NCPoly::constant(QuatE::real(ExactScalar(-8))));

    CHECK(run("transform --map C /nonexistent.json " + out.string()).code == 2);
    std::ofstream(in) << "{\"order\": 0, \"alpha\": []}\n";
    CHECK(run("transform --map C " + in.string() + " " + out.string()).code == 2);
    fs::remove(in);
    fs::remove(out);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
    fs::path a = tmp_file("fueterlab_cli_a.json");
    fs::path b = tmp_file("fueterlab_cli_b.json");
    std::string args = "verify --suite fueter --deg-max 4 --seed 7 --json ";
    REQUIRE(run(args + a.string()).code == 0);
    REQUIRE(run(args + b.string()).code == 0);
    std::string sa = slurp(a), sb = slurp(b);
    CHECK(!sa.empty());
    CHECK(sa == sb);
    fs::remove(a);
    fs::remove(b);
}
