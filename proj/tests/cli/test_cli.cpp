// End-to-end checks of the installed CLI binary (path via RESURGENCE_CLI).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* p = std::getenv("RESURGENCE_CLI");
    REQUIRE_MESSAGE(p != nullptr, "RESURGENCE_CLI not set");
    return p;
}

int run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("generate: euler coefficients are (n-1)!") {
    fs::path dir = fs::temp_directory_path() / "rsg_cli_gen";
    fs::remove_all(dir);
    CHECK(run("generate --ode euler --order 5 --out " + dir.string()) == 0);
    auto text = slurp(dir / "series.csv");
    CHECK(text == "n,a_n\n0,0\n1,1\n2,1\n3,2\n4,6\n5,24\n");
    CHECK(fs::exists(dir / "manifest.json"));
    fs::remove_all(dir);
}

TEST_CASE("generate: malformed spec exits 1 with a parse diagnostic") {
    fs::path dir = fs::temp_directory_path() / "rsg_cli_bad";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "broken.json") << "{oops";
    CHECK(run("generate --ode " + (dir / "broken.json").string() + " --out " +
              dir.string()) == 1);
    fs::remove_all(dir);
}

TEST_CASE("determinism: identical config gives bit-identical CSVs") {
    fs::path d1 = fs::temp_directory_path() / "rsg_cli_d1";
    fs::path d2 = fs::temp_directory_path() / "rsg_cli_d2";
    fs::remove_all(d1);
    fs::remove_all(d2);
    std::string args = "analyze --ode ode-simple --order 9 --pade-orders 5:12 --bins 64 ";
    CHECK(run(args + "--out " + d1.string()) == 0);
    CHECK(run(args + "--out " + d2.string()) == 0);
    for (const char* f : {"histogram.csv", "poles.csv", "darboux.csv"})
        CHECK(slurp(d1 / f) == slurp(d2 / f));
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("analyze: recommendation lines follow the structural exponent") {
    fs::path dir = fs::temp_directory_path() / "rsg_cli_reco";
    fs::remove_all(dir);
    auto capture = [&](const std::string& ode) {
        fs::path log = dir / (ode + ".log");
        fs::create_directories(dir);
        std::string cmd = cli_path() + " analyze --ode " + ode +
                          " --order 9 --pade-orders 5:9 --out " + dir.string() + " > " +
                          log.string() + " 2>&1";
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
        return slurp(log);
    };
    CHECK(capture("ode-simple").find("recommendation: simple-pole") != std::string::npos);
    CHECK(capture("ode-branch").find("recommendation: branch b=1/2") != std::string::npos);
    CHECK(capture("prototype").find("resummation unsupported") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("resum: unsupported exponent exits 3") {
    fs::path dir = fs::temp_directory_path() / "rsg_cli_proto";
    fs::remove_all(dir);
    CHECK(run("resum --ode prototype --order 6 --out " + dir.string()) == 3);
    auto manifest = slurp(dir / "manifest.json");
    CHECK(manifest.find("\"status\": 3") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("resum: euler end to end writes curves") {
    fs::path dir = fs::temp_directory_path() / "rsg_cli_euler";
    fs::remove_all(dir);
    CHECK(run("resum --ode euler --order 6 --nprime 1 --x0 10 --ytarget 0.12 --grid-lo 8 "
              "--grid-hi 14 --grid-step 1 --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "resummed.csv"));
    CHECK(fs::exists(dir / "reference.csv"));
    CHECK(fs::exists(dir / "comparison.csv"));
    auto resummed = slurp(dir / "resummed.csv");
    CHECK(resummed.find("x,y_med,pv_part,exp_sector_1,exp_sector_2,exp_sector_3") == 0);
    fs::remove_all(dir);
}
