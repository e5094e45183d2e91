#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Sandbox {
    fs::path dir;
    Sandbox() {
        dir = fs::temp_directory_path() /
              ("fvw_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Sandbox() { fs::remove_all(dir); }
    std::string path(const char* name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    std::string cmd = std::string(FVW_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("gaussian / check / wigner / purity pipeline") {
    Sandbox sb;
    const std::string st = sb.path("s.json");
    CHECK(run("gaussian --n 128 --p-max 16 --sigma2 1 -o " + st) == 0);
    CHECK(run("check " + st + " -o " + sb.path("chk.json")) == 0);
    CHECK(run("wigner " + st + " -o " + sb.path("w.csv")) == 0);
    CHECK(run("purity " + sb.path("w.csv") + " -o " + sb.path("p1.json")) == 0);
    CHECK(run("purity " + st + " -o " + sb.path("p2.json")) == 0);
    CHECK(run("moments " + st + " --n 2 -o " + sb.path("m.json")) == 0);
    CHECK(run("evolve " + st + " --t 1.0 -o " + sb.path("e.json")) == 0);
    CHECK(slurp(sb.path("w.csv")).rfind("# grid n=128", 0) == 0);
}

TEST_CASE("validation failures exit with code 2") {
    Sandbox sb;
    // packet too wide for the window
    CHECK(run("gaussian --n 128 --p-max 16 --sigma2 100 -o " +
              sb.path("x.json")) == 2);
    // bad charge
    CHECK(run("gaussian --n 128 --p-max 16 --charge 3 -o " +
              sb.path("x.json")) == 2);
    // missing input file
    CHECK(run("check " + sb.path("absent.json")) == 2);
    // odd grid size
    CHECK(run("gaussian --n 127 --p-max 16 -o " + sb.path("x.json")) == 2);
}

TEST_CASE("output files are byte deterministic") {
    Sandbox sb;
    CHECK(run("gaussian --n 256 --p-max 16 --sigma2 0.5 --q0 1.25 -o " +
              sb.path("a.json")) == 0);
    CHECK(run("gaussian --n 256 --p-max 16 --sigma2 0.5 --q0 1.25 -o " +
              sb.path("b.json")) == 0);
    CHECK(slurp(sb.path("a.json")) == slurp(sb.path("b.json")));
    CHECK(!slurp(sb.path("a.json")).empty());

    CHECK(run("fig2 --n 512 --p-max 16 --sigma2-min 0.01 --sigma2-max 1 "
              "--points 5 -o " + sb.path("f.csv")) == 0);
    CHECK(slurp(sb.path("f.csv"))
              .rfind("sigma_p,dx2_usual,dx2_corrected,reference_dx2", 0) == 0);
}
