#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(NCSYM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(p);
    r.status = WEXITSTATUS(rc);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("sk-vectors on the linear potential prints 12 generators") {
    RunResult r = run("sk-vectors --V z --deg 3 --format structured");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "dimension=12"));
    CHECK(contains(r.out, "command=sk-vectors"));
}

TEST_CASE("killing-tensors on the Kepler potential includes the hidden family") {
    RunResult r = run("killing-tensors --V r^-1 --rank 2 --deg 2 --format structured");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "dimension=14"));
    // the three Runge-Lenz quantities and the energy carry chi0 terms
    int chi0 = 0;
    size_t pos = 0;
    while ((pos = r.out.find(".chi0=", pos)) != std::string::npos) {
        ++chi0;
        ++pos;
    }
    CHECK(chi0 == 4);
    CHECK(contains(r.out, "r*rho^-1"));
}

TEST_CASE("twistor sections") {
    RunResult r = run("twistor sections --deg-t 0 --format structured");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "dimension=8"));
    RunResult r2 = run("twistor sections --deg-t 2 --format structured");
    CHECK(contains(r2.out, "dimension=24"));
}

TEST_CASE("structured output is byte-identical across runs") {
    for (const char* cmd : {"sk-vectors --V z --deg 3 --format structured",
                            "killing-vectors --V r^-1 --deg 2 --format structured",
                            "twistor cga --format structured",
                            "higher-symmetries --order 1 --deg 2 --format structured"}) {
        RunResult a = run(cmd), b = run(cmd);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("config file route") {
    std::string path = "/tmp/ncsym_test_config.txt";
    {
        std::ofstream f(path);
        f << "# Kepler\ndimension = 3\nV = r^-1\nOmega = 0\n";
    }
    RunResult r = run("killing-vectors --config " + path + " --deg 2 --format structured");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "dimension=4"));

    // explicit component route with a boosted observer; the Schrodinger
    // solver requires a potential-form spacetime, so it must refuse (exit 1)
    std::string path2 = "/tmp/ncsym_test_config2.txt";
    {
        std::ofstream f(path2);
        f << "dimension = 3\nh_xx = 1\nh_yy = 1\nh_zz = 1\ntheta_t = 1\nU_t = 1\nU_x = y\n";
    }
    RunResult r2 = run("sk-vectors --config " + path2 + " --deg 2");
    CHECK(r2.status == 1);
    // but the Killing solver handles it
    RunResult r3 = run("killing-vectors --config " + path2 + " --deg 2 --format structured");
    CHECK(r3.status == 0);
}

TEST_CASE("error exits") {
    CHECK(run("sk-vectors --V q+1 --deg 2").status == 2);   // unregistered variable
    CHECK(run("frobnicate").status == 2);                   // unknown command
    CHECK(run("sk-vectors --V x^-1 --deg 2").status == 2);  // disallowed exponent
    std::string path = "/tmp/ncsym_test_config3.txt";
    {
        std::ofstream f(path);
        f << "V = z\nh_xx = 1\n";
    }
    CHECK(run("sk-vectors --config " + path).status == 2);  // malformed config
}

TEST_CASE("geometry report") {
    RunResult r = run("geometry --V z --format structured");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "Gamma^z_tt=1"));
    CHECK(contains(r.out, "riemann-zero=yes"));
    CHECK(contains(r.out, "trautman=yes"));
    RunResult r2 = run("geometry --V r^-1 --format structured");
    CHECK(contains(r2.out, "riemann-zero=no"));
    CHECK(contains(r2.out, "ricci-zero=yes"));
}

TEST_CASE("twistor obstruction and cnc reports") {
    RunResult r = run("twistor obstruction --bound 6 --format structured");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "global-sections=none"));
    RunResult r2 = run("twistor cnc --deg-t 1 --format structured");
    CHECK(contains(r2.out, "one-to-one=yes"));
    CHECK(contains(r2.out, "dimension=16"));
    RunResult r3 = run("twistor stilde --format structured");
    CHECK(contains(r3.out, "dimension=13"));
}
