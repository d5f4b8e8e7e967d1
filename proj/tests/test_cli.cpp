#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fano7/cli.hpp"
#include "fano7/errors.hpp"
#include "fano7/statefile.hpp"
#include "test_util.hpp"

using namespace fano7;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("fano7");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// RAII temp file
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "/tmp/fano7_test_" + std::to_string(counter++) + ".json";
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string ghz_file() {
    return serialize_state(testutil::single_line_state(0, testutil::ghz_tensor()));
}

// numeric field out of "key=<value>[,...]" output
double field(const std::string& out, const std::string& key) {
    const auto pos = out.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::stod(out.substr(pos + key.size() + 1));
}

std::string w_file() {
    return serialize_state(testutil::single_line_state(0, testutil::w_tensor()));
}

}  // namespace

TEST_CASE("det command") {
    SUBCASE("GHZ") {
        TempFile f(ghz_file());
        const CliResult r = run({"det", f.path, "--line", "ABD"});
        CHECK(r.code == 0);
        CHECK(field(r.out, "det") == doctest::Approx(0.25).epsilon(1e-13));
        CHECK(field(r.out, "tangle3") == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(r.out.find("class=ghz+") != std::string::npos);
    }
    SUBCASE("W") {
        TempFile f(w_file());
        const CliResult r = run({"det", f.path});
        CHECK(r.code == 0);
        CHECK(r.out.find("det=0,0") != std::string::npos);
        CHECK(r.out.find("tangle3=0") != std::string::npos);
        CHECK(r.out.find("class=sep/W") != std::string::npos);
    }
    SUBCASE("complex amplitudes omit the class") {
        TempFile f(R"({"lines": {"ABD": [[0.5,0.5],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0.5,-0.5]]}})");
        const CliResult r = run({"det", f.path});
        CHECK(r.code == 0);
        CHECK(r.out.find("class=") == std::string::npos);
    }
    SUBCASE("malformed file exits 1") {
        TempFile f(R"({"lines": {"XYZ": []}})");
        const CliResult r = run({"det", f.path});
        CHECK(r.code == 1);
    }
    SUBCASE("wrong entry count exits 1") {
        TempFile f(R"({"lines": {"ABD": [[1,0]]}})");
        CHECK(run({"det", f.path}).code == 1);
    }
}

TEST_CASE("i4 and classify commands") {
    SUBCASE("GHZ file") {
        TempFile f(ghz_file());
        const CliResult r = run({"i4", f.path});
        CHECK(r.code == 0);
        CHECK(field(r.out, "i4") == doctest::Approx(-0.25).epsilon(1e-13));
        CHECK(field(r.out, "tangle7") == doctest::Approx(1.0).epsilon(1e-13));

        const CliResult c = run({"classify", f.path});
        CHECK(c.code == 0);
        CHECK(c.out.find("kind=large-nonbps") != std::string::npos);
        CHECK(c.out.find("zero_tol=") != std::string::npos);
    }
    SUBCASE("rho input, large BPS") {
        const CliResult c = run({"classify", "--rho", "3,1,1,1", "--phi", "0"});
        CHECK(c.code == 0);
        CHECK(c.out.find("i4=48") != std::string::npos);
        CHECK(c.out.find("kind=large-bps") != std::string::npos);
    }
    SUBCASE("rho input, small 1/2 BPS") {
        const CliResult c = run({"classify", "--rho", "1,1,1,1", "--phi", "0"});
        CHECK(c.code == 0);
        CHECK(c.out.find("kind=small") != std::string::npos);
        CHECK(c.out.find("bps=1/2") != std::string::npos);
    }
    SUBCASE("genuinely complex I4 exits 1 with ImagTooLarge") {
        // GHZ on ABD plus an i-weighted W on BCE gives a complex invariant
        SevenQubitState psi = testutil::single_line_state(0, testutil::ghz_tensor());
        Hypermatrix t;
        t.at(0, 0, 1) = Complex{0.4, 0.5};
        t.at(0, 1, 0) = Complex{-0.3, 0.4};
        t.at(1, 0, 0) = Complex{0.2, 0.7};
        t.at(1, 1, 1) = Complex{0.1, 0.6};
        psi[1] = t;
        TempFile f(serialize_state(psi));
        const CliResult c = run({"classify", f.path});
        CHECK(c.code == 1);
        CHECK(c.err.find("ImagTooLarge") != std::string::npos);
    }
    SUBCASE("both input forms at once is an error") {
        TempFile f(ghz_file());
        CHECK(run({"classify", f.path, "--rho", "1,1,1,1"}).code == 1);
    }
}

TEST_CASE("entropy command") {
    const CliResult r = run({"entropy", "--rho", "3,1,1,1", "--phi", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S=21.76") != std::string::npos);

    TempFile f(ghz_file());
    const CliResult r2 = run({"entropy", f.path});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("S=1.570796") != std::string::npos);
}

TEST_CASE("random command") {
    SUBCASE("same seed gives byte-identical output") {
        const CliResult a = run({"random", "--lines", "ABD", "--seed", "7"});
        const CliResult b = run({"random", "--lines", "ABD", "--seed", "7"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find("\"ABD\"") != std::string::npos);
    }
    SUBCASE("normalized full state has unit norm") {
        const CliResult r =
            run({"random", "--lines", "ABD,BCE,CDF,DEG,EFA,FGB,GAC", "--seed", "3", "--normalize"});
        CHECK(r.code == 0);
        const SevenQubitState psi = parse_state(r.out);
        CHECK(std::abs(state_norm(psi) - 1.0) <= 1e-12);
    }
    SUBCASE("bad line name exits 1") {
        CHECK(run({"random", "--lines", "XYZ", "--seed", "1"}).code == 1);
    }
}

TEST_CASE("round trip preserves the invariants to printed precision") {
    const CliResult r = run({"random", "--lines", "ABD,DEG,GAC", "--seed", "99"});
    REQUIRE(r.code == 0);
    const SevenQubitState psi = parse_state(r.out);
    const std::string again = serialize_state(psi);
    CHECK(again == r.out);  // 17 significant digits round-trip doubles exactly
}

TEST_CASE("check suites") {
    CHECK(run({"check", "--suite", "counts"}).code == 0);
    CHECK(run({"check", "--suite", "fano"}).code == 0);
    CHECK(run({"check", "--suite", "octonion"}).code == 0);
    {
        const CliResult r = run({"check", "--suite", "counts"});
        CHECK(r.out.find("1,7,21,35,35,21,7,1 total 2187") != std::string::npos);
    }
    {
        const CliResult r = run({"check", "--suite", "invariance", "--seed", "42", "--samples",
                                 "100", "--tol", "1e-9"});
        CHECK(r.code == 0);
        CHECK(r.out.find("status=pass") != std::string::npos);
        CHECK(r.out.find("max_residual=") != std::string::npos);
    }
    {
        const CliResult r = run({"check", "--suite", "oracles", "--samples", "50"});
        CHECK(r.code == 0);
        CHECK(r.out.find("check=single-line:ABD") != std::string::npos);
        CHECK(r.out.find("check=n4-oracle:A") != std::string::npos);
        CHECK(r.out.find("check=calibration") != std::string::npos);
    }
    CHECK(run({"check", "--suite", "bogus"}).code == 1);
}
