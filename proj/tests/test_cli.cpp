// End-to-end checks of the csop binary. The driver path arrives via the
// CSOP_BIN environment variable (set by the ctest wiring); without it the
// cases are vacuous so the test binary stays runnable on its own.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "csop/report.hpp"
#include "doctest.h"

using csop::Cplx;

namespace {

const char* cli_path() { return std::getenv("CSOP_BIN"); }

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + cli_path() + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli exit codes") {
    if (cli_path() == nullptr) {
        return;
    }
    CHECK(run_cli("verify --scenario thm5-adjoint --n 64") == 0);
    CHECK(run_cli("verify --scenario no-such-id") == 2);
    CHECK(run_cli("matrix --op sigma --a 0.5 --b 1.2 --n 4") == 2);
    CHECK(run_cli("adjoint --a 0.5 --b 0.25") == 0);
}

TEST_CASE("cli matrix csv carries exact sections") {
    if (cli_path() == nullptr) {
        return;
    }
    const std::string out =
        (std::filesystem::temp_directory_path() / "csop_cli_matrix.csv").string();

    // sigma at a = b = 1/2, N = 3: dyadic entries survive the round-trip.
    REQUIRE(run_cli("matrix --op sigma --a 0.5 --b 0.5 --n 3 --out \"" + out + "\"") == 0);
    {
        std::ifstream f(out);
        REQUIRE(f.good());
        const csop::CsvMatrix m = csop::read_matrix_csv(f);
        CHECK(m.family == "sigma");
        CHECK(m.a == Cplx(0.5));
        CHECK(m.b == Cplx(0.5));
        REQUIRE(m.n == 3);
        Eigen::MatrixXcd want(3, 3);
        want << Cplx(1), Cplx(0.25), Cplx(0.0625),
                Cplx(0), Cplx(0.5), Cplx(0.25),
                Cplx(0), Cplx(0), Cplx(0.25);
        CHECK((m.mat.array() == want.array()).all());
    }

    // a = 0 degenerates sigma to the constant b; the section keeps row 0 only.
    REQUIRE(run_cli("matrix --op sigma --a 0 --b 0.3 --n 2 --out \"" + out + "\"") == 0);
    {
        std::ifstream f(out);
        REQUIRE(f.good());
        const csop::CsvMatrix m = csop::read_matrix_csv(f);
        REQUIRE(m.n == 2);
        CHECK(m.mat(0, 0) == Cplx(1));
        CHECK(m.mat(0, 1) == Cplx(0.3));
        CHECK(m.mat(1, 0) == Cplx(0));
        CHECK(m.mat(1, 1) == Cplx(0));
    }
    std::filesystem::remove(out);
}
