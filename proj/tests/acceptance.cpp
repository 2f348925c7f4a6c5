// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. Criteria 1-8 run in-process through the verification groups with
// their pinned tolerances; criterion 9 drives the installed CLI binary.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wigcat/verify.hpp"

namespace {

using namespace wigcat;
namespace fs = std::filesystem;

int failures = 0;

void criterion(int idx, const char* label, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s  [%s]\n", pass ? "PASS" : "FAIL", idx, label,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

struct GroupRun {
    bool pass;
    double max_residual;
    double seconds;
    std::string first_failure;
};

GroupRun run_group(const std::string& group) {
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport report = run_verification(group);
    const auto t1 = std::chrono::steady_clock::now();
    GroupRun out{report.all_pass(), report.max_residual(),
                 std::chrono::duration<double>(t1 - t0).count(), ""};
    for (const Check& c : report.checks)
        if (!c.pass) {
            out.first_failure = c.name;
            break;
        }
    return out;
}

std::string describe(const GroupRun& run, const char* residual_label) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << residual_label << "=" << run.max_residual;
    os.precision(2);
    os << std::defaultfloat << ", " << run.seconds << " s";
    if (!run.first_failure.empty()) os << ", first failure: " << run.first_failure;
    return os.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(WIGCAT_CLI_PATH) + " " + args;
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    {
        const GroupRun r = run_group("algebra");
        criterion(1, "algebra relations, lambda grid, Nmax=64, tol 1e-11",
                  r.pass && r.seconds < 5.0, describe(r, "max residual"));
    }
    {
        const GroupRun r = run_group("oracle");
        criterion(2, "closed forms vs truncated-Fock oracle, 1e-9 rel / 1e-12 abs",
                  r.pass && r.seconds < 30.0, describe(r, "max rel dev"));
    }
    {
        const GroupRun r = run_group("eigenvalue");
        criterion(3, "a^2 eigenvalue property, residual <= 1e-10",
                  r.pass, describe(r, "max residual"));
    }
    {
        const GroupRun r = run_group("schrodinger");
        criterion(4, "lambda=0 Schrodinger cat regression, 1e-12 / 1e-10",
                  r.pass, describe(r, "max residual"));
    }
    {
        const GroupRun r = run_group("signs");
        criterion(5, "prose sign patterns for Q and S_x", r.pass,
                  r.pass ? "all sign claims hold"
                         : ("first failure: " + r.first_failure));
    }
    {
        const GroupRun r = run_group("su11");
        criterion(6, "su(1,1): S_1 = S_2 = 0 and minimum uncertainty, 1e-10",
                  r.pass, describe(r, "max residual"));
    }
    {
        const GroupRun r = run_group("orthonormality");
        criterion(7, "Gram matrix n,m <= 12 equals identity, 1e-8",
                  r.pass, describe(r, "max residual"));
    }
    {
        const GroupRun r = run_group("hamiltonian");
        criterion(8, "finite-difference Hamiltonian residual <= 1e-5, n <= 10",
                  r.pass, describe(r, "max residual"));
    }
    {
        const fs::path tmp =
            fs::temp_directory_path() / ("wigcat_accept_" + std::to_string(::getpid()));
        fs::create_directories(tmp);
        bool pass = true;
        std::string detail;

        const fs::path a = tmp / "a.csv", b = tmp / "b.csv";
        for (const char* id : {"1a", "4b"}) {
            if (run_cli(std::string("figure --id ") + id + " --out " + a.string() +
                        " 2>/dev/null") != 0 ||
                run_cli(std::string("figure --id ") + id + " --out " + b.string() +
                        " 2>/dev/null") != 0) {
                pass = false;
                detail = "figure command failed";
                break;
            }
            const std::string sa = slurp(a), sb = slurp(b);
            if (sa.empty() || sa != sb) {
                pass = false;
                detail = std::string("figure ") + id + " not byte-identical";
                break;
            }
        }
        if (pass) {
            const auto t0 = std::chrono::steady_clock::now();
            const int rc = run_cli("verify > " + (tmp / "verify.log").string() + " 2>&1");
            const double sec =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            pass = (rc == 0) && sec < 120.0;
            std::ostringstream os;
            os.precision(3);
            os << "figure CSVs byte-identical; verify exit " << rc << " in " << sec << " s";
            detail = os.str();
        }
        criterion(9, "determinism and clean verify under 2 minutes", pass, detail);
        std::error_code ec;
        fs::remove_all(tmp, ec);
    }

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
