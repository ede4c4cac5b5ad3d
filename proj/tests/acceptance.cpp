// Acceptance battery: every criterion below runs at its stated bound and
// prints one line. All comparisons are exact rational equality (tolerance
// zero); the time limits are wall-clock upper bounds.
//
//  1. q-kernel primitives, n <= 16, full default grid              < 5 s
//  2. iterated Leibniz rule, 50 random pairs, deg <= 5, n <= 4     < 10 s
//  3. derivative recursions, 7 families, n <= 8, all grid points   < 30 s
//  4. structure: routes, operator images, A-sequence, addition     < 60 s
//  5. characterization equivalences, 5 families, n <= 8            < 30 s
//  6. operator/generating-function identities at order 6           < 60 s
//  7. Mehler: inner k <= 3 and full expansion at order 5           < 5 min
//  8. Rogers double expansion at order 5                           < 2 min
//  9. set-algebra group laws, n <= 8 (route findings reported)     < 60 s
// 10. CLI determinism: byte-identical reruns + golden files

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qappell/qappell.hpp"

namespace {

using namespace qappell;

int g_failures = 0;

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(QAPPELL_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return CliResult{-1, "popen failed"};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void report_line(int index, const std::string& name, bool pass, double seconds,
                 double limit_seconds, const std::string& detail = "") {
    std::printf("[%s] %2d. %-58s %7.2fs (limit %.0fs)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), seconds, limit_seconds);
    if (!pass) {
        ++g_failures;
        if (!detail.empty()) std::printf("       %s\n", detail.c_str());
    }
}

std::string first_failure_detail(const std::vector<SuiteResult>& results) {
    for (const auto& s : results)
        for (const auto& r : s.reports)
            if (!r.pass) {
                json j = r.to_json();
                return "suite " + s.suite + ": " + j.dump();
            }
    return "";
}

void run_criterion(int index, const std::string& name, double limit_seconds,
                   const std::function<std::vector<SuiteResult>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteResult> results;
    std::string error;
    try {
        results = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = error.empty() && dt < limit_seconds;
    for (const auto& s : results) pass = pass && s.pass();
    std::string detail = error.empty() ? first_failure_detail(results) : "threw: " + error;
    if (error.empty() && dt >= limit_seconds) detail = "time limit exceeded";
    report_line(index, name, pass, dt, limit_seconds, detail);
}

bool check_golden(const std::string& invocation, const std::string& golden_name,
                  std::string* detail) {
    CliResult a = run_cli(invocation);
    CliResult b = run_cli(invocation);
    if (a.exit_code != 0 || b.exit_code != 0) {
        *detail = "nonzero exit for: " + invocation;
        return false;
    }
    if (a.out != b.out) {
        *detail = "repeated runs differ for: " + invocation;
        return false;
    }
    std::string want = slurp(std::string(QAPPELL_GOLDEN_DIR) + "/" + golden_name);
    if (a.out != want) {
        *detail = "golden mismatch for: " + invocation;
        return false;
    }
    return true;
}

} // namespace

int main() {
    GridSpec grid = GridSpec::default_grid();

    run_criterion(1, "q-kernel primitives (symmetry, Pascal, Pochhammer, quotient)", 5.0,
                  [&] { return std::vector<SuiteResult>{suite_qkernel(grid, 16)}; });

    run_criterion(2, "iterated Leibniz rule on 50 random pairs", 10.0,
                  [&] { return std::vector<SuiteResult>{suite_leibniz(grid, 50, 5, 4)}; });

    run_criterion(3, "derivative recursions for 7 families over the grid", 30.0,
                  [&] { return std::vector<SuiteResult>{suite_derivatives(grid, 8, 8)}; });

    run_criterion(4, "structure: routes, operator images, A-sequence, addition", 60.0, [&] {
        return std::vector<SuiteResult>{suite_asequence(grid, 8), suite_addition(grid, 8)};
    });

    run_criterion(5, "characterization equivalences for 5 families", 30.0,
                  [&] { return std::vector<SuiteResult>{suite_characterization(grid, 8)}; });

    run_criterion(6, "operator and generating-function identities at order 6", 60.0, [&] {
        return std::vector<SuiteResult>{suite_operators(grid, 6), suite_genfun(grid, 6)};
    });

    run_criterion(7, "Mehler: inner expansion k <= 3 and full formula at order 5", 300.0,
                  [&] { return std::vector<SuiteResult>{suite_mehler(grid, 5)}; });

    run_criterion(8, "Rogers double expansion at order 5", 120.0,
                  [&] { return std::vector<SuiteResult>{suite_rogers(grid, 5)}; });

    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult s = suite_setalgebra(grid, 8);
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::size_t findings = 0;
        for (const auto& r : s.reports) findings += r.notes.size();
        bool pass = s.pass() && dt < 60.0;
        report_line(9, "set-algebra group laws (" + std::to_string(findings) +
                           " route findings reported)",
                    pass, dt, 60.0, first_failure_detail({s}));
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool pass =
            check_golden("table --family bernoulli --alpha 1 --n 3 --q 1/2 --u 1/3 --vars xy "
                         "--format json",
                         "table_bernoulli_xy.json", &detail) &&
            check_golden("table --family genocchi --alpha 2 --n 4 --q 2 --u 2 --vars x "
                         "--format csv",
                         "table_genocchi_x.csv", &detail) &&
            check_golden("verify --suite asequence --max-n 4 --order 6",
                         "verify_asequence.json", &detail);
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_line(10, "CLI determinism and golden-file comparison", pass, dt, 60.0, detail);
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
