// exit-code and format contract for the command-line front end; drives the
// installed binary through the shell

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

const std::string kCli = HUPSTAB_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

} // namespace

int main() {
    // constants sweep emits the versioned CSV and exits 0
    {
        const RunResult r = run("constants --dims 2..3 --kmax 1 --out csv");
        expect(r.exit_code == 0, "constants exit code");
        expect(r.out.rfind("# hupstab-report v1\n", 0) == 0, "constants csv header");
        expect(r.out.find("N,k,value,lower,upper,gaussian_quotient,reference,converged") !=
                   std::string::npos,
               "constants csv columns");
    }
    // verify suites exit 0 when everything passes and emit the JSON report
    {
        const RunResult r = run("verify identities --dim 2 --corpus 20 --seed 7");
        expect(r.exit_code == 0, "verify identities exit code");
        expect(r.out.find("\"suite\":\"identities\"") != std::string::npos,
               "verify identities json");
        const RunResult q =
            run("verify inequalities --dim 3 --trials 20 --seed 7 --out csv");
        expect(q.exit_code == 0, "verify inequalities exit code");
        expect(q.out.rfind("# hupstab-report v1\n", 0) == 0, "verify csv header");
    }
    // the Gaussian optimizer reports a vanishing second-order deficit
    {
        const RunResult r =
            run("deficit --fn '{\"terms\":[{\"coeffs\":[1],\"beta\":1}]}' --dim 3 --order 2");
        expect(r.exit_code == 0, "deficit exit code");
        expect(r.out.find("\"delta1\":") != std::string::npos, "deficit payload");
        const auto pos = r.out.find("\"delta1\":");
        const double v = std::abs(std::atof(r.out.c_str() + pos + 10));
        expect(v < 1e-9, "deficit: Gaussian delta1 is zero");
    }
    // --emit-spec round-trips to an identical canonical spec
    {
        const std::string spec =
            "'{\"terms\":[{\"coeffs\":[1.0,0.5],\"beta\":2.0},{\"coeffs\":[0.25],\"beta\":0.5}]}'";
        const RunResult a = run("deficit --fn " + spec + " --dim 3 --emit-spec");
        expect(a.exit_code == 0, "emit-spec exit code");
        std::string echoed = a.out;
        while (!echoed.empty() && (echoed.back() == '\n' || echoed.back() == '\r'))
            echoed.pop_back();
        const RunResult b = run("deficit --fn '" + echoed + "' --dim 3 --emit-spec");
        expect(b.exit_code == 0, "emit-spec reparse exit code");
        expect(a.out == b.out, "emit-spec fixed point");
    }
    // distance subcommand families
    {
        const RunResult r = run(
            "distance --fn '{\"terms\":[{\"coeffs\":[2],\"beta\":1}]}' --dim 3 --set shup");
        expect(r.exit_code == 0, "distance exit code");
        expect(r.out.find("\"metric\":\"grad_seminorm\"") != std::string::npos,
               "distance metric name");
        const RunResult m = run(
            "distance --fn '{\"terms\":[{\"coeffs\":[1,0.2],\"beta\":0.5}]}' --dim 2 "
            "--set cfhup --match-norm");
        expect(m.exit_code == 0, "distance cfhup exit code");
    }
    // a failing check exits 1: force it with an absurd tolerance
    {
        const RunResult r = run("verify identities --dim 2 --corpus 10 --tol 1e-18");
        expect(r.exit_code == 1, "failing checks exit 1");
        expect(r.out.find("\"passed\":false") != std::string::npos, "failure visible in report");
    }
    // usage errors exit 2: malformed spec JSON, bad dims, unknown flags
    {
        expect(run("deficit --fn '{bad json' --dim 3").exit_code == 2, "malformed spec");
        expect(run("constants --dims 1..3").exit_code == 2, "dims below range");
        expect(run("constants --dims 2..99").exit_code == 2, "dims above range");
        expect(run("verify nonsense --dim 3").exit_code != 0, "unknown suite");
        expect(run("").exit_code != 0, "missing subcommand");
    }
    // report writes the grid CSV to a file; cell order and bytes do not
    // depend on the worker count
    {
        const std::string path = "/tmp/hupstab_cli_report.csv";
        const RunResult r = run("report --dims 2..3 --kmax 1 --out " + path);
        expect(r.exit_code == 0, "report exit code");
        FILE* f = fopen(path.c_str(), "r");
        expect(f != nullptr, "report file exists");
        std::string serial;
        if (f) {
            char line[256] = {0};
            if (fgets(line, sizeof line, f))
                expect(std::string(line) == "# hupstab-report v1\n", "report header line");
            rewind(f);
            std::array<char, 4096> buf;
            size_t n;
            while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) serial.append(buf.data(), n);
            fclose(f);
        }
        setenv("HUPSTAB_THREADS", "4", 1);
        const RunResult r4 = run("report --dims 2..3 --kmax 1 --out " + path);
        unsetenv("HUPSTAB_THREADS");
        expect(r4.exit_code == 0, "threaded report exit code");
        std::string threaded;
        if (FILE* g = fopen(path.c_str(), "r")) {
            std::array<char, 4096> buf;
            size_t n;
            while ((n = fread(buf.data(), 1, buf.size(), g)) > 0) threaded.append(buf.data(), n);
            fclose(g);
            remove(path.c_str());
        }
        expect(!serial.empty() && serial == threaded, "report independent of worker count");
    }

    if (failures == 0) {
        std::cout << "cli contract: all checks passed\n";
        return 0;
    }
    std::cout << "cli contract: " << failures << " failures\n";
    return 1;
}
