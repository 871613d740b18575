#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hupstab/json_io.hpp"

namespace {

using namespace hupstab;

int thread_cap() {
    if (const char* env = std::getenv("HUPSTAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// deterministic merge: results land by cell index regardless of schedule
template <typename F>
void parallel_cells(int count, F&& work) {
    const int threads = std::min(thread_cap(), count > 0 ? count : 1);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(path);
        if (!os) throw CLI::ValidationError("--path", "cannot open output file " + path);
        os << text;
    }
}

bool parse_dims(const std::string& text, int& lo, int& hi) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, pos));
            hi = std::stoi(text.substr(pos + 2));
        }
    } catch (...) {
        return false;
    }
    return lo >= 2 && hi >= lo && hi <= 60;
}

std::vector<StabilityEstimate> sweep(int dim_lo, int dim_hi, int kmax, int basis) {
    EstimateOptions opts;
    if (basis > 0) {
        basis = std::max(basis, 4);
        if (basis < 12) opts.m_list = {basis / 2, basis};
        else opts.m_list = {basis / 3, 2 * basis / 3, basis};
    }
    struct Cell { int N, k; };
    std::vector<Cell> cells;
    for (int N = dim_lo; N <= dim_hi; ++N)
        for (int k = 0; k <= kmax; ++k) cells.push_back({N, k});
    std::vector<StabilityEstimate> rows(cells.size());
    parallel_cells(static_cast<int>(cells.size()), [&](int i) {
        rows[i] = estimate_C(cells[i].N, cells[i].k, opts);
    });
    return rows;
}

std::string estimates_table(const std::vector<StabilityEstimate>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "N" << std::setw(4) << "k" << std::right
       << std::setw(12) << "value" << std::setw(12) << "lower" << std::setw(8) << "upper"
       << std::setw(12) << "gauss_quot" << std::setw(12) << "reference"
       << std::setw(11) << "converged" << '\n';
    for (const auto& e : rows) {
        os << std::left << std::setw(4) << e.N << std::setw(4) << e.k << std::right
           << std::fixed << std::setprecision(6) << std::setw(12) << e.value
           << std::setw(12) << e.lower << std::setw(8) << std::setprecision(2) << e.upper
           << std::setprecision(6) << std::setw(12) << e.gaussian_quotient << std::setw(12)
           << e.reference << std::setw(11) << (e.converged ? "yes" : "no") << '\n';
    }
    return os.str();
}

std::string estimates_json(const std::vector<StabilityEstimate>& rows) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i)
        os << (i ? "," : "") << stability_estimate_to_json(rows[i]);
    os << "]";
    return os.str();
}

std::string verify_table(const VerifyReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "  N=" << r.N << "  seed=" << r.seed << '\n';
    for (const auto& c : r.checks)
        os << "  " << (c.passed ? "pass" : "FAIL") << "  " << std::left << std::setw(28)
           << c.name << " residual=" << std::scientific << std::setprecision(3)
           << c.residual << "  tol=" << c.tolerance << '\n';
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability laboratory for the second-order uncertainty principle"};
    app.require_subcommand(1);

    // constants ------------------------------------------------------------
    auto* cmd_const = app.add_subcommand("constants", "stability constant sweep");
    std::string dims = "2..5", out_fmt = "table", out_path;
    int kmax = 3, basis = 0;
    cmd_const->add_option("--dims", dims, "dimension range A..B (within 2..60)");
    cmd_const->add_option("--kmax", kmax, "largest sector degree")->check(CLI::Range(0, 20));
    cmd_const->add_option("--basis", basis, "largest basis size (default 24)");
    cmd_const->add_option("--out", out_fmt, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd_const->add_option("--path", out_path, "write the report here instead of stdout");

    // verify -----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run an identity or inequality suite");
    std::string which_suite;
    int vdim = 3, trials = 200, corpus = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string vout = "json", vpath;
    cmd_verify->add_option("suite", which_suite, "identities|inequalities")
        ->required()
        ->check(CLI::IsMember({"identities", "inequalities"}));
    cmd_verify->add_option("--dim", vdim, "ambient dimension")->check(CLI::Range(2, 60));
    cmd_verify->add_option("--trials", trials, "inequality trials");
    cmd_verify->add_option("--corpus", corpus, "identity corpus size");
    cmd_verify->add_option("--seed", seed, "corpus seed (default 0)");
    cmd_verify->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--out", vout, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd_verify->add_option("--path", vpath, "write the report here instead of stdout");

    // deficit ----------------------------------------------------------------
    auto* cmd_def = app.add_subcommand("deficit", "deficits of a radial function");
    std::string fn_spec;
    int ddim = 3, order = 2;
    bool emit_spec = false;
    cmd_def->add_option("--fn", fn_spec, "function spec JSON")->required();
    cmd_def->add_option("--dim", ddim, "ambient dimension")->check(CLI::Range(2, 60));
    cmd_def->add_option("--order", order, "1 (first) or 2 (second)")->check(CLI::Range(1, 2));
    cmd_def->add_flag("--emit-spec", emit_spec, "echo the canonical parsed spec");

    // distance ---------------------------------------------------------------
    auto* cmd_dist = app.add_subcommand("distance", "distance to an optimizer manifold");
    std::string dfn, dset = "shup";
    int sdim = 3;
    bool match_norm = false;
    cmd_dist->add_option("--fn", dfn, "function spec JSON")->required();
    cmd_dist->add_option("--dim", sdim, "ambient dimension")->check(CLI::Range(2, 60));
    cmd_dist->add_option("--set", dset, "hup|shup|cfhup")
        ->check(CLI::IsMember({"hup", "shup", "cfhup"}));
    cmd_dist->add_flag("--match-norm", match_norm, "constrain the competitor norm");

    // report -----------------------------------------------------------------
    auto* cmd_rep = app.add_subcommand("report", "full grid sweep to a CSV file");
    std::string rdims = "2..10", rpath;
    int rkmax = 4;
    cmd_rep->add_option("--dims", rdims, "dimension range A..B (within 2..60)");
    cmd_rep->add_option("--kmax", rkmax, "largest sector degree")->check(CLI::Range(0, 20));
    cmd_rep->add_option("--out", rpath, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_const) {
            int lo, hi;
            if (!parse_dims(dims, lo, hi)) {
                std::cerr << "error: --dims must be A..B within [2, 60]\n";
                return 2;
            }
            const auto rows = sweep(lo, hi, kmax, basis);
            if (out_fmt == "csv") write_out(estimates_to_csv(rows), out_path);
            else if (out_fmt == "json") write_out(estimates_json(rows), out_path);
            else write_out(estimates_table(rows), out_path);
            return 0;
        }
        if (*cmd_verify) {
            VerifyReport rep;
            if (which_suite == "identities") {
                IdentityOptions o;
                o.tol = tol;
                o.corpus_size = corpus;
                rep = run_identity_suite(vdim, seed, o);
            } else {
                InequalityOptions o;
                o.tol = tol;
                o.trials = trials;
                rep = run_inequality_suite(vdim, seed, o);
            }
            if (vout == "csv") write_out(verify_report_to_csv(rep), vpath);
            else if (vout == "table") write_out(verify_table(rep), vpath);
            else write_out(verify_report_to_json(rep), vpath);
            return rep.all_passed() ? 0 : 1;
        }
        if (*cmd_def) {
            PolyGaussFn u;
            try {
                u = pg_from_json(fn_spec);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
            if (emit_spec) {
                std::cout << pg_to_json(u) << '\n';
                return 0;
            }
            const DeficitReport d = deficits(u, ddim);
            std::cout << deficit_report_to_json(d) << '\n';
            if (order == 1)
                std::cerr << "theta1 = " << d.theta1 << '\n';
            else
                std::cerr << "delta1 = " << d.delta1 << '\n';
            return 0;
        }
        if (*cmd_dist) {
            PolyGaussFn u;
            try {
                u = pg_from_json(dfn);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
            DistanceResult r;
            if (dset == "hup") r = dist_l2_to_hup(u, sdim);
            else if (dset == "shup")
                r = match_norm ? dist_grad_norm_matched(u, sdim) : dist_grad_to_shup(u, sdim);
            else
                r = dist_vector_cfhup(u, sdim,
                                      match_norm ? VectorMetric::norm_matched : VectorMetric::l2);
            std::cout << distance_result_to_json(r) << '\n';
            return 0;
        }
        if (*cmd_rep) {
            int lo, hi;
            if (!parse_dims(rdims, lo, hi)) {
                std::cerr << "error: --dims must be A..B within [2, 60]\n";
                return 2;
            }
            const auto rows = sweep(lo, hi, rkmax, 0);
            write_out(estimates_to_csv(rows), rpath);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
