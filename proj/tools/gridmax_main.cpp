// Command-line front end: exact edge maxima, sequence emission, optimal
// point-set construction, verification sweeps, and b-file comparison.
//
// Exit codes: 0 success/agreement, 1 verified disagreement, 2 usage or
// parse error, 3 I/O error, 4 oracle budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "gridmax/gridmax.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

struct budget_exceeded_exit {};

gridmax::u64 env_u64(const char* name, gridmax::u64 fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        std::cerr << "gridmax: ignoring malformed " << name << "=" << raw << "\n";
        return fallback;
    }
}

std::string format_pcr(const gridmax::pcr& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i) out << " + ";
        out << "[" << p.terms[i].m << "," << p.terms[i].l << "]^" << p.terms[i].dim;
    }
    return out.str();
}

// Results stream: --out file when given, stdout otherwise.
class output_target {
public:
    explicit output_target(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::ios_base::failure("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) throw std::ios_base::failure("write failed");
    }

private:
    std::ofstream file_;
};

int cmd_edges(gridmax::u64 n, int d, bool verbose) {
    auto r = gridmax::max_edges(n, d);
    std::cout << r.edges << "\n";
    if (verbose) {
        std::cout << "delta " << r.discrepancy << "\n";
        std::cout << "pcr " << format_pcr(r.rep) << "\n";
        std::cout << "bound " << gridmax::asymptotic_bound(n, d) << "\n";
    }
    return kExitOk;
}

int cmd_sequence(int d, gridmax::u64 n_max, const std::string& format, const std::string& out_path) {
    output_target out(out_path);
    for (gridmax::u64 n = 1; n <= n_max; ++n) {
        gridmax::u64 value = gridmax::max_edges(n, d).edges;
        if (format == "csv") out.stream() << n << "," << value << "\n";
        else out.stream() << n << " " << value << "\n";
    }
    out.finish();
    return kExitOk;
}

int cmd_cubicle(gridmax::u64 n, int d, const std::string& out_path) {
    gridmax::cubicle c = gridmax::build_cubicle(n, d);
    nlohmann::json j = gridmax::cubicle_to_json(c);
    j["n"] = n;
    j["edges"] = gridmax::edge_count(c.set);
    output_target out(out_path);
    out.stream() << j.dump() << "\n";
    out.finish();
    return kExitOk;
}

int cmd_verify_oracle(int d, gridmax::u64 n_max, const gridmax::oracle_budget& budget, int jobs) {
    gridmax::verify_report rep = gridmax::verify_range(d, n_max, budget, jobs);
    bool all_agree = true;
    for (const auto& row : rep.rows) {
        std::cout << row.n << " " << row.formula_value << " " << row.oracle_value << " "
                  << (row.agree ? "ok" : "MISMATCH") << "\n";
        all_agree = all_agree && row.agree;
    }
    if (rep.truncated) {
        std::cout << "# truncated: oracle budget exceeded after n = " << rep.rows.size() << "\n";
        std::cerr << "gridmax: oracle budget exceeded\n";
        return kExitBudget;
    }
    return all_agree ? kExitOk : kExitDisagree;
}

int cmd_verify_internal(int d, gridmax::u64 n_max) {
    bool all_agree = true;
    for (gridmax::u64 n = 1; n <= n_max; ++n) {
        gridmax::u64 closed = gridmax::max_edges(n, d).edges;
        gridmax::u64 recursive = gridmax::f_recursive(n, d);
        gridmax::u64 bound = gridmax::asymptotic_bound(n, d);
        bool ok = closed == recursive && closed <= bound;
        if (d == 2) ok = ok && closed == gridmax::harary_harborth(n);
        std::cout << n << " " << closed << " " << recursive << " " << bound << " "
                  << (ok ? "ok" : "MISMATCH") << "\n";
        all_agree = all_agree && ok;
    }
    return all_agree ? kExitOk : kExitDisagree;
}

int cmd_compare(int d, const std::string& bfile_path) {
    std::ifstream in(bfile_path, std::ios::binary);
    if (!in) {
        std::cerr << "gridmax: cannot open b-file: " << bfile_path << "\n";
        return kExitIo;
    }
    bool all_agree = true;
    std::string line;
    for (gridmax::u64 line_no = 1; std::getline(in, line); ++line_no) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        gridmax::u64 n = 0, value = 0;
        std::string extra;
        if (!(row >> n >> value) || (row >> extra) || n < 1) {
            std::cerr << "gridmax: malformed b-file line " << line_no << ": " << line << "\n";
            return kExitUsage;
        }
        gridmax::u64 ours = gridmax::max_edges(n, d).edges;
        if (ours != value) {
            std::cout << n << " " << ours << " " << value << "\n";
            all_agree = false;
        }
    }
    if (in.bad()) {
        std::cerr << "gridmax: read failed: " << bfile_path << "\n";
        return kExitIo;
    }
    return all_agree ? kExitOk : kExitDisagree;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge maxima of induced subgraphs of the d-dimensional grid"};
    app.require_subcommand(1);

    gridmax::u64 arg_n = 0;
    int arg_d = 1;
    gridmax::u64 arg_n_max = 1;
    bool verbose = false;
    std::string format = "bfile";
    std::string out_path;
    std::string mode = "oracle";
    std::string bfile_path;
    gridmax::oracle_budget budget;
    budget.max_visits = env_u64("GRIDMAX_ORACLE_CAP", budget.max_visits);
    budget.max_seconds = (double)env_u64("GRIDMAX_ORACLE_SECS", (gridmax::u64)budget.max_seconds);
    int jobs = (int)std::max(1u, std::thread::hardware_concurrency());

    CLI::App* edges = app.add_subcommand("edges", "print the maximum edge count for n points");
    edges->add_option("--n", arg_n, "number of points")->required();
    edges->add_option("--d", arg_d, "grid dimension")->required();
    edges->add_flag("--verbose", verbose, "also print discrepancy, representation, bound");

    CLI::App* sequence = app.add_subcommand("sequence", "emit the value sequence for n = 1..n-max");
    sequence->add_option("--d", arg_d, "grid dimension")->required();
    sequence->add_option("--n-max", arg_n_max, "last n to emit")->required();
    sequence->add_option("--format", format, "bfile or csv")
        ->check(CLI::IsMember({"bfile", "csv"}));
    sequence->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* cubicle = app.add_subcommand("cubicle", "write the optimal point set as JSON");
    cubicle->add_option("--n", arg_n, "number of points")->required();
    cubicle->add_option("--d", arg_d, "grid dimension")->required();
    cubicle->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check the formula against the oracle or itself");
    verify->add_option("--d", arg_d, "grid dimension")->required();
    verify->add_option("--n-max", arg_n_max, "last n to verify")->required();
    verify->add_option("--mode", mode, "oracle or internal")
        ->check(CLI::IsMember({"oracle", "internal"}));
    verify->add_option("--oracle-cap", budget.max_visits, "max sets the oracle may visit per call");
    verify->add_option("--oracle-secs", budget.max_seconds, "time budget per oracle call, seconds");
    verify->add_option("--jobs", jobs, "worker threads for the oracle");

    CLI::App* compare = app.add_subcommand("compare", "diff an imported b-file against the formula");
    compare->add_option("--d", arg_d, "grid dimension")->required();
    compare->add_option("--bfile", bfile_path, "b-file path (lines \"n value\", '#' comments)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (edges->parsed()) return cmd_edges(arg_n, arg_d, verbose);
        if (sequence->parsed()) return cmd_sequence(arg_d, arg_n_max, format, out_path);
        if (cubicle->parsed()) return cmd_cubicle(arg_n, arg_d, out_path);
        if (verify->parsed()) {
            if (mode == "internal") return cmd_verify_internal(arg_d, arg_n_max);
            return cmd_verify_oracle(arg_d, arg_n_max, budget, jobs);
        }
        if (compare->parsed()) return cmd_compare(arg_d, bfile_path);
    } catch (const gridmax::budget_exceeded_error& e) {
        std::cerr << "gridmax: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "gridmax: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "gridmax: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "gridmax: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
