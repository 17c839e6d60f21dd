#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "linecast/algorithms.hpp"
#include "linecast/bounds.hpp"
#include "linecast/error.hpp"
#include "linecast/io.hpp"
#include "linecast/oracle.hpp"

using namespace linecast;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kDeviation = 3, kIo = 4, kTooLarge = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const char* what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

// "a..b" or a single value
std::pair<int, int> parse_range(const std::string& s, const char* what) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(s, what);
        return {v, v};
    }
    int a = parse_int(s.substr(0, dots), what), b = parse_int(s.substr(dots + 2), what);
    if (a > b) throw UsageError(std::string("empty range for ") + what + ": '" + s + "'");
    return {a, b};
}

std::string decimal(const Rational& q) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(4) << q.to_double();
    return o.str();
}

// Full broadcasts from the root are held to the time limit as a hard budget.
std::optional<int> budget_for(const Schedule& s) {
    if (!s.coverage_target().empty() || s.originator().id != 1) return std::nullopt;
    return time_limit(s.tree());
}

VertexRef originator(const CompleteKTree& tree, VertexId id) {
    if (!tree.contains(id)) throw UsageError("originator " + std::to_string(id) + " is not a vertex of the tree");
    return tree.vertex(id);
}

// A flagged extra step explains a blown time budget, so it reports as a
// deviation; any other violation means the schedule is invalid.
int outcome(const Schedule& s, const ValidationReport& rep) {
    for (const Violation& v : rep.violations)
        if (v.kind != ViolationKind::TimeBudgetExceeded) return kInvalid;
    if (has_time_deviation(s)) return kDeviation;
    return rep.ok ? kOk : kInvalid;
}

// ---- run

struct RunOpts {
    int k = 0, r = 0;
    VertexId u = 1;
    std::string alg = "auto";
    std::string format = "trace";
};

int cmd_run(const RunOpts& o) {
    CompleteKTree tree(o.k, o.r);
    Schedule s = run_named(tree, originator(tree, o.u), o.alg);
    ValidationReport rep = validate(s, budget_for(s));
    std::cout << (o.format == "json" ? to_json(s, rep.ok) : to_trace(s, rep));
    return outcome(s, rep);
}

// ---- bounds

int cmd_bounds(int k, int r, bool leaf_adjust) {
    BoundsReport b = bounds_report(k, r, leaf_adjust);
    auto row = [](const std::string& name, const std::string& exact, const std::string& dec) {
        std::cout << std::left << std::setw(12) << name << std::setw(16) << exact << dec << "\n";
    };
    auto qrow = [&](const std::string& name, const Rational& q) { row(name, q.str(), decimal(q)); };
    std::cout << "k=" << k << " r=" << r << " n=" << b.n << " time_limit=" << ceil_log2(b.n) << "\n";
    qrow("farley", b.farley);
    qrow(leaf_adjust ? "lower(leaf)" : "lower", b.lower);
    qrow("alg1", b.alg1);
    if (b.has_alg2) qrow("alg2", b.alg2);
    else row("alg2", "-", "(needs r >= 2)");
    qrow("alg3", b.alg3);
    row("case", std::string(to_string(b.dispatched)), std::to_string(static_cast<int>(b.dispatched)));
    qrow("upper", b.dispatched_upper);
    return kOk;
}

// ---- sweep

struct SweepOpts {
    std::string k = "2..4", r = "1..3";
    std::string originators = "root";
    std::string alg = "auto";
    std::string out = "-";
    bool parallel = false;
    unsigned threads = 0;
    std::int64_t max_n = 2'000'000;
};

struct Cell {
    int k, r;
    VertexId u;
};

struct Row {
    int k, r;
    VertexId u;
    std::string line;
    bool valid;
};

std::vector<VertexId> parse_originators(const std::string& spec, std::int64_t n) {
    std::vector<VertexId> out;
    if (spec == "root") return {1};
    if (spec == "all") {
        for (VertexId v = 1; v <= n; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) {
        VertexId v = parse_int(item, "originator");
        if (v >= 1 && v <= n) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Row sweep_row(const Cell& c, const std::string& alg) {
    CompleteKTree tree(c.k, c.r);
    Schedule s = run_named(tree, tree.vertex(c.u), alg);
    bool root = c.u == 1;
    ValidationReport rep = validate(s, root ? std::optional<int>(time_limit(tree)) : std::nullopt);
    DispatchCase dispatched = lbckt_case(c.k, c.r);
    DispatchCase ran = alg == "alg1" ? DispatchCase::Alg1
                       : alg == "alg2" ? DispatchCase::Alg2
                       : alg == "alg3" ? DispatchCase::Alg3
                                       : dispatched;
    std::string upper;
    if (ran != DispatchCase::Alg2 || c.r >= 2) upper = upper_for(ran, c.k, c.r).str();
    std::string devs;
    for (const Deviation& d : s.deviations()) devs += (devs.empty() ? "" : ";") + deviation_text(d);
    std::ostringstream o;
    o << c.k << ',' << c.r << ',' << tree.size() << ',' << c.u << ',' << s.algorithm_tag() << ','
      << static_cast<int>(dispatched) << ',' << total_time(s) << ',' << time_limit(tree) << ','
      << total_cost(s) << ',' << cost_lower_bound(c.k, c.r).str() << ',' << upper << ','
      << farley_bound(c.k, c.r).str() << ',' << (rep.ok ? "true" : "false") << ',' << devs;
    return {c.k, c.r, c.u, o.str(), rep.ok};
}

int cmd_sweep(const SweepOpts& o) {
    if (o.alg != "auto" && o.alg != "alg1" && o.alg != "alg2" && o.alg != "alg3")
        throw UsageError("sweep runs auto, alg1, alg2 or alg3");
    auto [k0, k1] = parse_range(o.k, "k");
    auto [r0, r1] = parse_range(o.r, "r");
    std::vector<Cell> cells;
    for (int k = k0; k <= k1; ++k)
        for (int r = r0; r <= r1; ++r) {
            std::int64_t n = tree_size(k, r); // validates k and r
            if (n > o.max_n)
                throw UsageError("k=" + std::to_string(k) + " r=" + std::to_string(r) + " has n=" +
                                 std::to_string(n) + " above --max-n " + std::to_string(o.max_n));
            for (VertexId u : parse_originators(o.originators, n)) cells.push_back({k, r, u});
        }

    std::vector<Row> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            try {
                rows[i] = sweep_row(cells[i], o.alg);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned nthreads = 1;
    if (o.parallel) nthreads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return std::tie(a.k, a.r, a.u) < std::tie(b.k, b.r, b.u); });
    std::ostringstream csv;
    csv << "k,r,n,originator,algorithm,case,total_time,time_limit,total_cost,lower_bound,upper_bound,farley_bound,valid,deviations\n";
    bool all_valid = true;
    for (const Row& row : rows) {
        csv << row.line << "\n";
        all_valid = all_valid && row.valid;
    }
    if (o.out == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw IoError("cannot open '" + o.out + "' for writing");
        f << csv.str();
        if (!f.flush()) throw IoError("write to '" + o.out + "' failed");
    }
    return all_valid ? kOk : kInvalid;
}

// ---- oracle

int cmd_oracle(int k, int r, VertexId u_id, std::optional<int> budget, std::int64_t cap) {
    CompleteKTree tree(k, r);
    VertexRef u = originator(tree, u_id);
    OracleResult res = optimal_cost(tree, u, budget, cap);
    ValidationReport rep = validate(res.witness, res.budget);
    std::cout << "optimal " << res.cost << " (budget " << res.budget << " steps)\n";
    std::cout << to_trace(res.witness, rep);
    BracketReport b = check_bracket(tree, u, cap);
    std::cout << "bracket lower " << b.lower.str() << " <= optimal " << b.optimal << ": "
              << (b.lower_ok ? "ok" : "FAIL") << "\n";
    std::cout << "bracket optimal " << b.optimal << " <= upper " << b.upper.str() << ": "
              << (b.upper_ok ? "ok" : "FAIL") << "\n";
    for (const BracketEntry& e : b.algorithms) {
        std::cout << "bracket " << e.algorithm << " cost " << e.cost << " time " << e.time << ": ";
        if (!e.valid) std::cout << "invalid schedule\n";
        else if (!e.compared) std::cout << "skipped (over time budget)\n";
        else std::cout << (e.cost >= b.optimal ? "ok" : "FAIL") << "\n";
    }
    return rep.ok && b.ok() ? kOk : kInvalid;
}

// ---- validate

int cmd_validate(const std::string& path, std::optional<int> budget, const std::string& format) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    Schedule s = from_json(buf.str());
    ValidationReport rep = validate(s, budget ? budget : budget_for(s));
    std::cout << (format == "json" ? to_json(s, rep.ok) : to_trace(s, rep));
    return outcome(s, rep);
}

int exit_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::TooLarge: return kTooLarge;
    case ErrorKind::Parse:
    case ErrorKind::PreconditionViolated: return kInvalid;
    default: return kUsage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Line-broadcasting schedules on complete k-trees"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"trace", "json"};

    RunOpts run;
    auto* run_cmd = app.add_subcommand("run", "Build, validate and print a schedule");
    run_cmd->add_option("--k", run.k, "Children per vertex")->required();
    run_cmd->add_option("--r", run.r, "Height")->required();
    run_cmd->add_option("--originator", run.u, "Originator vertex id (root is 1)");
    run_cmd->add_option("--alg", run.alg, "auto, alg1, alg2, alg3, tolevel:j or fromlevel:j");
    run_cmd->add_option("--format", run.format)->check(CLI::IsMember(formats));

    int bk = 0, br = 0;
    bool leaf_adjust = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form cost and time bounds");
    bounds_cmd->add_option("--k", bk)->required();
    bounds_cmd->add_option("--r", br)->required();
    bounds_cmd->add_flag("--leaf-adjust", leaf_adjust, "Lower bound for a leaf originator (one less)");

    SweepOpts sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a grid of instances and write CSV");
    sweep_cmd->add_option("--k", sweep.k, "Range a..b");
    sweep_cmd->add_option("--r", sweep.r, "Range a..b");
    sweep_cmd->add_option("--originators", sweep.originators, "root, all, or comma-separated ids");
    sweep_cmd->add_option("--alg", sweep.alg);
    sweep_cmd->add_option("--out", sweep.out, "CSV path, - for stdout");
    sweep_cmd->add_flag("--parallel", sweep.parallel);
    sweep_cmd->add_option("--threads", sweep.threads, "Worker count with --parallel (default: all cores)");
    sweep_cmd->add_option("--max-n", sweep.max_n, "Refuse cells with more vertices than this");

    int ok_ = 0, or_ = 0;
    VertexId ou = 1;
    std::optional<int> obudget;
    std::int64_t ocap = kOracleCap;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum cost on a tiny tree");
    oracle_cmd->add_option("--k", ok_)->required();
    oracle_cmd->add_option("--r", or_)->required();
    oracle_cmd->add_option("--originator", ou);
    oracle_cmd->add_option("--budget", obudget, "Steps allowed (default ceil(log2 n))");
    oracle_cmd->add_option("--cap", ocap, "Largest n searched");

    std::string vin, vformat = "trace";
    std::optional<int> vbudget;
    auto* validate_cmd = app.add_subcommand("validate", "Re-validate a schedule JSON file");
    validate_cmd->add_option("--in", vin)->required();
    validate_cmd->add_option("--budget", vbudget);
    validate_cmd->add_option("--format", vformat)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run);
        if (*bounds_cmd) return cmd_bounds(bk, br, leaf_adjust);
        if (*sweep_cmd) return cmd_sweep(sweep);
        if (*oracle_cmd) return cmd_oracle(ok_, or_, ou, obudget, ocap);
        if (*validate_cmd) return cmd_validate(vin, vbudget, vformat);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}
