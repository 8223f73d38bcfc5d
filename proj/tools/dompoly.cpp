// dompoly: exact domination-polynomial computation, coefficient-sequence
// analysis, counting-identity verification, and Monte-Carlo estimation.
//
// Exit codes: 0 success / assertions hold, 1 assertion or identity failure,
// 2 input or parameter error, 3 capacity error.

#include "dompoly/analysis.hpp"
#include "dompoly/checkers.hpp"
#include "dompoly/enumeration.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/graph_io.hpp"
#include "dompoly/numeric.hpp"
#include "dompoly/sampling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace dompoly;

namespace {

constexpr const char* engine_version = "dompoly 0.1.0";

constexpr int exit_ok = 0;
constexpr int exit_assertion = 1;
constexpr int exit_input = 2;
constexpr int exit_capacity = 3;

struct InputOptions {
    std::string g6;
    std::string edgelist_path;
    std::string family;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int add_universal = 0;
    bool construction = false;
};

struct CommonOptions {
    int workers = 0;
    int limit = 32;
    bool no_timings = false;
};

void add_input_flags(CLI::App* cmd, InputOptions& in, const char* family_seed_flag = "--seed")
{
    cmd->add_option("--g6", in.g6, "graph6 record");
    cmd->add_option("--edgelist", in.edgelist_path, "path to an edge-list file");
    cmd->add_option("--family", in.family,
                    "named family: complete | path | cycle | star | petersen | gnp");
    cmd->add_option("--n", in.n, "vertex count for --family");
    cmd->add_option("--p", in.p, "edge probability for --family gnp");
    cmd->add_option(family_seed_flag, in.seed, "seed for --family gnp");
    cmd->add_option("--add-universal", in.add_universal,
                    "join this many universal vertices to the input graph");
    cmd->add_flag("--construction", in.construction,
                  "validate the input as a regular girth-5 base and add one universal vertex");
}

void add_common_flags(CLI::App* cmd, CommonOptions& common)
{
    cmd->add_option("--workers", common.workers, "worker threads (0 = hardware)");
    cmd->add_option("--limit", common.limit, "exact-enumeration vertex limit (max 64)");
    cmd->add_flag("--no-timings", common.no_timings, "omit the timings field");
}

bool has_explicit_input(const InputOptions& in)
{
    return !in.g6.empty() || !in.edgelist_path.empty() || !in.family.empty();
}

Graph load_graph(const InputOptions& in, json& descriptor)
{
    std::optional<Graph> g;
    if (!in.g6.empty()) {
        g = parse_graph6(in.g6);
        descriptor["kind"] = "graph6";
        descriptor["record"] = in.g6;
    } else if (!in.edgelist_path.empty()) {
        std::ifstream f(in.edgelist_path);
        if (!f)
            throw std::invalid_argument("cannot open edge list file " + in.edgelist_path);
        std::stringstream buf;
        buf << f.rdbuf();
        g = parse_edgelist(buf.str());
        descriptor["kind"] = "edgelist";
        descriptor["path"] = in.edgelist_path;
    } else if (!in.family.empty()) {
        FamilySpec spec;
        spec.name = in.family;
        spec.n = in.n;
        spec.p = in.p;
        spec.seed = in.seed;
        g = generate(spec);
        descriptor["kind"] = "family";
        descriptor["family"] = in.family;
        if (in.n > 0)
            descriptor["n"] = std::to_string(in.n);
        if (in.family == "gnp") {
            descriptor["p"] = in.p;
            descriptor["seed"] = std::to_string(in.seed);
        }
    } else {
        throw std::invalid_argument("no input: pass --g6, --edgelist or --family");
    }
    if (in.construction) {
        g = construction_graph(*g);
        descriptor["construction"] = true;
    }
    if (in.add_universal > 0) {
        g = join_universal(*g, in.add_universal);
        descriptor["added_universal"] = std::to_string(in.add_universal);
    }
    return *std::move(g);
}

std::string rational_string(const BigRational& q)
{
    std::ostringstream out;
    out << numerator(q);
    if (denominator(q) != 1)
        out << "/" << denominator(q);
    return out.str();
}

json coeffs_json(const CoefficientVector& cv)
{
    json arr = json::array();
    for (const auto& c : cv.coeffs)
        arr.push_back(c.str());
    return arr;
}

json analysis_json(const CoefficientVector& cv)
{
    const AnalysisReport report = analyze(cv);
    const RatioSequence ratios = ratio_sequence(cv);
    json out;
    out["unimodal"] = report.unimodal;
    out["mode"] = report.mode ? json(std::to_string(*report.mode)) : json(nullptr);
    if (report.first_violation) {
        const auto& w = *report.first_violation;
        out["first_violation"] = {{"index", std::to_string(w.index)},
                                  {"triple", {w.before.str(), w.at.str(), w.after.str()}}};
    } else {
        out["first_violation"] = nullptr;
    }
    json window = json::array();
    for (int l : report.concavity_window)
        window.push_back(std::to_string(l));
    out["concavity_window"] = window;
    out["ratio_monotone"] = report.ratio_monotone;
    json rs = json::array();
    for (const auto& r : ratios.ratios)
        rs.push_back(rational_string(r));
    out["ratios"] = rs;
    return out;
}

json vertex_list_json(std::uint64_t mask)
{
    json arr = json::array();
    while (mask) {
        int v = std::countr_zero(mask);
        arr.push_back(std::to_string(v));
        mask &= mask - 1;
    }
    return arr;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(json& report, const CommonOptions& common, const Stopwatch& watch)
{
    if (!common.no_timings)
        report["timings"] = {{"wall_ms", watch.elapsed_ms()}};
    std::cout << report.dump() << "\n";
}

// ---------------------------------------------------------------- compute

int run_compute(const InputOptions& in, const CommonOptions& common, const std::string& format)
{
    Stopwatch watch;
    EnumOptions options{common.limit, common.workers};

    auto compute_one = [&](const Graph& g, json descriptor) -> json {
        const CoefficientVector cv = domination_polynomial(g, options);
        json report;
        report["command"] = "compute";
        report["engine"] = engine_version;
        report["input"] = std::move(descriptor);
        // workers deliberately not echoed: output is independent of parallelism
        report["parameters"] = {{"limit", std::to_string(common.limit)}};
        report["results"] = {{"n", std::to_string(g.order())},
                             {"edges", std::to_string(g.edge_count())},
                             {"universal_vertices", std::to_string(universal_vertex_count(g))},
                             {"coefficients", coeffs_json(cv)},
                             {"analysis", analysis_json(cv)}};
        return report;
    };

    auto render = [&](const Graph& g, json descriptor) {
        if (format == "csv") {
            const CoefficientVector cv = domination_polynomial(g, options);
            std::cout << "k,d_k\n";
            for (std::size_t k = 0; k < cv.coeffs.size(); ++k)
                std::cout << k << "," << cv.coeffs[k].str() << "\n";
            return;
        }
        json report = compute_one(g, std::move(descriptor));
        emit(report, common, watch);
    };

    if (has_explicit_input(in)) {
        json descriptor;
        Graph g = load_graph(in, descriptor);
        render(g, std::move(descriptor));
        return exit_ok;
    }

    // stdin: one graph6 record per line
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        json descriptor = {{"kind", "graph6"}, {"record", line}, {"line", std::to_string(lineno)}};
        render(parse_graph6(line), std::move(descriptor));
    }
    return exit_ok;
}

// ----------------------------------------------------------------- verify

int run_verify(const InputOptions& in, const CommonOptions& common, const std::string& lemma)
{
    Stopwatch watch;
    EnumOptions options{common.limit, common.workers};
    json descriptor;
    const Graph g = load_graph(in, descriptor);
    const int n = g.order();

    json report;
    report["command"] = "verify";
    report["engine"] = engine_version;
    report["input"] = descriptor;
    report["check"] = lemma;
    json items = json::array();
    bool all_ok = true;

    if (lemma == "2.2") {
        for (int k = 0; k < n; ++k) {
            const IdentityReport r = verify_increment_identity(g, k, options);
            items.push_back({{"k", std::to_string(k)},
                             {"lhs", r.lhs.str()},
                             {"rhs", r.rhs.str()},
                             {"equal", r.equal}});
            all_ok = all_ok && r.equal;
        }
    } else if (lemma == "e-rec") {
        for (int k = 0; k + 1 <= n; ++k) {
            const RecurrenceReport r = verify_residual_recurrence(g, k, options);
            for (const auto& row : r.rows) {
                items.push_back({{"k", std::to_string(k)},
                                 {"T", vertex_list_json(row.t_mask)},
                                 {"lhs", row.lhs.str()},
                                 {"rhs", row.rhs.str()},
                                 {"equal", row.equal}});
                all_ok = all_ok && row.equal;
            }
        }
    } else if (lemma == "dprime") {
        if (n > 16)
            throw CapacityError("dprime verification enumerates all nonempty S; limit is 16 vertices");
        const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        for (std::uint64_t s = 1; s <= full; ++s) {
            const IdentityReport r =
                verify_pair_split_identity(g, VertexSet::from_mask(n, s), options);
            items.push_back({{"S", vertex_list_json(s)},
                             {"lhs", r.lhs.str()},
                             {"rhs", r.rhs.str()},
                             {"equal", r.equal}});
            all_ok = all_ok && r.equal;
        }
    } else if (lemma == "2.4") {
        bool any = false;
        for (int k = (n + 1) / 2; k + 2 <= n; ++k) {
            const long long t = 4LL * k - 2LL * n;
            if (t * t > n)
                break;
            any = true;
            const InequalityReport r = verify_concavity_bound(g, k, options);
            items.push_back({{"k", std::to_string(k)},
                             {"lhs", rational_string(r.lhs)},
                             {"rhs", rational_string(r.rhs)},
                             {"holds", r.holds}});
            all_ok = all_ok && r.holds;
        }
        if (!any)
            report["note"] = "no valid k in range";
    } else {
        throw std::invalid_argument("unknown check \"" + lemma +
                                    "\"; expected 2.2 | e-rec | dprime | 2.4");
    }

    report["items"] = items;
    report["all_hold"] = all_ok;
    emit(report, common, watch);
    return all_ok ? exit_ok : exit_assertion;
}

// ----------------------------------------------------------- check-theorem

json verdict_json(const ConditionVerdict& v)
{
    return {{"holds", v.holds},
            {"lhs", rational_string(v.lhs)},
            {"rhs", rational_string(v.rhs)},
            {"normalization", v.normalization},
            {"n", std::to_string(v.n)},
            {"k", std::to_string(v.k)},
            {"h", std::to_string(v.h)},
            {"alpha", std::to_string(v.alpha)}};
}

int run_check_theorem(const CommonOptions& common, const std::string& theorem, long long n,
                      long long h, long long k, long long alpha, const std::string& dk_lower_str,
                      bool dk_universal, bool auto_params)
{
    Stopwatch watch;
    json report;
    report["command"] = "check-theorem";
    report["engine"] = engine_version;
    report["check"] = theorem;

    if (theorem == "construction") {
        const ConstructionReport r = check_construction_chain(n);
        json per_k = json::array();
        for (const auto& pk : r.per_k) {
            json links = json::array();
            for (const auto& link : pk.links)
                links.push_back({{"name", link.name},
                                 {"lhs", rational_string(link.lhs)},
                                 {"rhs", rational_string(link.rhs)},
                                 {"comparison", link.strict ? ">" : ">="},
                                 {"holds", link.holds}});
            per_k.push_back(
                {{"k", std::to_string(pk.k)}, {"links", links}, {"all_hold", pk.all_hold}});
        }
        report["results"] = {{"n", std::to_string(r.n)},
                             {"base_degree", std::to_string(r.degree)},
                             {"applicable", r.applicable},
                             {"in_theorem_range", r.in_theorem_range},
                             {"per_k", per_k},
                             {"all_hold", r.all_hold}};
        if (r.applicable && r.per_k.empty())
            report["results"]["note"] = "no integer k in range";
        emit(report, common, watch);
        return exit_ok;
    }

    if (theorem != "1.4" && theorem != "1.5")
        throw std::invalid_argument("unknown theorem \"" + theorem +
                                    "\"; expected 1.4 | 1.5 | construction");

    if (auto_params) {
        if (theorem == "1.4") {
            k = ceil_half_plus_log2(n) + 1;
            alpha = 2 * floor_log2(static_cast<unsigned long long>(n));
        } else {
            k = (n + 1) / 2;
            alpha = 3 * floor_log2(static_cast<unsigned long long>(n));
        }
        dk_universal = true;
    }
    if (k <= 0)
        throw std::invalid_argument("missing --k (or pass --auto-params)");

    if (!dk_universal && dk_lower_str.empty())
        throw std::invalid_argument("pass --dk-lower <integer> or --dk-lower-universal");
    DkLowerBound bound = dk_universal ? DkLowerBound::universal_vertex()
                                      : DkLowerBound::exact(BigInt(dk_lower_str));

    const ConditionVerdict verdict = theorem == "1.4"
                                         ? check_mode_condition(n, h, k, alpha, bound)
                                         : check_concavity_condition(n, h, k, alpha, bound);
    report["results"] = verdict_json(verdict);
    report["results"]["dk_lower"] = dk_universal ? json("C(n-1,k-1)") : json(dk_lower_str);
    emit(report, common, watch);
    return exit_ok;
}

// ------------------------------------------------------------------ batch

struct BatchFlags {
    bool assert_unimodal = false;
    bool assert_mode_window = false;
    bool filter_universal = false;
    bool keep_going = false;
};

int run_batch(const CommonOptions& common, const BatchFlags& flags)
{
    Stopwatch watch;
    EnumOptions options{common.limit, 1};

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }

    struct Row {
        json item;
        bool parse_error = false;
        bool assertion_failed = false;
        bool skipped = false;
    };
    std::vector<Row> rows(lines.size());

    auto process = [&](std::size_t i) {
        Row& row = rows[i];
        const std::string& record = lines[i];
        row.item["line"] = std::to_string(i + 1);
        row.item["record"] = record;
        if (record.empty()) {
            row.skipped = true;
            row.item["skipped"] = "blank line";
            return;
        }
        try {
            const Graph g = parse_graph6(record);
            const bool universal = universal_vertex_count(g) > 0;
            if (flags.filter_universal && !universal) {
                row.skipped = true;
                row.item["skipped"] = "no universal vertex";
                return;
            }
            const CoefficientVector cv = domination_polynomial(g, options);
            const AnalysisReport report = analyze(cv);
            row.item["n"] = std::to_string(g.order());
            row.item["unimodal"] = report.unimodal;
            row.item["mode"] = report.mode ? json(std::to_string(*report.mode)) : json(nullptr);
            if (flags.assert_unimodal && !report.unimodal)
                row.assertion_failed = true;
            if (flags.assert_mode_window) {
                const int n = g.order();
                const bool in_window =
                    report.mode && (*report.mode == n / 2 || *report.mode == (n + 1) / 2);
                if (!in_window)
                    row.assertion_failed = true;
            }
            if (row.assertion_failed)
                row.item["assertion_failed"] = true;
        } catch (const ParseError& e) {
            row.parse_error = true;
            row.item["error"] = e.what();
        }
    };

    const int workers = common.workers > 0
                            ? common.workers
                            : std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || lines.size() < 2) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            process(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= lines.size())
                        break;
                    process(i);
                }
            });
        for (auto& t : pool)
            t.join();
    }

    std::size_t parsed = 0, parse_errors = 0, failures = 0, skipped = 0;
    json items = json::array();
    for (auto& row : rows) {
        if (row.parse_error) {
            ++parse_errors;
            if (!flags.keep_going) {
                std::cerr << "parse error: " << row.item["error"].get<std::string>() << "\n";
                return exit_input;
            }
        } else if (row.skipped) {
            ++skipped;
        } else {
            ++parsed;
            if (row.assertion_failed) {
                ++failures;
                std::cerr << "assertion failed for record: "
                          << row.item["record"].get<std::string>() << "\n";
            }
        }
        items.push_back(std::move(row.item)); // input order
    }

    json report;
    report["command"] = "batch";
    report["engine"] = engine_version;
    report["items"] = items;
    report["summary"] = {{"records", std::to_string(lines.size())},
                         {"processed", std::to_string(parsed)},
                         {"skipped", std::to_string(skipped)},
                         {"parse_errors", std::to_string(parse_errors)},
                         {"assertion_failures", std::to_string(failures)}};
    emit(report, common, watch);

    if (failures > 0)
        return exit_assertion;
    if (parse_errors > 0)
        return exit_input;
    return exit_ok;
}

// ----------------------------------------------------------------- sample

int run_sample(const InputOptions& in, const CommonOptions& common, int k, std::uint64_t samples,
               std::uint64_t seed, double level, bool compare_next)
{
    Stopwatch watch;
    json descriptor;
    const Graph g = load_graph(in, descriptor);

    json report;
    report["command"] = "sample";
    report["engine"] = engine_version;
    report["input"] = descriptor;

    if (compare_next) {
        const CompareVerdict verdict =
            compare_coefficients(g, k, samples, seed, level, common.workers);
        report["results"] = {{"k", std::to_string(k)},
                             {"budget", std::to_string(samples)},
                             {"seed", std::to_string(seed)},
                             {"level", level},
                             {"verdict", to_string(verdict)}};
    } else {
        const Estimate est = estimate_rk(g, k, samples, seed, level, common.workers);
        report["results"] = {{"k", std::to_string(est.k)},
                             {"samples", std::to_string(est.samples)},
                             {"hits", std::to_string(est.hits)},
                             {"point", rational_string(est.point)},
                             {"ci_low", est.ci_low},
                             {"ci_high", est.ci_high},
                             {"seed", std::to_string(est.seed)},
                             {"level", est.level}};
    }
    emit(report, common, watch);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact domination polynomial toolkit"};
    app.require_subcommand(1);
    // --h is a real parameter of check-theorem, so help lives on --help only
    app.set_help_flag("--help", "print help");

    InputOptions in;
    CommonOptions common;

    auto* compute = app.add_subcommand("compute", "coefficients d_0..d_n plus sequence analysis");
    std::string format = "json";
    bool csv = false;
    add_input_flags(compute, in);
    add_common_flags(compute, common);
    compute->add_option("--format", format, "json | csv");
    compute->add_flag("--csv", csv, "shorthand for --format csv");

    auto* verify = app.add_subcommand("verify", "exact counting-identity checks");
    std::string lemma;
    add_input_flags(verify, in);
    add_common_flags(verify, common);
    verify->add_option("--lemma", lemma, "2.2 | e-rec | dprime | 2.4")->required();

    auto* check = app.add_subcommand("check-theorem", "condition-inequality evaluation");
    check->set_help_flag("--help", "print help");
    std::string theorem;
    long long th_n = 0, th_h = 0, th_k = 0, th_alpha = 0;
    std::string dk_lower_str;
    bool dk_universal = false, auto_params = false;
    add_common_flags(check, common);
    check->add_option("--theorem", theorem, "1.4 | 1.5 | construction")->required();
    check->add_option("--n", th_n, "vertex count")->required();
    check->add_option("--h", th_h, "universal vertex count");
    check->add_option("--k", th_k, "subset size");
    check->add_option("--alpha", th_alpha, "degree threshold parameter");
    check->add_option("--dk-lower", dk_lower_str, "certified lower bound on d_k (decimal)");
    check->add_flag("--dk-lower-universal", dk_universal,
                    "use the universal-vertex bound C(n-1, k-1)");
    check->add_flag("--auto-params", auto_params, "derive k, alpha and the d_k bound from n");

    auto* batch = app.add_subcommand("batch", "process newline-delimited graph6 from stdin");
    BatchFlags batch_flags;
    add_common_flags(batch, common);
    batch->add_flag("--assert-unimodal", batch_flags.assert_unimodal,
                    "fail on any non-unimodal polynomial");
    batch->add_flag("--assert-mode-window", batch_flags.assert_mode_window,
                    "fail when the mode is outside {floor(n/2), floor((n+1)/2)}");
    batch->add_flag("--filter-universal", batch_flags.filter_universal,
                    "only assert on graphs with a universal vertex");
    batch->add_flag("--keep-going", batch_flags.keep_going,
                    "report parse errors per line and continue");

    auto* sample = app.add_subcommand("sample", "Monte-Carlo estimate of r_k = d_k / C(n,k)");
    int sm_k = 0;
    std::uint64_t sm_samples = 10000, sm_seed = 0;
    double sm_level = 0.95;
    bool compare_next = false;
    add_input_flags(sample, in, "--family-seed"); // --seed is the sampling seed here
    add_common_flags(sample, common);
    sample->add_option("--k", sm_k, "subset size")->required();
    sample->add_option("--samples", sm_samples, "sample count (budget for --compare-next)");
    sample->add_option("--seed", sm_seed, "sampling seed");
    sample->add_option("--level", sm_level, "confidence level, e.g. 0.95");
    sample->add_flag("--compare-next", compare_next,
                     "compare d_k against d_{k+1} via disjoint confidence intervals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (compute->parsed())
            return run_compute(in, common, csv ? "csv" : format);
        if (verify->parsed())
            return run_verify(in, common, lemma);
        if (check->parsed())
            return run_check_theorem(common, theorem, th_n, th_h, th_k, th_alpha, dk_lower_str,
                                     dk_universal, auto_params);
        if (batch->parsed())
            return run_batch(common, batch_flags);
        if (sample->parsed())
            return run_sample(in, common, sm_k, sm_samples, sm_seed, sm_level, compare_next);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return exit_capacity;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}
