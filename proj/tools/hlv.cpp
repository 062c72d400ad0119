// Command-line front end: expansions, verification suites, Hall-polynomial
// tables and stability scans.

#include "hlv/bases.hpp"
#include "hlv/errors.hpp"
#include "hlv/json_io.hpp"
#include "hlv/parallel.hpp"
#include "hlv/structure.hpp"
#include "hlv/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using namespace hlv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;
constexpr int kExitIntegrity = 4;

constexpr int kDegreeCeiling = 8;
constexpr int kTableCeiling = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "text";
    std::uint64_t seed = 1;
    int jobs = 1;
    bool force = false;
    std::optional<std::string> eval_t;

    bool json() const { return format == "json"; }
    std::optional<BigRational> t0() const
    {
        if (!eval_t)
            return std::nullopt;
        try {
            return parse_rational(*eval_t);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--eval-t: ") + e.what());
        }
    }
};

Json parse_json_arg(const std::string& text, const char* what)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error&) {
        throw UsageError(std::string(what) + " must be a JSON integer array, got '" + text + "'");
    }
}

Composition composition_arg(const std::string& text, const char* what)
{
    try {
        return composition_from_json(parse_json_arg(text, what));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

Partition partition_arg(const std::string& text, const char* what)
{
    try {
        return partition_from_json(parse_json_arg(text, what));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

void check_ceiling(int value, int ceiling, const Config& cfg, const char* what)
{
    if (value > ceiling && !cfg.force)
        throw UsageError(std::string(what) + " " + std::to_string(value) + " exceeds the ceiling " +
                         std::to_string(ceiling) + "; pass --force to run it anyway");
}

std::string value_text(const TRational& r)
{
    return r.to_string();
}

TRational maybe_eval(const TRational& r, const std::optional<BigRational>& t0)
{
    return t0 ? TRational(r.eval_at(*t0)) : r;
}

// ---- expand ----------------------------------------------------------------

struct ExpandArgs {
    std::string family;
    std::string index;
    std::optional<std::string> mu;
    std::string target = "p";
    std::optional<int> vars;
};

SymFunc build_family(const ExpandArgs& args, const Config& cfg)
{
    static const std::map<std::string, Family> generators = {
        {"h", Family::H}, {"e", Family::E}, {"q", Family::Q}, {"b", Family::B}};
    const std::string& f = args.family;
    static const char* known[] = {"h", "e", "p", "m", "q", "b", "schur", "schurQ", "Q", "B", "skewQ", "skewB"};
    if (std::find(std::begin(known), std::end(known), f) == std::end(known))
        throw UsageError("unknown family '" + f + "' (expected h, e, p, m, q, b, schur, schurQ, Q, B, skewQ, skewB)");

    const Composition index = composition_arg(args.index, "index");
    check_ceiling(static_cast<int>(index.positive_weight()), kDegreeCeiling, cfg, "degree");

    if (auto it = generators.find(f); it != generators.end())
        return generator_product(it->second, index);
    if (f == "schur")
        return schur(index);
    if (f == "schurQ")
        return schurQ(index);
    if (f == "Q")
        return hl_Q(index);
    if (f == "B")
        return hl_B(index);

    Partition lambda;
    try {
        lambda = to_partition(index);
    } catch (const std::invalid_argument&) {
        throw UsageError("family '" + f + "' needs a partition index");
    }
    if (f == "p")
        return SymFunc::p(lambda);
    if (f == "m")
        return m_in_p(lambda);
    if (!args.mu)
        throw UsageError("family '" + f + "' needs --mu");
    const Partition mu = partition_arg(*args.mu, "--mu");
    return f == "skewQ" ? skew_Q(lambda, mu) : skew_B(lambda, mu);
}

void print_coefficient_map(const std::map<Partition, TRational>& coeffs, const char* basis, const Config& cfg)
{
    if (cfg.json()) {
        std::cout << Json{{"basis", basis}, {"terms", to_json(coeffs)}}.dump() << "\n";
        return;
    }
    if (coeffs.empty()) {
        std::cout << "0\n";
        return;
    }
    std::string out;
    for (const auto& [index, coeff] : coeffs) {
        if (!out.empty())
            out += " + ";
        std::string c = coeff.to_string();
        if (c.find_first_of("+-/", 1) != std::string::npos)
            c = "(" + c + ")";
        out += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + basis + index.to_string();
    }
    std::cout << out << "\n";
}

int cmd_expand(const ExpandArgs& args, const Config& cfg)
{
    static const char* targets[] = {"p", "monomial", "q-products", "vars"};
    if (std::find(std::begin(targets), std::end(targets), args.target) == std::end(targets))
        throw UsageError("unknown target '" + args.target + "' (expected p, monomial, q-products, vars)");
    if (args.target == "vars" && (!args.vars || *args.vars < 1))
        throw UsageError("--target vars needs --vars k with k >= 1");

    SymFunc f = build_family(args, cfg);
    if (const auto t0 = cfg.t0())
        f = f.eval_t(*t0);

    if (args.target == "p") {
        std::cout << (cfg.json() ? to_json(f).dump() : f.to_string()) << "\n";
        return kExitOk;
    }
    if (args.target == "vars") {
        const MultiPoly poly = specialize_vars(f, *args.vars);
        std::cout << (cfg.json() ? to_json(poly).dump() : poly.to_string()) << "\n";
        return kExitOk;
    }
    std::map<Partition, TRational> coeffs;
    for (int n = std::max(f.low_degree(), 0); n <= f.degree(); ++n) {
        if (args.target == "monomial") {
            coeffs.merge(monomial_expansion(f, n));
            continue;
        }
        // Coefficient of q_lambda is (F, m_lambda), since (q_lambda, m_mu) = delta.
        for (const Partition& lambda : enumerate_partitions(n)) {
            TRational c = inner(f, m_in_p(lambda));
            if (!c.is_zero())
                coeffs.emplace(lambda, std::move(c));
        }
    }
    print_coefficient_map(coeffs, args.target == "monomial" ? "m" : "q", cfg);
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& suite, std::optional<int> max_weight, bool list, const Config& cfg)
{
    if (list) {
        for (const auto& info : list_suites()) {
            if (cfg.json())
                std::cout << Json{{"suite", info.name}, {"default_max_weight", info.default_weight},
                                  {"description", info.description}}.dump()
                          << "\n";
            else
                std::cout << std::left << std::setw(16) << info.name << " (default --max-weight "
                          << info.default_weight << ")  " << info.description << "\n";
        }
        return kExitOk;
    }
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& info : list_suites())
            names.push_back(info.name);
    } else if (find_suite(suite)) {
        names.push_back(suite);
    } else {
        throw UsageError("unknown suite '" + suite + "' (see verify --list)");
    }
    if (max_weight) {
        if (*max_weight < 0)
            throw UsageError("--max-weight must be >= 0");
        check_ceiling(*max_weight, kDegreeCeiling, cfg, "--max-weight");
    }

    int status = kExitOk;
    for (const std::string& name : names) {
        SuiteOptions opts;
        opts.max_weight = max_weight.value_or(find_suite(name)->default_weight);
        opts.seed = cfg.seed;
        opts.jobs = cfg.jobs;
        const SuiteResult result = run_suite(name, opts);
        if (cfg.json()) {
            std::cout << result.to_json().dump() << "\n";
        } else {
            std::cout << (result.passed ? "PASS " : "FAIL ") << name << " (max weight " << result.max_weight << ", "
                      << result.checks << " checks)\n";
            for (const auto& w : result.warnings)
                std::cout << "  warning: " << w << "\n";
            if (result.failure)
                std::cout << result.failure->dump(2) << "\n";
        }
        if (result.integrity_error)
            status = kExitIntegrity;
        else if (!result.passed && status == kExitOk)
            status = kExitFailure;
    }
    return status;
}

// ---- hall-table ------------------------------------------------------------

struct HallRow {
    Partition lambda, mu, nu;
    TRational g, f;
};

int cmd_hall_table(int max_weight, const Config& cfg)
{
    if (max_weight < 0)
        throw UsageError("--max-weight must be >= 0");
    check_ceiling(max_weight, kTableCeiling, cfg, "--max-weight");
    const auto t0 = cfg.t0();

    std::vector<HallRow> rows;
    for (int n = 0; n <= max_weight; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int a = 0; a <= n; ++a)
                for (const Partition& mu : enumerate_partitions(a))
                    for (const Partition& nu : enumerate_partitions(n - a))
                        rows.push_back({lambda, mu, nu, {}, {}});
    parallel_for(rows.size(), cfg.jobs, [&rows](std::size_t i) {
        HallRow& r = rows[i];
        r.g = TRational(hall_g(r.lambda, r.mu, r.nu));
        r.f = f_coeff(r.lambda, r.mu, r.nu);
    });

    if (cfg.json()) {
        Json out = Json::array();
        for (const HallRow& r : rows) {
            Json row{{"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)}, {"nu", to_json(r.nu)}};
            if (t0) {
                row["g"] = to_fraction_string(r.g.eval_at(*t0));
                row["f"] = to_fraction_string(r.f.eval_at(*t0));
            } else {
                row["g"] = to_json(r.g.num());
                row["f"] = to_json(r.f.num());
            }
            out.push_back(std::move(row));
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::vector<std::array<std::string, 5>> cells;
    cells.push_back({"lambda", "mu", "nu", "g(t)", "f(t)"});
    if (t0)
        cells.back() = {"lambda", "mu", "nu", "g(" + to_short_string(*t0) + ")", "f(" + to_short_string(*t0) + ")"};
    for (const HallRow& r : rows)
        cells.push_back({r.lambda.to_string(), r.mu.to_string(), r.nu.to_string(), value_text(maybe_eval(r.g, t0)),
                         value_text(maybe_eval(r.f, t0))});
    std::array<std::size_t, 5> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
    return kExitOk;
}

// ---- stability -------------------------------------------------------------

int cmd_stability(const std::string& l, const std::string& m, const std::string& n, int m_max, bool hall, bool b_side,
                  const Config& cfg)
{
    if (hall && b_side)
        throw UsageError("--hall and --b-side are mutually exclusive");
    const Partition lambda = partition_arg(l, "lambda");
    const Partition mu = partition_arg(m, "mu");
    const Partition nu = partition_arg(n, "nu");
    const ScanKind kind = hall ? ScanKind::Hall : b_side ? ScanKind::SkewB : ScanKind::Skew;
    const int weight = std::max(m_max + lambda.weight(), mu.weight() + m_max + theorem_bound(lambda, mu, nu));
    check_ceiling(weight, 2 * kDegreeCeiling, cfg, "largest sampled weight");

    StabilityReport report;
    try {
        report = stability_scan(lambda, mu, nu, m_max, kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bool ok = report.stabilized_within_bound();
    if (cfg.json()) {
        std::cout << to_json(report).dump() << "\n";
    } else {
        std::cout << "lambda " << lambda.to_string() << "  mu " << mu.to_string() << "  nu " << nu.to_string()
                  << "  offset " << report.offset << "  bound " << report.theorem_bound << "\n";
        for (const auto& [mm, value] : report.samples)
            std::cout << "  m = " << mm << ": " << value.to_string() << "\n";
        if (report.onset)
            std::cout << "onset " << *report.onset << " (limit " << report.onset_limit() << "), stable value "
                      << report.stable_value->to_string() << "\n";
        else
            std::cout << "no onset found within m_max = " << m_max << "\n";
    }
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hall-Littlewood functions, Jing vertex operators and Hall polynomials in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized suites");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--force", cfg.force, "Allow runs above the degree and table ceilings");
    app.add_option("--eval-t", cfg.eval_t, "Evaluate results at t = p/q");

    ExpandArgs expand;
    auto* expand_cmd = app.add_subcommand("expand", "Expand a symmetric function");
    expand_cmd->add_option("family", expand.family, "h, e, p, m, q, b, schur, schurQ, Q, B, skewQ, skewB")->required();
    expand_cmd->add_option("index", expand.index, "Index as a JSON integer array, e.g. [2,1]")->required();
    expand_cmd->add_option("--mu", expand.mu, "Inner partition for skewQ / skewB");
    expand_cmd->add_option("--target", expand.target, "p, monomial, q-products or vars");
    expand_cmd->add_option("--vars", expand.vars, "Number of variables for --target vars");

    std::string suite;
    std::optional<int> verify_weight;
    bool list = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "Suite name, or all");
    verify_cmd->add_option("--max-weight", verify_weight, "Weight bound (default: the suite's own)");
    verify_cmd->add_flag("--list", list, "List the registered suites");

    int table_weight = 4;
    auto* table_cmd = app.add_subcommand("hall-table", "Tabulate Hall polynomials g^lambda_{mu,nu}(t)");
    table_cmd->add_option("--max-weight", table_weight, "Largest |lambda|");

    std::string lam, mu, nu;
    int m_max = 0;
    bool hall = false;
    bool b_side = false;
    auto* stab_cmd = app.add_subcommand("stability", "Scan a stability sequence");
    stab_cmd->add_option("lambda", lam, "JSON partition")->required();
    stab_cmd->add_option("mu", mu, "JSON partition")->required();
    stab_cmd->add_option("nu", nu, "JSON partition")->required();
    stab_cmd->add_option("--m-max", m_max, "Last sampled m")->required();
    stab_cmd->add_flag("--hall", hall, "Scan Hall polynomials instead of inner products");
    stab_cmd->add_flag("--b-side", b_side, "Scan (B_(m,lambda), B_mu B_(n,nu))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*expand_cmd)
            return cmd_expand(expand, cfg);
        if (*verify_cmd) {
            if (suite.empty() && !list)
                throw UsageError("verify needs a suite name (see verify --list)");
            return cmd_verify(suite, verify_weight, list, cfg);
        }
        if (*table_cmd)
            return cmd_hall_table(table_weight, cfg);
        if (*stab_cmd)
            return cmd_stability(lam, mu, nu, m_max, hall, b_side, cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
