// perfrank: audit two-class scores for ranking, search Kendall tau extremes,
// reproduce the 27-score table and rank entities.
//
// Exit codes: 0 success, 1 --check mismatch, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "perfrank/expression.hpp"
#include "perfrank/report.hpp"
#include "perfrank/scores.hpp"
#include "perfrank/two_class.hpp"

using namespace perfrank;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScoreChoice {
    std::string name;
    std::string expr;

    // Catalog entry when a built-in name was given.
    const CatalogEntry* entry() const { return name.empty() ? nullptr : &catalog_entry(name); }

    Score resolve() const {
        if (name.empty() == expr.empty()) throw UsageError("give exactly one of --score and --expr");
        if (!name.empty()) {
            try {
                return catalog_entry(name).score;
            } catch (const std::invalid_argument&) {
                throw UsageError("unknown score '" + name + "'");
            }
        }
        try {
            return ScoreExpression::parse(expr).to_score();
        } catch (const ParseError& e) {
            throw UsageError(e.annotated(expr));
        }
    }

    std::string display() const { return name.empty() ? expr : name; }
};

struct ConstraintChoice {
    std::optional<double> prior;
    bool unconstrained = false;

    ConstraintSet resolve() const {
        if (!prior) return ConstraintSet::unconstrained();
        if (!(*prior > 0.0 && *prior < 1.0)) throw UsageError("--prior must lie strictly between 0 and 1");
        return ConstraintSet::fixed_positive_prior(*prior);
    }
};

void add_score_options(CLI::App* cmd, ScoreChoice& s) {
    auto* n = cmd->add_option("--score", s.name, "Catalog score id (e.g. f1, mcc)");
    auto* e = cmd->add_option("--expr", s.expr, "Score expression over ptn, pfp, pfn, ptp");
    n->excludes(e);
}

void add_constraint_options(CLI::App* cmd, ConstraintChoice& c) {
    auto* p = cmd->add_option("--prior", c.prior, "Fix the positive prior P({fn, tp})");
    auto* u = cmd->add_flag("--unconstrained", c.unconstrained, "All performances (default)");
    p->excludes(u);
}

void format_choice(CLI::App* cmd, std::string& format, const std::string& def) {
    format = def;
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
}

int run_table1(const std::string& format, int resolution, const std::vector<std::string>& only,
               std::uint64_t seed, bool check) {
    TableOptions opt;
    opt.resolution = resolution;
    opt.only = only;
    opt.audit.seed = seed;
    for (const auto& id : only) {
        try {
            catalog_entry(id);
        } catch (const std::invalid_argument&) {
            throw UsageError("unknown score '" + id + "'");
        }
    }
    const auto rows = compute_table(opt);
    if (format == "json") {
        std::cout << dump_json(table_to_json(rows, opt));
    } else if (format == "csv") {
        std::cout << render_csv(rows);
    } else {
        std::cout << render_markdown(rows);
    }
    if (!check) return 0;
    const auto mismatches = check_against_golden(rows);
    for (const auto& m : mismatches) {
        std::cerr << "mismatch: " << m.id << " [" << m.constraint << "] test " << m.test << ": expected "
                  << (m.expected ? "V" : "X") << ", got " << (m.actual ? "V" : "X") << '\n';
    }
    return mismatches.empty() ? 0 : kExitMismatch;
}

int run_audit(const ScoreChoice& sc, const ConstraintChoice& cc, int resolution, std::uint64_t seed,
              const std::string& format) {
    const Score score = sc.resolve();
    const ConstraintSet c = cc.resolve();
    AuditOptions opt;
    opt.seed = seed;
    opt.resolution = resolution;
    const TestVerdict v = audit_score(score, c, opt);
    const auto j = verdict_to_json(sc.display(), c, v);
    if (format == "json") {
        std::cout << dump_json(j);
    } else if (format == "csv") {
        std::cout << "score,constraint,test1,test2,test3\n"
                  << '"' << sc.display() << "\"," << c.label() << ',' << (v.test1 ? 'V' : 'X') << ','
                  << (v.test2 ? 'V' : 'X') << ',' << (v.test3 ? 'V' : 'X') << '\n';
    } else {
        std::cout << "score: " << sc.display() << "\nconstraint: " << c.label() << "\ntests: "
                  << (v.test1 ? 'V' : 'X') << ' ' << (v.test2 ? 'V' : 'X') << ' ' << (v.test3 ? 'V' : 'X')
                  << '\n';
        if (j.contains("counterexample")) std::cout << "counterexample:\n" << j["counterexample"].dump(2) << '\n';
    }
    return 0;
}

int run_tau(const ScoreChoice& sc, const ConstraintChoice& cc, int resolution, const std::string& objective,
            const std::string& format) {
    const Score score = sc.resolve();
    const ConstraintSet c = cc.resolve();
    const PerformanceGrid grid = make_grid(c, resolution > 0 ? resolution : default_resolution(c));
    const Objective dir = objective == "min" ? Objective::Min : Objective::Max;
    const CatalogEntry* entry = sc.entry();
    const TauResult r =
        entry ? optimize_tau(*entry, grid, dir) : optimize_tau(score, grid, dir, SearchOptions{});
    if (format == "json") {
        std::cout << dump_json(tau_to_json(sc.display(), c, r));
    } else {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", r.importance[0], r.importance[1],
                      r.importance[2], r.importance[3]);
        if (format == "csv") {
            std::cout << "score,constraint,objective,tau,analytic,a,b,i_tn,i_fp,i_fn,i_tp\n"
                      << '"' << sc.display() << "\"," << c.label() << ',' << to_string(dir) << ','
                      << (r.tau ? std::to_string(*r.tau) : "") << ',' << (r.analytic ? 1 : 0) << ',' << r.a << ','
                      << r.b << ',' << buf << '\n';
        } else {
            std::cout << "tau_" << to_string(dir) << " = " << format_tau(r) << "  (a = " << r.a << ", b = " << r.b
                      << ")\nimportance (tn, fp, fn, tp) = (" << buf << ")\n";
        }
    }
    return 0;
}

int run_rank(const std::string& path, const ScoreChoice& sc, const std::string& format) {
    const Score score = sc.resolve();
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw UsageError("cannot open '" + path + "'");
        in = &file;
    }
    const EntityInput input = parse_entity_csv(*in);
    if (!input.errors.empty()) {
        for (const auto& e : input.errors) std::cerr << path << ": " << e << '\n';
        return kExitUsage;
    }
    if (input.entities.empty()) throw UsageError("no entities in '" + path + "'");
    const auto ranked = rank_entities(input.entities, score);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : ranked) {
            arr.push_back({{"id", r.id},
                           {"rank", r.bounds.rank()},
                           {"lower", r.bounds.lower},
                           {"upper", r.bounds.upper},
                           {"incomparable", r.incomparable},
                           {"score", r.score ? nlohmann::json(*r.score) : nlohmann::json(nullptr)}});
        }
        std::cout << dump_json({{"score", sc.display()}, {"entities", arr}});
    } else if (format == "csv") {
        std::cout << "id,rank,lower,upper,score,incomparable\n";
        char buf[32];
        for (const auto& r : ranked) {
            std::string s;
            if (r.score) {
                std::snprintf(buf, sizeof buf, "%.17g", *r.score);
                s = buf;
            }
            std::cout << r.id << ',' << r.bounds.rank() << ',' << r.bounds.lower << ',' << r.bounds.upper << ','
                      << s << ',' << (r.incomparable ? "incomparable" : "") << '\n';
        }
    } else {
        std::cout << "| id | rank | bounds | score |\n|---|--:|:-:|--:|\n";
        char buf[32];
        for (const auto& r : ranked) {
            std::string s = "incomparable";
            if (r.score) {
                std::snprintf(buf, sizeof buf, "%.6g", *r.score);
                s = buf;
            }
            std::cout << "| " << r.id << " | " << r.bounds.rank() << " | " << r.bounds.lower << "-"
                      << r.bounds.upper << " | " << s << " |\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Audit two-class scores for ranking and reproduce the 27-score table"};
    app.require_subcommand(1);

    std::uint64_t seed = 7;
    int resolution = 0;

    auto* t1 = app.add_subcommand("table1", "Audit and tau extremes of all catalog scores on 3 constraint sets");
    std::string t1_format;
    format_choice(t1, t1_format, "markdown");
    std::vector<std::string> only;
    bool check = false;
    t1->add_option("--resolution", resolution, "Grid resolution for every constraint set (default 32 / 80)")
        ->check(CLI::PositiveNumber);
    t1->add_option("--only", only, "Restrict to these catalog ids");
    t1->add_option("--seed", seed, "Seed of the unconstrained pair subsample");
    t1->add_flag("--check", check, "Exit 1 when a verdict differs from the reference table");

    auto* au = app.add_subcommand("audit", "Run the three axiom tests on one score");
    ScoreChoice au_score;
    ConstraintChoice au_constraint;
    std::string au_format;
    add_score_options(au, au_score);
    add_constraint_options(au, au_constraint);
    format_choice(au, au_format, "json");
    au->add_option("--resolution", resolution, "Grid resolution")->check(CLI::PositiveNumber);
    au->add_option("--seed", seed, "Seed of the unconstrained pair subsample");

    auto* ta = app.add_subcommand("tau", "Search the min or max Kendall tau against ranking scores");
    ScoreChoice ta_score;
    ConstraintChoice ta_constraint;
    std::string ta_format, objective = "max";
    add_score_options(ta, ta_score);
    add_constraint_options(ta, ta_constraint);
    format_choice(ta, ta_format, "json");
    ta->add_option("--objective", objective, "min or max")->check(CLI::IsMember({"min", "max"}));
    ta->add_option("--resolution", resolution, "Grid resolution")->check(CLI::PositiveNumber);
    ta->add_option("--seed", seed, "Unused; accepted for uniformity");

    auto* rk = app.add_subcommand("rank", "Rank entities from a CSV of (id, p_tn, p_fp, p_fn, p_tp)");
    std::string input;
    ScoreChoice rk_score;
    std::string rk_format;
    rk->add_option("input", input, "CSV file, or - for standard input")->required();
    add_score_options(rk, rk_score);
    format_choice(rk, rk_format, "markdown");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*t1) return run_table1(t1_format, resolution, only, seed, check);
        if (*au) return run_audit(au_score, au_constraint, resolution, seed, au_format);
        if (*ta) return run_tau(ta_score, ta_constraint, resolution, objective, ta_format);
        if (*rk) return run_rank(input, rk_score, rk_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
