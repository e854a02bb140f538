#include "perfrank/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "perfrank/scores.hpp"
#include "perfrank/two_class.hpp"

namespace perfrank {

using nlohmann::json;

std::vector<ConstraintSet> table_constraints() {
    return {ConstraintSet::unconstrained(), ConstraintSet::fixed_positive_prior(0.2),
            ConstraintSet::fixed_positive_prior(0.5)};
}

std::vector<TableRow> compute_table(const TableOptions& options) {
    std::vector<const CatalogEntry*> entries;
    if (options.only.empty()) {
        for (const auto& e : catalog()) entries.push_back(&e);
    } else {
        for (const auto& id : options.only) entries.push_back(&catalog_entry(id));
    }

    std::vector<TableRow> rows;
    for (const auto* e : entries) rows.push_back({e->id, e->label, {}});

    for (const auto& c : table_constraints()) {
        const int res = options.resolution > 0 ? options.resolution : default_resolution(c);
        const PerformanceGrid grid = make_grid(c, res);
        for (std::size_t r = 0; r < entries.size(); ++r) {
            const auto& e = *entries[r];
            TableCell cell{c, audit_score(e.score, grid, two_class::satisfaction(), options.audit),
                           optimize_tau(e, grid, Objective::Min, options.search),
                           optimize_tau(e, grid, Objective::Max, options.search)};
            rows[r].cells.push_back(std::move(cell));
        }
    }
    return rows;
}

std::string format_tau(const TauResult& r) {
    if (!r.tau) return "n/a";
    char buf[32];
    // Avoid printing "-0.000" for tiny negative values.
    const double v = std::abs(*r.tau) < 5e-4 ? 0.0 : *r.tau;
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf) + (r.analytic ? "†" : "");
}

namespace {

const char* vx(bool b) { return b ? "V" : "X"; }

std::string column_title(const ConstraintSet& c) {
    if (c.is_unconstrained()) return "all performances";
    char buf[48];
    std::snprintf(buf, sizeof buf, "positive prior = %g", *c.positive_prior());
    return buf;
}

json opt_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json satisfaction_witness_json(const SatisfactionWitness& w) {
    return {{"worse", w.worse},
            {"better", w.better},
            {"threshold", w.threshold},
            {"worse_score", w.worse_score},
            {"better_score", w.better_score}};
}

json combination_witness_json(const CombinationWitness& w) {
    return {{"p1", w.p1},         {"p2", w.p2},         {"lambda", w.lambda},
            {"mixture", w.mixture}, {"score1", w.score1}, {"score2", w.score2},
            {"score_mixture", w.score_mixture}};
}

json tau_body(const TauResult& r) {
    return {{"value", opt_number(r.tau)},
            {"analytic", r.analytic},
            {"a", r.a},
            {"b", r.b},
            {"importance", r.importance},
            {"searched", opt_number(r.searched)},
            {"searched_a", r.searched_a},
            {"searched_b", r.searched_b},
            {"iterations", r.iterations},
            {"evaluations", r.evaluations}};
}

}  // namespace

std::string render_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    if (rows.empty()) return {};
    os << "| score |";
    for (const auto& c : rows.front().cells) {
        const std::string t = column_title(c.constraint);
        os << " 1st (" << t << ") | 2nd | 3rd | tau_min | tau_max |";
    }
    os << "\n|---|";
    for (std::size_t k = 0; k < rows.front().cells.size(); ++k) os << ":-:|:-:|:-:|--:|--:|";
    os << '\n';
    for (const auto& r : rows) {
        os << "| " << r.label << " |";
        for (const auto& c : r.cells) {
            os << ' ' << vx(c.verdict.test1) << " | " << vx(c.verdict.test2) << " | " << vx(c.verdict.test3)
               << " | " << format_tau(c.tau_min) << " | " << format_tau(c.tau_max) << " |";
        }
        os << '\n';
    }
    return os.str();
}

std::string render_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "id,constraint,test1,test2,test3,tau_min,tau_min_analytic,tau_max,tau_max_analytic\n";
    char buf[32];
    auto num = [&](const TauResult& t) -> std::string {
        if (!t.tau) return "";
        std::snprintf(buf, sizeof buf, "%.17g", *t.tau);
        return buf;
    };
    for (const auto& r : rows) {
        for (const auto& c : r.cells) {
            os << r.id << ',' << c.constraint.label() << ',' << vx(c.verdict.test1) << ',' << vx(c.verdict.test2)
               << ',' << vx(c.verdict.test3) << ',' << num(c.tau_min) << ',' << (c.tau_min.analytic ? 1 : 0) << ','
               << num(c.tau_max) << ',' << (c.tau_max.analytic ? 1 : 0) << '\n';
        }
    }
    return os.str();
}

json verdict_to_json(const std::string& score, const ConstraintSet& constraint, const TestVerdict& v) {
    json j = {{"score", score}, {"constraint", constraint.label()},
              {"test1", v.test1}, {"test2", v.test2}, {"test3", v.test3}};
    json ce = json::object();
    if (v.witness1) ce["test1"] = satisfaction_witness_json(*v.witness1);
    if (v.witness2) ce["test2"] = combination_witness_json(*v.witness2);
    if (v.witness3) ce["test3"] = combination_witness_json(*v.witness3);
    if (!ce.empty()) j["counterexample"] = ce;
    return j;
}

json tau_to_json(const std::string& score, const ConstraintSet& constraint, const TauResult& r) {
    json j = tau_body(r);
    j["score"] = score;
    j["constraint"] = constraint.label();
    j["objective"] = to_string(r.objective);
    j["tau"] = j["value"];
    j.erase("value");
    return j;
}

json table_to_json(const std::vector<TableRow>& rows, const TableOptions& options) {
    json jr = json::array();
    for (const auto& r : rows) {
        json cells = json::array();
        for (const auto& c : r.cells) {
            cells.push_back({{"constraint", c.constraint.label()},
                             {"test1", c.verdict.test1},
                             {"test2", c.verdict.test2},
                             {"test3", c.verdict.test3},
                             {"tau_min", tau_body(c.tau_min)},
                             {"tau_max", tau_body(c.tau_max)}});
        }
        jr.push_back({{"id", r.id}, {"label", r.label}, {"cells", cells}});
    }
    json settings = {{"seed", options.audit.seed},
                     {"pair_subsample", options.audit.pair_subsample},
                     {"lambdas", options.audit.lambdas},
                     {"tolerance", options.audit.tolerance},
                     {"search_cells", options.search.cells},
                     {"search_shrink", options.search.shrink},
                     {"search_min_side", options.search.min_side}};
    json res = json::object();
    for (const auto& c : table_constraints()) {
        res[c.label()] = options.resolution > 0 ? options.resolution : default_resolution(c);
    }
    settings["resolution"] = res;
    return {{"rows", jr}, {"settings", settings}};
}

std::vector<VerdictMismatch> check_against_golden(const std::vector<TableRow>& rows) {
    const auto standard = table_constraints();
    std::vector<VerdictMismatch> out;
    for (const auto& r : rows) {
        const auto& g = golden_row(r.id);
        for (const auto& c : r.cells) {
            const auto it = std::find(standard.begin(), standard.end(), c.constraint);
            if (it == standard.end()) continue;
            const auto& gc = g.cells[static_cast<std::size_t>(it - standard.begin())];
            const bool exp[3] = {gc.test1, gc.test2, gc.test3};
            const bool got[3] = {c.verdict.test1, c.verdict.test2, c.verdict.test3};
            for (int k = 0; k < 3; ++k) {
                if (exp[k] != got[k]) out.push_back({r.id, c.constraint.label(), k + 1, exp[k], got[k]});
            }
        }
    }
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

}  // namespace

EntityInput parse_entity_csv(std::istream& in) {
    EntityInput res;
    std::set<std::string> ids;
    std::string line;
    int lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) f.push_back(trim(field));
        if (!line.empty() && line.back() == ',') f.emplace_back();
        auto err = [&](const std::string& m) { res.errors.push_back("line " + std::to_string(lineno) + ": " + m); };
        if (f.size() != 5) {
            err("expected 5 fields (id,p_tn,p_fp,p_fn,p_tp), got " + std::to_string(f.size()));
            first = false;
            continue;
        }
        double p[4];
        bool numeric = true;
        for (int k = 0; k < 4; ++k) numeric = numeric && parse_double(f[k + 1], p[k]);
        if (first && !numeric) {
            first = false;  // header
            continue;
        }
        first = false;
        if (!numeric) {
            err("probabilities must be finite numbers");
            continue;
        }
        if (f[0].empty()) {
            err("empty id");
            continue;
        }
        if (std::any_of(p, p + 4, [](double v) { return v < 0.0; })) {
            err("negative probability");
            continue;
        }
        const double sum = p[0] + p[1] + p[2] + p[3];
        if (std::abs(sum - 1.0) > kNormalizationSlack) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "probabilities sum to %.17g, not 1", sum);
            err(buf);
            continue;
        }
        if (!ids.insert(f[0]).second) {
            err("duplicate id '" + f[0] + "'");
            continue;
        }
        res.entities.push_back({f[0], two_class::performance(p[0], p[1], p[2], p[3])});
    }
    return res;
}

std::vector<RankedEntity> rank_entities(const std::vector<EntityRecord>& entities, const Score& score) {
    const auto bounds = rank_bounds(entities, score);
    std::vector<RankedEntity> out;
    for (const auto& e : entities) {
        auto v = score(e.performance);
        out.push_back({e.id, bounds.at(e.id), !v.has_value(), v});
    }
    std::sort(out.begin(), out.end(), [](const RankedEntity& a, const RankedEntity& b) {
        if (a.bounds.lower != b.bounds.lower) return a.bounds.lower < b.bounds.lower;
        if (a.bounds.upper != b.bounds.upper) return a.bounds.upper < b.bounds.upper;
        return a.id < b.id;
    });
    return out;
}

}  // namespace perfrank
