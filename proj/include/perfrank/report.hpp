#pragma once

// Assembling and rendering audit results: the full 27-score table, single
// audits and tau searches as JSON, and entity CSV input for ranking.

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "perfrank/audit.hpp"
#include "perfrank/golden.hpp"
#include "perfrank/grid.hpp"
#include "perfrank/ordering.hpp"
#include "perfrank/tau.hpp"

namespace perfrank {

/// Unconstrained, positive prior 0.2, positive prior 0.5.
std::vector<ConstraintSet> table_constraints();

struct TableOptions {
    AuditOptions audit;
    SearchOptions search;
    /// Grid resolution for every constraint; 0 keeps the defaults.
    int resolution = 0;
    /// Catalog ids to include; empty means all.
    std::vector<std::string> only;
};

struct TableCell {
    ConstraintSet constraint;
    TestVerdict verdict;
    TauResult tau_min;
    TauResult tau_max;
};

struct TableRow {
    std::string id;
    std::string label;
    std::vector<TableCell> cells;
};

/// Throws std::invalid_argument for an unknown id in options.only.
std::vector<TableRow> compute_table(const TableOptions& options = {});

std::string render_markdown(const std::vector<TableRow>& rows);
std::string render_csv(const std::vector<TableRow>& rows);
nlohmann::json table_to_json(const std::vector<TableRow>& rows, const TableOptions& options);

struct VerdictMismatch {
    std::string id;
    std::string constraint;
    int test;  ///< 1, 2 or 3
    bool expected;
    bool actual;
};

/// Verdicts that differ from golden_table(). Only the standard constraint
/// sets are compared.
std::vector<VerdictMismatch> check_against_golden(const std::vector<TableRow>& rows);

nlohmann::json verdict_to_json(const std::string& score, const ConstraintSet& constraint, const TestVerdict& v);
nlohmann::json tau_to_json(const std::string& score, const ConstraintSet& constraint, const TauResult& r);

/// Shortest round-trip JSON text, keys sorted, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

/// "%.3f", with a dagger for analytic values and "n/a" when undefined.
std::string format_tau(const TauResult& r);

struct EntityInput {
    std::vector<EntityRecord> entities;
    /// "line N: message" for rows that could not be used.
    std::vector<std::string> errors;
};

/// id,p_tn,p_fp,p_fn,p_tp rows with an optional header line. Blank lines
/// are skipped. Rows whose probabilities do not sum to 1 within 1e-9, or are
/// negative or malformed, are reported in errors.
EntityInput parse_entity_csv(std::istream& in);

struct RankedEntity {
    std::string id;
    RankBounds bounds;
    bool incomparable;  ///< outside the score's domain
    std::optional<double> score;
};

/// Entities sorted by conventional rank, then upper bound, then id.
std::vector<RankedEntity> rank_entities(const std::vector<EntityRecord>& entities, const Score& score);

}  // namespace perfrank
