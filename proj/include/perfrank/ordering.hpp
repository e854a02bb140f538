#pragma once

// Preorders induced by scores, the four derived relations, rank
// bounds and the order-theory lemma checks.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "perfrank/core.hpp"

namespace perfrank {

enum class Relation { Worse, Equivalent, Better, Incomparable };

const char* to_string(Relation r) noexcept;

/// P1 ≲ P2. Any callable of this shape is treated as a candidate preorder.
using Preorder = std::function<bool(const Performance&, const Performance&)>;

/// The ordering induced by a score: P1 ≲ P2 iff P1 = P2 (bitwise) or both
/// are in the domain and X(P1) <= X(P2).
Preorder induced_preorder(const Score& score);

/// Relation of p1 to p2 under a preorder.
Relation relate(const Preorder& le, const Performance& p1, const Performance& p2);

/// Relation of p1 to p2 under the score-induced preorder. Throws
/// std::invalid_argument when the performances live on different spaces.
Relation compare(const Score& score, const Performance& p1, const Performance& p2);

struct EntityRecord {
    std::string id;
    Performance performance;
};

struct RankBounds {
    int lower = 1;
    int upper = 1;
    /// Conventional single rank: the lower bound (competition ranking).
    int rank() const noexcept { return lower; }
};

/// Per-entity rank bounds. Throws std::invalid_argument on an empty list,
/// duplicate ids, or mixed sample spaces.
std::map<std::string, RankBounds> rank_bounds(const std::vector<EntityRecord>& entities,
                                              const Score& score);

struct LemmaResult {
    std::string name;
    bool holds = true;
};

struct RelationReport {
    std::vector<LemmaResult> lemmas;
    bool all_hold() const noexcept;
    bool holds(const std::string& name) const;
};

/// Checks the preorder lemmas (reflexivity, transitivity, symmetry,
/// asymmetry, irreflexivity, converse pairs) over every pair and triple of
/// the sample.
RelationReport relation_properties_check(const Preorder& le, const std::vector<Performance>& sample);
RelationReport relation_properties_check(const Score& score, const std::vector<Performance>& sample);

}  // namespace perfrank
