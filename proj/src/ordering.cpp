#include "perfrank/ordering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace perfrank {

const char* to_string(Relation r) noexcept {
    switch (r) {
        case Relation::Worse: return "worse";
        case Relation::Equivalent: return "equivalent";
        case Relation::Better: return "better";
        case Relation::Incomparable: return "incomparable";
    }
    return "?";
}

Preorder induced_preorder(const Score& score) {
    return [score](const Performance& a, const Performance& b) {
        if (a.identical(b)) return true;
        auto xa = score(a);
        if (!xa) return false;
        auto xb = score(b);
        return xb && *xa <= *xb;
    };
}

Relation relate(const Preorder& le, const Performance& p1, const Performance& p2) {
    const bool ab = le(p1, p2);
    const bool ba = le(p2, p1);
    if (ab && ba) return Relation::Equivalent;
    if (ab) return Relation::Worse;
    if (ba) return Relation::Better;
    return Relation::Incomparable;
}

Relation compare(const Score& score, const Performance& p1, const Performance& p2) {
    if (!same_space(p1.space(), p2.space())) {
        throw std::invalid_argument("cannot compare performances on different spaces");
    }
    auto x1 = score(p1);
    auto x2 = score(p2);
    if (x1 && x2) {
        if (*x1 < *x2) return Relation::Worse;
        if (*x1 > *x2) return Relation::Better;
        return Relation::Equivalent;
    }
    if (x1 || x2) return Relation::Incomparable;
    return p1.identical(p2) ? Relation::Equivalent : Relation::Incomparable;
}

std::map<std::string, RankBounds> rank_bounds(const std::vector<EntityRecord>& entities,
                                              const Score& score) {
    if (entities.empty()) throw std::invalid_argument("no entities to rank");
    std::set<std::string> ids;
    for (const auto& e : entities) {
        if (!ids.insert(e.id).second) throw std::invalid_argument("duplicate entity id '" + e.id + "'");
        if (!same_space(e.performance.space(), entities.front().performance.space())) {
            throw std::invalid_argument("entities evaluated on different sample spaces");
        }
    }
    const std::size_t n = entities.size();
    std::vector<std::vector<Relation>> rel(n, std::vector<Relation>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rel[i][j] = compare(score, entities[i].performance, entities[j].performance);
        }
    }
    std::map<std::string, RankBounds> out;
    for (std::size_t i = 0; i < n; ++i) {
        int worse = 0, le = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (rel[i][j] == Relation::Worse) ++worse;
            if (rel[i][j] == Relation::Worse || rel[i][j] == Relation::Equivalent) ++le;
        }
        out[entities[i].id] = RankBounds{worse + 1, le};
    }
    return out;
}

bool RelationReport::all_hold() const noexcept {
    return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.holds; });
}

bool RelationReport::holds(const std::string& name) const {
    for (const auto& l : lemmas) {
        if (l.name == name) return l.holds;
    }
    throw std::invalid_argument("unknown lemma '" + name + "'");
}

RelationReport relation_properties_check(const Preorder& le, const std::vector<Performance>& sample) {
    const std::size_t n = sample.size();
    std::vector<std::vector<char>> m(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = le(sample[i], sample[j]) ? 1 : 0;
    }
    // Derived relations, indexed as in relate().
    auto leq = [&](std::size_t i, std::size_t j) { return m[i][j] != 0; };
    auto geq = [&](std::size_t i, std::size_t j) {
        const bool better = !m[i][j] && m[j][i];
        const bool equiv = m[i][j] && m[j][i];
        return better || equiv;
    };
    auto eq = [&](std::size_t i, std::size_t j) { return m[i][j] && m[j][i]; };
    auto lt = [&](std::size_t i, std::size_t j) { return m[i][j] && !m[j][i]; };
    auto gt = [&](std::size_t i, std::size_t j) { return !m[i][j] && m[j][i]; };
    auto inc = [&](std::size_t i, std::size_t j) { return !m[i][j] && !m[j][i]; };

    auto reflexive = [&](auto rel) {
        for (std::size_t i = 0; i < n; ++i) if (!rel(i, i)) return false;
        return true;
    };
    auto irreflexive = [&](auto rel) {
        for (std::size_t i = 0; i < n; ++i) if (rel(i, i)) return false;
        return true;
    };
    auto symmetric = [&](auto rel) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) if (rel(i, j) != rel(j, i)) return false;
        return true;
    };
    auto asymmetric = [&](auto rel) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) if (rel(i, j) && rel(j, i)) return false;
        return true;
    };
    auto transitive = [&](auto rel) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!rel(i, j)) continue;
                for (std::size_t k = 0; k < n; ++k) if (rel(j, k) && !rel(i, k)) return false;
            }
        return true;
    };
    auto converse = [&](auto a, auto b) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) if (a(i, j) != b(j, i)) return false;
        return true;
    };
    auto exactly_one = [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const int count = int(eq(i, j)) + int(lt(i, j)) + int(gt(i, j)) + int(inc(i, j));
                if (count != 1) return false;
            }
        return true;
    };

    RelationReport r;
    r.lemmas = {
        {"equivalent_reflexive", reflexive(eq)},
        {"equivalent_transitive", transitive(eq)},
        {"equivalent_symmetric", symmetric(eq)},
        {"better_worse_converse", converse(gt, lt)},
        {"better_irreflexive", irreflexive(gt)},
        {"worse_irreflexive", irreflexive(lt)},
        {"better_asymmetric", asymmetric(gt)},
        {"worse_asymmetric", asymmetric(lt)},
        {"better_transitive", transitive(gt)},
        {"worse_transitive", transitive(lt)},
        {"incomparable_irreflexive", irreflexive(inc)},
        {"incomparable_symmetric", symmetric(inc)},
        {"le_ge_converse", converse(leq, geq)},
        {"le_reflexive", reflexive(leq)},
        {"ge_reflexive", reflexive(geq)},
        {"le_transitive", transitive(leq)},
        {"ge_transitive", transitive(geq)},
        {"exactly_one_relation", exactly_one()},
    };
    return r;
}

RelationReport relation_properties_check(const Score& score, const std::vector<Performance>& sample) {
    return relation_properties_check(induced_preorder(score), sample);
}

}  // namespace perfrank
