#pragma once

#include <cstdint>
#include <variant>

#include "grltk/criteria.hpp"

namespace grltk {

enum class SearchGoal { Mds, AmdsDual, SelfDual };

/// Scan the cor33 special-A family over explicit parameter lists.
struct FamilyCor33 {
    std::vector<Fe> mus, deltas, taus;
};

/// Run the constructive self-dual solver on each alpha-set.
struct FamilySelfDualSolver {};

/// Seeded sample of invertible 3x3 mixing matrices per alpha-set.
struct FamilyGl3Sample {
    std::size_t count = 0;
    std::uint64_t seed = 0;
};

using SearchFamily = std::variant<FamilyCor33, FamilySelfDualSolver, FamilyGl3Sample>;

struct SearchJob {
    FieldPtr ctx;
    std::size_t n = 0, k = 0;
    SearchFamily family;
    SearchGoal goal = SearchGoal::Mds;
    bool validate = false;  // run cross_validate on every hit
    std::size_t max_candidates = SIZE_MAX;
    std::size_t max_hits = SIZE_MAX;
    std::uint64_t budget = kDefaultBudget;
};

struct SearchHit {
    GrlSpec spec;
    ConditionReport report;
    std::optional<CrossValidation> validated;
};

/// Deterministic scan: alpha-sets in lexicographic order of sorted element
/// codes, then family parameters lexicographically (or in seeded sample
/// order). Stops at max_candidates / max_hits.
std::vector<SearchHit> run_search(const SearchJob& job);

struct CostEstimate {
    std::uint64_t candidate_count;
    std::uint64_t per_candidate_subset_checks;
};

CostEstimate estimate_cost(const SearchJob& job);

}  // namespace grltk
