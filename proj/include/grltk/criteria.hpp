#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grltk/code.hpp"
#include "grltk/grl.hpp"

namespace grltk {

enum class PartStatus {
    Pass,       // summary: a universally-quantified condition with no violation
    Fail,       // summary: condition failed overall
    Violation,  // detail: a subset violating a universal condition (lhs = rhs held)
    Witness,    // detail: a subset witnessing an existential condition
};

struct ConditionPart {
    std::string id;          // condition label, e.g. "(1) s=2"
    PartStatus status;
    std::vector<Fe> subset;  // the J or I involved (empty for summaries)
    Fe lhs = 0, rhs = 0;     // evaluated sides for detail entries
};

/// Per-theorem verdict. Detail parts list EVERY violating/witnessing subset,
/// in lexicographic order of the sorted alpha-set combinations.
struct ConditionReport {
    std::string theorem;
    bool holds = false;
    std::vector<ConditionPart> parts;
    std::string notes;
};

const char* part_status_name(PartStatus s);

/// MDS criterion for l = 3, k > 3: condition (1) over (k-1)-subsets J and
/// columns s, condition (2) over (k-2)-subsets I and column pairs t < s.
/// holds iff no subset violates either condition.
ConditionReport check_mds_thm(const GrlSpec& spec);

/// Dual-AMDS criterion for l = 3, k > 3: universal parts (1)-(4) plus an
/// existential dependency witness, satisfied by part (5) or part (6).
ConditionReport check_amds_dual_thm(const GrlSpec& spec);

struct SelfDualCheck {
    bool holds = false;
    std::optional<Fe> lambda;  // candidate forced by coordinate 1, set whenever computable
    ConditionReport report;
};

/// Self-dual criterion for l = 3, n + 3 = 2k: a single lambda with
/// v_i^2 = lambda u_i for all i and A A^T = lambda M(alpha).
SelfDualCheck check_self_dual_thm(const GrlSpec& spec);

struct SelfDualSolution {
    Fe lambda, mu, delta, tau;
    std::vector<Fe> v;
};

struct SelfDualSolve {
    std::optional<SelfDualSolution> solution;
    std::string failure_stage;  // set when no solution exists
};

/// Constructive solver for the SelfDual mixing layout: lambda = -1/P, then
/// mu = -lambda, delta = -lambda e1, tau = -mu delta, consistency checks,
/// then v_i = sqrt(lambda u_i) taking the root with the smaller code.
SelfDualSolve solve_self_dual_special(const FieldPtr& ctx, std::span<const Fe> alpha);

struct CrossValidation {
    Classification primary;
    std::optional<Classification> dual;
    bool self_dual_brute = false;
    NonGrsWitness witness{};
    std::optional<ConditionReport> mds_report;
    std::optional<ConditionReport> amds_dual_report;
    std::optional<SelfDualCheck> self_dual_report;
    bool agree = false;
};

/// Builds the code from the spec, classifies it and its dual by enumeration,
/// runs every applicable theorem checker, and reports whether each checker
/// verdict matches the brute-force one.
CrossValidation cross_validate(const GrlSpec& spec, std::uint64_t budget = kDefaultBudget);

}  // namespace grltk
