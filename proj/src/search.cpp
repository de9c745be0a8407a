#include "grltk/search.hpp"

#include <random>

namespace grltk {
namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t num = 1;
    for (std::uint64_t i = 1; i <= r; ++i) num = num * (n - r + i) / i;
    return num;
}

void validate_job(const SearchJob& job) {
    if (!job.ctx) fail(Errc::InvalidJob, "missing field context");
    if (job.max_hits == 0) fail(Errc::LimitZero, "max_hits must be positive");
    if (job.n > job.ctx->q() || job.n == 0) fail(Errc::InvalidJob, "need 0 < n <= q");
    if (job.goal == SearchGoal::SelfDual) {
        if (job.n + 3 != 2 * job.k) fail(Errc::InvalidJob, "self-dual goal needs n + 3 = 2k");
    } else {
        if (job.k <= 3) fail(Errc::InvalidJob, "mds/amds-dual goals need k > 3");
    }
    if (job.k + 1 > job.n) fail(Errc::InvalidJob, "need k + 1 <= n");
}

// Mixing matrices to try for one alpha-set, in deterministic order.
std::vector<Mat> family_candidates(const SearchJob& job) {
    std::vector<Mat> out;
    if (const auto* c = std::get_if<FamilyCor33>(&job.family)) {
        for (Fe mu : c->mus)
            for (Fe delta : c->deltas)
                for (Fe tau : c->taus)
                    out.push_back(special_a(job.ctx, mu, delta, tau, ALayout::Cor33));
    } else if (const auto* g = std::get_if<FamilyGl3Sample>(&job.family)) {
        std::mt19937_64 rng(g->seed);
        std::uniform_int_distribution<std::uint32_t> dist(0, job.ctx->q() - 1);
        while (out.size() < g->count) {
            Mat a(job.ctx, 3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) a.set(i, j, dist(rng));
            if (eliminate(a).det.value_or(0) != 0) out.push_back(std::move(a));
        }
    }
    return out;  // empty for the self-dual solver family
}

}  // namespace

std::vector<SearchHit> run_search(const SearchJob& job) {
    validate_job(job);
    const bool solver_family = std::holds_alternative<FamilySelfDualSolver>(job.family);
    if (solver_family && job.goal != SearchGoal::SelfDual)
        fail(Errc::InvalidJob, "the solver family only serves the self-dual goal");

    std::vector<SearchHit> hits;
    std::size_t candidates = 0;
    std::vector<Mat> As = family_candidates(job);

    // alpha-sets: size-n index combinations of 0..q-1, lexicographic.
    std::vector<Fe> alpha(job.n);
    for (std::size_t i = 0; i < job.n; ++i) alpha[i] = static_cast<Fe>(i);
    const std::uint32_t q = job.ctx->q();
    bool more = true;
    while (more && hits.size() < job.max_hits && candidates < job.max_candidates) {
        auto consider = [&](GrlSpec spec, ConditionReport rep) {
            if (!rep.holds) return;
            SearchHit hit{std::move(spec), std::move(rep), std::nullopt};
            if (job.validate) hit.validated = cross_validate(hit.spec, job.budget);
            hits.push_back(std::move(hit));
        };
        if (solver_family) {
            ++candidates;
            SelfDualSolve solve = solve_self_dual_special(job.ctx, alpha);
            if (solve.solution) {
                const auto& s = *solve.solution;
                GrlSpec spec{job.ctx, job.k, alpha, s.v,
                             special_a(job.ctx, s.mu, s.delta, s.tau, ALayout::SelfDual)};
                ConditionReport rep = check_self_dual_thm(spec).report;
                consider(std::move(spec), std::move(rep));
            }
        } else {
            for (const Mat& A : As) {
                if (hits.size() >= job.max_hits || candidates >= job.max_candidates) break;
                ++candidates;
                GrlSpec spec{job.ctx, job.k, alpha, std::vector<Fe>(job.n, 1), A};
                ConditionReport rep;
                switch (job.goal) {
                    case SearchGoal::Mds: rep = check_mds_thm(spec); break;
                    case SearchGoal::AmdsDual: rep = check_amds_dual_thm(spec); break;
                    case SearchGoal::SelfDual: rep = check_self_dual_thm(spec).report; break;
                }
                consider(std::move(spec), std::move(rep));
            }
        }
        // next combination
        std::size_t i = job.n;
        more = false;
        while (i-- > 0) {
            if (alpha[i] != i + q - job.n) {
                ++alpha[i];
                for (std::size_t j = i + 1; j < job.n; ++j) alpha[j] = alpha[j - 1] + 1;
                more = true;
                break;
            }
        }
    }
    return hits;
}

CostEstimate estimate_cost(const SearchJob& job) {
    validate_job(job);
    std::uint64_t family_size = 1;
    if (const auto* c = std::get_if<FamilyCor33>(&job.family))
        family_size = static_cast<std::uint64_t>(c->mus.size()) * c->deltas.size() * c->taus.size();
    else if (const auto* g = std::get_if<FamilyGl3Sample>(&job.family))
        family_size = g->count;

    CostEstimate est{};
    est.candidate_count = binom(job.ctx->q(), job.n) * family_size;
    // 3 column choices for the (k-1)-subset condition, 3 column pairs for the
    // (k-2)-subset condition.
    std::uint64_t c1 = 3 * binom(job.n, job.k - 1);
    std::uint64_t c2 = 3 * binom(job.n, job.k - 2);
    switch (job.goal) {
        case SearchGoal::Mds: est.per_candidate_subset_checks = c1 + c2; break;
        case SearchGoal::AmdsDual: est.per_candidate_subset_checks = c2 + 3 + c1 + c2; break;
        case SearchGoal::SelfDual: est.per_candidate_subset_checks = job.n + 9; break;
    }
    return est;
}

}  // namespace grltk
