// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Criteria 6 and 7 restate published claims that exact
// recomputation disproves (a sign slip in the source's power-sum lemma
// propagates into its self-dual construction); those lines report FAIL with
// the measured values rather than papering over the discrepancy.
#include "doctest.h"

#include <iostream>
#include <random>
#include <sstream>

#include "grltk/search.hpp"

using namespace grltk;

namespace {

void report(int num, const std::string& title, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << num << ": " << title;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    CHECK_MESSAGE(ok, "criterion ", num, ": ", title, " -- ", detail);
}

Mat parse_matrix(const FieldPtr& F, const std::vector<std::vector<const char*>>& rows) {
    std::vector<std::vector<Fe>> parsed;
    for (const auto& r : rows) {
        std::vector<Fe> pr;
        for (const char* t : r) pr.push_back(F->parse(t));
        parsed.push_back(std::move(pr));
    }
    return Mat::from_rows(F, parsed);
}

std::vector<Fe> random_subset(std::mt19937_64& rng, const FieldPtr& F, std::size_t n) {
    std::vector<Fe> all(F->q());
    for (Fe i = 0; i < F->q(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(n);
    std::sort(all.begin(), all.end());
    return all;
}

Fe random_nonzero(std::mt19937_64& rng, const FieldPtr& F) {
    std::uniform_int_distribution<Fe> d(1, F->q() - 1);
    return d(rng);
}

Mat random_invertible3(std::mt19937_64& rng, const FieldPtr& F) {
    std::uniform_int_distribution<Fe> d(0, F->q() - 1);
    for (;;) {
        Mat a(F, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.set(i, j, d(rng));
        if (eliminate(a).det != Fe{0}) return a;
    }
}

}  // namespace

TEST_CASE("criterion 1: [7,3,4] enumerator over GF(8)") {
    auto F = field_new(2, 3);
    auto code = code_from_generator(parse_matrix(F, {{"1", "1", "1", "1", "1", "0", "1"},
                                                     {"0", "1", "w", "w^3", "0", "1", "w^5"},
                                                     {"0", "1", "w^2", "w^6", "1", "w^6", "w^2"}}));
    bool ok = code.n() == 7 && code.k() == 3 && min_distance(code) == 4 &&
              weight_enumerator(code).counts ==
                  std::vector<std::uint64_t>{1, 0, 0, 0, 7, 126, 168, 210};
    report(1, "GF(8) matrix gives [7,3,4] with enumerator 1+7x^4+126x^5+168x^6+210x^7", ok);
}

TEST_CASE("criterion 2: [7,3,5] enumerator over GF(8)") {
    auto F = field_new(2, 3);
    auto code = code_from_generator(parse_matrix(F, {{"1", "1", "1", "1", "0", "0", "1"},
                                                     {"0", "1", "w", "w^3", "0", "1", "w^5"},
                                                     {"0", "1", "w^2", "w^6", "1", "w^6", "w^2"}}));
    bool ok = code.n() == 7 && code.k() == 3 && min_distance(code) == 5 &&
              weight_enumerator(code).counts == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 147, 147, 217};
    report(2, "GF(8) comparison matrix gives [7,3,5] with enumerator 1+147x^5+147x^6+217x^7", ok);
}

TEST_CASE("criterion 3: [7,5,2] recomputed enumerator") {
    auto F = field_new(2, 3);
    auto code = code_from_generator(parse_matrix(F, {{"1", "1", "1", "1", "0", "0", "0"},
                                                     {"0", "1", "w", "w^3", "0", "0", "0"},
                                                     {"0", "1", "w^2", "w^6", "0", "0", "1"},
                                                     {"0", "1", "w^3", "w^9", "0", "1", "w^5"},
                                                     {"0", "1", "w^4", "w^12", "1", "w^6", "w^2"}}));
    auto w = weight_enumerator(code);
    std::uint64_t total = 0;
    for (auto c : w.counts) total += c;
    bool ok = code.n() == 7 && code.k() == 5 && min_distance(code) == 2 && total == 32768;
    std::ostringstream detail;
    detail << "recomputed counts";
    for (std::size_t i = 0; i < w.counts.size(); ++i)
        if (w.counts[i]) detail << " " << w.counts[i] << "x^" << i;
    detail << "; published series sums to 32732 != 8^5";
    report(3, "[7,5,2] parameters and sum-to-q^k enumerator recount", ok, detail.str());
}

TEST_CASE("criterion 4: GF(11) MDS instance and its tables") {
    auto F = field_new(11, 1);
    GrlSpec spec{F, 4, {0, 1, 2, 4, 5}, {1, 1, 1, 1, 1}, special_a(F, 1, 8, 4, ALayout::Cor33)};
    bool ok = check_mds_thm(spec).holds;
    auto cls = classify(code_from_generator(grl_generator(spec)));
    ok = ok && cls.d == 5 && cls.cls == CodeClass::MDS;
    struct T1 { std::vector<Fe> J; Fe e2, e1, c1, c2, c3; };
    const std::vector<T1> t1 = {{{0, 1, 2}, 2, 3, 3, 1, 5},  {{0, 1, 4}, 4, 5, 5, 9, 10},
                                {{0, 1, 5}, 5, 6, 6, 2, 7},  {{0, 2, 4}, 8, 6, 9, 2, 9},
                                {{0, 2, 5}, 10, 7, 0, 6, 3}, {{0, 4, 5}, 9, 9, 10, 3, 6},
                                {{1, 2, 4}, 3, 7, 4, 6, 2},  {{1, 2, 5}, 6, 8, 7, 10, 4},
                                {{1, 4, 5}, 7, 10, 8, 7, 1}, {{2, 4, 5}, 5, 0, 6, 0, 7}};
    for (const auto& r : t1) {
        auto sy = sym_sums(F, r.J);
        ok = ok && sy.e2 == r.e2 && sy.e1 == r.e1 && F->add(sy.e2, 1) == r.c1 &&
             F->mul(4, sy.e1) == r.c2 && F->mul(8, sy.e2) == r.c3;
    }
    struct T2 { std::vector<Fe> I; Fe ss, e2, L, mtdL, e1, nde1, tauL; };
    const std::vector<T2> t2 = {{{0, 1}, 1, 0, 1, 2, 1, 4, 4},  {{0, 2}, 4, 0, 4, 8, 2, 7, 5},
                                {{0, 4}, 5, 0, 5, 10, 4, 2, 9}, {{0, 5}, 3, 0, 3, 6, 5, 5, 1},
                                {{1, 2}, 5, 2, 7, 3, 3, 10, 6}, {{1, 4}, 6, 4, 10, 9, 5, 5, 7},
                                {{1, 5}, 4, 5, 9, 7, 6, 8, 3},  {{2, 4}, 9, 8, 6, 1, 6, 8, 2},
                                {{2, 5}, 7, 10, 6, 1, 7, 0, 2}, {{4, 5}, 8, 9, 6, 1, 9, 6, 2}};
    Fe mtd = F->sub(1, F->mul(4, 8));  // mu - tau*delta
    for (const auto& r : t2) {
        auto sy = sym_sums(F, r.I);
        ok = ok && sy.sum_sq == r.ss && sy.e2 == r.e2 && sy.P == r.L &&
             F->mul(mtd, sy.P) == r.mtdL && sy.e1 == r.e1 &&
             F->add(F->neg(F->mul(8, sy.e1)), 1) == r.nde1 && F->mul(4, sy.P) == r.tauL;
    }
    report(4, "GF(11) mds criterion holds, brute-force [8,4,5] MDS, all 20 table rows exact", ok);
}

TEST_CASE("criterion 5: GF(7) dual-AMDS instance") {
    auto F = field_new(7, 1);
    GrlSpec spec{F, 4, {1, 2, 3, 4, 5}, {1, 1, 1, 1, 1}, special_a(F, 2, 4, 3, ALayout::Cor33)};
    bool ok = check_amds_dual_thm(spec).holds;
    auto dual = dual_code(code_from_generator(grl_generator(spec)));
    auto cls = classify(dual);
    ok = ok && dual.n() == 8 && dual.k() == 4 && cls.d == 4 &&
         (cls.cls == CodeClass::AMDS || cls.cls == CodeClass::NMDS);
    // the marked equality cells of the worked table (mu=2, delta=4, tau=3)
    auto s12 = sym_sums(F, std::vector<Fe>{1, 2});
    auto s14 = sym_sums(F, std::vector<Fe>{1, 4});
    auto s23 = sym_sums(F, std::vector<Fe>{2, 3});
    auto s25 = sym_sums(F, std::vector<Fe>{2, 5});
    auto s34 = sym_sums(F, std::vector<Fe>{3, 4});
    auto s45 = sym_sums(F, std::vector<Fe>{4, 5});
    ok = ok && s12.P == 0                              // I={1,2}: N = 0
         && F->mul(2, s14.e1) == Fe{3}                 // I={1,4}: mu e1 = tau
         && F->mul(2, s23.e1) == Fe{3}                 // I={2,3}: mu e1 = tau
         && s25.e1 == 0 && s25.P == 4                  // I={2,5}: e1 = 0, N = 4
         && s34.e1 == 0 && s34.P == 2                  // I={3,4}: e1 = 0, N = 2
         && F->mul(4, s45.e1) == 1;                    // I={4,5}: delta e1 = 1
    report(5, "GF(7) amds-dual criterion holds, dual [8,4,4], marked table cells exact", ok);
}

TEST_CASE("criterion 6: GF(13) published self-dual instance") {
    auto F = field_new(13, 1);
    GrlSpec spec{F, 4, {1, 4, 5, 6, 9}, {6, 3, 1, 3, 6}, special_a(F, 10, 3, 9, ALayout::SelfDual)};
    bool u_ok = ui_coefficients(F, spec.alpha) == std::vector<Fe>{12, 3, 9, 3, 12};
    auto code = code_from_generator(grl_generator(spec));
    auto cls = classify(code);
    bool cls_ok = cls.d == 4 && (cls.cls == CodeClass::AMDS || cls.cls == CodeClass::NMDS);
    bool wit_ok = non_grs_witness(code).certified;
    auto chk = check_self_dual_thm(spec);
    bool thm_ok = chk.holds && chk.lambda == Fe{3};
    bool sd_ok = is_self_dual(code);
    std::ostringstream detail;
    if (!(thm_ok && sd_ok)) {
        Mat gg = grl_generator(spec).matmul(grl_generator(spec).transpose());
        detail << "published claim disproved by exact recomputation: criterion check holds="
               << (chk.holds ? "yes" : "no") << " (the v_i^2 = 3 u_i part passes, the mixing-block "
               << "condition fails at entry (3,3): lhs 1, rhs 7), and G*G^T entry (4,4) = "
               << F->format(gg.at(3, 3)) << " != 0; the remaining sub-claims (u vector, [8,4,4] "
               << "AMDS-class, non-GRS certificate) all pass";
    }
    report(6, "GF(13) instance: criterion holds with lambda=3, u=(12,3,9,3,12), self-dual, "
              "AMDS-class [8,4,4], non-GRS certified",
           u_ok && cls_ok && wit_ok && thm_ok && sd_ok, detail.str());
}

TEST_CASE("criterion 7: GF(19) published self-dual instance and solver recovery") {
    auto F = field_new(19, 1);
    GrlSpec spec{F, 4, {2, 3, 6, 16, 17}, {9, 2, 6, 9, 8}, special_a(F, 18, 13, 13, ALayout::SelfDual)};
    auto chk = check_self_dual_thm(spec);
    bool thm_ok = chk.holds && chk.lambda == Fe{1};
    auto solve = solve_self_dual_special(F, spec.alpha);
    bool solver_ok = solve.solution.has_value() && solve.solution->lambda == Fe{1} &&
                     solve.solution->mu == Fe{18} && solve.solution->delta == Fe{13} &&
                     solve.solution->tau == Fe{13};
    std::ostringstream detail;
    if (!(thm_ok && solver_ok)) {
        detail << "published claim disproved by exact recomputation: criterion check holds="
               << (chk.holds ? "yes" : "no") << "; solver on this alpha-set: "
               << (solve.solution ? "solved with different parameters" : solve.failure_stage)
               << "; genuinely self-dual parameter sets do exist over GF(19) at other alpha-sets "
               << "(e.g. alpha=(1,4,11,13,15) with (lambda,mu,delta,tau)=(1,18,13,13))";
    }
    report(7, "GF(19) instance: criterion holds with lambda=1 and solver recovers (1,18,13,13)",
           thm_ok && solver_ok, detail.str());
}

TEST_CASE("criterion 8: parity-check contract on 200 random specs") {
    std::mt19937_64 rng(0x8a5e2c31u);
    const std::uint32_t fields[][2] = {{7, 1}, {2, 3}, {11, 1}, {13, 1}, {19, 1}};
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 200 && ok; ++t) {
        auto [p, m] = fields[t % 5];
        auto F = field_new(p, m);
        std::size_t k = 4 + (rng() % 2);
        std::size_t nmax = std::min<std::size_t>(F->q(), k + 3);
        std::size_t n = k + 1 + (rng() % (nmax - k));
        GrlSpec spec{F, k, random_subset(rng, F, n), {}, random_invertible3(rng, F)};
        for (std::size_t i = 0; i < n; ++i) spec.v.push_back(random_nonzero(rng, F));
        Mat g = grl_generator(spec);
        Mat h = grl_parity_check(spec);
        if (!g.matmul(h.transpose()).is_zero() || eliminate(h).rank != n + 3 - k) {
            ok = false;
            detail = "failed at trial " + std::to_string(t) + " over GF(" + std::to_string(F->q()) + ")";
        }
    }
    report(8, "G H^T = 0 and rank(H) = n+3-k on 200 random specs over GF{7,8,11,13,19}", ok, detail);
}

TEST_CASE("criterion 9: checker <=> brute force on all 343 GF(7) mixing triples") {
    auto F = field_new(7, 1);
    bool ok = true;
    std::string detail;
    for (Fe mu = 0; mu < 7 && ok; ++mu)
        for (Fe del = 0; del < 7 && ok; ++del)
            for (Fe tau = 0; tau < 7 && ok; ++tau) {
                GrlSpec spec{F, 4, {1, 2, 3, 4, 5}, {1, 1, 1, 1, 1},
                             special_a(F, mu, del, tau, ALayout::Cor33)};
                auto code = code_from_generator(grl_generator(spec));
                bool brute_mds = classify(code).cls == CodeClass::MDS;
                auto dual_cls = classify(dual_code(code)).cls;
                bool brute_dual_amds = dual_cls == CodeClass::AMDS || dual_cls == CodeClass::NMDS;
                bool thm_mds = check_mds_thm(spec).holds;
                bool thm_dual = check_amds_dual_thm(spec).holds;
                if (thm_mds != brute_mds || thm_dual != brute_dual_amds) {
                    ok = false;
                    std::ostringstream d;
                    d << "counterexample (mu,delta,tau)=(" << mu << "," << del << "," << tau
                      << "): mds checker " << thm_mds << " vs brute " << brute_mds
                      << ", amds-dual checker " << thm_dual << " vs brute " << brute_dual_amds;
                    detail = d.str();
                }
            }
    report(9, "exhaustive (mu,delta,tau) in GF(7)^3 sweep: both checkers match enumeration", ok, detail);
}

TEST_CASE("criterion 10: lemma identities on random instances") {
    std::mt19937_64 rng(0x10a5eedu);
    bool ok = true;
    std::string detail;
    const std::uint32_t fields[][2] = {{7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {2, 4}};
    // four power-sum branches: sum u_i a_i^j = 0 (j <= n-2), 1 (n-1), e1 (n), P (n+1)
    for (int t = 0; t < 500 && ok; ++t) {
        auto [p, m] = fields[t % 8];
        auto F = field_new(p, m);
        std::size_t n = 2 + (rng() % std::min<std::size_t>(F->q() - 1, 6));
        auto alpha = random_subset(rng, F, n);
        auto u = ui_coefficients(F, alpha);
        auto sy = sym_sums(F, alpha);
        auto psum = [&](std::size_t j) {
            Fe s = 0;
            for (std::size_t i = 0; i < n; ++i) s = F->add(s, F->mul(u[i], F->pow(alpha[i], (std::int64_t)j)));
            return s;
        };
        bool low_ok = true;
        for (std::size_t j = 0; j + 2 <= n; ++j) low_ok = low_ok && psum(j) == 0;
        if (!(low_ok && psum(n - 1) == 1 && psum(n) == sy.e1 && psum(n + 1) == sy.P)) {
            ok = false;
            detail = "power-sum branch failed at trial " + std::to_string(t);
        }
    }
    // skipped-row Vandermonde determinant: rows 0..n-2 and n+1 give det = P * prod (x_j - x_i)
    for (int t = 0; t < 500 && ok; ++t) {
        auto [p, m] = fields[t % 8];
        auto F = field_new(p, m);
        std::size_t n = 2 + (rng() % std::min<std::size_t>(F->q() - 1, 5));
        auto x = random_subset(rng, F, n);
        Mat v(F, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t r = 0; r + 1 < n; ++r) v.set(r, i, F->pow(x[i], (std::int64_t)r));
            v.set(n - 1, i, F->pow(x[i], (std::int64_t)n + 1));
        }
        Fe expect = sym_sums(F, x).P;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) expect = F->mul(expect, F->sub(x[j], x[i]));
        if (eliminate(v).det != expect) {
            ok = false;
            detail = "determinant identity failed at trial " + std::to_string(t);
        }
    }
    // Cauchy systematic form agrees with RREF of the Vandermonde
    for (int t = 0; t < 100 && ok; ++t) {
        auto [p, m] = fields[t % 8];
        auto F = field_new(p, m);
        std::size_t big = std::min<std::size_t>(F->q(), 7);
        std::size_t n = 3 + (rng() % (big - 2));
        std::size_t k = 1 + (rng() % (n - 1));
        auto alpha = random_subset(rng, F, n);
        auto rs = rs_systematic(F, alpha, k);
        Mat sys = Mat::identity(F, k).hstack(rs.B);
        if (eliminate(Mat::vandermonde(F, alpha, k)).rref != sys) {
            ok = false;
            detail = "systematic form mismatch at trial " + std::to_string(t);
        }
    }
    report(10, "power-sum branches (500x), skipped-row determinant (500x), Cauchy systematic form (100x)",
           ok, detail);
}

TEST_CASE("criterion 11: Schur-square witness calibration") {
    std::mt19937_64 rng(0xca11b8);
    const std::uint32_t fields[][2] = {{7, 1}, {2, 3}, {11, 1}, {13, 1}, {19, 1}};
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 100 && ok; ++t) {
        auto [p, m] = fields[t % 5];
        auto F = field_new(p, m);
        std::size_t k = 2 + (rng() % 3);
        std::size_t n = k + 1 + (rng() % (std::min<std::size_t>(F->q(), k + 4) - k));
        auto alpha = random_subset(rng, F, n);
        Mat g = Mat::vandermonde(F, alpha, k);
        for (std::size_t j = 0; j < n; ++j) {
            Fe scale = random_nonzero(rng, F);
            for (std::size_t i = 0; i < k; ++i) g.set(i, j, F->mul(g.at(i, j), scale));
        }
        auto wit = non_grs_witness(code_from_generator(g));
        if (wit.schur_dim != std::min(n, 2 * k - 1) || wit.certified) {
            ok = false;
            detail = "GRS code mis-flagged at trial " + std::to_string(t);
        }
    }
    auto F11 = field_new(11, 1);
    GrlSpec s34{F11, 4, {0, 1, 2, 4, 5}, {1, 1, 1, 1, 1}, special_a(F11, 1, 8, 4, ALayout::Cor33)};
    auto F13 = field_new(13, 1);
    GrlSpec s43{F13, 4, {1, 4, 5, 6, 9}, {6, 3, 1, 3, 6}, special_a(F13, 10, 3, 9, ALayout::SelfDual)};
    for (const GrlSpec* s : {&s34, &s43}) {
        auto wit = non_grs_witness(code_from_generator(grl_generator(*s)));
        if (!wit.certified || wit.schur_dim <= wit.threshold) {
            ok = false;
            detail = "witness failed to fire on a worked GRL instance";
        }
    }
    report(11, "Schur dim = min(n,2k-1) on 100 random GRS codes, witness fires on both GRL instances",
           ok, detail);
}
