#include "grltk/grl.hpp"

namespace grltk {
namespace {

void require_distinct(std::span<const Fe> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) fail(Errc::DuplicateElement, "elements must be pairwise distinct");
}

}  // namespace

void GrlSpec::validate() const {
    if (!ctx) fail(Errc::SpecInvariantViolated, "missing field context");
    std::size_t nn = n(), ll = l();
    if (A.rows() != A.cols()) fail(Errc::SpecInvariantViolated, "A must be square");
    if (!(ll + 1 <= k + 1 && k + 1 <= nn && nn <= ctx->q()))
        fail(Errc::SpecInvariantViolated, "need l+1 <= k+1 <= n <= q");
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i + 1; j < nn; ++j)
            if (alpha[i] == alpha[j]) fail(Errc::SpecInvariantViolated, "alpha entries must be distinct");
    if (v.size() != nn) fail(Errc::SpecInvariantViolated, "v must have one entry per alpha");
    for (Fe x : v)
        if (x == 0) fail(Errc::SpecInvariantViolated, "v entries must be nonzero");
    if (!eliminate(A).det.value_or(0)) fail(Errc::SpecInvariantViolated, "A must be invertible");
}

SymSums sym_sums(const FieldPtr& ctx, std::span<const Fe> subset) {
    require_distinct(subset);
    const auto& F = *ctx;
    Fe e1 = 0, e2 = 0, sum_sq = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        e1 = F.add(e1, subset[i]);
        sum_sq = F.add(sum_sq, F.mul(subset[i], subset[i]));
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            e2 = F.add(e2, F.mul(subset[i], subset[j]));
    }
    return SymSums{e1, e2, sum_sq, F.add(sum_sq, e2), F.sub(sum_sq, e2)};
}

std::vector<Fe> ui_coefficients(const FieldPtr& ctx, std::span<const Fe> alpha) {
    if (alpha.size() < 2) fail(Errc::DuplicateElement, "need at least two evaluation points");
    require_distinct(alpha);
    const auto& F = *ctx;
    std::vector<Fe> u(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        Fe prod = 1;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            if (j != i) prod = F.mul(prod, F.sub(alpha[i], alpha[j]));
        u[i] = F.inv(prod);
    }
    return u;
}

Mat grl_generator(const GrlSpec& spec) {
    spec.validate();
    const auto& F = *spec.ctx;
    std::size_t n = spec.n(), k = spec.k, l = spec.l();
    Mat g(spec.ctx, k, n + l);
    for (std::size_t j = 0; j < n; ++j) {
        Fe pw = 1;
        for (std::size_t i = 0; i < k; ++i) {
            g.set(i, j, F.mul(spec.v[j], pw));
            pw = F.mul(pw, spec.alpha[j]);
        }
    }
    for (std::size_t t = 0; t < l; ++t)
        for (std::size_t c = 0; c < l; ++c) g.set(k - l + t, n + c, spec.A.at(t, c));
    return g;
}

Mat m_matrix(const FieldPtr& ctx, std::span<const Fe> alpha) {
    SymSums s = sym_sums(ctx, alpha);
    const auto& F = *ctx;
    Mat m(ctx, 3, 3);
    Fe neg1 = F.neg(1);
    m.set(0, 2, neg1);
    m.set(2, 0, neg1);
    m.set(1, 1, neg1);
    m.set(1, 2, F.neg(s.e1));
    m.set(2, 1, F.neg(s.e1));
    // Entry (3,3) is -(sum of u_i alpha_i^{n+1}) = -P. Writing -R here instead
    // breaks G H^T = 0 by 2*e2, so P is the only consistent choice.
    m.set(2, 2, F.neg(s.P));
    return m;
}

Mat grl_parity_check(const GrlSpec& spec) {
    spec.validate();
    if (spec.l() != 3) fail(Errc::WrongMixingSize, "parity check requires l = 3");
    const auto& F = *spec.ctx;
    std::size_t n = spec.n(), k = spec.k;
    std::size_t rows = n + 3 - k;
    std::vector<Fe> u = ui_coefficients(spec.ctx, spec.alpha);
    Mat h(spec.ctx, rows, n + 3);
    for (std::size_t i = 0; i < n; ++i) {
        Fe base = F.div(u[i], spec.v[i]);
        Fe pw = 1;
        for (std::size_t r = 0; r < rows; ++r) {
            h.set(r, i, F.mul(base, pw));
            pw = F.mul(pw, spec.alpha[i]);
        }
    }
    // M is symmetric, so M^T (A^T)^{-1} = M (A^T)^{-1}.
    Mat B = m_matrix(spec.ctx, spec.alpha).matmul(invert(spec.A.transpose()));
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t c = 0; c < 3; ++c) h.set(rows - 3 + t, n + c, B.at(t, c));
    return h;
}

Mat special_a(const FieldPtr& ctx, Fe mu, Fe delta, Fe tau, ALayout layout) {
    Mat a(ctx, 3, 3);
    a.set(0, 0, mu);
    a.set(0, 1, layout == ALayout::Cor33 ? delta : tau);
    a.set(0, 2, 1);
    a.set(1, 0, layout == ALayout::Cor33 ? tau : delta);
    a.set(1, 1, 1);
    a.set(2, 0, 1);
    return a;
}

RsCauchyData rs_systematic(const FieldPtr& ctx, std::span<const Fe> alpha, std::size_t k) {
    require_distinct(alpha);
    std::size_t N = alpha.size();
    if (k == 0 || k >= N) fail(Errc::ShapeMismatch, "need 0 < k < number of points");
    const auto& F = *ctx;
    RsCauchyData d{std::vector<Fe>(k), std::vector<Fe>(N - k), Mat(ctx, k, N - k)};
    for (std::size_t i = 0; i < k; ++i) {
        Fe prod = 1;
        for (std::size_t s = 0; s < k; ++s)
            if (s != i) prod = F.mul(prod, F.sub(alpha[i], alpha[s]));
        d.etas_left[i] = prod;
    }
    for (std::size_t j = 0; j < N - k; ++j) {
        Fe prod = 1;
        for (std::size_t s = 0; s < k; ++s) prod = F.mul(prod, F.sub(alpha[k + j], alpha[s]));
        d.etas_right[j] = prod;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < N - k; ++j) {
            Fe num = F.mul(d.etas_right[j], F.inv(d.etas_left[i]));
            d.B.set(i, j, F.div(num, F.sub(alpha[k + j], alpha[i])));
        }
    return d;
}

}  // namespace grltk
