#pragma once

#include <span>
#include <vector>

#include "grltk/matrix.hpp"

namespace grltk {

/// Parameters of one GRL instance: n distinct evaluation points alpha, n
/// nonzero column scalars v, dimension k, and an invertible l x l mixing
/// matrix A applied to the top l message coefficients. The emitted code has
/// length n + l. Requires l + 1 <= k + 1 <= n <= q.
struct GrlSpec {
    FieldPtr ctx;
    std::size_t k = 0;
    std::vector<Fe> alpha;
    std::vector<Fe> v;
    Mat A;

    std::size_t n() const { return alpha.size(); }
    std::size_t l() const { return A.rows(); }

    /// Throws SpecInvariantViolated on any broken invariant.
    void validate() const;
};

/// Elementary symmetric quantities of a subset: e1 = sum, e2 = sum of pair
/// products, sum_sq = sum of squares, P = sum_sq + e2 = e1^2 - e2,
/// R = sum_sq - e2.
struct SymSums {
    Fe e1, e2, sum_sq, P, R;
};

SymSums sym_sums(const FieldPtr& ctx, std::span<const Fe> subset);

/// Lagrange weights u_i = prod_{j != i} (alpha_i - alpha_j)^{-1}.
std::vector<Fe> ui_coefficients(const FieldPtr& ctx, std::span<const Fe> alpha);

/// The k x (n+l) generator: column j < n is v_j (1, alpha_j, ..,
/// alpha_j^{k-1})^T; the l tail columns are zero except the last l rows,
/// which carry A row by row.
Mat grl_generator(const GrlSpec& spec);

/// The symmetric 3x3 matrix [[0,0,-1],[0,-1,-e1],[-1,-e1,-P]] of the full
/// evaluation sequence; its entries are the negated power sums
/// sum_i u_i alpha_i^j for j = n-1, n, n+1.
Mat m_matrix(const FieldPtr& ctx, std::span<const Fe> alpha);

/// The (n+3-k) x (n+3) parity check for l = 3: column i < n is
/// (u_i/v_i)(1, alpha_i, .., alpha_i^{n-k+2})^T, tail block B = M (A^T)^{-1}
/// in the last three rows. Satisfies grl_generator(spec) * H^T = 0.
Mat grl_parity_check(const GrlSpec& spec);

enum class ALayout {
    Cor33,     // rows (mu, delta, 1), (tau, 1, 0), (1, 0, 0)
    SelfDual,  // rows (mu, tau, 1), (delta, 1, 0), (1, 0, 0)
};

/// Anti-triangular 3x3 mixing matrix; det = -1 in both layouts, so it is
/// always invertible.
Mat special_a(const FieldPtr& ctx, Fe mu, Fe delta, Fe tau, ALayout layout);

struct RsCauchyData {
    std::vector<Fe> etas_left;   // eta_i = prod_{s != i, s <= k} (alpha_i - alpha_s), i <= k
    std::vector<Fe> etas_right;  // eta_{k+j} = prod_{s <= k} (alpha_{k+j} - alpha_s)
    Mat B;                       // k x (N-k), entry (i,j) = eta_{k+j} eta_i^{-1} / (alpha_{k+j} - alpha_i)
};

/// Systematic Cauchy form of the RS code on alpha: (I_k | B) has the same row
/// space as the k-row Vandermonde on alpha.
RsCauchyData rs_systematic(const FieldPtr& ctx, std::span<const Fe> alpha, std::size_t k);

}  // namespace grltk
